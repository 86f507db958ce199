"""Graded and multigraded Betti numbers of monomial ideals.

b_{i,m}(I) is the i-th homology of the degree-m strand of K ⊗ I, where K is
the Koszul complex of the residue field.  That strand has one basis vector
f·e_mu for every squarefree mu dividing m with f = m/mu in I, so everything
reduces to exact ranks of small +-1 matrices.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping

from . import linalg
from . import monomial as mono
from .ideal import MonomialIdeal, colon, intersect, principal
from .monomial import QQ, Field, Monomial, PowerSequence

IDEAL = "ideal"
QUOTIENT = "quotient"


class KeyLemmaViolation(AssertionError):
    """The four multigraded Betti computations disagreed (an implementation bug)."""


@dataclass(frozen=True, eq=True)
class BettiTable:
    """b_{i,j} as a sparse map; ``convention`` says whether the numbers
    belong to the ideal I or to the quotient S/I."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)
    convention: str = IDEAL

    def __post_init__(self):
        if self.convention not in (IDEAL, QUOTIENT):
            raise ValueError(f"unknown convention {self.convention!r}")
        clean = {}
        for (i, j), b in sorted(self.entries.items()):
            if b < 0:
                raise ValueError(f"negative Betti number at {(i, j)}")
            if b:
                clean[(int(i), int(j))] = int(b)
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(i, j, b) for (i, j), b in sorted(self.entries.items())]

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    @property
    def length(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def to_quotient(self) -> BettiTable:
        if self.convention == QUOTIENT:
            return self
        if self[(0, 0)]:
            return BettiTable({}, QUOTIENT)  # S/(1) = 0
        out = {(i + 1, j): b for (i, j), b in self.entries.items()}
        out[(0, 0)] = 1
        return BettiTable(out, QUOTIENT)

    def to_ideal(self) -> BettiTable:
        if self.convention == IDEAL:
            return self
        if not self.entries:
            return BettiTable({(0, 0): 1}, IDEAL)
        return BettiTable({(i - 1, j): b for (i, j), b in self.entries.items() if i > 0}, IDEAL)

    def __str__(self) -> str:
        return "\n".join(f"{i}\t{j}\t{b}" for i, j, b in self.rows())


@dataclass(frozen=True)
class MultigradedBettiTable:
    """b_{i,m} for the ideal, keyed by (i, multidegree)."""

    entries: Mapping[tuple[int, Monomial], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, Monomial]) -> int:
        return self.entries.get(key, 0)

    def graded(self) -> BettiTable:
        out: dict[tuple[int, int], int] = {}
        for (i, m), b in self.entries.items():
            out[(i, sum(m))] = out.get((i, sum(m)), 0) + b
        return BettiTable(out, IDEAL)

    def multidegrees(self) -> set:
        return {m for _, m in self.entries}

    def rows(self) -> list[tuple[int, Monomial, int]]:
        return sorted(((i, m, b) for (i, m), b in self.entries.items()), key=lambda r: (r[0], sum(r[1]), tuple(-e for e in r[1])))


@dataclass(frozen=True)
class KoszulSubcomplex:
    """The strand (K ⊗ I)_m.

    ``bases[i]`` lists the squarefree mu (as exponent tuples) indexing the
    basis vectors (m/mu)·e_mu; ``boundaries[i]`` holds the rows of
    D: C_i -> C_{i-1}, one ``{column: +-1}`` dict per basis vector of C_i.
    """

    multidegree: Monomial
    bases: list
    boundaries: list

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def homology(self, field: Field = QQ) -> dict[int, int]:
        p = field.characteristic
        ranks = [linalg.rank(D, p) for D in self.boundaries] + [0]
        out = {}
        for i, basis in enumerate(self.bases):
            h = len(basis) - ranks[i] - ranks[i + 1]
            if h:
                out[i] = h
        return out

    def d_squared_is_zero(self) -> bool:
        for i in range(2, len(self.boundaries)):
            for row in linalg.compose(self.boundaries[i], self.boundaries[i - 1]):
                if row:
                    return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * len(b) for i, b in enumerate(self.bases))


def koszul_complex(I: MonomialIdeal, m: Monomial) -> KoszulSubcomplex:
    supp = mono.support(m)
    n = I.n
    by_size: list[list[Monomial]] = [[] for _ in range(len(supp) + 1)]
    for size in range(len(supp) + 1):
        for sub in combinations(supp, size):
            mu = tuple(1 if i in sub else 0 for i in range(n))
            if mono.quotient(m, mu) in I:
                by_size[size].append(mu)
    while len(by_size) > 1 and not by_size[-1]:
        by_size.pop()
    index = [{mu: k for k, mu in enumerate(level)} for level in by_size]
    boundaries = [[{} for _ in by_size[0]]]
    for size in range(1, len(by_size)):
        rows = []
        for mu in by_size[size]:
            row = {}
            c = 0
            for j in range(n):
                if mu[j]:
                    c += 1
                    face = mu[:j] + (0,) + mu[j + 1:]
                    row[index[size - 1][face]] = 1 if c % 2 else -1
            rows.append(row)
        boundaries.append(rows)
    if not by_size[0]:
        return KoszulSubcomplex(m, [], [])
    return KoszulSubcomplex(m, by_size, boundaries)


def koszul_betti_at(I: MonomialIdeal, m: Monomial, field: Field = QQ) -> dict[int, int]:
    """{i: b_{i,m}(I)}, zeros omitted."""
    if len(m) != I.n:
        raise ValueError("multidegree and ideal live in different rings")
    if I.is_zero() or not mono.divides(m, I.lcm()):
        return {}
    return koszul_complex(I, m).homology(field)


def lcm_lattice(I: MonomialIdeal) -> set:
    """lcms of nonempty subsets of the generators (where Betti numbers live)."""
    seen = set(I.gens)
    frontier = set(I.gens)
    while frontier:
        new = set()
        for u in frontier:
            for g in I.gens:
                w = mono.lcm(u, g)
                if w not in seen:
                    new.add(w)
        seen |= new
        frontier = new
    return seen


def _betti_strand(args):
    I, m, field = args
    return m, koszul_betti_at(I, m, field)


def multigraded_betti(
    I: MonomialIdeal, field: Field = QQ, enumerate_by: str = "lcm-lattice", jobs: int = 1
) -> MultigradedBettiTable:
    if I.is_zero():
        return MultigradedBettiTable({})
    if enumerate_by == "lcm-lattice":
        degrees = sorted(lcm_lattice(I))
    elif enumerate_by == "divisors":
        degrees = sorted(mono.divisors(I.lcm()))
    else:
        raise ValueError(f"unknown enumeration {enumerate_by!r}")
    tasks = [(I, m, field) for m in degrees]
    if jobs > 1 and len(tasks) > 64:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_betti_strand, tasks, chunksize=16))
    else:
        results = [_betti_strand(t) for t in tasks]
    entries = {}
    for m, hs in results:
        for i, b in hs.items():
            entries[(i, m)] = b
    return MultigradedBettiTable(entries)


def betti_table(I: MonomialIdeal, field: Field = QQ, jobs: int = 1) -> tuple[BettiTable, MultigradedBettiTable]:
    mg = multigraded_betti(I, field, jobs=jobs)
    return mg.graded(), mg


def graded_betti(I: MonomialIdeal, field: Field = QQ) -> BettiTable:
    return multigraded_betti(I, field).graded()


def shadow(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """sqfree((I : m/sqrt(m)) ∩ k[supp m]), written in the ambient ring."""
    u = mono.quotient(m, mono.radical(m))
    return colon(I, u).restrict(mono.support(m)).squarefree_part()


@dataclass(frozen=True)
class KeyLemmaReport:
    multidegree: Monomial
    direct: dict
    intersected: dict
    colon: dict
    shadow: dict

    @property
    def equal(self) -> bool:
        return self.direct == self.intersected == self.colon == self.shadow


def keylemma_check(I: MonomialIdeal, m: Monomial, field: Field = QQ) -> KeyLemmaReport:
    """Compute b_{i,m}(I) four ways; raise KeyLemmaViolation if they differ."""
    u = mono.quotient(m, mono.radical(m))
    root = mono.radical(m)
    p = field.characteristic
    strand = lambda J, w: koszul_complex(J, w).homology(Field(p)) if not J.is_zero() else {}
    rep = KeyLemmaReport(
        m,
        strand(I, m),
        strand(intersect(I, principal(u)), m),
        strand(colon(I, u), root),
        strand(shadow(I, m), root),
    )
    if not rep.equal:
        raise KeyLemmaViolation(f"multidegree {mono.format_monomial(m)} of {I}: {rep}")
    return rep


def ek_betti(B: MonomialIdeal) -> BettiTable:
    """Betti numbers of a Borel ideal from its generators:
    b_{i,j} = sum over generators u of degree j-i of C(max(u)-1, i)."""
    from .transforms import is_borel

    if not is_borel(B):
        raise ValueError(f"{B} is not Borel")
    out: dict[tuple[int, int], int] = {}
    for u in B.gens:
        supp = mono.support(u)
        if not supp:
            out[(0, 0)] = out.get((0, 0), 0) + 1
            continue
        top = supp[-1] + 1
        for i in range(top):
            key = (i, sum(u) + i)
            out[key] = out.get(key, 0) + comb(top - 1, i)
    return BettiTable(out, IDEAL)


def colon_formula_betti(M: MonomialIdeal, P: PowerSequence, field: Field = QQ) -> BettiTable:
    """Betti numbers of S/(M+P) assembled from the quotients S/(M : x_tau),
    x_tau = prod_{i in tau} x_i^{e_i}, shifted by (|tau|, deg x_tau)."""
    if M.n != P.n:
        raise ValueError("ideal and power sequence live in different rings")
    powers = P.powers()
    for g in M.gens:
        for p in powers:
            if mono.divides(p, g):
                raise ValueError(
                    f"generator {mono.format_monomial(g)} of M is divisible by {mono.format_monomial(p)}"
                )
    out: dict[tuple[int, int], int] = {}
    for size in range(P.r + 1):
        for tau in combinations(range(P.r), size):
            x_tau = mono.one(M.n)
            for i in tau:
                x_tau = mono.mul(x_tau, powers[i])
            C = colon(M, x_tau)
            if C.is_unit():
                continue
            q = graded_betti(C, field).to_quotient()
            for (i, j), b in q.entries.items():
                key = (i + size, j + sum(x_tau))
                out[key] = out.get(key, 0) + b
    return BettiTable(out, QUOTIENT)


def betti_dominates(A: BettiTable, B: BettiTable) -> bool:
    """A(i,j) >= B(i,j) everywhere."""
    if A.convention != B.convention:
        raise ValueError("tables use different conventions")
    return all(A[k] >= b for k, b in B.entries.items())


def consecutive_cancellation(L_table: BettiTable, I_table: BettiTable) -> dict | None:
    """Solve b_{i,j}(I) = b_{i,j}(L) - c_{i,j} - c_{i-1,j} for c >= 0.

    The c are forced degree by degree; returns the nonzero c_{i,j} or None
    when some forced value is negative or the recursion does not close.
    """
    if L_table.convention != I_table.convention:
        raise ValueError("tables use different conventions")
    js = {j for _, j in L_table.entries} | {j for _, j in I_table.entries}
    top = max(L_table.length, I_table.length) + 1
    c: dict[tuple[int, int], int] = {}
    for j in sorted(js):
        prev = 0
        for i in range(top + 1):
            cur = L_table[(i, j)] - I_table[(i, j)] - prev
            if cur < 0:
                return None
            if cur:
                c[(i, j)] = cur
            prev = cur
        if prev:
            return None
    return c


def hilbert_from_betti(table: BettiTable, n: int, d: int) -> int:
    """dim I_d = sum (-1)^i b_{i,j}(I) dim S_{d-j}."""
    t = table.to_ideal()
    return sum((-1) ** i * b * mono.count_monomials(n, d - j) for (i, j), b in t.entries.items())
