"""Monomial ideals: canonical minimal generators, degreewise expansion,
colon/sum/intersection, and the revlex comparison of ideals."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from . import monomial as mono
from .monomial import Monomial, Ordering


class CapError(ValueError):
    """A degreewise computation was asked for data beyond its degree cap."""


def minimal_generators(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop divisible and duplicate generators; order lex-descending."""
    cand = sorted(set(gens), key=lambda u: (sum(u), u))
    kept: list[Monomial] = []
    for u in cand:
        if not any(mono.divides(g, u) for g in kept):
            kept.append(u)
    return tuple(sorted(kept, reverse=True))


@lru_cache(maxsize=65536)
def _component(n: int, gens: tuple[Monomial, ...], d: int) -> frozenset:
    out = set()
    for g in gens:
        k = d - sum(g)
        if k < 0:
            continue
        for w in mono.monomials_of_degree(n, k):
            out.add(mono.mul(g, w))
    return frozenset(out)


class MonomialIdeal:
    """A monomial ideal of k[x1..xn], stored by its minimal generators.

    Instances are immutable.  ``expand(cap)`` returns a copy carrying the
    degreewise monomial sets for every degree up to ``cap``.
    """

    __slots__ = ("n", "gens", "cap", "_levels")

    def __init__(self, n: int, gens: Iterable[Monomial] = (), *, _minimal: bool = False):
        gens = tuple(tuple(g) for g in gens)
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} does not have {n} exponents")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        self.n = n
        self.gens = gens if _minimal else minimal_generators(gens)
        self.cap = -1
        self._levels: tuple[frozenset, ...] = ()

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, [mono.one(n)])

    @classmethod
    def from_powers(cls, P: mono.PowerSequence) -> MonomialIdeal:
        return cls(P.n, P.powers())

    @classmethod
    def from_components(cls, n: int, levels: Mapping[int, Iterable[Monomial]], cap: int) -> MonomialIdeal:
        """Ideal generated by the given degreewise sets, degrees 0..cap."""
        gens = []
        prev: frozenset = frozenset()
        for d in range(cap + 1):
            cur = frozenset(levels.get(d, ()))
            up = _times_variables(prev, n)
            gens.extend(cur - up)
            prev = cur | up
        return cls(n, gens)

    # basic predicates
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def __contains__(self, u: Monomial) -> bool:
        return any(mono.divides(g, u) for g in self.gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        _same_ring(self, other)
        return all(g in self for g in other.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.n}, {self})"

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(mono.format_monomial(g) for g in self.gens) + ")"

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def lcm(self) -> Monomial:
        out = mono.one(self.n)
        for g in self.gens:
            out = mono.lcm(out, g)
        return out

    def max_exponent(self, i: int) -> int:
        return max((g[i] for g in self.gens), default=0)

    # degreewise data
    def component(self, d: int) -> frozenset:
        """Set of degree-``d`` monomials in the ideal."""
        if 0 <= d <= self.cap:
            return self._levels[d]
        return _component(self.n, self.gens, d)

    def expand(self, cap: int) -> MonomialIdeal:
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        out = MonomialIdeal(self.n, self.gens, _minimal=True)
        out._levels = tuple(self.component(d) for d in range(cap + 1))
        out.cap = cap
        return out

    def cached_component(self, d: int) -> frozenset:
        """Like ``component`` but refuses to go past the cached cap."""
        if d > self.cap:
            raise CapError(f"degree {d} requested but ideal is expanded only to {self.cap}")
        return self._levels[d]

    # algebra
    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def colon(self, m: Monomial) -> MonomialIdeal:
        return colon(self, m)

    def times(self, m: Monomial) -> MonomialIdeal:
        """The ideal m * I."""
        return MonomialIdeal(self.n, [mono.mul(g, m) for g in self.gens], _minimal=True)

    def sigma(self, a: int, b: int) -> MonomialIdeal:
        return MonomialIdeal(self.n, [mono.sigma_swap(g, a, b) for g in self.gens])

    def embed(self, n: int) -> MonomialIdeal:
        """The extension I * k[x1..xn] into a ring with more variables."""
        if n < self.n:
            raise ValueError("can only embed into a larger ring")
        pad = (0,) * (n - self.n)
        return MonomialIdeal(n, [g + pad for g in self.gens], _minimal=True)

    def restrict(self, variables: Iterable[int]) -> MonomialIdeal:
        """I ∩ k[variables], still written in all n variables."""
        keep = set(variables)
        return MonomialIdeal(
            self.n, [g for g in self.gens if all(i in keep for i in mono.support(g))], _minimal=True
        )

    def squarefree_part(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, [g for g in self.gens if mono.is_squarefree(g)], _minimal=True)


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise ValueError(f"ideals live in different rings ({I.n} vs {J.n} variables)")


def _times_variables(level: Iterable[Monomial], n: int) -> frozenset:
    out = set()
    for u in level:
        for i in range(n):
            w = list(u)
            w[i] += 1
            out.add(tuple(w))
    return frozenset(out)


def times_variables(level: Iterable[Monomial], n: int) -> frozenset:
    """S_1 * level."""
    return _times_variables(level, n)


def minimalize(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(n, gens)


def membership(I: MonomialIdeal, u: Monomial) -> bool:
    if len(u) != I.n:
        raise ValueError("monomial and ideal live in different rings")
    return u in I


def expand(I: MonomialIdeal, cap: int) -> dict[int, frozenset]:
    J = I.expand(cap)
    return {d: J.component(d) for d in range(cap + 1)}


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """(I : m) = ideal of all u with u*m in I."""
    if len(m) != I.n:
        raise ValueError("monomial and ideal live in different rings")
    return MonomialIdeal(I.n, [mono.quotient(g, mono.gcd(g, m)) for g in I.gens])


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, I.gens + J.gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.n, [mono.lcm(g, h) for g in I.gens for h in J.gens])


def principal(u: Monomial) -> MonomialIdeal:
    return MonomialIdeal(len(u), [u])


def sigma_ideal(I: MonomialIdeal, a: int, b: int) -> MonomialIdeal:
    return I.sigma(a, b)


def revlex_compare_ideals(I: MonomialIdeal, J: MonomialIdeal, cap: int) -> Ordering:
    """Degreewise revlex comparison for d <= cap.

    Raises ValueError if the Hilbert functions differ below the cap.
    Returns INCOMPARABLE when neither ideal dominates in every degree.
    """
    _same_ring(I, J)
    seen = set()
    for d in range(cap + 1):
        A, B = I.component(d), J.component(d)
        if len(A) != len(B):
            raise ValueError(f"Hilbert functions differ in degree {d} ({len(A)} vs {len(B)})")
        if A != B:
            seen.add(mono.revlex_compare_sets(A, B))
    if not seen:
        return Ordering.EQUAL
    if len(seen) == 1:
        return seen.pop()
    return Ordering.INCOMPARABLE
