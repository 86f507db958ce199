"""Exact Hilbert functions of monomial ideals and lexification, both in S
(Macaulay) and modulo pure powers (Clements-Lindström)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import monomial as mono
from .ideal import MonomialIdeal, times_variables
from .monomial import PowerSequence


class InfeasibleHilbertFunction(ValueError):
    pass


@dataclass(frozen=True)
class HilbertFunction:
    """dim_k I_d for d = 0..cap of an ideal I in ``n`` variables."""

    n: int
    values: tuple[int, ...]

    @property
    def cap(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, d: int) -> int:
        if d < 0:
            return 0
        if d > self.cap:
            raise IndexError(f"Hilbert function known only up to degree {self.cap}")
        return self.values[d]

    def __post_init__(self):
        for d, v in enumerate(self.values):
            if not 0 <= v <= mono.count_monomials(self.n, d):
                raise ValueError(f"value {v} in degree {d} exceeds dim S_{d}")


@lru_cache(maxsize=65536)
def _numerator(n: int, gens: tuple) -> tuple[int, ...]:
    # K(S/I) with H_{S/I}(t) = K(t) / (1-t)^n
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    if all(sum(1 for e in g if e) == 1 for g in gens):
        # pure powers of distinct variables: product of (1 - t^e)
        out = [1]
        for g in gens:
            e = sum(g)
            nxt = [0] * (len(out) + e)
            for k, c in enumerate(out):
                nxt[k] += c
                nxt[k + e] -= c
            out = nxt
        return _trim(out)
    # pivot on the lex-greatest generator g: K(J + (g)) = K(J) - t^deg(g) K(J : g)
    g, rest = gens[0], gens[1:]
    J = MonomialIdeal(n, rest, _minimal=True)
    JG = J.colon(g)
    a = _numerator(n, rest)
    b = _numerator(n, JG.gens)
    e = sum(g)
    out = [0] * max(len(a), len(b) + e)
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k + e] -= c
    return _trim(out)


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def hilbert_numerator(I: MonomialIdeal) -> tuple[int, ...]:
    """Numerator K(t) of the Hilbert series of S/I over (1-t)^n.

    Two ideals have the same Hilbert function in every degree exactly when
    these numerators agree, which is what the transforms use as their
    stabilization certificate.
    """
    return _numerator(I.n, I.gens)


def hilbert_from_numerator(K: tuple[int, ...], n: int, d: int) -> int:
    """dim_k I_d recovered from the numerator of S/I."""
    quot = 0
    for k, c in enumerate(K):
        if k <= d:
            quot += c * (comb(n - 1 + d - k, n - 1) if n else int(d == k))
    return mono.count_monomials(n, d) - quot


def hilbert_function(I: MonomialIdeal, cap: int, method: str = "expand") -> HilbertFunction:
    """Hilbert function of the ideal up to ``cap``.

    ``method`` is ``"expand"`` (count degreewise monomials), ``"series"``
    (inclusion-exclusion numerator) or ``"both"`` (compute both, insist they
    agree).
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if method not in ("expand", "series", "both"):
        raise ValueError(f"unknown method {method!r}")
    vals_e = vals_s = None
    if method in ("expand", "both"):
        vals_e = tuple(len(I.component(d)) for d in range(cap + 1))
    if method in ("series", "both"):
        K = hilbert_numerator(I)
        vals_s = tuple(hilbert_from_numerator(K, I.n, d) for d in range(cap + 1))
    if vals_e is not None and vals_s is not None and vals_e != vals_s:
        raise AssertionError(f"expansion {vals_e} and series {vals_s} disagree for {I}")
    return HilbertFunction(I.n, vals_e if vals_e is not None else vals_s)


def hf_equal(I: MonomialIdeal, J: MonomialIdeal, cap: int | None = None) -> bool:
    """Degreewise dimension equality up to ``cap``; with ``cap=None`` the
    comparison is over all degrees (via Hilbert series numerators)."""
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    if cap is None:
        return hilbert_numerator(I) == hilbert_numerator(J)
    need = max(I.max_degree(), J.max_degree())
    if cap < need:
        raise ValueError(f"cap {cap} is below the largest generator degree {need}")
    return all(len(I.component(d)) == len(J.component(d)) for d in range(cap + 1))


def _assemble_checked(n: int, levels: list[set], what: str) -> MonomialIdeal:
    for d in range(len(levels) - 1):
        missing = times_variables(levels[d], n) - levels[d + 1]
        if missing:
            raise InfeasibleHilbertFunction(
                f"{what}: degree-{d} segment does not generate inside degree {d + 1}"
            )
    return MonomialIdeal.from_components(n, dict(enumerate(levels)), len(levels) - 1)


def lexify(hf: HilbertFunction, n: int | None = None) -> MonomialIdeal:
    """Lex ideal with Hilbert function ``hf`` through ``hf.cap``."""
    n = hf.n if n is None else n
    if n != hf.n:
        raise ValueError("variable count does not match the Hilbert function")
    levels = []
    for d in range(hf.cap + 1):
        mons = mono.monomials_of_degree(n, d)
        levels.append(set(mons[: hf[d]]))
    return _assemble_checked(n, levels, "lexify")


def lexify_mod_P(hf: HilbertFunction, P: PowerSequence) -> MonomialIdeal:
    """The lex-plus-P ideal L+P with Hilbert function ``hf`` through ``hf.cap``.

    Degree by degree: every monomial in P, then the lex-greatest monomials
    outside P until the dimension is reached.
    """
    n = P.n
    if hf.n != n:
        raise ValueError("variable count does not match the Hilbert function")
    powers = P.powers()
    levels = []
    for d in range(hf.cap + 1):
        inP, outside = [], []
        for u in mono.monomials_of_degree(n, d):
            (inP if any(mono.divides(p, u) for p in powers) else outside).append(u)
        extra = hf[d] - len(inP)
        if extra < 0:
            raise InfeasibleHilbertFunction(
                f"degree {d}: P alone has {len(inP)} monomials, more than {hf[d]}"
            )
        levels.append(set(inP) | set(outside[:extra]))
    return _assemble_checked(n, levels, "lexify_mod_P")


def is_lex(I: MonomialIdeal, cap: int) -> bool:
    """Is every I_d (d <= cap) an initial lex segment?"""
    for d in range(cap + 1):
        comp = I.component(d)
        if set(mono.monomials_of_degree(I.n, d)[: len(comp)]) != comp:
            return False
    return True


def is_lex_plus_P(I: MonomialIdeal, P: PowerSequence, cap: int) -> bool:
    """Is I_d = P_d ∪ (initial lex segment of non-P monomials) for d <= cap?"""
    powers = P.powers()
    for d in range(cap + 1):
        comp = I.component(d)
        outside = [u for u in mono.monomials_of_degree(I.n, d) if not any(mono.divides(p, u) for p in powers)]
        inside_out = [u for u in outside if u in comp]
        if set(outside[: len(inside_out)]) != set(inside_out):
            return False
        if any(p_u not in comp for p_u in set(mono.monomials_of_degree(I.n, d)) - set(outside)):
            return False
    return True
