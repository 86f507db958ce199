"""Transforms of monomial ideals: generalized (a,b,t)-shifting, compression,
polarization, deletion of a pure power, and the shifted/compressed-plus-P
steps of the Borelification walk.

Shift and compression are computed degree by degree up to a cap and then
certified: the ideal generated by the computed degrees is contained in the
true transform, and both have the Hilbert function of the input, so they are
equal exactly when their Hilbert series numerators match.  With ``cap=None``
a cap is derived from generator-degree bounds and doubled if the certificate
ever fails; an explicit cap that is too small raises StabilizationError.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import monomial as mono
from .hilbert import hilbert_numerator
from .ideal import MonomialIdeal, colon, times_variables
from .monomial import Monomial, PowerSequence

MAX_CAP_DOUBLINGS = 4


class StabilizationError(RuntimeError):
    """The degreewise construction did not determine the ideal below the cap."""


class WalkError(RuntimeError):
    """A walk step broke one of its certificates or ran past its step limit."""


@dataclass(frozen=True)
class ShiftSpec:
    """Variables a before b (0-based) and the offset t >= 0."""

    a: int
    b: int
    t: int = 0

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("shift needs two distinct variables")
        if self.a > self.b:
            raise ValueError("a must precede b in the variable order")
        if self.t < 0:
            raise ValueError("t must be nonnegative")

    def with_t(self, t: int) -> ShiftSpec:
        return ShiftSpec(self.a, self.b, t)


def _check_spec(I: MonomialIdeal, spec: ShiftSpec) -> None:
    if spec.b >= I.n:
        raise ValueError(f"variable x{spec.b + 1} does not exist in {I.n} variables")


def shift_partner(u: Monomial, spec: ShiftSpec) -> Monomial | None:
    """f a^p b^q -> f a^{q-t} b^{p+t}; None when q < t (no partner)."""
    a, b, t = spec.a, spec.b, spec.t
    p, q = u[a], u[b]
    if q < t:
        return None
    w = list(u)
    w[a], w[b] = q - t, p + t
    return tuple(w)


def _in_shift(u: Monomial, spec: ShiftSpec, level: frozenset) -> bool:
    v = shift_partner(u, spec)
    if v is None or v == u:
        return u in level
    if u[spec.a] > v[spec.a]:  # u = f a^l b^{s+t}
        return u in level or v in level
    return u in level and v in level


def shift_components(I: MonomialIdeal, spec: ShiftSpec, cap: int) -> dict[int, frozenset]:
    """Degree-d pieces of shift_{a,b,t}(I) by the four-case rule, d <= cap."""
    _check_spec(I, spec)
    out = {}
    for d in range(cap + 1):
        level = I.component(d)
        cands = set(level)
        for u in level:
            v = shift_partner(u, spec)
            if v is not None:
                cands.add(v)
        out[d] = frozenset(u for u in cands if _in_shift(u, spec, level))
    return out


def _assemble(n: int, levels: dict[int, frozenset], cap: int, source: MonomialIdeal, what: str) -> MonomialIdeal:
    for d in range(cap):
        if times_variables(levels[d], n) - levels[d + 1]:
            raise AssertionError(f"{what}: degree {d} piece is not closed under multiplication")
    J = MonomialIdeal.from_components(n, levels, cap)
    if hilbert_numerator(J) != hilbert_numerator(source):
        raise StabilizationError(f"{what}: generators beyond degree {cap}; raise the cap")
    return J


def _certified(build: Callable[[int], dict], n: int, source: MonomialIdeal, cap: int | None, auto_cap: int, what: str):
    if cap is not None:
        return _assemble(n, build(cap), cap, source, what)
    c = auto_cap
    for _ in range(MAX_CAP_DOUBLINGS):
        try:
            return _assemble(n, build(c), c, source, what)
        except StabilizationError:
            c *= 2
    return _assemble(n, build(c), c, source, what)


def shift_cap(I: MonomialIdeal, t: int = 0) -> int:
    """Degree bound for the generators of shift_{a,b,t}(I).

    a^t*shift_t(I) = shift_0(a^t*I) and shift_0(K) is generated by
    K ∩ sigma(K) (degree <= 2 deg K) together with K + sigma(K) cut to a-exponent
    above b-exponent (degree <= deg K + 1).
    """
    D = I.max_degree()
    return max(2 * D + t, D + 1) + 1


def shift(I: MonomialIdeal, spec: ShiftSpec, cap: int | None = None) -> MonomialIdeal:
    """shift_{a,b,t}(I)."""
    _check_spec(I, spec)
    if I.is_zero() or I.is_unit():
        return I
    return _certified(lambda c: shift_components(I, spec, c), I.n, I, cap, shift_cap(I, spec.t),
                      f"shift{(spec.a + 1, spec.b + 1, spec.t)}")


def is_shifted(I: MonomialIdeal, spec: ShiftSpec, cap: int | None = None) -> bool:
    """Whenever f a^s b^{l+t} is in I (s < l), so is f a^l b^{s+t}.

    Checked degreewise up to ``cap``; the default cap covers the generators of
    both I and its shift, which makes the answer exact.
    """
    _check_spec(I, spec)
    if cap is None:
        cap = max(I.max_degree(), shift(I, spec).max_degree())
    for d in range(cap + 1):
        level = I.component(d)
        for u in level:
            v = shift_partner(u, spec)
            if v is not None and u[spec.a] < v[spec.a] and v not in level:
                return False
    return True


def shifted_t_bound(I: MonomialIdeal, b: int) -> int:
    """(a,b,t)-shiftedness is automatic once t reaches the largest b-exponent
    of a generator."""
    return I.max_exponent(b)


def is_strongly_shifted(I: MonomialIdeal, a: int, b: int, cap: int | None = None) -> bool:
    return all(is_shifted(I, ShiftSpec(a, b, t), cap) for t in range(shifted_t_bound(I, b)))


# compression

def _check_vars(I: MonomialIdeal, A: Iterable[int]) -> tuple[int, ...]:
    A = tuple(sorted(set(A)))
    if not A:
        raise ValueError("compression needs at least one variable")
    if A[0] < 0 or A[-1] >= I.n:
        raise ValueError("compression variable out of range")
    return A


def _slices(level: Iterable[Monomial], A: tuple[int, ...]) -> dict[tuple, int]:
    counts: dict[tuple, int] = {}
    for u in level:
        f = tuple(0 if i in A else e for i, e in enumerate(u))
        counts[f] = counts.get(f, 0) + 1
    return counts


def compress_components(I: MonomialIdeal, A: Iterable[int], cap: int) -> dict[int, frozenset]:
    A = _check_vars(I, A)
    k = len(A)
    out = {}
    for d in range(cap + 1):
        level = set()
        for f, cnt in _slices(I.component(d), A).items():
            rest = d - sum(f)
            for w in mono.monomials_of_degree(k, rest)[:cnt]:
                u = list(f)
                for i, e in zip(A, w):
                    u[i] = e
                level.add(tuple(u))
        out[d] = frozenset(level)
    return out


def compress_cap(I: MonomialIdeal, A: Iterable[int]) -> int:
    """Generator-degree bound for the compression when |A| <= 2; a starting
    point (doubled on demand) otherwise."""
    A = tuple(A)
    f_part = sum(I.max_exponent(i) for i in range(I.n) if i not in A)
    d_a = max((sum(g[i] for i in A) for g in I.gens), default=0)
    return f_part + max(2 * d_a, 1) + 1


def compress(I: MonomialIdeal, A: Iterable[int], cap: int | None = None) -> MonomialIdeal:
    """The A-compression: each slice f*V_f replaced by the lex ideal of k[A]
    with the same Hilbert function."""
    A = _check_vars(I, A)
    if I.is_zero() or I.is_unit():
        return I
    return _certified(lambda c: compress_components(I, A, c), I.n, I, cap, compress_cap(I, A),
                      f"compress{tuple(i + 1 for i in A)}")


def is_compressed(I: MonomialIdeal, A: Iterable[int], cap: int | None = None) -> bool:
    """Is every slice V_f a lex ideal of k[A] (degreewise up to ``cap``)?"""
    A = _check_vars(I, A)
    if cap is None:
        cap = max(I.max_degree(), compress(I, A).max_degree())
    k = len(A)
    for d in range(cap + 1):
        level = I.component(d)
        groups: dict[tuple, set] = {}
        for u in level:
            f = tuple(0 if i in A else e for i, e in enumerate(u))
            groups.setdefault(f, set()).add(tuple(u[i] for i in A))
        for f, ws in groups.items():
            top = mono.monomials_of_degree(k, d - sum(f))[: len(ws)]
            if set(top) != ws:
                return False
    return True


def is_borel(I: MonomialIdeal, cap: int | None = None) -> bool:
    """f x_j in I and i < j imply f x_i in I.

    With ``cap=None`` the exchange is checked on minimal generators only
    (sufficient); otherwise on every monomial of degree <= cap.
    """
    if cap is None:
        mons: Iterable[Monomial] = I.gens
    else:
        mons = [u for d in range(cap + 1) for u in I.component(d)]
    for u in mons:
        for j in range(I.n):
            if not u[j]:
                continue
            for i in range(j):
                w = list(u)
                w[j] -= 1
                w[i] += 1
                if tuple(w) not in I:
                    return False
    return True


def borel_closure(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    """Smallest Borel ideal containing the given monomials."""
    seen = set(gens)
    todo = list(seen)
    while todo:
        u = todo.pop()
        for j in range(n):
            if not u[j]:
                continue
            for i in range(j):
                w = list(u)
                w[j] -= 1
                w[i] += 1
                w = tuple(w)
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
    return MonomialIdeal(n, seen)


# polarization and pure powers

def polarize(I: MonomialIdeal, b: int) -> MonomialIdeal:
    """Replace b^k in each generator by b*c_1*...*c_{k-1}; the new variables
    c_1..c_{s-1} are appended after x_n (s = largest b-exponent)."""
    if not 0 <= b < I.n:
        raise ValueError(f"variable x{b + 1} does not exist in {I.n} variables")
    s = I.max_exponent(b)
    extra = max(s - 1, 0)
    n = I.n + extra
    gens = []
    for g in I.gens:
        k = g[b]
        w = list(g) + [0] * extra
        if k > 1:
            w[b] = 1
            for c in range(k - 1):
                w[I.n + c] = 1
        gens.append(tuple(w))
    return MonomialIdeal(n, gens)


def delete_power(I: MonomialIdeal, b: int, e_b: int | None) -> MonomialIdeal:
    """I' : drop b^{e_b} from the minimal generators (I' = I if it is not one)."""
    if e_b is None:
        return I
    pw = mono.var(I.n, b, e_b)
    if pw not in I.gens:
        return I
    return MonomialIdeal(I.n, [g for g in I.gens if g != pw], _minimal=True)


def plus_P(I: MonomialIdeal, P: PowerSequence) -> MonomialIdeal:
    return MonomialIdeal(I.n, I.gens + tuple(P.powers()))


def _require_P(I: MonomialIdeal, P: PowerSequence) -> None:
    if I.n != P.n:
        raise ValueError("ideal and power sequence live in different rings")
    if not all(p in I for p in P.powers()):
        raise ValueError(f"{I} does not contain P = {P}")


def is_shifted_plus_P(I: MonomialIdeal, P: PowerSequence, spec: ShiftSpec) -> bool:
    return is_shifted(delete_power(I, spec.b, P.exponent(spec.b)), spec)


def is_strongly_shifted_plus_P(I: MonomialIdeal, P: PowerSequence, a: int, b: int) -> bool:
    return is_strongly_shifted(delete_power(I, b, P.exponent(b)), a, b)


def is_compressed_plus_P(I: MonomialIdeal, P: PowerSequence, a: int, b: int) -> bool:
    return is_compressed(delete_power(I, b, P.exponent(b)), (a, b))


def is_borel_plus_P(I: MonomialIdeal, P: PowerSequence) -> bool:
    """Is I = B + P for some Borel B?  The smallest candidate for B is
    generated by the non-power generators; it works iff its Borel closure
    stays inside I."""
    _require_P(I, P)
    powers = set(P.powers())
    core = [g for g in I.gens if g not in powers]
    return I.contains_ideal(borel_closure(I.n, core))


def tshift_plus_P(I: MonomialIdeal, P: PowerSequence, spec: ShiftSpec, cap: int | None = None) -> MonomialIdeal:
    """shift_{a,b,t+1}(I') + P for an (a,b,t)-shifted-plus-P ideal I."""
    _require_P(I, P)
    _check_spec(I, spec)
    e_b = P.exponent(spec.b)
    if e_b is None:
        return plus_P(shift(I, spec.with_t(spec.t + 1), cap), P)
    Ip = delete_power(I, spec.b, e_b)
    if not is_shifted(Ip, spec):
        raise ValueError(f"{I} is not {(spec.a + 1, spec.b + 1, spec.t)}-shifted-plus-P")
    return plus_P(shift(Ip, spec.with_t(spec.t + 1), cap), P)


StepHook = Callable[[str, int, int, "int | None", MonomialIdeal, MonomialIdeal], None]


def strong_shift_plus_P(
    I: MonomialIdeal,
    P: PowerSequence,
    a: int,
    b: int,
    cap: int | None = None,
    max_steps: int = 10_000,
    on_step: StepHook | None = None,
) -> MonomialIdeal:
    """Make I (a,b)-strongly shifted-plus-P.

    First apply shift_{a,b}; then, while some t has I not (a,b,t)-shifted-plus-P,
    take the smallest such t and replace I by shift_{a,b,t}(I') + P.
    ``on_step(kind, a, b, t, before, after)`` sees every step taken.
    """
    _require_P(I, P)
    spec0 = ShiftSpec(a, b, 0)
    J = shift(I, spec0, cap)
    if on_step:
        on_step("initial-shift", a, b, 0, I, J)
    I = J
    e_b = P.exponent(b)
    for _ in range(max_steps):
        Ip = delete_power(I, b, e_b)
        bad = next((t for t in range(shifted_t_bound(Ip, b)) if not is_shifted(Ip, ShiftSpec(a, b, t))), None)
        if bad is None:
            return I
        if bad == 0:
            raise WalkError(f"{I} lost (a,b)-shiftedness after deleting the power of x{b + 1}")
        J = tshift_plus_P(I, P, ShiftSpec(a, b, bad - 1), cap)
        if J == I:
            raise WalkError(f"t-shift at t={bad} left {I} unchanged")
        if on_step:
            on_step("t-shift-plus-P", a, b, bad, I, J)
        I = J
    raise WalkError(f"strong shifting did not finish within {max_steps} steps")


def compress_plus_P(I: MonomialIdeal, P: PowerSequence, a: int, b: int, cap: int | None = None) -> MonomialIdeal:
    """compress(I', {a,b}) + P."""
    _require_P(I, P)
    Ip = delete_power(I, b, P.exponent(b))
    return plus_P(compress(Ip, (a, b), cap), P)


def colon_power(I: MonomialIdeal, b: int, beta: int) -> MonomialIdeal:
    return colon(I, mono.var(I.n, b, beta))
