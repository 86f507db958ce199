"""Monomials as exponent tuples, monomial orders, and the small value types
(power sequences, fields) shared by every other module.

A monomial in ``n`` variables is a plain ``tuple`` of ``n`` nonnegative ints.
Variables are 0-based internally and printed as ``x1 .. xn``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Sequence

Monomial = tuple  # tuple[int, ...]


class Ordering(enum.Enum):
    GREATER = 1
    EQUAL = 0
    LESS = -1
    INCOMPARABLE = None

    def __str__(self) -> str:
        return self.name.lower()


def _check_same_n(u: Monomial, v: Monomial) -> None:
    if len(u) != len(v):
        raise ValueError(f"monomials live in different rings ({len(u)} vs {len(v)} variables)")


def one(n: int) -> Monomial:
    return (0,) * n


def var(n: int, i: int, e: int = 1) -> Monomial:
    """x_{i+1}^e in ``n`` variables."""
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for {n} variables")
    return tuple(e if k == i else 0 for k in range(n))


def degree(u: Monomial) -> int:
    return sum(u)


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """v / u, assuming u divides v."""
    return tuple(b - a for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    return tuple(min(a, b) for a, b in zip(u, v))


def support(u: Monomial) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(u) if e)


def radical(u: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in u)


def is_squarefree(u: Monomial) -> bool:
    return all(e <= 1 for e in u)


def sigma_swap(u: Monomial, a: int, b: int) -> Monomial:
    """Exchange the exponents of variables ``a`` and ``b``."""
    if a == b:
        raise ValueError("sigma_swap needs two distinct variables")
    w = list(u)
    w[a], w[b] = w[b], w[a]
    return tuple(w)


def lex_compare(u: Monomial, v: Monomial) -> Ordering:
    _check_same_n(u, v)
    if u == v:
        return Ordering.EQUAL
    return Ordering.GREATER if u > v else Ordering.LESS


def revlex_key(u: Monomial) -> tuple:
    """Sort key: larger key means revlex-greater (within one degree)."""
    return tuple(-e for e in reversed(u))


def revlex_compare(u: Monomial, v: Monomial) -> Ordering:
    _check_same_n(u, v)
    if degree(u) != degree(v):
        raise ValueError("revlex comparison is only defined within a single degree")
    ku, kv = revlex_key(u), revlex_key(v)
    if ku == kv:
        return Ordering.EQUAL
    return Ordering.GREATER if ku > kv else Ordering.LESS


def revlex_compare_sets(A: Iterable[Monomial], B: Iterable[Monomial]) -> Ordering:
    """Compare two equal-size sets of same-degree monomials, each sorted
    revlex-descending, position by position."""
    A = sorted(A, key=revlex_key, reverse=True)
    B = sorted(B, key=revlex_key, reverse=True)
    if len(A) != len(B):
        raise ValueError(f"sets have different sizes ({len(A)} vs {len(B)})")
    degs = {degree(u) for u in A} | {degree(v) for v in B}
    if len(degs) > 1:
        raise ValueError("sets mix several degrees")
    for u, v in zip(A, B):
        if u != v:
            return revlex_compare(u, v)
    return Ordering.EQUAL


@lru_cache(maxsize=4096)
def monomials_of_degree(n: int, d: int) -> tuple[Monomial, ...]:
    """All degree-``d`` monomials in ``n`` variables, lex-descending."""
    if d < 0:
        return ()
    if n == 0:
        return ((),) if d == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


def count_monomials(n: int, d: int) -> int:
    """dim S_d = C(n+d-1, d)."""
    if d < 0:
        return 0
    if n == 0:
        return 1 if d == 0 else 0
    return comb(n + d - 1, d)


def divisors(u: Monomial) -> Iterator[Monomial]:
    def rec(i: int, prefix: list[int]):
        if i == len(u):
            yield tuple(prefix)
            return
        for e in range(u[i] + 1):
            prefix.append(e)
            yield from rec(i + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def squarefree_divisors(u: Monomial) -> list[Monomial]:
    """Squarefree divisors of ``u`` (subsets of its support)."""
    supp = support(u)
    out = []
    for mask in range(1 << len(supp)):
        e = [0] * len(u)
        for k, i in enumerate(supp):
            if mask >> k & 1:
                e[i] = 1
        out.append(tuple(e))
    return out


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, e in enumerate(u):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def variable_name(i: int) -> str:
    return f"x{i + 1}"


@dataclass(frozen=True)
class PowerSequence:
    """Degrees e_1 <= ... <= e_r of the pure powers x_1^{e_1}, ..., x_r^{e_r}
    in ``n`` variables; variables past ``r`` carry no power (infinite)."""

    n: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) > self.n:
            raise ValueError(f"{len(self.exponents)} powers given for only {self.n} variables")
        if any(e < 2 for e in self.exponents):
            raise ValueError("every power must be at least 2")
        if any(x > y for x, y in zip(self.exponents, self.exponents[1:])):
            raise ValueError("powers must be nondecreasing")

    @property
    def r(self) -> int:
        return len(self.exponents)

    def exponent(self, i: int) -> int | None:
        """e_{i+1}, or None when the variable has no finite power."""
        return self.exponents[i] if i < self.r else None

    def power(self, i: int) -> Monomial:
        return var(self.n, i, self.exponents[i])

    def powers(self) -> list[Monomial]:
        return [self.power(i) for i in range(self.r)]

    def is_artinian(self) -> bool:
        return self.r == self.n

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(p) for p in self.powers()) + ")"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class Field:
    """Only the characteristic matters for monomial Betti numbers."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"field characteristic must be 0 or a prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def parse_exponent_list(seq: Sequence[int]) -> Monomial:
    if any(e < 0 for e in seq):
        raise ValueError("exponents must be nonnegative")
    return tuple(int(e) for e in seq)
