"""The Borelification walk and the lex-plus-powers comparison.

borelify_plus_P alternates strong shifting and compression on pairs of
variables until the ideal is Borel-plus-P, certifying every step.
lpp_verify compares an ideal containing P with the lex-plus-P ideal of the
same Hilbert function.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from . import monomial as mono
from .betti import BettiTable, betti_dominates, consecutive_cancellation, graded_betti
from .hilbert import HilbertFunction, hf_equal, hilbert_function, hilbert_numerator, lexify_mod_P
from .ideal import MonomialIdeal, revlex_compare_ideals
from .monomial import QQ, Field, Ordering, PowerSequence
from .transforms import (
    WalkError,
    _require_P,
    compress_plus_P,
    is_borel_plus_P,
    is_compressed_plus_P,
    strong_shift_plus_P,
)

STEP_KINDS = ("initial-shift", "t-shift-plus-P", "compression-plus-P")


def default_cap(I: MonomialIdeal, P: PowerSequence | None = None) -> int:
    """max generator degree + sum of finite powers + 2."""
    return I.max_degree() + (sum(P.exponents) if P is not None else 0) + 2


@dataclass(frozen=True)
class WalkStep:
    kind: str
    pair: tuple[int, int]
    t: int | None
    before: MonomialIdeal
    after: MonomialIdeal
    hf_equal: bool
    revlex: Ordering
    betti_dominates: bool | None = None

    @property
    def changed(self) -> bool:
        return self.before != self.after

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "pair": [mono.variable_name(self.pair[0]), mono.variable_name(self.pair[1])],
            "t": self.t,
            "before": [mono.format_monomial(g) for g in self.before.gens],
            "after": [mono.format_monomial(g) for g in self.after.gens],
            "hf_equal": self.hf_equal,
            "revlex": str(self.revlex),
            "betti_dominates": self.betti_dominates,
        }


@dataclass
class WalkTrace:
    initial: MonomialIdeal
    steps: list[WalkStep] = field(default_factory=list)
    outcome: MonomialIdeal | None = None
    elapsed: float = 0.0

    @property
    def step_count(self) -> int:
        return len(self.steps)

    @property
    def changing_steps(self) -> int:
        return sum(1 for s in self.steps if s.changed)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "initial": [mono.format_monomial(g) for g in self.initial.gens],
            "outcome": [mono.format_monomial(g) for g in self.outcome.gens] if self.outcome else None,
            "step_count": self.step_count,
            "changing_steps": self.changing_steps,
            "steps": [s.to_json() for s in self.steps],
        }
        if timing:
            out["wall_time_s"] = round(self.elapsed, 6)
        return out


def borelify_plus_P(
    I: MonomialIdeal,
    P: PowerSequence,
    cap: int | None = None,
    check_betti: bool = False,
    field: Field = QQ,
    max_rounds: int = 1000,
) -> tuple[MonomialIdeal, WalkTrace]:
    """Walk I to a Borel-plus-P ideal with the same Hilbert function.

    Pairs (a, b) are taken in lexicographic order; for the first pair on
    which I is not compressed-plus-P, strong shifting and then compression
    are applied.  Every step must keep the Hilbert function and move
    strictly up in revlex order (or leave the ideal unchanged); with
    ``check_betti`` each step must also weakly increase every b_{i,j}.
    """
    _require_P(I, P)
    start = time.perf_counter()
    cap = default_cap(I, P) if cap is None else cap
    trace = WalkTrace(I)
    betti_cache: dict[MonomialIdeal, BettiTable] = {}

    def betti(J):
        if J not in betti_cache:
            betti_cache[J] = graded_betti(J, field)
        return betti_cache[J]

    def record(kind, a, b, t, before, after):
        same_hf = hf_equal(before, after)
        if not same_hf:
            raise WalkError(f"{kind} on {(a + 1, b + 1)} changed the Hilbert function: {before} -> {after}")
        c = max(cap, before.max_degree() + 1, after.max_degree() + 1)
        order = revlex_compare_ideals(after, before, c)
        if before != after and order is not Ordering.GREATER:
            raise WalkError(f"{kind} on {(a + 1, b + 1)} is not revlex-increasing ({order}): {before} -> {after}")
        dom = None
        if check_betti:
            dom = betti_dominates(betti(after), betti(before))
            if not dom:
                raise WalkError(f"{kind} on {(a + 1, b + 1)} decreased a Betti number: {before} -> {after}")
        trace.steps.append(WalkStep(kind, (a, b), t, before, after, same_hf, order, dom))

    pairs = list(combinations(range(I.n), 2))
    for _ in range(max_rounds):
        pair = next(((a, b) for a, b in pairs if not is_compressed_plus_P(I, P, a, b)), None)
        if pair is None:
            break
        a, b = pair
        J = strong_shift_plus_P(I, P, a, b, on_step=record)
        T = compress_plus_P(J, P, a, b)
        record("compression-plus-P", a, b, None, J, T)
        if T == I:
            raise WalkError(f"no progress on pair {(a + 1, b + 1)} for {I}")
        I = T
    else:
        raise WalkError(f"walk did not finish within {max_rounds} rounds")
    if not is_borel_plus_P(I, P):
        raise WalkError(f"walk ended at {I}, which is compressed-plus-P for every pair but not Borel-plus-P")
    trace.outcome = I
    trace.elapsed = time.perf_counter() - start
    return I, trace


def lex_plus_P(I: MonomialIdeal, P: PowerSequence, cap: int | None = None) -> tuple[MonomialIdeal, HilbertFunction]:
    """The lex-plus-P ideal with the Hilbert function of I, certified in every
    degree by comparing Hilbert series numerators."""
    _require_P(I, P)
    fixed = cap is not None
    c = default_cap(I, P) if cap is None else cap
    target = hilbert_numerator(I)
    for _ in range(5):
        hf = hilbert_function(I, c)
        L = lexify_mod_P(hf, P)
        if hilbert_numerator(L) == target:
            return L, hf
        if fixed:
            break
        c *= 2
    raise WalkError(f"lex-plus-P ideal of {I} not determined below degree {c}")


@dataclass
class LppReport:
    ideal: MonomialIdeal
    powers: PowerSequence
    field: Field
    cap: int
    hilbert: HilbertFunction
    lex_plus_P: MonomialIdeal
    betti_ideal: BettiTable
    betti_lex: BettiTable
    hf_equal: bool
    dominates: bool
    cancellation: dict | None
    trace: WalkTrace | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.hf_equal and self.dominates and self.cancellation is not None

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "ideal": [mono.format_monomial(g) for g in self.ideal.gens],
            "n": self.ideal.n,
            "powers": list(self.powers.exponents),
            "char": self.field.characteristic,
            "cap": self.cap,
            "hilbert": list(self.hilbert.values),
            "lex_plus_P": [mono.format_monomial(g) for g in self.lex_plus_P.gens],
            "betti_ideal": [{"i": i, "j": j, "b": b} for i, j, b in self.betti_ideal.rows()],
            "betti_lex_plus_P": [{"i": i, "j": j, "b": b} for i, j, b in self.betti_lex.rows()],
            "hf_equal": self.hf_equal,
            "betti_dominates": self.dominates,
            "cancellation": None
            if self.cancellation is None
            else [{"i": i, "j": j, "c": c} for (i, j), c in sorted(self.cancellation.items())],
            "pass": self.passed,
        }
        if self.trace is not None:
            out["walk"] = self.trace.to_json(timing)
        if self.error:
            out["error"] = self.error
        if not self.passed:
            out["note"] = (
                "counterexample candidate: the inequality is a theorem for monomial regular "
                "sequences, so this points at an implementation bug"
            )
        return out


def lpp_verify(
    I: MonomialIdeal,
    P: PowerSequence,
    field: Field = QQ,
    cap: int | None = None,
    walk: bool = False,
    check_betti: bool = False,
) -> LppReport:
    """Compare b_{i,j}(I) with b_{i,j}(L+P) where L+P is lex-plus-P with the
    same Hilbert function; also solve for the consecutive cancellations."""
    _require_P(I, P)
    L, hf = lex_plus_P(I, P, cap)
    bI = graded_betti(I, field)
    bL = graded_betti(L, field)
    report = LppReport(
        ideal=I,
        powers=P,
        field=field,
        cap=hf.cap,
        hilbert=hf,
        lex_plus_P=L,
        betti_ideal=bI,
        betti_lex=bL,
        hf_equal=hf_equal(I, L),
        dominates=betti_dominates(bL, bI),
        cancellation=consecutive_cancellation(bL, bI),
    )
    if walk:
        try:
            _, report.trace = borelify_plus_P(I, P, check_betti=check_betti, field=field)
        except WalkError as exc:
            report.error = str(exc)
    return report
