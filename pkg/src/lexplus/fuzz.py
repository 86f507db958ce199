"""Seeded sampling of ideals containing pure powers, and the verification
campaign that runs lpp_verify plus a shift check on each sample."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations
from pathlib import Path

from . import monomial as mono
from .betti import betti_dominates, graded_betti
from .hilbert import hf_equal
from .ideal import MonomialIdeal, revlex_compare_ideals
from .monomial import Field, Ordering, PowerSequence
from .transforms import ShiftSpec, WalkError, plus_P, shift
from .walk import lpp_verify


@dataclass(frozen=True)
class FuzzConfig:
    n: int
    powers: tuple[int, ...]
    samples: int
    seed: int = 0
    max_extra_gens: int = 3
    max_degree: int = 4
    chars: tuple[int, ...] = (0,)
    walk: bool = True
    check_betti: bool = False

    def power_sequence(self) -> PowerSequence:
        return PowerSequence(self.n, self.powers)


def random_monomial(rng: random.Random, n: int, d: int, max_exp: int | None = None) -> mono.Monomial:
    mons = mono.monomials_of_degree(n, d)
    if max_exp is not None:
        mons = [u for u in mons if max(u, default=0) <= max_exp] or list(mons)
    return rng.choice(mons)


def random_ideal(
    rng: random.Random, n: int, max_gens: int = 4, max_degree: int = 4, min_degree: int = 1, max_exp: int | None = 3
) -> MonomialIdeal:
    """A nonzero random monomial ideal (used by the tests as well)."""
    k = rng.randint(1, max_gens)
    return MonomialIdeal(
        n, [random_monomial(rng, n, rng.randint(min_degree, max_degree), max_exp) for _ in range(k)]
    )


def random_ideal_plus_P(rng: random.Random, P: PowerSequence, max_extra_gens: int, max_degree: int) -> MonomialIdeal:
    k = rng.randint(0, max_extra_gens)
    gens = [random_monomial(rng, P.n, rng.randint(1, max_degree)) for _ in range(k)]
    return plus_P(MonomialIdeal(P.n, gens), P)


def exhaustive_corpus(P: PowerSequence, max_degree: int) -> list[MonomialIdeal]:
    """Every ideal P + (monomials of degree 1..max_degree), deduplicated."""
    powers = P.powers()
    cands = [
        u
        for d in range(1, max_degree + 1)
        for u in mono.monomials_of_degree(P.n, d)
        if not any(mono.divides(p, u) for p in powers)
    ]
    seen = {}
    for size in range(len(cands) + 1):
        for sub in combinations(cands, size):
            J = plus_P(MonomialIdeal(P.n, sub), P)
            seen.setdefault(J, None)
    return sorted(seen, key=lambda J: (len(J.gens), J.gens))


def _shift_check(I: MonomialIdeal, spec: ShiftSpec) -> dict:
    J = shift(I, spec)
    cap = max(I.max_degree(), J.max_degree()) + 1
    return {
        "spec": [mono.variable_name(spec.a), mono.variable_name(spec.b), spec.t],
        "hf_equal": hf_equal(I, J),
        "revlex_ge": revlex_compare_ideals(J, I, cap) in (Ordering.GREATER, Ordering.EQUAL),
        "betti_dominates": betti_dominates(graded_betti(J), graded_betti(I)),
    }


def run_sample(args) -> dict:
    index, I, cfg, spec = args
    P = cfg.power_sequence()
    result = {"index": index, "ideal": [mono.format_monomial(g) for g in I.gens], "checks": {}}
    ok = True
    try:
        for k, p in enumerate(cfg.chars):
            rep = lpp_verify(I, P, Field(p), walk=cfg.walk and k == 0, check_betti=cfg.check_betti)
            result["checks"][f"char{p}"] = {
                "hf_equal": rep.hf_equal,
                "betti_dominates": rep.dominates,
                "cancellation_feasible": rep.cancellation is not None,
                "lex_plus_P": [mono.format_monomial(g) for g in rep.lex_plus_P.gens],
            }
            if rep.trace is not None:
                result["walk_steps"] = rep.trace.step_count
                result["walk_changing_steps"] = rep.trace.changing_steps
            if rep.error:
                result["error"] = rep.error
            ok = ok and rep.passed
        sc = _shift_check(I, spec)
        result["checks"]["shift"] = sc
        ok = ok and all(v for k, v in sc.items() if k != "spec")
    except (WalkError, ArithmeticError, AssertionError, ValueError) as exc:
        result["error"] = f"{type(exc).__name__}: {exc}"
        ok = False
    result["pass"] = ok
    return result


def fuzz_campaign(cfg: FuzzConfig, jobs: int = 1, failure_dir: str | Path | None = None) -> dict:
    """Deterministic campaign: the same config yields the same report."""
    if cfg.n < 2:
        raise ValueError("fuzzing needs at least two variables")
    P = cfg.power_sequence()
    rng = random.Random(cfg.seed)
    tasks = []
    for k in range(cfg.samples):
        I = random_ideal_plus_P(rng, P, cfg.max_extra_gens, cfg.max_degree)
        a, b = sorted(rng.sample(range(cfg.n), 2))
        tasks.append((k, I, cfg, ShiftSpec(a, b, rng.randint(0, 2))))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_sample, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [run_sample(t) for t in tasks]
    results.sort(key=lambda r: r["index"])
    failures = [r["index"] for r in results if not r["pass"]]
    if failure_dir is not None and failures:
        from .io import format_ideal

        out = Path(failure_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k in failures:
            I = tasks[k][1]
            (out / f"failure_{cfg.seed}_{k}.ideal").write_text(format_ideal(I, P))
    return {
        "config": {**asdict(cfg), "powers": list(cfg.powers), "chars": list(cfg.chars)},
        "samples": cfg.samples,
        "passed": cfg.samples - len(failures),
        "failed": len(failures),
        "failures": failures,
        "results": results,
    }
