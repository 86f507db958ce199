"""Command-line interface: ``lexplus <command> ...``.

Exit codes: 0 success (or verification passed), 2 verification failed,
1 usage or input error.  With ``--json`` every command writes a single JSON
document to stdout, errors included.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import io
from . import monomial as mono
from .betti import betti_table
from .hilbert import hilbert_function, hilbert_numerator
from .ideal import MonomialIdeal
from .monomial import Field, PowerSequence
from .transforms import ShiftSpec, StabilizationError, WalkError, compress, plus_P, polarize, shift
from .walk import borelify_plus_P, default_cap, lex_plus_P, lpp_verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _variable(text: str) -> int:
    s = text.strip()
    s = s[1:] if s[:1] in ("x", "X") else s
    if not s.isdigit() or int(s) < 1:
        raise argparse.ArgumentTypeError(f"not a variable: {text!r} (use x1, x2, ...)")
    return int(s) - 1


def _variables(text: str) -> list[int]:
    return [_variable(t) for t in text.split(",") if t.strip()]


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _color(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _load(args) -> io.IdealFile:
    path = Path(args.file)
    text = sys.stdin.read() if args.file == "-" else path.read_text()
    parsed = io.parse_ideal(text)
    for w in parsed.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return parsed


def _ideal(parsed: io.IdealFile) -> MonomialIdeal:
    # a 'powers' line adds x_i^{e_i} to the generators
    return plus_P(parsed.ideal, parsed.powers) if parsed.powers is not None else parsed.ideal


def _powers(parsed: io.IdealFile) -> PowerSequence:
    return parsed.powers if parsed.powers is not None else PowerSequence(parsed.ideal.n, ())


def _check_var(I: MonomialIdeal, *vs: int) -> None:
    for v in vs:
        if v >= I.n:
            raise UsageError(f"variable x{v + 1} is not in a ring with {I.n} variables")


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _ideal_output(args, I: MonomialIdeal, P: PowerSequence | None, cap, extra: dict | None = None) -> None:
    if args.json:
        doc = {"n": I.n, "gens": [mono.format_monomial(g) for g in I.gens], "cap": cap}
        if P is not None and P.r:
            doc["powers"] = list(P.exponents)
        doc.update(extra or {})
        _emit(args, io.dumps(doc))
    else:
        head = f"# cap {cap if cap is not None else 'auto'}\n"
        _emit(args, head + io.format_ideal(I, P))


def cmd_hilbert(args) -> int:
    parsed = _load(args)
    I, P = _ideal(parsed), parsed.powers
    cap = args.cap if args.cap is not None else default_cap(I, P)
    hf = hilbert_function(I, cap)
    if args.plot:
        from .plotting import plot_hilbert

        plot_hilbert(hf, args.plot)
    if args.json:
        doc = io.hilbert_to_json(hf)
        doc["numerator"] = list(hilbert_numerator(I))
        _emit(args, io.dumps(doc))
        return 0
    lines = [f"# cap {cap}", "d\tdim_S\tdim_I\tdim_S/I"]
    for d in range(cap + 1):
        s = mono.count_monomials(I.n, d)
        lines.append(f"{d}\t{s}\t{hf[d]}\t{s - hf[d]}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_betti(args) -> int:
    parsed = _load(args)
    graded, mg = betti_table(_ideal(parsed), Field(args.char), jobs=args.jobs)
    table = graded.to_quotient() if args.quotient else graded
    if args.plot:
        from .plotting import plot_betti

        plot_betti(table, args.plot, f"Betti table ({table.convention})")
    if args.json:
        _emit(args, io.dumps(io.betti_to_json(table, args.char, mg if args.multigraded else None)))
        return 0
    lines = [f"# convention {table.convention}", f"# char {args.char}", "i\tj\tb"]
    lines += [f"{i}\t{j}\t{b}" for i, j, b in table.rows()]
    if args.multigraded:
        if args.quotient:
            lines.append("# multigraded entries below use the ideal convention")
        lines.append("i\tm\tb")
        lines += [f"{i}\t{mono.format_monomial(m)}\t{b}" for i, m, b in mg.rows()]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_lexify(args) -> int:
    parsed = _load(args)
    I = _ideal(parsed)
    P = _powers(parsed) if args.mod_powers else PowerSequence(I.n, ())
    if args.mod_powers and not P.r:
        print("warning: no 'powers' line; --mod-powers gives the plain lex ideal", file=sys.stderr)
    L, hf = lex_plus_P(I, P, args.cap)
    _ideal_output(args, L, P, hf.cap)
    return 0


def cmd_shift(args) -> int:
    parsed = _load(args)
    I = _ideal(parsed)
    _check_var(I, args.a, args.b)
    if args.a >= args.b:
        raise UsageError("-a must come before -b in the variable order")
    J = shift(I, ShiftSpec(args.a, args.b, args.t), args.cap)
    _ideal_output(args, J, parsed.powers, args.cap)
    return 0


def cmd_compress(args) -> int:
    parsed = _load(args)
    I = _ideal(parsed)
    _check_var(I, *args.A)
    if len(set(args.A)) < 1:
        raise UsageError("-A needs at least one variable")
    T = compress(I, args.A, args.cap)
    _ideal_output(args, T, parsed.powers, args.cap)
    return 0


def cmd_polarize(args) -> int:
    parsed = _load(args)
    I = _ideal(parsed)
    _check_var(I, args.b)
    _ideal_output(args, polarize(I, args.b), None, None)
    return 0


def _write_trace(path: str, trace_json: dict) -> None:
    Path(path).write_text(io.dumps(trace_json))


def cmd_borelify(args) -> int:
    parsed = _load(args)
    P = _powers(parsed)
    I = _ideal(parsed)
    B, trace = borelify_plus_P(I, P, cap=args.cap, check_betti=args.check_betti)
    cap = args.cap if args.cap is not None else default_cap(I, P)
    tj = trace.to_json(timing=False)
    if args.trace:
        _write_trace(args.trace, tj)
    if args.plot:
        from .plotting import plot_walk

        plot_walk(tj, args.plot)
    _ideal_output(args, B, P, cap, {"steps": trace.step_count, "changing_steps": trace.changing_steps})
    return 0


def cmd_verify(args) -> int:
    parsed = _load(args)
    P = _powers(parsed)
    walk = args.walk or args.trace is not None
    rep = lpp_verify(_ideal(parsed), P, Field(args.char), cap=args.cap, walk=walk, check_betti=args.check_betti)
    doc = rep.to_json(timing=False)
    if args.trace and rep.trace is not None:
        _write_trace(args.trace, rep.trace.to_json(timing=False))
    if args.plot:
        from .plotting import plot_betti_comparison

        plot_betti_comparison(rep.betti_lex, rep.betti_ideal, args.plot)
    if args.json:
        _emit(args, io.dumps(doc))
    else:
        lines = [
            f"# cap {rep.cap}",
            f"# char {args.char}",
            "lex_plus_P\t" + ", ".join(doc["lex_plus_P"]),
            f"hf_equal\t{rep.hf_equal}",
            f"betti_dominates\t{rep.dominates}",
            "i\tj\tb(I)\tb(L+P)",
        ]
        keys = sorted(set(rep.betti_ideal.entries) | set(rep.betti_lex.entries))
        lines += [f"{i}\t{j}\t{rep.betti_ideal[i, j]}\t{rep.betti_lex[i, j]}" for i, j in keys]
        if rep.cancellation is None:
            lines.append("cancellation\tinfeasible")
        elif not any(rep.cancellation.values()):
            lines.append("cancellation\tnone (c = 0)")
        else:
            lines.append("i\tj\tc")
            lines += [f"{i}\t{j}\t{c}" for (i, j), c in sorted(rep.cancellation.items())]
        if rep.trace is not None:
            lines.append(f"walk_steps\t{rep.trace.step_count}\t{rep.trace.changing_steps} changing")
        if rep.error:
            lines.append(f"error\t{rep.error}")
        lines.append(_color("PASS", True) if rep.passed else _color("FAIL", False) + "\t" + doc["note"])
        _emit(args, "\n".join(lines) + "\n")
    return 0 if rep.passed else 2


def cmd_fuzz(args) -> int:
    from .fuzz import FuzzConfig, fuzz_campaign

    cfg = FuzzConfig(
        n=args.n,
        powers=args.powers,
        samples=args.samples,
        seed=args.seed,
        max_extra_gens=args.max_extra_gens,
        max_degree=args.max_degree,
        chars=args.chars,
        walk=not args.no_walk,
        check_betti=args.check_betti,
    )
    PowerSequence(cfg.n, cfg.powers)
    for p in cfg.chars:
        Field(p)
    report = fuzz_campaign(cfg, jobs=args.jobs, failure_dir=args.failures)
    if args.plot:
        from .plotting import plot_fuzz

        plot_fuzz(report, args.plot)
    if not args.json:
        print(f"{report['passed']}/{report['samples']} passed", file=sys.stderr)
    _emit(args, io.dumps(report))
    return 0 if report["failed"] == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lexplus", description="Monomial ideals containing pure powers: Betti tables, transforms, lex-plus-powers checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", "-o", help="write the main output to this file instead of stdout")

    def with_file(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("file", help="ideal file ('-' for stdin)")
        return p

    p = with_file("hilbert", "dim I_d in each degree up to the cap")
    p.add_argument("--cap", type=_nonneg)
    p.add_argument("--plot", metavar="FILE", help="save a bar chart")
    p.set_defaults(func=cmd_hilbert)

    p = with_file("betti", "graded (and multigraded) Betti numbers")
    p.add_argument("--char", type=_nonneg, default=0)
    p.add_argument("--multigraded", action="store_true")
    p.add_argument("--quotient", action="store_true", help="report b_{i,j}(S/I) instead of b_{i,j}(I)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--plot", metavar="FILE", help="save a heatmap of the table")
    p.set_defaults(func=cmd_betti)

    p = with_file("lexify", "lex ideal with the same Hilbert function")
    p.add_argument("--cap", type=_nonneg)
    p.add_argument("--mod-powers", action="store_true", help="lex-plus-P ideal for the file's powers")
    p.set_defaults(func=cmd_lexify)

    p = with_file("shift", "generalized (a,b,t) shift")
    p.add_argument("-a", type=_variable, required=True)
    p.add_argument("-b", type=_variable, required=True)
    p.add_argument("-t", type=_nonneg, default=0)
    p.add_argument("--cap", type=_nonneg)
    p.set_defaults(func=cmd_shift)

    p = with_file("compress", "A-compression")
    p.add_argument("-A", type=_variables, required=True, help="comma-separated variables, e.g. x1,x2")
    p.add_argument("--cap", type=_nonneg)
    p.set_defaults(func=cmd_compress)

    p = with_file("polarize", "polarize one variable")
    p.add_argument("-b", type=_variable, required=True)
    p.set_defaults(func=cmd_polarize)

    p = with_file("borelify", "walk to a Borel-plus-P ideal")
    p.add_argument("--cap", type=_nonneg)
    p.add_argument("--check-betti", action="store_true", help="require Betti numbers to weakly increase at every step")
    p.add_argument("--trace", metavar="FILE", help="write the walk trace as JSON")
    p.add_argument("--plot", metavar="FILE", help="save a plot of the walk")
    p.set_defaults(func=cmd_borelify)

    p = with_file("verify", "compare Betti numbers with the lex-plus-P ideal")
    p.add_argument("--char", type=_nonneg, default=0)
    p.add_argument("--cap", type=_nonneg)
    p.add_argument("--walk", action="store_true", help="also run the walk")
    p.add_argument("--check-betti", action="store_true", help="check Betti numbers at every walk step")
    p.add_argument("--trace", metavar="FILE", help="run the walk and write its trace as JSON")
    p.add_argument("--plot", metavar="FILE", help="save side by side Betti heatmaps")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", parents=[common], help="seeded verification campaign")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--powers", type=_int_list, required=True, help="e.g. 2,2,2")
    p.add_argument("--samples", type=_nonneg, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-extra-gens", type=_nonneg, default=3)
    p.add_argument("--max-degree", type=_nonneg, default=4)
    p.add_argument("--chars", type=_int_list, default=(0,), help="characteristics, e.g. 0,2")
    p.add_argument("--no-walk", action="store_true")
    p.add_argument("--check-betti", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--failures", metavar="DIR", help="write reproducer files for failing samples here")
    p.add_argument("--plot", metavar="FILE", help="save a summary figure")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as exc:
        return _fail(args, exc.to_json(), str(exc))
    except (UsageError, OSError) as exc:
        return _fail(args, {"error": "usage", "message": str(exc)}, str(exc))
    except (StabilizationError, WalkError) as exc:
        return _fail(args, {"error": type(exc).__name__, "message": str(exc)}, str(exc))
    except ValueError as exc:
        return _fail(args, {"error": "value", "message": str(exc)}, str(exc))


def _fail(args, doc: dict, text: str) -> int:
    if getattr(args, "json", False):
        sys.stdout.write(io.dumps(doc))
    print(f"lexplus: error: {text}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
