"""Ideal file format and JSON serialization of tables.

An ideal file looks like::

    # comment
    ring 3
    powers 2 2 2
    gens
    x1*x2
    x3^2

``powers`` is optional.  Monomials are ``x<k>^<e>`` factors joined by ``*``;
``1`` is the unit monomial.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from . import monomial as mono
from .betti import BettiTable, MultigradedBettiTable
from .hilbert import HilbertFunction
from .ideal import MonomialIdeal, minimal_generators
from .monomial import Monomial, PowerSequence


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column

    def to_json(self) -> dict:
        return {"error": "parse", "message": self.message, "line": self.line, "column": self.column}


@dataclass(frozen=True)
class IdealFile:
    ideal: MonomialIdeal
    powers: PowerSequence | None = None
    warnings: tuple[str, ...] = field(default=())


_FACTOR = re.compile(r"x(\d+)(?:\^(-?\d+))?$")


def parse_monomial(text: str, n: int, line: int = 1, column: int = 1) -> Monomial:
    s = text.strip()
    if s == "1":
        return mono.one(n)
    if not s:
        raise ParseError("empty monomial", line, column)
    exps = [0] * n
    col = column + (len(text) - len(text.lstrip()))
    for part in s.split("*"):
        m = _FACTOR.match(part.strip())
        if m is None:
            raise ParseError(f"cannot parse factor {part.strip()!r}", line, col)
        k = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= k <= n:
            raise ParseError(f"unknown variable x{k} in a ring with {n} variables", line, col)
        if e < 0:
            raise ParseError(f"negative exponent {e}", line, col)
        exps[k - 1] += e
        col += len(part) + 1
    return tuple(exps)


def parse_ideal(text: str) -> IdealFile:
    n = None
    powers = None
    gens: list[Monomial] = []
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip()) + 1
        words = line.split()
        if in_gens:
            gens.append(parse_monomial(line, n, lineno, indent))
            continue
        key = words[0]
        if key == "ring":
            if n is not None:
                raise ParseError("duplicate 'ring' line", lineno, indent)
            if len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
                raise ParseError("expected 'ring <n>' with n >= 1", lineno, indent)
            n = int(words[1])
        elif key == "powers":
            if n is None:
                raise ParseError("'powers' before 'ring'", lineno, indent)
            try:
                exps = [int(w) for w in re.split(r"[,\s]+", line.strip())[1:] if w]
                powers = PowerSequence(n, mono.parse_exponent_list(exps))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, indent) from None
        elif key == "gens":
            if n is None:
                raise ParseError("'gens' before 'ring'", lineno, indent)
            if len(words) != 1:
                raise ParseError("'gens' takes no arguments", lineno, indent + 5)
            in_gens = True
        else:
            raise ParseError(f"unexpected {key!r}; expected ring, powers or gens", lineno, indent)
    if n is None:
        raise ParseError("missing 'ring' line", 1)
    if not in_gens:
        raise ParseError("missing 'gens' section", len(text.splitlines()) or 1)
    warnings = []
    minimal = minimal_generators(gens)
    if len(set(gens)) != len(minimal):
        dropped = sorted(set(gens) - set(minimal), reverse=True)
        warnings.append("non-minimal generators dropped: " + ", ".join(mono.format_monomial(u) for u in dropped))
    return IdealFile(MonomialIdeal(n, minimal, _minimal=True), powers, tuple(warnings))


def format_ideal(I: MonomialIdeal, powers: PowerSequence | None = None) -> str:
    """Canonical serialization: parse_ideal(format_ideal(I)) gives I back."""
    lines = [f"ring {I.n}"]
    if powers is not None and powers.r:
        lines.append("powers " + " ".join(str(e) for e in powers.exponents))
    lines.append("gens")
    lines.extend(mono.format_monomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"


def betti_to_json(table: BettiTable, characteristic: int, mg: MultigradedBettiTable | None = None) -> dict:
    out = {
        "convention": table.convention,
        "char": characteristic,
        "entries": [{"i": i, "j": j, "b": b} for i, j, b in table.rows()],
    }
    if mg is not None:
        out["multigraded"] = [{"i": i, "m": mono.format_monomial(m), "b": b} for i, m, b in mg.rows()]
    return out


def hilbert_to_json(hf: HilbertFunction) -> dict:
    return {"n": hf.n, "cap": hf.cap, "values": list(hf.values)}


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
