"""Exact rank of small sparse integer matrices over QQ or GF(p)."""
from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

SparseRow = Mapping[int, int]


def rank(rows: Iterable[SparseRow], characteristic: int = 0) -> int:
    """Rank of the matrix whose rows are ``{column: entry}`` dicts.

    Characteristic 0 uses fraction-free integer elimination (rows are
    divided by their content to keep entries small); characteristic p
    reduces everything mod p.
    """
    p = characteristic
    work = []
    for row in rows:
        r = {c: (v % p if p else v) for c, v in row.items()}
        r = {c: v for c, v in r.items() if v}
        if r:
            work.append(r)
    rk = 0
    while work:
        # pivot on the row/column with the fewest entries, to limit fill-in
        piv_row = min(work, key=len)
        work.remove(piv_row)
        col = min(piv_row)
        pv = piv_row[col]
        rk += 1
        nxt = []
        for r in work:
            e = r.get(col)
            if e is None:
                nxt.append(r)
                continue
            if p:
                f = e * pow(pv, -1, p) % p
                new = dict(r)
                for c, v in piv_row.items():
                    w = (new.get(c, 0) - f * v) % p
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
            else:
                new = {c: pv * v for c, v in r.items()}
                for c, v in piv_row.items():
                    w = new.get(c, 0) - e * v
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                if new:
                    g = 0
                    for v in new.values():
                        g = gcd(g, v)
                    if g > 1:
                        new = {c: v // g for c, v in new.items()}
            if new:
                nxt.append(new)
        work = nxt
    return rk


def compose(A: list[dict], B: list[dict]) -> list[dict]:
    """Rows of the product where ``A`` maps basis i -> sum A[i][k] e_k and
    ``B`` maps basis k -> sum B[k][j] e_j (both as row dicts)."""
    out = []
    for row in A:
        acc: dict[int, int] = {}
        for k, v in row.items():
            for j, w in B[k].items():
                acc[j] = acc.get(j, 0) + v * w
        out.append({j: v for j, v in acc.items() if v})
    return out
