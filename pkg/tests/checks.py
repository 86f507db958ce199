"""Property checks shared by the hypothesis tests and the acceptance runs.

Each check raises AssertionError with a description on failure.
"""
from __future__ import annotations

from itertools import product

import oracles
from lexplus import monomial as mono
from lexplus.betti import (
    betti_dominates,
    betti_table,
    colon_formula_betti,
    ek_betti,
    graded_betti,
    hilbert_from_betti,
    keylemma_check,
    koszul_complex,
    multigraded_betti,
    shadow,
)
from lexplus.hilbert import hf_equal, hilbert_function
from lexplus.ideal import MonomialIdeal, colon, ideal_sum, intersect, revlex_compare_ideals, times_variables
from lexplus.monomial import QQ, Field, Ordering, PowerSequence
from lexplus.transforms import (
    ShiftSpec,
    compress,
    delete_power,
    is_shifted,
    is_strongly_shifted,
    plus_P,
    polarize,
    shift,
)


# criterion 1


def check_koszul_consistency(I: MonomialIdeal, field: Field = QQ) -> None:
    graded, mg = betti_table(I, field)
    for m in mono.divisors(I.lcm()):
        K = koszul_complex(I, m)
        assert K.d_squared_is_zero(), f"D∘D != 0 at {m} for {I}"
        h = K.homology(field)
        assert K.euler_characteristic() == sum((-1) ** i * b for i, b in h.items()), f"Euler mismatch at {m}"
        assert h == {i: b for (i, mm), b in mg.entries.items() if mm == m}, f"strand {m} disagrees with table"
    assert mg.graded() == graded
    cap = I.max_degree() + 3
    hf = hilbert_function(I, cap)
    for d in range(cap + 1):
        assert hilbert_from_betti(graded, I.n, d) == hf[d], f"alternating sum fails in degree {d} for {I}"


# criterion 3


def check_ek(B: MonomialIdeal) -> None:
    assert ek_betti(B) == graded_betti(B), f"EK formula disagrees with the Koszul table for {B}"


# criterion 4


def check_colon_formula(M: MonomialIdeal, P: PowerSequence, field: Field = QQ) -> None:
    expected = graded_betti(plus_P(M, P), field).to_quotient()
    assert colon_formula_betti(M, P, field) == expected, f"colon formula fails for M={M}, P={P}"


# criterion 5


def check_shift_basics(I: MonomialIdeal, spec: ShiftSpec) -> None:
    J = shift(I, spec)
    cap = max(I.max_degree(), J.max_degree()) + 2
    # the four-case sets, built independently, are closed under S_1 and match J
    levels = oracles.shift_brute(I.gens, I.n, spec.a, spec.b, spec.t, cap)
    for d in range(cap):
        assert times_variables(levels[d], I.n) <= levels[d + 1], f"shift sets not an ideal in degree {d}"
    for d in range(cap + 1):
        assert J.component(d) == levels[d], f"shift of {I} wrong in degree {d}"
    assert is_shifted(J, spec), f"{J} is not {spec}-shifted"
    assert hf_equal(I, J)
    assert revlex_compare_ideals(J, I, cap) in (Ordering.GREATER, Ordering.EQUAL)
    at = mono.var(I.n, spec.a, spec.t)
    assert J.times(at) == shift(I.times(at), spec.with_t(0)), f"a^t shift identity fails for {I}, {spec}"


# criterion 6


def check_shift_betti(I: MonomialIdeal, spec: ShiftSpec, field: Field = QQ) -> None:
    J = shift(I, spec)
    mi = multigraded_betti(I, field)
    mj = multigraded_betti(J, field)
    assert betti_dominates(mj.graded(), mi.graded()), f"graded Betti numbers dropped: {I} -> {J}"
    a, b, t = spec.a, spec.b, spec.t
    keys = {k for k in mi.entries} | {k for k in mj.entries}
    for i, m in keys:
        s, q = m[a], m[b]
        if q < t or q == s + t:
            assert mj[i, m] >= mi[i, m], f"b_{i},{m} dropped"
        else:
            w = list(m)
            w[a], w[b] = q - t, s + t
            w = tuple(w)
            assert mj[i, m] + mj[i, w] >= mi[i, m] + mi[i, w], f"paired sum at {m}, {w} dropped"


# criterion 7


def check_symmetry(I: MonomialIdeal, a: int, b: int) -> None:
    J = shift(I, ShiftSpec(a, b, 0))
    sI, sJ = I.sigma(a, b), J.sigma(a, b)
    assert intersect(I, sI) == intersect(J, sJ)
    assert ideal_sum(I, sI) == ideal_sum(J, sJ)


def check_shadow_lemma(I: MonomialIdeal, a: int, b: int, m) -> None:
    """m must be fixed by the swap of a and b."""
    assert m[a] == m[b]
    J = shift(I, ShiftSpec(a, b, 0))
    lhs = shadow(J, m)
    rhs = shift(shadow(I, m), ShiftSpec(a, b, 0))
    assert lhs == rhs, f"shadow at {m}: {lhs} vs {rhs} for {I}"


def check_samecolon(I: MonomialIdeal, P: PowerSequence, a: int, b: int) -> int:
    """For I' from shift_{a,b}(I), and each t at which I' is (a,b,t)-shifted,
    compare I' and shift_{a,b,t+1}(I') against (b^beta).  Returns the
    number of t values checked."""
    beta = P.exponent(b)
    I1 = shift(I, ShiftSpec(a, b, 0))
    Ip = delete_power(I1, b, beta)
    bb = mono.var(I.n, b, beta)
    checked = 0
    for t in range(max(Ip.max_exponent(b), 1)):
        if not is_shifted(Ip, ShiftSpec(a, b, t)):
            continue
        J = shift(Ip, ShiftSpec(a, b, t + 1))
        assert intersect(Ip, MonomialIdeal(I.n, [bb])) == intersect(J, MonomialIdeal(I.n, [bb]))
        assert colon(Ip, bb) == colon(J, bb)
        checked += 1
    return checked


# criterion 8


def check_compression_section(S: MonomialIdeal, P: PowerSequence, a: int, b: int, field: Field = QQ) -> None:
    """S is (a,b)-strongly shifted-plus-P with e_b finite."""
    beta, alpha = P.exponent(b), P.exponent(a)
    J = delete_power(S, b, beta)
    assert is_strongly_shifted(J, a, b)
    assert mono.var(S.n, a, alpha) in J and alpha <= beta
    T = compress(J, (a, b))
    n = S.n
    others = [i for i in range(n) if i not in (a, b)]
    fbound = [max(J.max_exponent(i), T.max_exponent(i)) + 1 for i in others]
    rbound = max(J.max_exponent(a), T.max_exponent(a)) + 2

    def mon(f, p, q):
        u = [0] * n
        for i, e in zip(others, f):
            u[i] = e
        u[a], u[b] = p, q
        return tuple(u)

    for f in product(*[range(k + 1) for k in fbound]):
        for r in range(rbound + 1):
            c1 = mon(f, r, beta) in J
            c2 = mon(f, r, beta - 1) in J
            c3 = all(mon(f, p, r + beta - 1 - p) in J for p in range(r, r + beta))
            c4 = mon(f, r, beta - 1) in T
            c5 = mon(f, r, beta) in T
            assert c1 == c2 == c3 == c4 == c5, f"five-way equivalence fails at f={f}, r={r} for {J}"
    for g in T.gens:
        assert g[b] < beta, f"generator {g} of the compression is divisible by b^{beta}"
    bb = MonomialIdeal(n, [mono.var(n, b, beta)])
    assert intersect(T, bb) == intersect(J, bb)
    assert colon(T, bb.gens[0]) == colon(J, bb.gens[0])
    assert betti_dominates(graded_betti(ideal_sum(T, bb), field), graded_betti(ideal_sum(J, bb), field))


# criterion 11


def check_polarization(I: MonomialIdeal, b: int, J: MonomialIdeal | None = None) -> None:
    Ipo = polarize(I, b)
    assert graded_betti(Ipo) == graded_betti(I)
    N = Ipo.n
    cap = I.max_degree() + 3
    assert hilbert_function(Ipo, cap) == hilbert_function(I.embed(N), cap)
    assert hf_equal(Ipo, I.embed(N))
    if J is not None:
        assert hf_equal(I, J) == hf_equal(I.embed(N), J.embed(N))


def check_keylemma(I: MonomialIdeal, m, field: Field = QQ) -> None:
    assert keylemma_check(I, m, field).equal
