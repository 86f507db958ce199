import pytest
from hypothesis import given
from hypothesis import strategies as st

import checks
import oracles
from conftest import ideals, ideals_plus_P, monomials
from lexplus.betti import multigraded_betti
from lexplus.hilbert import hf_equal
from lexplus.ideal import MonomialIdeal, revlex_compare_ideals
from lexplus.monomial import Ordering, PowerSequence
from lexplus.transforms import (
    ShiftSpec,
    StabilizationError,
    WalkError,
    compress,
    delete_power,
    is_borel,
    is_borel_plus_P,
    is_compressed,
    is_compressed_plus_P,
    is_shifted,
    is_strongly_shifted,
    is_strongly_shifted_plus_P,
    plus_P,
    polarize,
    shift,
    strong_shift_plus_P,
    tshift_plus_P,
)

PAIRS3 = [(0, 1), (0, 2), (1, 2)]


def M(n, *gens):
    return MonomialIdeal(n, gens)


def P_ideal(P):
    return MonomialIdeal.from_powers(P)


# ---- shift


def test_shift_examples():
    assert shift(M(2, (0, 2)), ShiftSpec(0, 1, 0)) == M(2, (2, 0))
    P = PowerSequence(3, (2, 2, 3))
    for a, b in PAIRS3:
        assert shift(P_ideal(P), ShiftSpec(a, b, 0)) == P_ideal(P)
    assert shift(M(2, (1, 1)), ShiftSpec(0, 1, 0)) == M(2, (1, 1))


def test_shift_spec_validation():
    for args in [(1, 1, 0), (1, 0, 0), (0, 1, -1)]:
        with pytest.raises(ValueError):
            ShiftSpec(*args)
    with pytest.raises(ValueError):
        shift(M(2, (1, 1)), ShiftSpec(0, 2))


def test_shift_explicit_cap_too_small():
    with pytest.raises(StabilizationError):
        shift(M(2, (0, 3)), ShiftSpec(0, 1, 0), cap=2)


def test_is_shifted_examples():
    x = ShiftSpec(0, 1, 0)
    assert is_shifted(M(2, (2, 0)), x)
    assert not is_shifted(M(2, (0, 2)), x)
    P = PowerSequence(2, (2, 3))
    assert is_shifted(P_ideal(P), x)
    # as a plain ideal P fails at t=2 (x2^3 without x1*x2^2); plus-P it is strongly shifted
    assert not is_shifted(P_ideal(P), ShiftSpec(0, 1, 2))
    assert not is_strongly_shifted(P_ideal(P), 0, 1)
    assert is_strongly_shifted_plus_P(P_ideal(P), P, 0, 1)


@given(ideals(n=3, max_gens=3), st.sampled_from(PAIRS3), st.integers(0, 3))
def test_shift_properties(I, ab, t):
    checks.check_shift_basics(I, ShiftSpec(*ab, t))


@given(ideals(n=3, max_gens=3, max_exp=2), st.sampled_from(PAIRS3), st.integers(0, 2))
def test_shift_betti_sharp(I, ab, t):
    checks.check_shift_betti(I, ShiftSpec(*ab, t))


@given(ideals(n=3, max_gens=3), st.sampled_from(PAIRS3))
def test_symmetry(I, ab):
    checks.check_symmetry(I, *ab)


@given(ideals(n=3, max_gens=3), st.sampled_from(PAIRS3), st.integers(0, 2), monomials(3, max_exp=2, min_deg=0))
def test_shadow_lemma(I, ab, s, m):
    a, b = ab
    m = list(m)
    m[a] = m[b] = s
    checks.check_shadow_lemma(I, a, b, tuple(m))


@given(ideals_plus_P(), st.sampled_from(PAIRS3))
def test_samecolon(IP, ab):
    I, P = IP
    if P.exponent(ab[1]) is None:
        return
    checks.check_samecolon(I, P, *ab)


@given(ideals(n=3, max_gens=3), st.sampled_from(PAIRS3))
def test_fixed_multidegree_dominance(I, ab):
    a, b = ab
    J = shift(I, ShiftSpec(a, b, 0))
    mi, mj = multigraded_betti(I), multigraded_betti(J)
    for (i, m), v in mi.entries.items():
        if m[a] == m[b]:
            assert mj[i, m] >= v


# ---- compression and Borel


def test_compress_examples():
    assert compress(M(2, (1, 1)), (0, 1)) == M(2, (2, 0))
    assert compress(M(3, (0, 1, 1)), (0, 1)) == M(3, (1, 0, 1))
    lex = M(3, (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 3, 0))
    for A in PAIRS3:
        assert compress(lex, A) == lex


def test_borel_examples():
    assert is_borel(M(2, (2, 0), (1, 1), (0, 2)))
    assert not is_borel(M(2, (0, 1)))
    assert not is_borel(M(2, (2, 0), (0, 2)))


@given(ideals(n=3, max_gens=3), st.sampled_from(PAIRS3 + [(0, 1, 2)]))
def test_compress_matches_oracle(I, A):
    T = compress(I, A)
    cap = max(I.max_degree(), T.max_degree()) + 1
    levels = oracles.compress_brute(I.gens, 3, A, cap)
    for d in range(cap + 1):
        assert T.component(d) == levels[d]
    assert hf_equal(I, T)
    assert is_compressed(T, A)
    if T != I and len(A) == 2:
        assert revlex_compare_ideals(T, I, cap) is Ordering.GREATER


@given(ideals(n=3, max_gens=3))
def test_borel_iff_compressed_for_all_pairs(I):
    cap = I.max_degree() + 1
    b = is_borel(I)
    assert b == is_borel(I, cap) == oracles.is_borel_brute(I.gens, 3, cap)
    assert b == all(is_compressed(I, A) for A in PAIRS3)


@given(ideals_plus_P())
def test_borel_plus_P_iff_compressed_plus_P_for_all_pairs(IP):
    I, P = IP
    assert is_borel_plus_P(I, P) == all(is_compressed_plus_P(I, P, a, b) for a, b in PAIRS3)


# ---- polarization and powers


def test_polarize_examples():
    assert polarize(M(2, (0, 3)), 1) == M(4, (0, 1, 1, 1))
    assert polarize(M(2, (1, 0)), 1) == M(2, (1, 0))
    assert polarize(M(2, (2, 2), (0, 3)), 1) == M(4, (2, 1, 1, 0), (0, 1, 1, 1))


@given(ideals(n=3, max_gens=3), st.integers(0, 2), ideals(n=3, max_gens=3))
def test_polarization(I, b, J):
    checks.check_polarization(I, b, J)


def test_delete_power_examples():
    I = M(2, (2, 0), (1, 1), (0, 2))
    assert delete_power(I, 1, 2) == M(2, (2, 0), (1, 1))
    assert delete_power(M(2, (2, 0), (1, 1)), 1, 2) == M(2, (2, 0), (1, 1))
    P = P_ideal(PowerSequence(3, (2, 2, 2)))
    assert delete_power(P, 2, 2) == M(3, (2, 0, 0), (0, 2, 0))
    assert delete_power(I, 1, None) == I


# ---- plus-P steps


def test_tshift_plus_P_examples():
    P2 = PowerSequence(2, (2, 3))
    assert tshift_plus_P(P_ideal(P2), P2, ShiftSpec(0, 1, 0)) == P_ideal(P2)
    I = M(2, (2, 0), (1, 2), (0, 3))
    J = tshift_plus_P(I, P2, ShiftSpec(0, 1, 0))
    assert J == plus_P(shift(M(2, (2, 0), (1, 2)), ShiftSpec(0, 1, 1)), P2)
    assert hf_equal(I, J)
    assert J.contains_ideal(P_ideal(P2))
    assert revlex_compare_ideals(J, I, 6) in (Ordering.GREATER, Ordering.EQUAL)


def test_tshift_plus_P_precondition():
    P = PowerSequence(2, (2, 2))
    with pytest.raises(ValueError):
        tshift_plus_P(M(2, (1, 1)), P, ShiftSpec(0, 1, 0))
    # deleting x2^2 from P + (x2*x3) leaves x2*x3 without its partner x1*x3
    with pytest.raises(ValueError):
        tshift_plus_P(M(3, (2, 0, 0), (0, 2, 0), (0, 0, 2), (0, 1, 1)), PowerSequence(3, (2, 2, 2)), ShiftSpec(0, 1, 0))


def test_strong_shift_examples():
    P = PowerSequence(3, (2, 2, 2))
    assert strong_shift_plus_P(P_ideal(P), P, 0, 1) == P_ideal(P)
    B = M(3, (2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 2))
    out = strong_shift_plus_P(B, P, 0, 1)
    assert hf_equal(out, B)
    assert revlex_compare_ideals(out, B, 6) in (Ordering.GREATER, Ordering.EQUAL)


@given(ideals_plus_P(), st.sampled_from(PAIRS3))
def test_strong_shift_steps(IP, ab):
    I, P = IP
    a, b = ab
    seen = []

    def hook(kind, a_, b_, t, before, after):
        seen.append((kind, before, after))

    S = strong_shift_plus_P(I, P, a, b, on_step=hook)
    assert is_strongly_shifted_plus_P(S, P, a, b)
    assert S.contains_ideal(P_ideal(P))
    assert hf_equal(S, I)
    for kind, before, after in seen[1:]:
        assert kind == "t-shift-plus-P"
        assert revlex_compare_ideals(after, before, after.max_degree() + before.max_degree()) is Ordering.GREATER


@given(ideals_plus_P(), st.sampled_from(PAIRS3))
def test_compression_section(IP, ab):
    I, P = IP
    a, b = ab
    if P.exponent(b) is None:
        return
    S = strong_shift_plus_P(I, P, a, b)
    checks.check_compression_section(S, P, a, b)


def test_walk_error_type():
    assert issubclass(WalkError, RuntimeError)
