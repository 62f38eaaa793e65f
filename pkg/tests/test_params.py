import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gelint.errors import DomainError
from gelint.params import (
    INF,
    Exponent,
    as_exponent,
    complementary_modulus,
    conjugate,
    harmonic_diff,
    harmonic_sum,
    validate_triple,
)

p_finite = st.one_of(
    st.floats(min_value=-50.0, max_value=-0.01),
    st.floats(min_value=1.01, max_value=50.0),
)
index = st.floats(min_value=1.01, max_value=20.0)


def test_conjugate_examples():
    assert conjugate(2.0) == 2.0
    assert conjugate(INF) == 1.0
    assert conjugate(-1.0) == 0.5


def test_conjugate_of_one_is_a_domain_error():
    with pytest.raises(DomainError):
        conjugate(1.0)


@given(p_finite)
def test_conjugate_round_trip(p):
    e = Exponent.from_value(p)
    back = conjugate(conjugate(e))
    assert back == pytest.approx(p, rel=4e-16 * max(1.0, abs(p)))


@given(p_finite)
def test_conjugate_of_p_star_member_is_positive(p):
    assert conjugate(as_exponent(p)) > 0


def test_from_conjugate_inverts_conjugate_including_infinity():
    assert Exponent.from_conjugate(conjugate(INF)) == INF
    assert Exponent.from_conjugate(conjugate(as_exponent(-3))).value == pytest.approx(-3)


def test_harmonic_diff_examples():
    assert harmonic_diff(3.0, 2.0).value == pytest.approx(-6.0)
    assert harmonic_diff(2.0, 2.0) == INF
    assert harmonic_diff(INF, 2.0).value == -2.0


def test_harmonic_sum_flags_invalid():
    # 1/2 + 1/2 = 1 is outside P*
    assert harmonic_sum(2.0, 2.0) is None
    assert harmonic_sum(4.0, 4.0).value == 2.0


def test_infinity_is_a_tag():
    assert as_exponent("inf") is INF or as_exponent("inf") == INF
    assert as_exponent(math.inf) == INF
    assert INF.recip == 0.0
    assert str(INF) == "inf"
    assert Exponent(-0.0) == INF


@pytest.mark.parametrize("bad", [0.0, 0.5, 1.0, -math.inf, math.nan])
def test_p_outside_p_star_rejected(bad):
    with pytest.raises(DomainError) as info:
        as_exponent(bad)
    assert info.value.param == "p"


def test_exponent_reciprocal_must_be_below_one():
    with pytest.raises(DomainError):
        Exponent(1.0)
    with pytest.raises(DomainError):
        Exponent(2.0)


def test_validate_triple_classical():
    t = validate_triple(2, 2, 2)
    d = t.derived
    assert (d.p_conj, d.q_conj, d.r_conj) == (2.0, 2.0, 2.0)
    assert d.s == INF


def test_validate_triple_negative_p():
    t = validate_triple(-3, 1.5, 4)
    assert t.derived.p_conj == pytest.approx(0.75)


@pytest.mark.parametrize(
    "p, q, r, name",
    [(0.5, 2, 2, "p"), (2, 1.0, 2, "q"), (2, 2, 0.9, "r"), (2, math.inf, 2, "q"), (2, 2, math.nan, "r")],
)
def test_validate_triple_names_offender(p, q, r, name):
    with pytest.raises(DomainError) as info:
        validate_triple(p, q, r)
    assert info.value.param == name


def test_derived_u_invalid_branch_kept():
    t = validate_triple(2, 2, 2)
    assert t.derived.u is None
    assert t.derived.u_recip == 1.0
    assert validate_triple(4, 2, 4).derived.u.value == 2.0


def test_derived_v():
    v = validate_triple(3, 2, 4).derived.v
    assert v.recip == pytest.approx(1 / 3 - 3 / 4)


@given(p_finite, index, index)
def test_derived_consistency(p, q, r):
    t = validate_triple(p, q, r)
    d = t.derived
    assert 1 / p + 1 / d.p_conj == pytest.approx(1.0)
    assert 1 / q + 1 / d.q_conj == pytest.approx(1.0)
    assert d.s_recip < 1.0
    assert d.v_recip < 1.0


@given(index, index)
def test_infinite_p_conjugate_is_one(q, r):
    assert validate_triple("inf", q, r).derived.p_conj == 1.0


def test_complementary_modulus_examples():
    assert complementary_modulus(0.0, 2, 2) == 1.0
    assert complementary_modulus(1 / math.sqrt(2), 2, 2) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    # direct arithmetic oracle: (1 - 0.125)^(1/2)
    assert complementary_modulus(0.5, 3, 2) == pytest.approx(math.sqrt(0.875), rel=1e-15)
    assert complementary_modulus(1.0, 3, 2) == 0.0


def test_complementary_modulus_rejects_k_above_one():
    with pytest.raises(DomainError):
        complementary_modulus(1.1, 2, 2)


@given(st.floats(min_value=0.05, max_value=0.999), index, index)
def test_complementary_modulus_involution(k, q, r):
    # the round trip loses about eps / k^q relative; keep k^q away from 0
    assume(k ** q >= 0.05)
    kp = complementary_modulus(k, q, r)
    assert kp ** r + k ** q == pytest.approx(1.0, abs=1e-15)
    assert complementary_modulus(kp, r, q) == pytest.approx(k, rel=1e-14)
