import pytest
from hypothesis import given, strategies as st

from sturmian_apr import (ContinuedFraction, FieldElement, InfiniteResult, delta, delta_values,
                          itineraries_zero_beta, minimal_indices, parse_field)
from sturmian_apr.contfrac import convergents

from conftest import GOLDEN, INV_TAU, cf_strategy


def test_golden_values():
    assert [delta(GOLDEN, k, 1).value for k in range(4)] == [INV_TAU ** k for k in range(4)]
    assert [d.value for d in delta_values(GOLDEN, 5)] == [INV_TAU ** k for k in range(5)]


def test_first_quotient_at_least_two():
    cf = ContinuedFraction.parse("[0;2,(1)]")
    a = cf.value()
    d = delta(cf, 0, 2)
    assert (d.value, d.flat_index) == (1 - a, 1)
    assert [v.value for v in delta_values(cf, 3)] == [1, 1 - a, a]


def test_first_quotient_one():
    cf = ContinuedFraction.parse("[0;1,(3)]")
    assert delta(cf, 1, 2).value == 2 * cf.value() - 1


def test_range_checks():
    with pytest.raises(ValueError):
        delta(GOLDEN, 0, 2)
    with pytest.raises(ValueError):
        delta(GOLDEN, -1, 1)


def test_minimal_indices_examples():
    assert minimal_indices(GOLDEN, 1 - INV_TAU) == (2, 1, 2)
    assert minimal_indices(GOLDEN, parse_field("99/100")) == (1, 1, 1)
    assert minimal_indices(GOLDEN, INV_TAU) == (1, 1, 1)  # tie counts
    with pytest.raises(InfiniteResult):
        minimal_indices(GOLDEN, 0)
    with pytest.raises(ValueError):
        minimal_indices(GOLDEN, 1)


@given(cf_strategy())
def test_stream_against_definition(cf):
    alpha = cf.value()
    vals = delta_values(cf, 50)
    c = convergents(cf, vals[-1].k + 1)
    for n, dv in enumerate(vals):
        assert dv.flat_index == n == sum(cf.a(i) for i in range(1, dv.k + 1)) + dv.s - 1
        assert 1 <= dv.s <= cf.a(dv.k + 1)
        (p, q), (p1, q1) = c[dv.k], c[dv.k - 1]
        assert dv.value == abs((dv.s - 1) * (p - alpha * q) + p1 - alpha * q1)
    assert all(b.value < a.value for a, b in zip(vals, vals[1:]))
    assert vals[0].value == 1
    assert vals[1].value == max(alpha, 1 - alpha)


@given(cf_strategy(), st.integers(1, 40), st.integers(2, 40))
def test_minimal_indices_is_first_below(cf, i, q):
    rho = (i * cf.value() + FieldElement.rational(1, q)).frac()
    if not rho:
        return
    idx = minimal_indices(cf, rho)
    vals = delta_values(cf, idx.flat_index + 1)
    assert vals[-1].value <= rho
    assert all(v.value > rho for v in vals[:-1])


@given(cf_strategy(max_digit=4))
def test_rescaling_after_one_renormalisation(cf):
    d = delta_values(cf, 3)
    d_tilde = delta_values(cf.renormalized(), 2)
    assert d_tilde[1].value == d[2].value / d[1].value


@given(cf_strategy(max_digit=4), st.integers(0, 7))
def test_deltas_give_two_itineraries(cf, n):
    vals = delta_values(cf, n + 2)
    assert len(itineraries_zero_beta(cf.value(), vals[n].value)) == 2
    assert len(itineraries_zero_beta(cf.value(), (vals[n].value + vals[n + 1].value) / 2)) == 3
