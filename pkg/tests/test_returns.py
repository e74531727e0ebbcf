import pytest
from hypothesis import given, strategies as st

from sturmian_apr import (ContinuedFraction, FieldElement, InfiniteResult, apr_cardinality, apr_set,
                          characteristic_apr, delta_values, itineraries_zero_beta, light_or_heavy,
                          minimal_indices, parse_field, r_prime_set, r_set)
from sturmian_apr.returns import algorithm_states, r_set_size
from sturmian_apr.sampling import random_pairs

from conftest import GOLDEN, INV_TAU, cf_strategy

FIB_RHO = 1 - INV_TAU


def pairs_strategy():
    return st.builds(lambda cf, i, j, q: (cf, (i * cf.value() + FieldElement.rational(j % q, q)).frac()),
                     cf_strategy(max_digit=4), st.integers(-6, 6), st.integers(0, 40), st.integers(1, 25))


def test_fibonacci_word():
    res = apr_set(GOLDEN, FIB_RHO)
    assert res.apr == ("0", "1", "01", "10", "001")
    assert res.r_set == ("0", "1", "01", "001")
    assert res.r_prime_set == ("0", "1", "10")
    assert apr_cardinality(GOLDEN, FIB_RHO).count == 5
    assert res.counts == {"n_r": 4, "n_rprime": 3, "n_apr": 5}


def test_large_intercept_gives_three_light_returns():
    assert r_set(GOLDEN, parse_field("7/10")) == ("0", "1", "01")


def test_small_intercept_gives_three_heavy_returns():
    assert r_prime_set(GOLDEN, FIB_RHO) == ("0", "1", "10")
    cf = ContinuedFraction.parse("[0;3,(2,1)]")
    assert r_prime_set(cf, cf.value() / 2) == ("0", "1", "10")


def test_middle_band_case():
    cf = ContinuedFraction.parse("[0;2,(1)]")
    card = apr_cardinality(cf, FieldElement.rational(1, 2))
    assert card == (6, "i-a")
    assert len(apr_set(cf, FieldElement.rational(1, 2)).apr) == 6


@pytest.mark.parametrize("i", [2, 3, 4, 5])
def test_light_count_staircase(i):
    # slope with a_1 = 5: #R = 2 + i on 1 - i*alpha <= rho < 1 - (i-1)*alpha, rho > alpha
    cf = ContinuedFraction.parse("[0;5,(2)]")
    a = cf.value()
    for rho in (1 - i * a, 1 - i * a + a / 3, 1 - (i - 1) * a - a / 50):
        if rho > a:
            assert len(r_set(cf, rho)) == 2 + i


def test_zero_intercept_is_infinite():
    for f in (r_set, r_prime_set, apr_set, apr_cardinality):
        with pytest.raises(InfiniteResult, match="infinite for zero intercept"):
            f(GOLDEN, 0)


def test_characteristic_examples():
    assert characteristic_apr(GOLDEN) == ("0", "1", "01", "10", "001")
    assert characteristic_apr(ContinuedFraction.parse("[0;3,(1)]")) == ("0", "1", "01", "10", "110", "1110")


def test_light_or_heavy_examples():
    assert light_or_heavy(GOLDEN, FIB_RHO, 2) == "heavy"
    assert light_or_heavy(GOLDEN, FIB_RHO, 1) == "light"
    assert light_or_heavy(GOLDEN, INV_TAU, 1) == "heavy"


def test_table_one_states():
    states = list(algorithm_states(GOLDEN, 5))
    assert [(s.r, s.r_prime) for s in states] == [
        ("0", "1"), ("0", "01"), ("001", "01"), ("001", "00101"), ("00100101", "00101")]
    assert [s.epsilon.digits(2) for s in states] == [[1, 1], [2, 1], [1, 1], [2, 1], [1, 1]]


@given(cf_strategy(max_digit=4), st.integers(0, 9))
def test_algorithm_matches_induction(cf, n):
    # the pair after n steps is the set of [0, delta_n)-itineraries
    state = list(algorithm_states(cf, n + 1))[-1]
    assert state.r < state.r_prime
    assert {state.r, state.r_prime} == itineraries_zero_beta(cf.value(), delta_values(cf, n + 1)[-1].value)


@given(pairs_strategy())
def test_result_invariants(pair):
    cf, rho = pair
    if not rho:
        return
    res = apr_set(cf, rho)
    assert set(res.apr) == set(res.r_set) | set(res.r_prime_set)
    assert set(res.r_set) & set(res.r_prime_set) == {"0", "1"}
    assert {"0", "1", "01", "10"} <= set(res.apr)
    assert len(res.r_set) == r_set_size(cf, minimal_indices(cf, rho))
    assert apr_cardinality(cf, rho).count == len(res.apr)
    for w in res.r_set:
        assert len(w) < 2 or (w[0], w[-1]) == ("0", "1")
    for w in res.r_prime_set:
        assert len(w) < 2 or (w[0], w[-1]) == ("1", "0")


@given(pairs_strategy())
def test_exchange_symmetry(pair):
    cf, rho = pair
    if not rho:
        return
    assert set(r_prime_set(cf, rho)) == {w.exchanged() for w in r_set(cf.complement(), 1 - rho)}
    assert apr_set(cf.complement(), 1 - rho).apr == tuple(
        sorted((w.exchanged() for w in apr_set(cf, rho).apr), key=lambda w: (len(w), w)))


def test_mirror_relation_keeps_the_slope():
    for cf, rho in random_pairs(11, 20):
        assert set(r_prime_set(cf, rho)) == {w.mirrored() for w in r_set(cf, 1 - rho)}


def test_mirror_relation_with_complemented_slope_fails():
    # golden slope, rho = 1/tau: 100 is a heavy return (see test_oracle), but
    # the mirror image of R(1 - alpha, 1 - rho) contains 110 instead
    base = r_set(GOLDEN.complement(), 1 - INV_TAU)
    assert "100" in r_prime_set(GOLDEN, INV_TAU)
    assert {w.mirrored() for w in base} != set(r_prime_set(GOLDEN, INV_TAU))


@given(pairs_strategy())
def test_small_intercepts_add_only_ten(pair):
    cf, rho = pair
    a = cf.value()
    if not rho or rho > min(a, 1 - a):
        return
    res = apr_set(cf, rho)
    assert apr_cardinality(cf, rho).case == "ii"
    assert set(res.apr) - set(res.r_set) == {"10"}


@given(cf_strategy())
def test_characteristic_closed_form(cf):
    assert characteristic_apr(cf) == apr_set(cf, 1 - cf.value()).apr


def test_all_cardinality_cases_reached():
    cases = {apr_cardinality(cf, rho).case for cf, rho in random_pairs(0, 200)}
    assert cases == {"i-a", "i-b", "ii"}


def test_boundary_intercepts_fall_to_case_two():
    cf = ContinuedFraction.parse("[0;3,(1,2)]")
    a = cf.value()
    for rho in (a, 1 - a):
        assert apr_cardinality(cf, rho).case == "ii"
        assert apr_cardinality(cf, rho).count == len(apr_set(cf, rho).apr)
