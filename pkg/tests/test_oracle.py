import pytest

from sturmian_apr import (ContinuedFraction, InfiniteResult, InsufficientData, abelian_returns_of_factor,
                          apr_bruteforce, apr_set, code_orbit, induce, inverse_iterate_alpha,
                          light_or_heavy, make_two_iet, parse_field)
from sturmian_apr.sampling import random_pairs
from sturmian_apr.verify import check_scan

from conftest import GOLDEN, INV_TAU

FIB = code_orbit(INV_TAU, 1 - INV_TAU, 5000)


def test_fibonacci_factor_scans():
    assert abelian_returns_of_factor(FIB, 1) == {"0", "01"}
    assert abelian_returns_of_factor(FIB, 2) == {"0", "1", "10"}


def test_short_word_is_insufficient():
    with pytest.raises(InsufficientData):
        abelian_returns_of_factor("0011", 2)
    with pytest.raises(InsufficientData):
        abelian_returns_of_factor(FIB[:200], 5, min_occurrences=500)


def test_fibonacci_apr():
    rep = apr_bruteforce(GOLDEN, 1 - INV_TAU, 60, 10 ** 5)
    assert rep.accumulated == ("0", "1", "01", "10", "001")
    assert rep.stabilized_at is not None and rep.stabilized_at < 30
    assert rep.authoritative
    assert rep.generated_length == 10 ** 5


def test_zero_intercept():
    with pytest.raises(InfiniteResult):
        apr_bruteforce(GOLDEN, 0)


def test_heavy_return_found_directly():
    rep = apr_bruteforce(GOLDEN, INV_TAU, 20, 10 ** 4)
    assert "100" in rep.heavy_returns()


CASES = random_pairs(5, 5) + [(GOLDEN, 1 - INV_TAU), (ContinuedFraction.parse("[0;3,(1,2)]"), parse_field("1/2"))]


@pytest.mark.parametrize("cf,rho", CASES)
def test_scan_agrees_with_exact_structure(cf, rho):
    rep = apr_bruteforce(cf, rho, 30, 10 ** 5, cross_check_heavy=True)
    res = apr_set(cf, rho)
    alpha = cf.value()
    T = make_two_iet(alpha)
    assert not rep.exchange_mismatches
    assert set(rep.accumulated) <= set(res.apr)
    for n, words in rep.per_prefix.items():
        tag = light_or_heavy(cf, rho, n)
        # balance read off the scan agrees with the exact test against T^(-n+1)(alpha)
        assert (n in rep.heavy) == (tag == "heavy")
        assert check_scan(words, heavy=tag == "heavy") is None
        assert words <= set(res.r_set if tag == "light" else res.r_prime_set)
        b = inverse_iterate_alpha(T, n)
        itins = induce(T, 0, b).itineraries if tag == "light" else induce(T, b, 1).itineraries
        assert words == itins


def test_late_word_needs_long_prefixes():
    # the last heavy return of this word first appears at prefix 236
    cf, rho = GOLDEN, parse_field("6/7")
    want = set(apr_set(cf, rho).apr)
    short = apr_bruteforce(cf, rho, 60, 10 ** 5)
    assert set(short.accumulated) < want
    full = apr_bruteforce(cf, rho, 300, 10 ** 5, min_occurrences=20)
    assert set(full.accumulated) == want
    first = min(n for n, ws in full.per_prefix.items() if "1010010100100" in ws)
    assert first == 236
