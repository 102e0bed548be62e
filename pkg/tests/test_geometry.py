"""Ball and sphere intersection counts against brute force, plus the
asymptotic sandwich bounds they must satisfy."""

import math

import pytest

from boundlab.errors import BudgetExceededError, DomainError
from boundlab.exponents import M_q
from boundlab.geometry import (ball_volume_log, brute_force_intersection,
                               euclid_intersection,
                               euclid_intersection_bounds, mu_exact, mu_log,
                               nu_exact, nu_log)


def test_mu_matches_brute_force_small():
    for q in (2, 3):
        for n in (2, 4, 6):
            for w in range(n + 1):
                for t in range(n + 1):
                    got = mu_exact(q, n, t, w)
                    want = brute_force_intersection(q, n, t, t, w, mode="ball")
                    assert got == want, (q, n, t, w)


def test_nu_matches_brute_force_small():
    for q in (2, 3):
        for n in (2, 4, 5):
            for w in range(n + 1):
                for t1 in range(n + 1):
                    for t2 in range(n + 1):
                        got = nu_exact(q, n, t1, t2, w)
                        want = brute_force_intersection(q, n, t1, t2, w,
                                                        mode="sphere")
                        assert got == want, (q, n, t1, t2, w)


def test_mu_floors_fractional_radius():
    # ball of radius 2.7 is the ball of radius 2
    assert mu_exact(2, 6, 2.7, 3) == mu_exact(2, 6, 2, 3)


def test_nu_accepts_integral_floats_only():
    assert nu_exact(2, 6, 2.0, 3.0, 4) == nu_exact(2, 6, 2, 3, 4)
    with pytest.raises(DomainError):
        nu_exact(2, 6, 2.5, 3, 4)


def test_mu_known_tiny_case():
    # n=2, q=2, t=1, w=1: centers at distance 1; balls of radius 1 around
    # 00 and 01 share exactly {00, 01}
    assert mu_exact(2, 2, 1, 1) == 2


def test_mu_zero_distance_is_ball_volume():
    # w=0 collapses to a single ball
    n, t = 10, 3
    vol = sum(math.comb(n, i) for i in range(t + 1))
    assert mu_exact(2, n, t, 0) == vol


def test_mu_exact_big_n_returns_log_float():
    # above the exact-integer cutoff the value is ln(mu) as a float
    val = mu_exact(2, 100, 30, 40)
    assert isinstance(val, float)
    assert val == pytest.approx(mu_log(2, 100, 30, 40), abs=1e-9)


def test_mu_log_matches_exact_integer_range():
    for q in (2, 3):
        got = mu_log(q, 12, 4, 5)
        want = math.log(mu_exact(q, 12, 4, 5))
        assert got == pytest.approx(want, abs=1e-10)


def test_nu_log_matches_exact_integer_range():
    # t1 + t2 - w must be even over GF(2), else the slice is empty
    got = nu_log(2, 12, 4, 4, 6)
    want = math.log(nu_exact(2, 12, 4, 4, 6))
    assert got == pytest.approx(want, abs=1e-10)
    assert nu_exact(2, 12, 4, 5, 6) == 0
    assert nu_log(2, 12, 4, 5, 6) == -math.inf


def test_mu_upper_bound_lemma_small():
    # mu_q(n, pn, gamma n) <= n^2 q^{n M}
    for q in (2, 3):
        for n in (6, 10):
            for (p, g) in ((0.3, 0.4), (0.4, 0.2)):
                t, w = p * n, round(g * n)
                if w > 2 * math.floor(t):
                    continue
                lhs = mu_exact(q, n, t, w)
                m = M_q(q, w / n, math.floor(t) / n)
                rhs = n * n * q ** (n * m)
                assert lhs <= rhs * (1 + 1e-9), (q, n, t, w)


def test_nu_lower_bound_lemma_binary():
    # nu_2(n, t, t, w) >= (1/4n) 2^{n M} for even w <= 2t <= n
    n = 12
    for t in range(1, n // 2 + 1):
        for w in range(2, 2 * t + 1, 2):
            lhs = nu_exact(2, n, t, t, w)
            m = M_q(2, w / n, t / n)
            rhs = 2.0 ** (n * m) / (4.0 * n)
            assert lhs >= rhs * (1 - 1e-9), (t, w)


def test_ball_volume_log_matches_sum():
    n, t = 20, 6
    vol = sum(math.comb(n, i) * 2 ** i for i in range(t + 1))
    assert ball_volume_log(3, n, t) == pytest.approx(math.log(vol), abs=1e-10)


def test_brute_force_budget_guard():
    with pytest.raises(BudgetExceededError):
        brute_force_intersection(3, 30, 5, 5, 6, mode="ball")


def test_domain_checks():
    with pytest.raises(DomainError):
        mu_exact(2, 5, -1, 2)
    with pytest.raises(DomainError):
        mu_exact(2, 5, 2, 11)  # w > n impossible
    with pytest.raises(DomainError):
        nu_exact(2, 5, 2, 2, -1)


def test_euclid_intersection_monotone_in_radius():
    n = 20
    a = euclid_intersection(n, 1.0 * math.sqrt(n), 1.2 * math.sqrt(n))
    b = euclid_intersection(n, 1.3 * math.sqrt(n), 1.2 * math.sqrt(n))
    assert b > a


def test_euclid_intersection_empty_when_far():
    # centers further apart than 2R give the empty slice
    assert euclid_intersection(10, 2.0, 10.0) == -math.inf


def test_euclid_bounds_sandwich():
    for n in (10, 25, 40):
        for zeta in (0.8, 1.2):
            for frac in (0.3, 0.6, 0.9):
                gamma = frac * zeta
                val = euclid_intersection(n, zeta * math.sqrt(n),
                                          2.0 * gamma * math.sqrt(n))
                lo, hi = euclid_intersection_bounds(n, zeta, gamma)
                assert lo <= val + 1e-9, (n, zeta, gamma)
                assert val <= hi + 1e-9, (n, zeta, gamma)
