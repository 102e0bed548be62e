"""Entropy functions, their inverses, and channel Bhattacharyya parameters."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boundlab.entropy import (BAWGN, QEC, QSC, bhattacharyya, binary_entropy,
                              log_binomial, q_entropy, q_entropy_inverse,
                              q_entropy_tilde)
from boundlab.errors import DomainError


def test_binary_entropy_known_values():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == pytest.approx(1.0, abs=1e-15)
    assert binary_entropy(0.11) == pytest.approx(0.499915958164528, abs=1e-12)


def test_q_entropy_reduces_to_binary():
    for x in (0.0, 0.1, 0.25, 0.5):
        assert q_entropy(2, x) == pytest.approx(binary_entropy(x), abs=1e-15)


def test_q_entropy_peak_at_plotkin_point():
    for q in (2, 3, 5, 17):
        top = 1.0 - 1.0 / q
        assert q_entropy(q, top) == pytest.approx(1.0, abs=1e-12)
        assert q_entropy(q, 0.9 * top) < 1.0


def test_q_entropy_rejects_outside_unit_interval():
    with pytest.raises(DomainError):
        q_entropy(2, -0.01)
    with pytest.raises(DomainError):
        q_entropy(3, 1.01)
    with pytest.raises(DomainError):
        q_entropy(1, 0.3)


def test_q_entropy_tilde_requires_q_at_least_3():
    with pytest.raises(DomainError):
        q_entropy_tilde(2, 0.3)
    # at zeta = 1 every coordinate differs from both centers, weight w fixed
    assert q_entropy_tilde(3, 0.5) > 0.0


def test_q_entropy_tilde_known_value():
    # q=4, zeta=1/2: -(1/2)log_4(1/4) - (1/2)log_4(1/4) = 1
    assert q_entropy_tilde(4, 0.5) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=200, derandomize=True)
@given(st.integers(min_value=2, max_value=64),
       st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_q_entropy_inverse_roundtrip(q, frac):
    x = frac * (1.0 - 1.0 / q)
    y = q_entropy(q, x)
    assert q_entropy_inverse(q, y) == pytest.approx(x, abs=1e-9)


def test_q_entropy_inverse_rejects_bad_range():
    with pytest.raises(DomainError):
        q_entropy_inverse(2, -0.1)
    with pytest.raises(DomainError):
        q_entropy_inverse(2, 1.1)


def test_log_binomial_matches_math_comb():
    for n in (0, 1, 7, 30):
        for k in range(n + 1):
            assert log_binomial(n, k) == pytest.approx(
                math.log(math.comb(n, k)), abs=1e-10)
    assert log_binomial(10, 11) == -math.inf
    assert log_binomial(10, -1) == -math.inf


def test_bhattacharyya_qsc_binary():
    # q=2: Z = 2 sqrt(p(1-p))
    z = bhattacharyya(QSC(2, 0.1))
    assert z == pytest.approx(2.0 * math.sqrt(0.09), abs=1e-15)


def test_bhattacharyya_qsc_qary():
    q, p = 5, 0.2
    expect = (q - 2) / (q - 1) * p + 2.0 * math.sqrt(p * (1 - p) / (q - 1))
    assert bhattacharyya(QSC(q, p)) == pytest.approx(expect, abs=1e-15)


def test_bhattacharyya_bawgn():
    assert bhattacharyya(BAWGN(0.5)) == pytest.approx(math.exp(-1.0), abs=1e-15)


def test_bhattacharyya_rejects_erasure_channel():
    with pytest.raises(DomainError):
        bhattacharyya(QEC(2, 0.5))


def test_channel_constructors_validate():
    with pytest.raises(DomainError):
        QSC(2, 0.6)  # above 1 - 1/q
    with pytest.raises(DomainError):
        QEC(2, 1.5)
    with pytest.raises(DomainError):
        BAWGN(0.0)
