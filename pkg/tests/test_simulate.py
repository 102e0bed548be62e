"""Monte Carlo MAP decoding: determinism, statistical agreement with exact
values, and the counter-based RNG plumbing."""

import math
import os

import pytest

from boundlab.codes import full_space, hamming_7_4, repetition_code
from boundlab.entropy import BAWGN, QEC, QSC
from boundlab.errors import BudgetExceededError, DomainError
from boundlab.simulate import (ErrorEstimate, SimulationSpec, simulate,
                               splitmix, sweep, wilson_interval)


def test_wilson_interval_basics():
    lo, hi = wilson_interval(50, 1000)
    assert 0.0 <= lo < 0.05 < hi <= 1.0
    # zero successes still gives an informative upper limit
    lo0, hi0 = wilson_interval(0, 1000)
    assert lo0 <= 1e-15  # exact 0 up to float cancellation
    assert 0.0 < hi0 < 0.01
    lo1, hi1 = wilson_interval(1000, 1000)
    assert hi1 >= 1.0 - 1e-15 and lo1 > 0.99


def test_wilson_interval_rejects_bad_counts():
    with pytest.raises(DomainError):
        wilson_interval(-1, 10)
    with pytest.raises(DomainError):
        wilson_interval(11, 10)
    with pytest.raises(DomainError):
        wilson_interval(0, 0)


def test_splitmix_is_deterministic_and_spread():
    a = splitmix(21, 0)
    assert a == splitmix(21, 0)
    vals = {splitmix(7, i) for i in range(100)}
    assert len(vals) == 100
    assert all(0 <= v < 2 ** 64 for v in vals)


def test_spec_validation():
    code = repetition_code(2, 3)
    with pytest.raises(DomainError):
        SimulationSpec(code, QSC(2, 0.1), 0, seed=1)
    with pytest.raises(DomainError):
        SimulationSpec(code, QSC(3, 0.1), 100, seed=1)  # field mismatch
    with pytest.raises(DomainError):
        SimulationSpec(repetition_code(3, 3), BAWGN(0.5), 100, seed=1)
    with pytest.raises(DomainError):
        SimulationSpec(code, QSC(2, 0.1), 100, seed=1, transmitted=(1, 1, 0))
    with pytest.raises(BudgetExceededError):
        SimulationSpec(full_space(2, 21), QSC(2, 0.1), 100, seed=1)


def test_rep3_qsc_matches_exact():
    # exact block error 3 p^2 (1-p) + p^3 = 0.028 at p = 0.1
    spec = SimulationSpec(repetition_code(2, 3), QSC(2, 0.1), 10 ** 6, seed=7)
    res = simulate(spec)
    lo, hi = res.block.ci95
    assert lo <= 0.028 <= hi
    assert res.ambiguity is None


def test_simulate_deterministic_rerun():
    spec = SimulationSpec(hamming_7_4(), QSC(2, 0.05), 50000, seed=13)
    a = simulate(spec)
    b = simulate(spec)
    assert a == b


def test_simulate_worker_count_invariance():
    spec = SimulationSpec(hamming_7_4(), QSC(2, 0.05), 40000, seed=3)
    old = os.environ.get("BOUNDS_THREADS")
    try:
        os.environ["BOUNDS_THREADS"] = "1"
        a = simulate(spec)
        os.environ["BOUNDS_THREADS"] = "4"
        b = simulate(spec)
    finally:
        if old is None:
            os.environ.pop("BOUNDS_THREADS", None)
        else:
            os.environ["BOUNDS_THREADS"] = old
    assert a == b


def test_qec_full_space_ambiguity_exact():
    n, lam = 6, 0.35
    spec = SimulationSpec(full_space(2, n), QEC(2, lam), 200000, seed=11)
    res = simulate(spec)
    want = 1.0 - (1.0 - lam) ** n
    lo, hi = res.ambiguity.ci95
    assert lo <= want <= hi
    # every erased coordinate is a fair coin among q values
    bit_want = lam * 0.5
    blo, bhi = res.bit.ci95
    assert blo <= bit_want <= bhi


def test_qec_repetition_exact_block():
    # rep-3, lam=0.5: ambiguous iff all erased (1/8); MAP errs half of those
    spec = SimulationSpec(repetition_code(2, 3), QEC(2, 0.5), 400000, seed=5)
    res = simulate(spec)
    alo, ahi = res.ambiguity.ci95
    assert alo <= 0.125 <= ahi
    blo, bhi = res.block.ci95
    assert blo <= 0.0625 <= bhi


def test_bawgn_rep3_matches_gaussian_tail():
    import statistics
    sigma2 = 0.5
    spec = SimulationSpec(repetition_code(2, 3), BAWGN(sigma2), 10 ** 6,
                          seed=17)
    res = simulate(spec)
    exact = statistics.NormalDist().cdf(-math.sqrt(3.0 / sigma2))
    lo, hi = res.block.ci95
    assert lo <= exact <= hi


def test_transmitted_codeword_symmetry():
    code = hamming_7_4()
    word = tuple(int(v) for v in code.codewords[9])
    base = simulate(SimulationSpec(code, QSC(2, 0.08), 100000, seed=55))
    shifted = simulate(SimulationSpec(code, QSC(2, 0.08), 100000, seed=56,
                                      transmitted=word))
    lo1, hi1 = base.block.ci95
    lo2, hi2 = shifted.block.ci95
    assert max(lo1, lo2) <= min(hi1, hi2)  # overlapping CIs


def test_tie_break_uniform_mode_runs():
    spec = SimulationSpec(full_space(2, 3), QSC(2, 0.2), 20000, seed=2)
    a = simulate(spec, tie_break="lexicographic")
    b = simulate(spec, tie_break="uniform")
    assert a.block.trials == b.block.trials
    with pytest.raises(DomainError):
        simulate(spec, tie_break="coin")


def test_error_estimate_from_counts():
    est = ErrorEstimate.from_counts(5, 100)
    assert est.p_hat == 0.05
    assert est.errors_observed == 5
    assert est.trials == 100
    lo, hi = est.ci95
    assert lo < 0.05 < hi


def test_sweep_returns_curve():
    code = repetition_code(2, 3)
    channels = [QSC(2, p) for p in (0.05, 0.1, 0.15)]
    curve = sweep(code, channels, trials=20000, seed=9)
    assert curve.x == (0.05, 0.1, 0.15)
    labels = curve.labels
    for name in ("block", "block_lo", "block_hi", "bit", "bit_lo", "bit_hi"):
        assert name in labels
    block = dict(curve.series)["block"]
    assert block[0] < block[2]  # more noise, more errors


def test_sweep_rejects_empty_grid():
    with pytest.raises(DomainError):
        sweep(repetition_code(2, 3), [], trials=100, seed=1)
