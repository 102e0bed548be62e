"""Finite-n bound evaluation and verification for explicit codes.

Each function evaluates one inequality exactly as stated (no asymptotic
simplifications) so the test suites can demand zero violations at desk
scale. Bounds are returned raw: a valid upper bound on a probability may
well exceed 1 at small n, and the inequality, not the clamp, is the claim
under test. Clamping is left to the reporting layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy.special import logsumexp

from .codes import (LinearCode, dual, erasure_entropy_exact,
                    list_size_max, weight_distribution, WeightDistribution)
from .entropy import QSC, Channel, bhattacharyya, q_entropy
from .errors import BudgetExceededError, DomainError, InapplicableBoundError
from .geometry import euclid_intersection, mu_exact, mu_log, nu_exact

_CENTER_BUDGET = 2 ** 24


def _tau(q: int, lam: float) -> float:
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"lambda must be in (0, 1], got {lam}")
    return (math.pow(q, lam) - 1.0) / (q - 1.0)


def check_samorodnitsky(code: LinearCode, lam: float):
    """(lhs, rhs, holds): sum_i A_i tau^i <= 2^H(X|Y), tau = (q^lam-1)/(q-1)."""
    tau = _tau(code.q, lam)
    counts = weight_distribution(code).counts
    lhs = sum(a * tau ** i for i, a in enumerate(counts))
    rhs = math.pow(2.0, erasure_entropy_exact(code, lam))
    return lhs, rhs, lhs <= rhs + 1e-9


@dataclass(frozen=True)
class DualWeightBoundResult:
    part1: float
    part2: float
    actual: int
    holds: bool


def dual_weight_bound(code: LinearCode, lam: float, w: int) -> DualWeightBoundResult:
    """Both weight-distribution bounds at weight w.

    Part 1: A_w <= tau^{-w} 2^H(X|Y). Part 2: A_w <= |C| 2^H(X'|Y') times a
    three-branch factor in gamma = w/n with branch boundaries
    gamma = (q-1)(1 -+ tau)/q (the primed variables live on the dual code).
    """
    if not 0 <= w <= code.n:
        raise DomainError(f"w must be in [0, n], got {w}")
    q, n = code.q, code.n
    tau = _tau(q, lam)
    h_bits = erasure_entropy_exact(code, lam)
    part1 = math.pow(tau, -float(w)) * math.pow(2.0, h_bits) if w else \
        math.pow(2.0, h_bits)

    hd_bits = erasure_entropy_exact(dual(code), lam)
    gamma = w / n
    g_lo = (q - 1.0) * (1.0 - tau) / q
    g_hi = (q - 1.0) * (1.0 + tau) / q
    if gamma < g_lo:
        log2_factor = (-gamma * n * math.log2(1.0 - tau)
                       - (1.0 - gamma) * n * math.log2(1.0 + (q - 1.0) * tau))
    elif gamma <= g_hi:
        log2_factor = -n * (1.0 - q_entropy(q, gamma)) * math.log2(q)
    else:
        base = 1.0 - (q - 1.0) * tau  # positive whenever this branch is reachable
        log2_factor = (-gamma * n * math.log2(1.0 + tau)
                       - (1.0 - gamma) * n * math.log2(base))
    part2 = math.pow(2.0, code.k * math.log2(q) + hd_bits + log2_factor)

    actual = weight_distribution(code).counts[w]
    holds = actual <= min(part1, part2) + 1e-9
    return DualWeightBoundResult(part1, part2, actual, holds)


@dataclass(frozen=True)
class DoubleCountingResult:
    max_violation: float
    worst_w: int
    L: int
    rhs: int


def check_double_counting(code: LinearCode, t1: int, t2: int,
                          L: Optional[int] = None) -> DoubleCountingResult:
    """max over w of A_w(0) nu_q(n,t1,t2,w) - C(n,t1)(q-1)^t1 L, with
    L = exact max list size at radius t2 (so the code is (t2/n, L)-list
    decodable by construction). Expected <= 0. Pass L to reuse a
    previously computed list size for the same (code, t2)."""
    q, n = code.q, code.n
    for t in (t1, t2):
        if not (isinstance(t, (int, np.integer)) and 0 <= t <= n):
            raise DomainError(f"radii must be integers in [0, n], got {t!r}")
    if L is None:
        L = list_size_max(code, t2).L
    rhs = math.comb(n, t1) * (q - 1) ** t1 * L
    counts = weight_distribution(code).counts
    worst, worst_w = -math.inf, 0
    for w in range(n + 1):
        lhs = counts[w] * nu_exact(q, n, t1, t2, w)
        diff = float(lhs - rhs)
        if diff > worst:
            worst, worst_w = diff, w
    return DoubleCountingResult(worst, worst_w, L, rhs)


@dataclass(frozen=True)
class PoltyrevParams:
    p: float
    theta: float = 0.75
    w0: Optional[int] = None

    def __post_init__(self):
        if not 0.5 < self.theta < 1.0:
            raise DomainError(f"theta must be in (1/2, 1), got {self.theta}")


def default_w0(weights: WeightDistribution) -> int:
    """w0 = d - 1 (largest radius with an empty union term), clamped to [1, n]."""
    d = weights.min_positive_weight()
    if d is None:
        return weights.n
    return min(max(d - 1, 1), weights.n)


def poltyrev_bound(weights: WeightDistribution, q: int,
                   params: PoltyrevParams) -> float:
    """The three-term qSC block error bound, raw (may exceed 1 at small n).

    term1 = 2 exp(-2 n^(2 theta - 1)); term2 = union sum of A_w Z^w up to
    w0; term3 = ((1-p)(q-1)/p)^(n^theta) q^(-n H_q(p)) sum_{w > w0} A_w
    mu_q(n, t, w) with t = p n + n^theta. Exact integer mu for n <= 40,
    log-domain beyond.
    """
    n = weights.n
    p = params.p
    if not 0.0 < p <= 1.0 - 1.0 / q:
        raise DomainError(f"p must be in (0, 1-1/q], got {p}")
    w0 = params.w0 if params.w0 is not None else default_w0(weights)
    if not 1 <= w0 <= n:
        raise DomainError(f"w0 must be in [1, n], got {w0}")
    t = p * n + n ** params.theta
    z = bhattacharyya(QSC(q, p))

    term1 = 2.0 * math.exp(-2.0 * n ** (2.0 * params.theta - 1.0))
    term2 = sum(weights.counts[w] * z ** w for w in range(1, w0 + 1))

    log_prefix = (n ** params.theta * math.log((1.0 - p) * (q - 1.0) / p)
                  - n * q_entropy(q, p) * math.log(q))
    if n <= 40:
        s = sum(weights.counts[w] * mu_exact(q, n, t, w)
                for w in range(w0 + 1, n + 1))
        term3 = math.exp(log_prefix + math.log(s)) if s else 0.0
    else:
        logs = [math.log(weights.counts[w]) + mu_log(q, n, t, w)
                for w in range(w0 + 1, n + 1) if weights.counts[w]]
        term3 = math.exp(log_prefix + logsumexp(logs)) if logs else 0.0
    return term1 + term2 + term3


def union_bhattacharyya_bound(code_or_weights: Union[LinearCode, WeightDistribution],
                              channel: Channel, lam: float,
                              entropy_bits: Optional[float] = None) -> float:
    """P_B <= (c^d / (1-c)) 2^H(X|Y) with c = Z(W)(q-1)/(q^lam - 1).

    Given a code, H(X|Y) is its exact erasure entropy at lam; given bare
    weights, pass entropy_bits explicitly. Raises when c >= 1 (the bound is
    inapplicable, not merely loose).
    """
    if isinstance(code_or_weights, LinearCode):
        code = code_or_weights
        q = code.q
        weights = weight_distribution(code)
        entropy_bits = erasure_entropy_exact(code, lam)
    else:
        weights = code_or_weights
        q = channel.q if isinstance(channel, QSC) else 2
        if entropy_bits is None:
            raise DomainError(
                "union_bhattacharyya_bound: entropy_bits required without a code")
    d = weights.min_positive_weight()
    if d is None:
        return 0.0  # single-codeword code never errs
    z = bhattacharyya(channel)
    c = z * (q - 1.0) / (math.pow(q, lam) - 1.0)
    if c >= 1.0:
        raise InapplicableBoundError(
            f"union-Bhattacharyya: c = {c:.6g} >= 1")
    return c ** d / (1.0 - c) * math.pow(2.0, entropy_bits)


@dataclass(frozen=True)
class SphereBoundParams:
    sigma2: float
    s: float

    def __post_init__(self):
        if self.sigma2 <= 0.0:
            raise DomainError(f"sigma2 must be > 0, got {self.sigma2}")
        if not 0.0 <= self.s <= 4.0:
            raise DomainError(f"s must be in [0, 4], got {self.s}")


def sphere_bound(weights: WeightDistribution, params: SphereBoundParams,
                 list_size: int = 1) -> float:
    """BAWGN block error bound via Euclidean ball intersections (binary codes).

    (exp(-n/2 + sn/2) / (sqrt(2 pi) sigma)^n) sum_{w>=1} A_w
    I_n((1+s) sigma sqrt(n), 2 sqrt(w)) / L + 2 exp(-s^2 n / 16). The I_n
    factor vanishes for w > (1+s)^2 sigma^2 n (disjoint balls).
    """
    if list_size < 1:
        raise DomainError(f"list_size must be >= 1, got {list_size}")
    n = weights.n
    s = params.s
    sigma = math.sqrt(params.sigma2)
    radius = (1.0 + s) * sigma * math.sqrt(n)
    logs = []
    for w in range(1, n + 1):
        if weights.counts[w] == 0:
            continue
        li = euclid_intersection(n, radius, 2.0 * math.sqrt(w))
        if li > -math.inf:
            logs.append(math.log(weights.counts[w]) + li)
    tail = 2.0 * math.exp(-s * s * n / 16.0)
    if not logs:
        return tail
    log_main = (-0.5 * n + 0.5 * s * n
                - n * (0.5 * math.log(2.0 * math.pi) + math.log(sigma))
                + float(logsumexp(logs)) - math.log(list_size))
    return math.exp(log_main) + tail


# ---------------------------------------------------------------------------
# exact qSC MAP block error (oracle for the bounds above)

def qsc_error_profile(code: LinearCode) -> np.ndarray:
    """N[v] = number of error patterns of weight v on which worst-tie-break
    MAP decoding fails (some other codeword is at distance <= wt(z) from z).

    Ties count as errors: the union/Poltyrev events cover ties, so comparing
    bounds against this profile is the strictest valid check.
    """
    q, n = code.q, code.n
    total = q ** n
    if total > _CENTER_BUDGET:
        raise BudgetExceededError(
            f"pattern enumeration: q^n = {total} exceeds {_CENTER_BUDGET}")
    words = code.codewords
    others = words[np.count_nonzero(words, axis=1) > 0]
    profile = np.zeros(n + 1, dtype=np.int64)
    if len(others) == 0:
        return profile
    chunk = max(1, (1 << 22) // len(others))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        z = np.empty((len(idx), n), dtype=np.int16)
        rem = idx.copy()
        for j in range(n - 1, -1, -1):
            z[:, j] = rem % q
            rem //= q
        wt = np.count_nonzero(z, axis=1)
        dmin = (z[:, None, :] != others[None, :, :]).sum(axis=2).min(axis=1)
        err = dmin <= wt
        profile += np.bincount(wt[err], minlength=n + 1)
    return profile


def qsc_exact_block_error(code: LinearCode, p: float,
                          profile: Optional[np.ndarray] = None) -> float:
    """Exact worst-tie-break MAP block error on qSC_p by full enumeration."""
    if not 0.0 <= p <= 1.0 - 1.0 / code.q:
        raise DomainError(f"p must be in [0, 1-1/q], got {p}")
    n, q = code.n, code.q
    if profile is None:
        profile = qsc_error_profile(code)
    if p == 0.0:
        return float(profile[0])
    per_symbol = p / (q - 1.0)
    return float(sum(int(profile[v]) * per_symbol ** v * (1.0 - p) ** (n - v)
                     for v in range(n + 1)))
