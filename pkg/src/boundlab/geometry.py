"""Hamming ball/sphere intersection counts and Euclidean cap volumes.

Two Hamming centers are always normalized to x = 0^n and y = 1^w 0^(n-w)
with Delta(x, y) = w; by symmetry of the Hamming metric this loses nothing.
mu counts |B(x,t) cap B(y,t)|, nu counts |S(x,t1) cap S(y,t2)|.

Counting is exact (arbitrary-precision integers) up to n = 40 and switches
to natural-log floats beyond, which is what the large-n exponent tests need.
Real radii are floored before counting: B(x, t) means Delta <= floor(t).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.special import gammaln, logsumexp

from .entropy import log_binomial
from .errors import BudgetExceededError, DomainError

EXACT_N_LIMIT = 40
_BRUTE_FORCE_BUDGET = 10**8
_LN2 = math.log(2.0)


def _check_query(q, n, w):
    if not (isinstance(q, int) and q >= 2):
        raise DomainError(f"alphabet size must be an integer >= 2, got {q!r}")
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not (isinstance(w, (int, np.integer)) and 0 <= w <= n):
        raise DomainError(f"w must be an integer in [0, n], got {w!r}")


def _centered_binomial_sum(s: int, m: int) -> int:
    """sum of C(s, a) over the symmetric range max(0,m) <= a <= s - m."""
    if m <= 0:
        return 1 << s
    if 2 * m > s:
        return 0
    return sum(math.comb(s, a) for a in range(m, s - m + 1))


def _mu_int(q: int, n: int, T: int, w: int) -> int:
    # s = how many of the first w coordinates are 0 or 1, b = zeros in the
    # tail; the two ball conditions pin the count of zeros a among the s
    # to the symmetric window a in [m, s-m] with m = n - T - b.
    tail = n - w
    total = 0
    for b in range(min(tail, n) + 1):
        m = n - T - b
        tail_factor = math.comb(tail, b) * (q - 1) ** (tail - b)
        if q == 2:
            inner = _centered_binomial_sum(w, m)
            total += tail_factor * inner
            continue
        for s in range(w + 1):
            inner = _centered_binomial_sum(s, m)
            if inner:
                total += (math.comb(w, s) * (q - 2) ** (w - s)
                          * tail_factor * inner)
    return total


# ---------------------------------------------------------------------------
# log-domain machinery for large n

_prefix_cache: dict = {"smax": -1, "table": None}


def _log_prefix_table(smax: int) -> np.ndarray:
    """P[s, j] = ln sum_{a <= j} C(s, a), for 0 <= j, s <= smax.

    Cached module-wide; the table is q- and t-independent so one build at
    the largest requested size serves every query (72 MB at smax = 3000).
    """
    if _prefix_cache["smax"] >= smax:
        return _prefix_cache["table"]
    s = np.arange(smax + 1, dtype=np.float64)[:, None]
    a = np.arange(smax + 1, dtype=np.float64)[None, :]
    with np.errstate(invalid="ignore"):
        lc = gammaln(s + 1) - gammaln(a + 1) - gammaln(s - a + 1)
    lc[a > s] = -np.inf
    table = np.logaddexp.accumulate(lc, axis=1)
    _prefix_cache["smax"] = smax
    _prefix_cache["table"] = table
    return table


def _log_centered_sums(svals: np.ndarray, mvals: np.ndarray) -> np.ndarray:
    """ln of the symmetric window sums, vectorized over a (s, m) grid.

    Uses sum_{m <= a <= s-m} C(s,a) = 2^s - 2 P(s, m-1). The window always
    contains the central coefficient, so the cancellation loses at most
    log2(s+1) bits and the subtraction is safe in log space.
    """
    P = _log_prefix_table(int(svals.max(initial=0)))
    S, M = np.meshgrid(svals.astype(np.int64), mvals.astype(np.int64),
                       indexing="ij")
    out = np.full(S.shape, -np.inf)
    full = M <= 0
    out[full] = S[full] * _LN2
    mid = (~full) & (2 * M <= S)
    if np.any(mid):
        y = _LN2 + P[S[mid], M[mid] - 1] - S[mid] * _LN2
        out[mid] = S[mid] * _LN2 + np.log(-np.expm1(np.minimum(y, -1e-300)))
    return out


def _mu_logdomain(q: int, n: int, T: int, w: int) -> float:
    tail = n - w
    bvals = np.arange(tail + 1)
    mvals = (n - T) - bvals
    if q == 2:
        inner = _log_centered_sums(np.array([w]), mvals)[0]
        tail_log = np.array([log_binomial(tail, int(b)) for b in bvals])
        return float(logsumexp(tail_log + inner))
    svals = np.arange(w + 1)
    inner = _log_centered_sums(svals, mvals)          # (w+1, tail+1)
    log_cw = np.array([log_binomial(w, int(s)) for s in svals])
    log_ct = np.array([log_binomial(tail, int(b)) for b in bvals])
    terms = (inner
             + (log_cw + (w - svals) * math.log(q - 2))[:, None]
             + (log_ct + (tail - bvals) * math.log(q - 1))[None, :])
    return float(logsumexp(terms))


def mu_exact(q: int, n: int, t: float, w: int):
    """|B(0^n, floor(t)) cap B(y, floor(t))| for centers at distance w.

    Exact integer for n <= 40; natural log of the count (float) beyond.
    Radii above n are clamped (the ball is already the whole space), which
    the Poltyrev term t = pn + n^theta needs at small n. Returns 0 (or -inf
    in the log regime) when w > 2 floor(t).
    """
    _check_query(q, n, w)
    if t < 0:
        raise DomainError(f"mu_exact: radius must be >= 0, got {t}")
    T = min(int(math.floor(t)), n)
    if n <= EXACT_N_LIMIT:
        if w > 2 * T:
            return 0
        return _mu_int(q, n, T, w)
    if w > 2 * T:
        return -math.inf
    return _mu_logdomain(q, n, T, w)


def mu_log(q: int, n: int, t: float, w: int) -> float:
    """Natural log of the mu count, for any n."""
    val = mu_exact(q, n, t, w)
    if isinstance(val, int):
        return math.log(val) if val > 0 else -math.inf
    return val


def _nu_terms(q, n, t1, t2, w):
    # One-parameter family: b = zeros of y outside the support of the second
    # center; the two sphere equations force a = n-t1-b zeros and
    # c = n-t2-b ones among the first w coordinates.
    tail = n - w
    for b in range(tail + 1):
        a = n - t1 - b
        c = n - t2 - b
        if a < 0 or c < 0 or a + c > w:
            continue
        if q == 2 and a + c != w:
            continue
        yield b, a, c


def nu_exact(q: int, n: int, t1: int, t2: int, w: int):
    """|S(0^n, t1) cap S(y, t2)| with Delta(0^n, y) = w, spheres not balls.

    Same representation convention as mu_exact: int up to n = 40, natural
    log beyond.
    """
    _check_query(q, n, w)
    radii = []
    for t in (t1, t2):
        # integral floats (e.g. p*n) are accepted; spheres reject fractions
        if isinstance(t, float) and t.is_integer():
            t = int(t)
        if not (isinstance(t, (int, np.integer)) and 0 <= t <= n):
            raise DomainError(
                f"nu_exact: sphere radii must be integers in [0, n], got {t!r}")
        radii.append(int(t))
    t1, t2 = radii
    if n <= EXACT_N_LIMIT:
        total = 0
        for b, a, c in _nu_terms(q, n, t1, t2, w):
            total += (math.comb(n - w, b) * (q - 1) ** (n - w - b)
                      * math.comb(w, a) * math.comb(w - a, c)
                      * (q - 2) ** (w - a - c))
        return total
    logs = []
    for b, a, c in _nu_terms(q, n, t1, t2, w):
        extra = 0.0 if w - a - c == 0 else (w - a - c) * math.log(q - 2)
        logs.append(log_binomial(n - w, b) + (n - w - b) * math.log(q - 1)
                    + log_binomial(w, a) + log_binomial(w - a, c) + extra)
    return float(logsumexp(logs)) if logs else -math.inf


def nu_log(q: int, n: int, t1: int, t2: int, w: int) -> float:
    val = nu_exact(q, n, t1, t2, w)
    if isinstance(val, int):
        return math.log(val) if val > 0 else -math.inf
    return val


@lru_cache(maxsize=256)
def _pair_distance_counts(q: int, n: int, w: int) -> tuple:
    """Exhaustive joint histogram N[d1][d2] over all q^n words.

    d1 = distance to 0^n, d2 = distance to 1^w 0^(n-w). Cached so that a
    sweep over radii reuses one enumeration per (q, n, w).
    """
    total = q ** n
    if total > _BRUTE_FORCE_BUDGET:
        raise BudgetExceededError(
            f"brute force budget: q^n = {total} exceeds {_BRUTE_FORCE_BUDGET}")
    counts = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    chunk = 1 << 18
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((len(idx), n), dtype=np.int8)
        rem = idx.copy()
        for j in range(n - 1, -1, -1):
            digits[:, j] = rem % q
            rem //= q
        d1 = (digits != 0).sum(axis=1)
        d2 = ((digits[:, :w] != 1).sum(axis=1)
              + (digits[:, w:] != 0).sum(axis=1))
        counts += np.bincount(d1 * (n + 1) + d2, minlength=(n + 1) ** 2)
    return tuple(map(int, counts))


def brute_force_intersection(q: int, n: int, t1: float, t2: float, w: int,
                             mode: str = "ball") -> int:
    """Oracle: exhaustively count the intersection over all of Sigma^n.

    mode='ball' counts Delta <= floor(t); mode='sphere' counts Delta == t
    (integer radii). Budget q^n <= 1e8.
    """
    _check_query(q, n, w)
    if mode not in ("ball", "sphere"):
        raise DomainError(f"mode must be 'ball' or 'sphere', got {mode!r}")
    counts = _pair_distance_counts(q, n, w)
    T1, T2 = int(math.floor(t1)), int(math.floor(t2))
    total = 0
    for d1 in range(n + 1):
        for d2 in range(n + 1):
            hit = (d1 <= T1 and d2 <= T2) if mode == "ball" else \
                  (d1 == T1 and d2 == T2)
            if hit:
                total += counts[d1 * (n + 1) + d2]
    return total


def ball_volume_log(q: int, n: int, t: float) -> float:
    """ln |B(x, floor(t))| = ln sum_{i <= floor(t)} C(n,i)(q-1)^i.

    Computed as an exact big integer then logged, so it is as accurate as
    a float log can be at every n used here.
    """
    if not (isinstance(q, int) and q >= 2):
        raise DomainError(f"alphabet size must be an integer >= 2, got {q!r}")
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not 0 <= t <= n:
        raise DomainError(f"ball_volume_log: t must be in [0, n], got {t}")
    T = int(math.floor(t))
    return math.log(sum(math.comb(n, i) * (q - 1) ** i for i in range(T + 1)))


# ---------------------------------------------------------------------------
# Euclidean ball intersections

def _adaptive_simpson(f, a: float, b: float, tol: float,
                      _depth: int = 60) -> float:
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _asr(f, a, b, fa, fm, fb, whole, tol, _depth)


def _asr(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_asr(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + _asr(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1))


def euclid_intersection(n: int, R: float, D: float) -> float:
    """Natural log of I_n(R, D), the volume of two intersecting n-balls.

    Cap-integral form: I_n = 2 pi^((n-1)/2) R^n / Gamma((n+1)/2)
    * integral_{D/2R}^{1} (1-b^2)^((n-1)/2) db, evaluated by adaptive
    Simpson on the integrand rescaled by its maximum (log-domain shift), so
    large n cannot underflow. Returns -inf when D >= 2R (disjoint balls).
    """
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if R <= 0:
        raise DomainError(f"R must be > 0, got {R}")
    if D < 0:
        raise DomainError(f"D must be >= 0, got {D}")
    if D >= 2.0 * R:
        return -math.inf
    a0 = D / (2.0 * R)
    half = 0.5 * (n - 1)
    shift = half * math.log1p(-a0 * a0) if a0 > 0 else 0.0

    def h(beta):
        if beta >= 1.0:
            return 0.0 if n > 1 else 1.0
        return math.exp(half * math.log1p(-beta * beta) - shift)

    rough = (1.0 - a0) * 0.5
    J = _adaptive_simpson(h, a0, 1.0, max(rough * 1e-12, 1e-300))
    return (_LN2 + half * math.log(math.pi) - float(gammaln(0.5 * (n + 1)))
            + n * math.log(R) + shift + math.log(J))


def euclid_intersection_bounds(n: int, zeta: float, gamma: float):
    """Two-sided closed-form bounds for ln I_n(zeta sqrt(n), 2 gamma sqrt(n)).

    Lower: (1/(80 n^2)) sqrt((z-g)/(z+g)) (2 e pi (z^2-g^2))^(n/2);
    upper replaces the 1/(80 n^2) prefactor by sqrt(2e)/pi. Returns the pair
    (-inf, -inf) when gamma >= zeta (the balls are disjoint or tangent).
    """
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if zeta <= 0:
        raise DomainError(f"zeta must be > 0, got {zeta}")
    if gamma < 0:
        raise DomainError(f"gamma must be >= 0, got {gamma}")
    if gamma >= zeta:
        return (-math.inf, -math.inf)
    common = (0.5 * math.log((zeta - gamma) / (zeta + gamma))
              + 0.5 * n * (math.log(2.0 * math.e * math.pi)
                           + math.log(zeta * zeta - gamma * gamma)))
    lower = common - math.log(80.0) - 2.0 * math.log(n)
    upper = common + 0.5 * math.log(2.0 * math.e) - math.log(math.pi)
    return (lower, upper)
