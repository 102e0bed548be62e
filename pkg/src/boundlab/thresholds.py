"""Scalar thresholds: Johnson radius, p_star and its dual, BAWGN sigma2_star,
small-delta limits, the symbol-pair list-decoding lower bound, the effective
Rudra-Uurtamo radius, the TVZ upper bound, and Plotkin-type erasure-list
parameters.

Every inf-type threshold is found by bisection on a monotone predicate
(monotonicity of F in p, and of the BAWGN functional in sigma2, is what makes
this valid), and is reported as a ThresholdResult carrying the final bracket,
the defining residual, and the iteration count. When the predicate already
holds at the left end of the search interval, the infimum sits there and the
result is flagged at_boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import binary_entropy, q_entropy_inverse
from .errors import DomainError
from .exponents import F_q
from .roots import bisect_increasing, bisect_threshold, grow_upper_bracket

# tighter than the documented 1e-9 contract; costs ~10 extra iterations and
# makes cross-route coincidence checks comfortable
_BRACKET_TOL = 1e-12
_SIGMA2_CAP = 1e6


@dataclass(frozen=True)
class ThresholdResult:
    value: float
    bracket: tuple
    residual: float
    iterations: int
    at_boundary: bool = False


def _check_alphabet(q: int) -> None:
    if not (isinstance(q, int) and q >= 2):
        raise DomainError(f"alphabet size must be an integer >= 2, got {q!r}")


def johnson_radius(q: int, delta: float) -> float:
    """J_q(delta) = (1-1/q)(1 - sqrt(1 - q delta/(q-1)))."""
    _check_alphabet(q)
    if not 0.0 <= delta <= 1.0 - 1.0 / q:
        raise DomainError(f"delta must be in [0, 1-1/q], got {delta}")
    frac = 1.0 - 1.0 / q
    return frac * (1.0 - math.sqrt(1.0 - delta / frac))


def _pstar_result(rhs: float, q: int, delta: float, p_hi: float) -> ThresholdResult:
    lo = 0.5 * delta
    # F evaluates with ~1e-16 noise; at rhs = 0 (lambda = 1 corner) the
    # guaranteed F(p_hi) = 0 can land marginally positive, so compare with a
    # relative slack far below the bracket width
    slack = 1e-13 * max(1.0, abs(rhs))

    def pred(p: float) -> bool:
        return F_q(q, delta, p) <= rhs + slack

    out = bisect_threshold(pred, lo, p_hi, xtol=_BRACKET_TOL, what="p_star")
    residual = F_q(q, delta, out.value) - rhs
    return ThresholdResult(out.value, (out.lo, out.hi), residual,
                           out.iterations, out.at_boundary)


def p_star(q: int, lam: float, delta: float) -> ThresholdResult:
    """inf{delta/2 <= p <= 1-1/q : F_q(delta, p) <= delta log_q((q-1)/(q^lam - 1))}.

    Bisection is justified by strict monotonicity of F_q in p. The infimum
    convention returns exactly delta/2 (flagged) when the defining
    inequality already holds there.
    """
    _check_alphabet(q)
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"lambda must be in (0, 1], got {lam}")
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must be in [0, 1], got {delta}")
    rhs = delta * (math.log(q - 1.0) - math.log(math.pow(q, lam) - 1.0)) / math.log(q)
    return _pstar_result(rhs, q, delta, 1.0 - 1.0 / q)


def p_star_small_delta_limit(q: int, lam: float) -> float:
    """Solution p of Z(qSC_p) = (q^lam - 1)/(q - 1), the delta -> 0 limit of p_star.

    Closed form for q = 2; bisection on the increasing map p -> Z otherwise.
    """
    _check_alphabet(q)
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"lambda must be in (0, 1], got {lam}")
    if q == 2:
        u = math.pow(2.0, lam - 1.0)
        return 0.5 - math.sqrt(u * (1.0 - u))
    target = (math.pow(q, lam) - 1.0) / (q - 1.0)

    def z_of(p: float) -> float:
        return ((q - 2.0) / (q - 1.0) * p
                + 2.0 * math.sqrt(p * (1.0 - p) / (q - 1.0)))

    return bisect_increasing(z_of, 0.0, 1.0 - 1.0 / q, target)


def g_perp(lam: float, R: float, gamma: float) -> float:
    """The dual comparison function G_perp_{lambda,R}(gamma), in bits."""
    if not 0.0 <= lam <= R or not R < 1.0:
        raise DomainError(
            f"need 0 <= lambda <= R < 1, got lambda={lam}, R={R}")
    if not 0.0 <= gamma <= 1.0:
        raise DomainError(f"gamma must be in [0, 1], got {gamma}")
    mn = min(gamma, 1.0 - gamma)
    if mn < 1.0 - math.pow(2.0, lam - 1.0):
        return R - lam - mn * math.log2(math.pow(2.0, 1.0 - lam) - 1.0)
    return binary_entropy(gamma) - (1.0 - R)


def p_star_dual(lam: float, R: float, delta: float) -> ThresholdResult:
    """inf{delta/2 <= p <= 1/2 : F(delta, p) <= G_perp_{lambda,R}(delta)} (binary)."""
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must be in [0, 1], got {delta}")
    rhs = g_perp(lam, R, delta)
    return _pstar_result(rhs, 2, delta, 0.5)


def f_bawgn(lam: float, gamma: float, sigma2: float) -> float:
    """F_BAWGN_lambda(gamma, sigma2) = -1/2 log2(1 - gamma/sigma2) + gamma log2(2^lam - 1)."""
    if not 0.0 < lam <= 1.0:
        raise DomainError(f"lambda must be in (0, 1], got {lam}")
    if sigma2 <= 0.0:
        raise DomainError(f"sigma2 must be > 0, got {sigma2}")
    if not 0.0 <= gamma < sigma2:
        raise DomainError(f"need 0 <= gamma < sigma2, got gamma={gamma}")
    return (-0.5 * math.log2(1.0 - gamma / sigma2)
            + gamma * math.log2(math.pow(2.0, lam) - 1.0))


def sigma2_star(lam: float, delta: float) -> ThresholdResult:
    """inf{sigma2 > delta : f_bawgn(lam, delta, sigma2) <= 0}.

    The functional is strictly decreasing in sigma2 above delta. The upper
    bracket is doubled up to a cap of 1e6 (sigma2_star diverges as
    lam -> 1), beyond which a bracket-exhausted error is raised.
    """
    if not 0.0 < lam < 1.0:
        raise DomainError(f"lambda must be in (0, 1), got {lam}")
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta must be in [0, 1], got {delta}")
    if delta == 0.0:
        return ThresholdResult(0.0, (0.0, 0.0), 0.0, 0, True)

    def pred(s2: float) -> bool:
        return f_bawgn(lam, delta, s2) <= 0.0

    lo = delta * (1.0 + 1e-12)
    hi = grow_upper_bracket(pred, max(2.0 * delta, 1.0), _SIGMA2_CAP,
                            what="sigma2_star")
    out = bisect_threshold(pred, lo, hi, xtol=_BRACKET_TOL, what="sigma2_star")
    residual = f_bawgn(lam, delta, out.value) if out.value > delta else 0.0
    return ThresholdResult(out.value, (out.lo, out.hi), residual,
                           out.iterations, out.at_boundary)


def sigma2_star_limit(lam: float) -> float:
    """delta -> 0 limit of sigma2_star: -1/(2 ln(2^lam - 1))."""
    if not 0.0 < lam < 1.0:
        raise DomainError(f"lambda must be in (0, 1), got {lam}")
    return -1.0 / (2.0 * math.log(math.pow(2.0, lam) - 1.0))


def lsym_lower_bound(q: int, delta: float) -> float:
    """Unconditional list-decoding radius lower bound p_star(q, q delta/(q-1), delta)."""
    _check_alphabet(q)
    if not 0.0 < delta <= 1.0 - 1.0 / q:
        raise DomainError(f"delta must be in (0, 1-1/q], got {delta}")
    lam = q * delta / (q - 1.0)
    return p_star(q, lam, delta).value


def rudra_uurtamo_p0(q: int, delta: float) -> float:
    """Effective decoding radius delta - eps0 from the random-pattern argument.

    eps0 is the unique root of h(min(1/2, delta - eps)) = eps log2(q-1),
    whose left-minus-right side is strictly decreasing in eps on [0, delta].
    Undefined for q = 2 (the right side vanishes identically).
    """
    _check_alphabet(q)
    if q == 2:
        raise DomainError("rudra_uurtamo_p0: undefined for q = 2")
    if not 0.0 < delta <= 1.0 - 1.0 / q:
        raise DomainError(f"delta must be in (0, 1-1/q], got {delta}")

    def neg_gap(eps: float) -> float:
        return eps * math.log2(q - 1.0) - binary_entropy(min(0.5, delta - eps))

    eps0 = bisect_increasing(neg_gap, 0.0, delta, 0.0)
    return delta - eps0


def tvz_upper_bound(q: int, delta: float) -> float:
    """H_q^{-1}(delta + 1/(sqrt(q)-1)), for q a perfect square."""
    _check_alphabet(q)
    r = math.isqrt(q)
    if r * r != q or r < 2:
        raise DomainError(f"tvz_upper_bound: q must be a perfect square, got {q}")
    if delta < 0.0:
        raise DomainError(f"delta must be >= 0, got {delta}")
    arg = delta + 1.0 / (r - 1.0)
    if arg > 1.0:
        raise DomainError(
            f"tvz_upper_bound: delta + 1/(sqrt(q)-1) = {arg} exceeds 1")
    return q_entropy_inverse(q, arg)


def erasure_list_params(q: int, delta: float, eps: float):
    """Plotkin-type erasure list decoding: rho = (q/(q-1) - eps) delta, L = q/((q-1) eps)."""
    _check_alphabet(q)
    if not 0.0 <= delta <= 1.0 - 1.0 / q:
        raise DomainError(f"delta must be in [0, 1-1/q], got {delta}")
    if eps <= 0.0:
        raise DomainError(f"eps must be > 0, got {eps}")
    rho = (q / (q - 1.0) - eps) * delta
    L = q / ((q - 1.0) * eps)
    return rho, L
