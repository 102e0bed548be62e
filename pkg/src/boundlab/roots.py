"""Bisection primitives for monotone functions and monotone predicates.

All thresholds in this package are infima of sets defined by a monotone
predicate, so a single well-tested bisection underlies them. We deliberately
hand-roll this instead of using a generic root finder: the callers need the
final bracket, the iteration count, and an explicit boundary convention.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from .errors import BracketExhaustedError


class BisectionOutcome(NamedTuple):
    value: float
    lo: float
    hi: float
    iterations: int
    at_boundary: bool


def bisect_increasing(f: Callable[[float], float], lo: float, hi: float,
                      target: float, xtol: float = 1e-12,
                      max_iter: int = 200) -> float:
    """Solve f(x) = target for increasing f on [lo, hi].

    Returns the midpoint of the final bracket. Assumes
    f(lo) <= target <= f(hi); values are clamped to the endpoints if the
    target falls outside (monotone functions evaluated at their range edge).
    """
    if f(lo) >= target:
        return lo
    if f(hi) <= target:
        return hi
    it = 0
    while hi - lo > xtol and it < max_iter:
        mid = 0.5 * (lo + hi)
        if f(mid) < target:
            lo = mid
        else:
            hi = mid
        it += 1
    return 0.5 * (lo + hi)


def bisect_threshold(pred: Callable[[float], bool], lo: float, hi: float,
                     xtol: float = 1e-12, max_iter: int = 200,
                     what: str = "threshold") -> BisectionOutcome:
    """Find inf{x in [lo, hi] : pred(x)} for a monotone predicate.

    pred must be False-then-True as x grows. If pred already holds at lo the
    infimum sits on the left boundary and we return lo with at_boundary set.
    Raises BracketExhaustedError when pred fails even at hi.
    """
    if pred(lo):
        return BisectionOutcome(lo, lo, lo, 0, True)
    if not pred(hi):
        raise BracketExhaustedError(
            f"{what}: predicate never holds on [{lo}, {hi}]")
    it = 0
    while hi - lo > xtol and it < max_iter:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            hi = mid
        else:
            lo = mid
        it += 1
    return BisectionOutcome(0.5 * (lo + hi), lo, hi, it, False)


def grow_upper_bracket(pred: Callable[[float], bool], start: float,
                       cap: float, what: str = "bracket") -> float:
    """Double a candidate upper endpoint until pred holds, up to cap."""
    hi = start
    while not pred(hi):
        if hi >= cap:
            raise BracketExhaustedError(
                f"{what}: no sign change below cap {cap:g}")
        hi = min(cap, 2.0 * hi)
    return hi
