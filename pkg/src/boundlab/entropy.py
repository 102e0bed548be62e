"""q-ary entropy functionals, binomial logarithms, and channel models.

Internal arithmetic is in natural logs; conversion to base 2 or base q
happens once at the boundary of each function. The 0*log(0) = 0 convention
is applied explicitly so endpoints return exact values instead of NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from scipy.special import gammaln

from .errors import DomainError
from .roots import bisect_increasing

# exact big-integer binomials below this n, lgamma above
_EXACT_BINOM_N = 64


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _check_alphabet(q: int, minimum: int = 2) -> None:
    _require(isinstance(q, int) and q >= minimum,
             f"alphabet size must be an integer >= {minimum}, got {q!r}")


def _xlog(x: float) -> float:
    # x * ln(x) with the 0 log 0 = 0 convention
    return 0.0 if x == 0.0 else x * math.log(x)


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), in bits."""
    _require(0.0 <= x <= 1.0, f"binary_entropy: x must be in [0,1], got {x}")
    return -(_xlog(x) + _xlog(1.0 - x)) / math.log(2.0)


def q_entropy(q: int, x: float) -> float:
    """H_q(x) = -(1-x) log_q(1-x) - x log_q(x / (q-1)), base q.

    Increasing on [0, 1-1/q] with H_q(0) = 0 and H_q(1-1/q) = 1.
    """
    _check_alphabet(q)
    _require(0.0 <= x <= 1.0, f"q_entropy: x must be in [0,1], got {x}")
    val = -(_xlog(1.0 - x) + _xlog(x)) + x * math.log(q - 1.0)
    return val / math.log(q)


def q_entropy_tilde(q: int, x: float) -> float:
    """H~_q(x) = -(1-x) log_q((1-x)/2) - x log_q(x/(q-2)), for q >= 3."""
    _check_alphabet(q, minimum=3)
    _require(0.0 <= x <= 1.0,
             f"q_entropy_tilde: x must be in [0,1], got {x}")
    val = (-(_xlog(1.0 - x) + _xlog(x))
           + (1.0 - x) * math.log(2.0) + x * math.log(q - 2.0))
    return val / math.log(q)


def q_entropy_inverse(q: int, y: float) -> float:
    """Inverse of H_q on [0, 1-1/q], by bisection to 1e-12 in x."""
    _check_alphabet(q)
    # the forward map can overshoot 1 by an ulp at the Plotkin point; the
    # inverse must accept its own image, so tolerate and clamp that much
    _require(0.0 <= y <= 1.0 + 1e-12,
             f"q_entropy_inverse: y must be in [0,1], got {y}")
    if y == 0.0:
        return 0.0
    if y >= 1.0:
        return 1.0 - 1.0 / q
    return bisect_increasing(lambda x: q_entropy(q, x), 0.0, 1.0 - 1.0 / q, y)


def log_binomial(n: int, k: int) -> float:
    """ln C(n, k). Exact big-integer path for n <= 64, lgamma beyond.

    Out-of-range k returns -inf (an empty count), not an error, because the
    combinatorial sums upstream index freely.
    """
    _require(n >= 0, f"log_binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return -math.inf
    if n <= _EXACT_BINOM_N:
        return math.log(math.comb(n, k))
    return float(gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1))


@dataclass(frozen=True)
class QSC:
    """q-ary symmetric channel: flips to each wrong symbol w.p. p/(q-1)."""
    q: int
    p: float

    def __post_init__(self):
        _check_alphabet(self.q)
        _require(0.0 <= self.p <= 1.0 - 1.0 / self.q,
                 f"QSC: p must be in [0, 1-1/q], got {self.p}")


@dataclass(frozen=True)
class QEC:
    """q-ary erasure channel with erasure probability lam."""
    q: int
    lam: float

    def __post_init__(self):
        _check_alphabet(self.q)
        _require(0.0 <= self.lam <= 1.0,
                 f"QEC: lam must be in [0,1], got {self.lam}")


@dataclass(frozen=True)
class BAWGN:
    """Binary-input AWGN channel, +-1 signaling, noise variance sigma2."""
    sigma2: float

    def __post_init__(self):
        _require(self.sigma2 > 0.0,
                 f"BAWGN: sigma2 must be > 0, got {self.sigma2}")


Channel = Union[QSC, QEC, BAWGN]


def bhattacharyya(channel: Channel) -> float:
    """Bhattacharyya parameter Z of a channel.

    qSC: ((q-2)/(q-1)) p + 2 sqrt(p(1-p)/(q-1)); BAWGN: exp(-1/(2 sigma2)).
    The erasure channel has no single pairwise Z in this convention and is
    rejected.
    """
    if isinstance(channel, QSC):
        q, p = channel.q, channel.p
        return (q - 2.0) / (q - 1.0) * p + 2.0 * math.sqrt(p * (1.0 - p) / (q - 1.0))
    if isinstance(channel, BAWGN):
        return math.exp(-1.0 / (2.0 * channel.sigma2))
    if isinstance(channel, QEC):
        raise DomainError("bhattacharyya: not defined for the erasure channel")
    raise DomainError(f"bhattacharyya: unknown channel {channel!r}")
