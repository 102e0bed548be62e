"""Growth exponents of Hamming ball intersections.

M(gamma, p) is the binary exponent; its q-ary generalization M_q is given
almost in closed form: beta is an explicit rational function of a parameter
zeta, and zeta itself is pinned by one scalar equation solved by bisection
(the map is strictly increasing). F_q = H_q - M_q is the quantity the
threshold definitions compare against channel terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropy import (QSC, bhattacharyya, binary_entropy, q_entropy,
                      q_entropy_tilde)
from .errors import DomainError

_ZETA_RESIDUAL = 1e-12


def _check_point(q: int, gamma: float, p: float) -> None:
    if not (isinstance(q, int) and q >= 2):
        raise DomainError(f"alphabet size must be an integer >= 2, got {q!r}")
    if not 0.0 <= p <= 1.0 - 1.0 / q:
        raise DomainError(f"p must be in [0, 1-1/q], got {p}")
    if not 0.0 <= gamma <= min(2.0 * p, 1.0):
        raise DomainError(
            f"gamma must be in [0, min(2p, 1)] = [0, {min(2 * p, 1.0)}], "
            f"got {gamma}")


def M_binary(gamma: float, p: float) -> float:
    """gamma + (1-gamma) h((p - gamma/2)/(1-gamma)); M(1, 1/2) = 1."""
    _check_point(2, gamma, p)
    if gamma == 1.0:
        return 1.0  # continuous extension at (1, 1/2)
    return gamma + (1.0 - gamma) * binary_entropy(
        (p - 0.5 * gamma) / (1.0 - gamma))


def beta_of_zeta(q: int, zeta: float) -> float:
    """beta(zeta) = 1/(1 + C_q ((1-zeta)/zeta)^2), C_q = (q-2)^2/(4(q-1)).

    Strictly increasing on [0, 1] with beta(0) := 0 by limit.
    """
    if not (isinstance(q, int) and q >= 3):
        raise DomainError(f"beta_of_zeta requires q >= 3, got {q!r}")
    if not 0.0 <= zeta <= 1.0:
        raise DomainError(f"zeta must be in [0, 1], got {zeta}")
    if zeta == 0.0:
        return 0.0
    cq = (q - 2.0) ** 2 / (4.0 * (q - 1.0))
    r = (1.0 - zeta) / zeta
    return 1.0 / (1.0 + cq * r * r)


@dataclass(frozen=True)
class ZetaSolution:
    zeta: float
    beta: float
    residual: float
    c_q: float


def solve_zeta(q: int, gamma: float, p: float) -> ZetaSolution:
    """Find the unique zeta with gamma*zeta/2 + (1-gamma) beta(zeta) = p - gamma/2.

    The left side is strictly increasing in zeta from 0 to 1 - gamma/2, and
    the target lies in that range whenever (gamma, p) is a valid exponent
    point, so plain bisection converges; we stop once the residual is at
    most 1e-12.
    """
    _check_point(q, gamma, p)
    if q < 3:
        raise DomainError("solve_zeta requires q >= 3")
    target = p - 0.5 * gamma
    cq = (q - 2.0) ** 2 / (4.0 * (q - 1.0))

    if gamma == 1.0:
        # the equation degenerates to zeta/2 = p - 1/2
        zeta = 2.0 * p - 1.0
        beta = beta_of_zeta(q, zeta)
        return ZetaSolution(zeta, beta, abs(0.5 * zeta - target), cq)

    def phi(z: float) -> float:
        return 0.5 * gamma * z + (1.0 - gamma) * beta_of_zeta(q, z)

    lo, hi = 0.0, 1.0
    zeta = 0.5
    for _ in range(200):
        zeta = 0.5 * (lo + hi)
        val = phi(zeta)
        if abs(val - target) <= _ZETA_RESIDUAL:
            break
        if val < target:
            lo = zeta
        else:
            hi = zeta
    beta = beta_of_zeta(q, zeta)
    return ZetaSolution(zeta, beta, abs(phi(zeta) - target), cq)


def M_q(q: int, gamma: float, p: float) -> float:
    """The q-ary intersection exponent M^(q)(gamma, p), base-q units.

    Endpoints are handled analytically (the zeta parametrization degenerates
    there): gamma = 0 gives H_q(p), p = gamma/2 gives gamma log_q 2, and
    p = 1 - 1/q gives exactly 1.
    """
    _check_point(q, gamma, p)
    if q == 2:
        return M_binary(gamma, p)
    if gamma == 0.0:
        return q_entropy(q, p)
    if p == 0.5 * gamma:
        return gamma * math.log(2.0) / math.log(q)
    if p == 1.0 - 1.0 / q:
        return 1.0
    sol = solve_zeta(q, gamma, p)
    return (gamma * q_entropy_tilde(q, sol.zeta)
            + (1.0 - gamma) * q_entropy(q, sol.beta))


def F_q(q: int, gamma: float, p: float) -> float:
    """F^(q)(gamma, p) = H_q(p) - M^(q)(gamma, p) (base q; bits when q=2)."""
    if q == 2:
        return binary_entropy(p) - M_binary(gamma, p)
    return q_entropy(q, p) - M_q(q, gamma, p)


def dM_dgamma0_reference(q: int, p: float) -> float:
    """Closed-form d M^(q)/d gamma at gamma = 0: log_q Z(qSC_p)."""
    if not (isinstance(q, int) and q >= 2):
        raise DomainError(f"alphabet size must be an integer >= 2, got {q!r}")
    if not 0.0 < p <= 1.0 - 1.0 / q:
        raise DomainError(f"p must be in (0, 1-1/q], got {p}")
    return math.log(bhattacharyya(QSC(q, p))) / math.log(q)
