"""The nine figure curves, as shared-grid Curve objects.

Each figure samples all of its series on one strictly increasing x grid
sized by `points`. Where a series is undefined (outside its validity
region) the cell is NaN, which serializes as an empty CSV cell; plotters
break the line there. Grids are clipped to validity regions rather than
padded, so the x range of a figure is the union of its series' domains.
"""

from __future__ import annotations

import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .curves import Curve
from .errors import DomainError
from .exponents import F_q
from .thresholds import (johnson_radius, lsym_lower_bound, p_star,
                         p_star_dual, p_star_small_delta_limit,
                         rudra_uurtamo_p0, tvz_upper_bound)

DEFAULT_POINTS = 512
# Fig. "exponent vs gamma" caption leaves its p values unreadable; this
# default grid is ours, overridable with --p-list
DEFAULT_P_LIST = (0.05, 0.075, 0.1, 0.125, 0.15)
ZOOM_WIDTH = 2.0 ** -10


def _fmt(v: float) -> str:
    return f"{v:g}"


def _open_grid(hi: float, points: int) -> np.ndarray:
    """points values in (0, hi], uniformly spaced."""
    return np.linspace(hi / points, hi, points)


def _series(xs, fn) -> Tuple[float, ...]:
    out = []
    for x in xs:
        try:
            out.append(float(fn(float(x))))
        except DomainError:
            out.append(math.nan)
    return tuple(out)


def fig_pstar_vs_johnson(points: int) -> Curve:
    top = 1.0 - 1.0 / 17.0
    xs = _open_grid(top, points)
    series = []
    for q in (9, 17):
        qtop = 1.0 - 1.0 / q
        series.append((f"pstar_q{q}", tuple(
            lsym_lower_bound(q, float(d)) if d <= qtop else math.nan
            for d in xs)))
        series.append((f"johnson_q{q}", tuple(
            johnson_radius(q, float(d)) if d <= qtop else math.nan
            for d in xs)))
    series.append(("upper_delta", tuple(float(d) for d in xs)))
    series.append(("lower_half_delta", tuple(float(d) / 2.0 for d in xs)))
    return Curve("pstar-vs-johnson", "delta", tuple(map(float, xs)),
                 tuple(series))


def fig_F_lambda(points: int, p_list: Sequence[float] = DEFAULT_P_LIST) -> Curve:
    lam = 0.5
    if not p_list:
        raise DomainError("F-lambda: empty p list")
    shift_base = math.log2(2.0 ** lam - 1.0)
    hi = min(1.0, 2.0 * max(p_list))
    xs = np.linspace(0.0, hi, points)
    series = []
    for p in p_list:
        if not 0.0 < p <= 0.5:
            raise DomainError(f"F-lambda: p must be in (0, 1/2], got {p}")
        vals = tuple(
            F_q(2, float(g), p) + float(g) * shift_base
            if g <= min(2.0 * p, 1.0) else math.nan
            for g in xs)
        series.append((f"F_p{_fmt(p)}", vals))
    return Curve("F-lambda", "gamma", tuple(map(float, xs)), tuple(series))


def fig_pstar_vs_lambda(points: int) -> Curve:
    xs = _open_grid(1.0, points)
    series = []
    for delta in (0.05, 0.1, 0.2, 0.4):
        series.append((f"pstar_d{_fmt(delta)}", tuple(
            p_star(2, float(lam), delta).value for lam in xs)))
    series.append(("small_delta_limit", tuple(
        p_star_small_delta_limit(2, float(lam)) for lam in xs)))
    return Curve("pstar-vs-lambda", "lambda", tuple(map(float, xs)),
                 tuple(series))


def fig_pstar_vs_delta(points: int) -> Curve:
    xs = _open_grid(0.5, points)
    series = []
    for lam in (0.25, 0.5, 0.7, 0.8):
        series.append((f"pstar_lam{_fmt(lam)}", tuple(
            p_star(2, lam, float(d)).value for d in xs)))
    series.append(("johnson", tuple(johnson_radius(2, float(d)) for d in xs)))
    return Curve("pstar-vs-delta", "delta", tuple(map(float, xs)),
                 tuple(series))


def fig_qary_pstar(points: int) -> Curve:
    lam = 0.6
    qs = (3, 5, 7, 16)
    top = 1.0 - 1.0 / max(qs)
    xs = _open_grid(top, points)
    series = []
    for q in qs:
        qtop = 1.0 - 1.0 / q
        series.append((f"pstar_q{q}", tuple(
            p_star(q, lam, float(d)).value if d <= qtop else math.nan
            for d in xs)))
    series.append(("half_delta", tuple(float(d) / 2.0 for d in xs)))
    return Curve("qary-pstar", "delta", tuple(map(float, xs)), tuple(series))


def fig_dual_compare(points: int) -> Curve:
    lam = 0.4
    xs = _open_grid(0.5, points)
    series = [("primal_lam0.6", tuple(
        p_star(2, 0.6, float(d)).value for d in xs))]
    for rr in (0.4, 0.41, 0.42, 0.43):
        series.append((f"dual_R{_fmt(rr)}", tuple(
            p_star_dual(lam, rr, float(d)).value for d in xs)))
    return Curve("dual-compare", "delta", tuple(map(float, xs)), tuple(series))


def fig_ru_q15(points: int) -> Curve:
    q = 15
    top = 1.0 - 1.0 / q
    xs = _open_grid(top, points)
    series = [
        ("ru_q15", _series(xs, lambda d: rudra_uurtamo_p0(q, d))),
        ("johnson_q15", _series(xs, lambda d: johnson_radius(q, d))),
        ("half_delta", tuple(float(d) / 2.0 for d in xs)),
    ]
    return Curve("ru-q15", "delta", tuple(map(float, xs)), tuple(series))


def fig_large_delta_zoom(points: int) -> Curve:
    xs = np.linspace(-ZOOM_WIDTH, 0.0, points)
    series = []
    for q in (3, 4, 9, 17):
        top = 1.0 - 1.0 / q
        series.append((f"lsym_q{q}", tuple(
            lsym_lower_bound(q, top + float(off)) for off in xs)))
        series.append((f"johnson_q{q}", tuple(
            johnson_radius(q, top + float(off)) for off in xs)))
    return Curve("large-delta-zoom", "delta_offset", tuple(map(float, xs)),
                 tuple(series))


def fig_all_bounds_q2pow20(points: int) -> Curve:
    q = 2 ** 20
    top = 1.0 - 1.0 / q
    tvz_top = 1.0 - 1.0 / (math.isqrt(q) - 1)
    xs = _open_grid(top, points)
    series = [
        ("tvz", tuple(tvz_upper_bound(q, float(d)) if d <= tvz_top
                      else math.nan for d in xs)),
        ("ru", _series(xs, lambda d: rudra_uurtamo_p0(q, d))),
        ("johnson", _series(xs, lambda d: johnson_radius(q, d))),
        ("lsym", _series(xs, lambda d: lsym_lower_bound(q, d))),
        ("upper_delta", tuple(float(d) for d in xs)),
        ("lower_half_delta", tuple(float(d) / 2.0 for d in xs)),
    ]
    return Curve("all-bounds-q2pow20", "delta", tuple(map(float, xs)),
                 tuple(series))


FIGURES: Dict[str, Callable[..., Curve]] = {
    "pstar-vs-johnson": fig_pstar_vs_johnson,
    "F-lambda": fig_F_lambda,
    "pstar-vs-lambda": fig_pstar_vs_lambda,
    "pstar-vs-delta": fig_pstar_vs_delta,
    "qary-pstar": fig_qary_pstar,
    "dual-compare": fig_dual_compare,
    "ru-q15": fig_ru_q15,
    "large-delta-zoom": fig_large_delta_zoom,
    "all-bounds-q2pow20": fig_all_bounds_q2pow20,
}


def build_figure(figure_id: str, points: int = DEFAULT_POINTS,
                 p_list: Optional[Sequence[float]] = None) -> Curve:
    if figure_id not in FIGURES:
        known = ", ".join(sorted(FIGURES))
        raise DomainError(f"unknown figure id {figure_id!r} (known: {known})")
    if points < 2:
        raise DomainError(f"points must be >= 2, got {points}")
    if figure_id == "F-lambda":
        return fig_F_lambda(points, tuple(p_list) if p_list else DEFAULT_P_LIST)
    if p_list is not None:
        raise DomainError(f"--p-list applies only to F-lambda, not {figure_id}")
    return FIGURES[figure_id](points)
