"""Command-line surface.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
All output is deterministic for fixed flags: floats are printed with repr,
CSV metadata carries the canonical command line and package version but
never a timestamp, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import json
import math
import sys
from typing import Dict, List, Optional

import click

from . import __version__
from .bounds import (PoltyrevParams, SphereBoundParams, poltyrev_bound,
                     qsc_error_profile, qsc_exact_block_error, sphere_bound,
                     union_bhattacharyya_bound)
from .codes import (LinearCode, erasure_error_exact, load_code,
                    weight_distribution)
from .curves import write_csv
from .entropy import BAWGN, QEC, QSC
from .errors import (BracketExhaustedError, BudgetExceededError, DomainError,
                     InapplicableBoundError)
from .figures import DEFAULT_POINTS, FIGURES, build_figure
from .simulate import ErrorEstimate, SimulationSpec, simulate
from .thresholds import (ThresholdResult, johnson_radius, lsym_lower_bound,
                         p_star, p_star_dual, rudra_uurtamo_p0, sigma2_star,
                         tvz_upper_bound)
from .verify import SUITES, run_suites

_THRESHOLD_KINDS = ("johnson", "pstar", "pstar-dual", "sigma2star", "lsym",
                    "ru", "tvz")
# exact erasure statistics are affordable up to this blocklength (2^n patterns)
_QEC_EXACT_MAX_N = 20
_SPHERE_S_GRID = (0.25, 0.5, 1.0, 2.0)


def _fail_usage(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _need(value: Optional[float], flag: str, kind: str) -> float:
    if value is None:
        _fail_usage(f"threshold {kind} requires {flag}")
    return value


def _reject(value: Optional[float], flag: str, kind: str) -> None:
    if value is not None:
        _fail_usage(f"threshold {kind} does not take {flag}")


@click.group()
@click.version_option(version=__version__, prog_name="boundlab")
def main() -> None:
    """Bound laboratory: thresholds, figure curves, verification, simulation."""


@main.command()
@click.argument("kind", type=click.Choice(_THRESHOLD_KINDS))
@click.option("--q", type=int, default=None, help="alphabet size")
@click.option("--lambda", "lam", type=float, default=None,
              help="erasure probability lambda in (0, 1]")
@click.option("--delta", type=float, default=None, help="relative distance")
@click.option("--rate", type=float, default=None,
              help="dual rate R (pstar-dual only)")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def threshold(kind: str, q: Optional[int], lam: Optional[float],
              delta: Optional[float], rate: Optional[float],
              fmt: str) -> None:
    """Compute one decoding-radius threshold and print it."""
    params: Dict[str, float] = {}
    try:
        if kind == "johnson":
            qq = int(_need(q, "--q", kind))
            d = _need(delta, "--delta", kind)
            _reject(lam, "--lambda", kind)
            _reject(rate, "--rate", kind)
            params = {"q": qq, "delta": d}
            result: object = johnson_radius(qq, d)
        elif kind == "pstar":
            qq = int(_need(q, "--q", kind))
            la = _need(lam, "--lambda", kind)
            d = _need(delta, "--delta", kind)
            _reject(rate, "--rate", kind)
            params = {"q": qq, "lambda": la, "delta": d}
            result = p_star(qq, la, d)
        elif kind == "pstar-dual":
            la = _need(lam, "--lambda", kind)
            rr = _need(rate, "--rate", kind)
            d = _need(delta, "--delta", kind)
            _reject(q, "--q", kind)
            params = {"lambda": la, "rate": rr, "delta": d}
            result = p_star_dual(la, rr, d)
        elif kind == "sigma2star":
            la = _need(lam, "--lambda", kind)
            d = _need(delta, "--delta", kind)
            _reject(q, "--q", kind)
            _reject(rate, "--rate", kind)
            params = {"lambda": la, "delta": d}
            result = sigma2_star(la, d)
        else:
            qq = int(_need(q, "--q", kind))
            d = _need(delta, "--delta", kind)
            _reject(lam, "--lambda", kind)
            _reject(rate, "--rate", kind)
            params = {"q": qq, "delta": d}
            fn = {"lsym": lsym_lower_bound, "ru": rudra_uurtamo_p0,
                  "tvz": tvz_upper_bound}[kind]
            result = fn(qq, d)
    except (DomainError, BracketExhaustedError) as exc:
        _fail_usage(str(exc))

    if isinstance(result, ThresholdResult):
        payload = {"kind": kind, "params": params, "value": result.value,
                   "bracket": list(result.bracket),
                   "residual": result.residual,
                   "iterations": result.iterations,
                   "at_boundary": result.at_boundary}
    else:
        payload = {"kind": kind, "params": params, "value": float(result),
                   "bracket": None, "residual": None, "iterations": None,
                   "at_boundary": None}

    if fmt == "json":
        click.echo(json.dumps(payload))
        return
    arg_text = ", ".join(f"{k}={v!r}" for k, v in params.items())
    click.echo(f"{kind}({arg_text})")
    click.echo(f"  value       = {payload['value']!r}")
    if payload["bracket"] is not None:
        lo, hi = payload["bracket"]
        click.echo(f"  bracket     = [{lo!r}, {hi!r}]")
        click.echo(f"  residual    = {payload['residual']!r}")
        click.echo(f"  at_boundary = {payload['at_boundary']}")


@main.command()
@click.argument("figure_id", type=click.Choice(sorted(FIGURES)))
@click.option("--points", type=int, default=DEFAULT_POINTS, show_default=True,
              help="grid resolution")
@click.option("--p-list", "p_list", type=str, default=None,
              help="comma-separated p values (F-lambda only)")
@click.option("--output", "-o", "output", type=click.Path(dir_okay=False),
              default=None, help="CSV path [default: <figure-id>.csv]")
def figure(figure_id: str, points: int, p_list: Optional[str],
           output: Optional[str]) -> None:
    """Emit one figure's curves as a CSV file."""
    ps: Optional[List[float]] = None
    command = f"boundlab figure {figure_id} --points {points}"
    if p_list is not None:
        try:
            ps = [float(tok) for tok in p_list.split(",") if tok.strip()]
        except ValueError:
            _fail_usage(f"--p-list must be comma-separated floats, got {p_list!r}")
        command += f" --p-list {p_list}"
    try:
        curve = build_figure(figure_id, points=points, p_list=ps)
    except (DomainError, BracketExhaustedError) as exc:
        _fail_usage(str(exc))
    target = output if output is not None else f"{figure_id}.csv"
    write_csv(curve, target, {"command": command, "version": __version__})
    click.echo(f"wrote {target}: {len(curve.x)} rows, "
               f"{len(curve.series)} series")


@main.command()
@click.argument("suite", type=click.Choice(sorted(SUITES) + ["all"]))
def verify(suite: str) -> None:
    """Run an invariant suite; exit 1 on any violated property."""
    names = sorted(SUITES) if suite == "all" else [suite]
    try:
        reports = run_suites(names)
    except (DomainError, BracketExhaustedError) as exc:
        _fail_usage(str(exc))
    bad = 0
    for rep in reports:
        click.echo(rep.line())
        if not rep.ok:
            bad += 1
    click.echo(f"{len(reports)} properties checked, {bad} violated")
    if bad:
        sys.exit(1)


def _estimate_lines(label: str, est: ErrorEstimate) -> List[str]:
    lo, hi = est.ci95
    return [f"{label:<10s} p_hat={est.p_hat!r} ci95=[{lo!r}, {hi!r}] "
            f"errors={est.errors_observed} trials={est.trials}"]


def _estimate_json(est: Optional[ErrorEstimate]):
    if est is None:
        return None
    return {"p_hat": est.p_hat, "ci95": list(est.ci95),
            "errors": est.errors_observed, "trials": est.trials}


def _qsc_bounds(code: LinearCode, channel: QSC) -> Dict[str, Optional[float]]:
    weights = weight_distribution(code)
    out: Dict[str, Optional[float]] = {}
    try:
        out["poltyrev"] = poltyrev_bound(weights, code.q,
                                         PoltyrevParams(channel.p))
    except DomainError:
        out["poltyrev"] = None
    try:
        out["union_bhattacharyya_lam1"] = union_bhattacharyya_bound(
            code, channel, 1.0)
    except InapplicableBoundError:
        out["union_bhattacharyya_lam1"] = None
    if float(code.q) ** code.n <= 2 ** 24:
        profile = qsc_error_profile(code)
        out["exact_block"] = qsc_exact_block_error(code, channel.p, profile)
    else:
        out["exact_block"] = None
    return out


def _bawgn_bounds(code: LinearCode, channel: BAWGN) -> Dict[str, Optional[float]]:
    weights = weight_distribution(code)
    best = math.inf
    for s in _SPHERE_S_GRID:
        val = sphere_bound(weights, SphereBoundParams(channel.sigma2, s))
        best = min(best, val)
    return {"sphere": best}


def _qec_bounds(code: LinearCode, channel: QEC) -> Dict[str, Optional[float]]:
    if code.n > _QEC_EXACT_MAX_N:
        return {"exact_ambiguity": None, "exact_block": None,
                "exact_bit": None}
    ambiguity, map_pb, pb = erasure_error_exact(code, channel.lam)
    return {"exact_ambiguity": ambiguity, "exact_block": map_pb,
            "exact_bit": pb}


@main.command("simulate")
@click.argument("code_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--channel", "channel_name",
              type=click.Choice(["qsc", "qec", "bawgn"]), required=True)
@click.option("--p", type=float, default=None, help="qSC flip probability")
@click.option("--lambda", "lam", type=float, default=None,
              help="qEC erasure probability")
@click.option("--sigma2", type=float, default=None,
              help="BAWGN noise variance")
@click.option("--trials", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tie-break", type=click.Choice(["lexicographic", "uniform"]),
              default="lexicographic", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def simulate_cmd(code_path: str, channel_name: str, p: Optional[float],
                 lam: Optional[float], sigma2: Optional[float], trials: int,
                 seed: int, tie_break: str, fmt: str) -> None:
    """Monte Carlo MAP decoding of a generator-matrix file on one channel."""
    try:
        code = load_code(code_path)
        if channel_name == "qsc":
            if p is None:
                _fail_usage("--channel qsc requires --p")
            if lam is not None or sigma2 is not None:
                _fail_usage("--channel qsc takes only --p")
            channel = QSC(code.q, p)
        elif channel_name == "qec":
            if lam is None:
                _fail_usage("--channel qec requires --lambda")
            if p is not None or sigma2 is not None:
                _fail_usage("--channel qec takes only --lambda")
            channel = QEC(code.q, lam)
        else:
            if sigma2 is None:
                _fail_usage("--channel bawgn requires --sigma2")
            if p is not None or lam is not None:
                _fail_usage("--channel bawgn takes only --sigma2")
            channel = BAWGN(sigma2)
        spec = SimulationSpec(code, channel, trials, seed)
        result = simulate(spec, tie_break=tie_break)
        if channel_name == "qsc":
            bounds = _qsc_bounds(code, channel)
        elif channel_name == "bawgn":
            bounds = _bawgn_bounds(code, channel)
        else:
            bounds = _qec_bounds(code, channel)
    except (DomainError, BracketExhaustedError) as exc:
        _fail_usage(str(exc))

    if fmt == "json":
        payload = {
            "code": {"path": code_path, "q": code.q, "n": code.n,
                     "k": code.k},
            "channel": {"kind": channel_name,
                        "p": p, "lambda": lam, "sigma2": sigma2},
            "trials": trials, "seed": seed, "tie_break": tie_break,
            "block": _estimate_json(result.block),
            "bit": _estimate_json(result.bit),
            "ambiguity": _estimate_json(result.ambiguity),
            "bounds": bounds,
        }
        click.echo(json.dumps(payload))
        return

    param_text = {"qsc": f"p={p!r}", "qec": f"lambda={lam!r}",
                  "bawgn": f"sigma2={sigma2!r}"}[channel_name]
    lines = [f"code: {code_path} [{code.q}-ary, n={code.n}, k={code.k}]",
             f"channel: {channel_name}({param_text})",
             f"trials: {trials}  seed: {seed}  tie_break: {tie_break}"]
    lines += _estimate_lines("block", result.block)
    lines += _estimate_lines("bit", result.bit)
    if result.ambiguity is not None:
        lines += _estimate_lines("ambiguity", result.ambiguity)
    lines.append("analytic block-error bounds:")
    for name, value in bounds.items():
        shown = "inapplicable" if value is None else repr(value)
        lines.append(f"  {name:<26s} {shown}")
    click.echo("\n".join(lines))


if __name__ == "__main__":
    main()
