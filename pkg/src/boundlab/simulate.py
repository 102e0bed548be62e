"""Monte Carlo MAP decoding for explicit small codes.

RNG is counter-based Philox (numpy's 4x64 implementation): uniform number
trial*slots + j of a keyed stream is reached by advancing the counter, so
every value is a pure function of (key, trial index, slot index) and
serial, chunked, and parallel runs are bit-identical. Sweep grid points
get independent keys via a splitmix64 finalizer of (seed, point index).
Gaussian noise comes from inverting the normal CDF on those uniforms
(scipy.special.ndtri, Wichura's AS241 rational approximation), which is
reproducible across platforms to the last bit.

Per-trial uniform slot layout: slots 0..n-1 drive the channel noise,
slot n breaks block-decoding ties, slots n+1..2n break per-coordinate
symbol ties.

Block decoding is exact MAP over the full codebook (budget q^k <= 2^20).
Bit decoding is per-coordinate symbol MAP: argmax of the posterior symbol
mass. Ties follow tie_break: "lexicographic" keeps the smallest candidate
(index or symbol), "uniform" samples one. The erasure channel always uses
uniform tie-breaks per its contract.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import ndtri

from .codes import LinearCode
from .curves import Curve
from .entropy import BAWGN, QEC, QSC, Channel
from .errors import BudgetExceededError, DomainError

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_ENUM_BUDGET = 2 ** 20
_WILSON_Z = 1.959963984540054  # two-sided 95%


def _mix(x: np.ndarray) -> np.ndarray:
    z = x.copy()
    z ^= z >> np.uint64(30)
    z *= _MIX1
    z ^= z >> np.uint64(27)
    z *= _MIX2
    z ^= z >> np.uint64(31)
    return z


def splitmix(seed: int, index: int) -> int:
    """Derived 64-bit seed for sub-stream `index` of `seed`."""
    x = np.uint64((seed + (index + 1) * 0x9E3779B97F4A7C15) % (1 << 64))
    return int(_mix(np.array([x], dtype=np.uint64))[0])


def _trial_uniforms(seed: int, start: int, stop: int, slots: int) -> np.ndarray:
    """(stop-start) x slots matrix of uniforms in [0, 1), pure in its args.

    Value (t, j) is draw number t*padded + j of the Philox stream keyed by
    seed, where padded rounds slots up to a whole number of 4-draw Philox
    blocks so each trial starts on a block boundary (advance() moves whole
    blocks). Chunk boundaries cannot change any value.
    """
    padded = (slots + 3) & ~3
    bg = np.random.Philox(key=seed % (1 << 64))
    bg.advance(start * padded // 4)
    u = np.random.Generator(bg).random((stop - start, padded))
    return u[:, :slots]


def wilson_interval(errors: int, trials: int) -> Tuple[float, float]:
    """95% Wilson score interval; always contains errors/trials."""
    if trials <= 0:
        raise DomainError(f"trials must be >= 1, got {trials}")
    if not 0 <= errors <= trials:
        raise DomainError(
            f"errors must be in [0, trials], got {errors}/{trials}")
    z = _WILSON_Z
    phat = errors / trials
    denom = 1.0 + z * z / trials
    center = (phat + z * z / (2.0 * trials)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / trials
                         + z * z / (4.0 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class ErrorEstimate:
    p_hat: float
    ci95: Tuple[float, float]
    trials: int
    errors_observed: int

    @staticmethod
    def from_counts(errors: int, trials: int) -> "ErrorEstimate":
        return ErrorEstimate(errors / trials, wilson_interval(errors, trials),
                             trials, errors)


@dataclass(frozen=True)
class SimulationSpec:
    code: LinearCode
    channel: Channel
    trials: int
    seed: int
    transmitted: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        q = self.code.q
        ch = self.channel
        if isinstance(ch, (QSC, QEC)) and ch.q != q:
            raise DomainError(
                f"channel alphabet {ch.q} does not match code field {q}")
        if isinstance(ch, BAWGN) and q != 2:
            raise DomainError("BAWGN requires a binary code")
        if self.code.size > _ENUM_BUDGET:
            raise BudgetExceededError(
                f"q^k = {self.code.size} exceeds MAP enumeration budget "
                f"{_ENUM_BUDGET}")
        if self.transmitted is not None:
            t = np.asarray(self.transmitted, dtype=np.int64)
            if t.shape != (self.code.n,) or not self.code.contains(t):
                raise DomainError("transmitted word is not a codeword")


@dataclass(frozen=True)
class SimulationResult:
    block: ErrorEstimate
    bit: ErrorEstimate
    ambiguity: Optional[ErrorEstimate] = None


def _worker_count() -> int:
    env = os.environ.get("BOUNDS_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def _chunk_size(n: int, m: int) -> int:
    return max(256, min(1 << 14, (1 << 23) // (m * n + 1)))


def _chosen_from_ties(stat: np.ndarray, best: np.ndarray, tie_u: np.ndarray,
                      lexicographic: bool) -> np.ndarray:
    """Index of the selected minimizer of stat along axis 1."""
    mask = stat == best[:, None]
    if lexicographic:
        return np.argmax(mask, axis=1)
    counts = mask.sum(axis=1)
    r = np.minimum((tie_u * counts).astype(np.int64), counts - 1)
    csum = np.cumsum(mask, axis=1)
    return np.argmax(csum > r[:, None], axis=1)


def _symbol_map_errors(mass: np.ndarray, t_word: np.ndarray, tie_u: np.ndarray,
                       lexicographic: bool) -> int:
    """Count coordinates whose posterior-argmax symbol differs from t_word.

    mass: trials x n x q posterior symbol masses; ties resolved per
    tie_u (trials x n) when not lexicographic.
    """
    best = mass.max(axis=2)
    tol = best * 1e-12
    mask = mass >= (best - tol)[:, :, None]
    if lexicographic:
        chosen = np.argmax(mask, axis=2)
    else:
        counts = mask.sum(axis=2)
        r = np.minimum((tie_u * counts).astype(np.int64), counts - 1)
        csum = np.cumsum(mask, axis=2)
        chosen = np.argmax(csum > r[:, :, None], axis=2)
    return int(np.count_nonzero(chosen != t_word[None, :]))


def _posterior_mass(weights: np.ndarray, words: np.ndarray, q: int) -> np.ndarray:
    """trials x n x q symbol masses from trials x M codeword weights."""
    trials, n = weights.shape[0], words.shape[1]
    mass = np.empty((trials, n, q), dtype=np.float64)
    for i in range(n):
        col = words[:, i]
        for a in range(q):
            mass[:, i, a] = weights @ (col == a).astype(np.float64)
    return mass


def _run_qsc_chunk(spec: SimulationSpec, words: np.ndarray, t_word: np.ndarray,
                   t_index: int, start: int, stop: int,
                   lexicographic: bool) -> np.ndarray:
    q, p = spec.channel.q, spec.channel.p
    n = words.shape[1]
    u = _trial_uniforms(spec.seed, start, stop, 2 * n + 1)
    noise_u = u[:, :n]
    flip = noise_u < p
    if p > 0.0:
        offset = 1 + np.minimum(q - 2, (noise_u * (q - 1) / p).astype(np.int64))
    else:
        offset = np.zeros_like(flip, dtype=np.int64)
    z = (t_word[None, :] + np.where(flip, offset, 0)) % q

    dists = (z[:, None, :] != words[None, :, :]).sum(axis=2)
    dmin = dists.min(axis=1)
    chosen = _chosen_from_ties(dists, dmin, u[:, n], lexicographic)
    block_errors = int(np.count_nonzero(chosen != t_index))

    if p == 0.0:
        x = 0.0
    elif p == 1.0 - 1.0 / q:
        x = 1.0
    else:
        x = p / ((q - 1.0) * (1.0 - p))
    weights = x ** (dists - dmin[:, None]) if x > 0.0 else \
        (dists == dmin[:, None]).astype(np.float64)
    mass = _posterior_mass(weights, words, q)
    bit_errors = _symbol_map_errors(mass, t_word, u[:, n + 1:], lexicographic)
    return np.array([block_errors, bit_errors, 0], dtype=np.int64)


def _run_bawgn_chunk(spec: SimulationSpec, words: np.ndarray, t_word: np.ndarray,
                     t_index: int, start: int, stop: int,
                     lexicographic: bool) -> np.ndarray:
    sigma = math.sqrt(spec.channel.sigma2)
    n = words.shape[1]
    u = _trial_uniforms(spec.seed, start, stop, 2 * n + 1)
    noise_u = u[:, :n]
    # random() is [0, 1); an exact 0 would map to -inf
    g = ndtri(np.where(noise_u > 0.0, noise_u, 2.0 ** -54))
    y = (1.0 - 2.0 * t_word)[None, :] + sigma * g

    signs = (1.0 - 2.0 * words).astype(np.float64)
    corr = y @ signs.T
    cmax = corr.max(axis=1)
    chosen = _chosen_from_ties(-corr, -cmax, u[:, n], lexicographic)
    block_errors = int(np.count_nonzero(chosen != t_index))

    weights = np.exp((corr - cmax[:, None]) / (sigma * sigma))
    mass = _posterior_mass(weights, words, 2)
    bit_errors = _symbol_map_errors(mass, t_word, u[:, n + 1:], lexicographic)
    return np.array([block_errors, bit_errors, 0], dtype=np.int64)


def _run_qec_chunk(spec: SimulationSpec, words: np.ndarray, t_word: np.ndarray,
                   t_index: int, start: int, stop: int,
                   lexicographic: bool) -> np.ndarray:
    lam = spec.channel.lam
    q = spec.channel.q
    n = words.shape[1]
    u = _trial_uniforms(spec.seed, start, stop, 2 * n + 1)
    erased = u[:, :n] < lam

    neq = words != t_word[None, :]
    # codeword consistent with the received word iff it matches t on every
    # revealed coordinate
    mismatch = np.einsum("tj,cj->tc", (~erased).astype(np.int64),
                         neq.astype(np.int64))
    consistent = mismatch == 0
    f = consistent.sum(axis=1)
    ambiguous = int(np.count_nonzero(f > 1))

    # uniform pick among the f consistent codewords (the erasure contract);
    # position of the transmitted word inside that list
    pos_t = consistent[:, :t_index].sum(axis=1) if t_index else \
        np.zeros(len(f), dtype=np.int64)
    r = np.minimum((u[:, n] * f).astype(np.int64), f - 1)
    block_errors = int(np.count_nonzero(r != pos_t))

    # a coordinate is undetermined iff some consistent codeword disagrees
    # with t there; the posterior is then uniform over all q symbols
    undet = (consistent.astype(np.int64) @ neq.astype(np.int64)) > 0
    v = (u[:, n + 1:] * q).astype(np.int64)
    bit_errors = int(np.count_nonzero(undet & (v != 0)))
    return np.array([block_errors, bit_errors, ambiguous], dtype=np.int64)


def simulate(spec: SimulationSpec, tie_break: str = "lexicographic") -> SimulationResult:
    """Monte Carlo MAP block and per-symbol error estimates.

    Deterministic given spec.seed, independent of worker count (set
    BOUNDS_THREADS to cap threads). The qEC result carries an extra
    ambiguity estimate: the rate of trials whose erasure pattern leaves
    more than one consistent codeword.
    """
    if tie_break not in ("lexicographic", "uniform"):
        raise DomainError(f"unknown tie_break {tie_break!r}")
    lexicographic = tie_break == "lexicographic"
    code = spec.code
    words = code.codewords
    n = code.n
    t_word = np.zeros(n, dtype=np.int16) if spec.transmitted is None else \
        np.asarray(spec.transmitted, dtype=np.int16)
    matches = np.nonzero((words == t_word[None, :]).all(axis=1))[0]
    t_index = int(matches[0])

    if isinstance(spec.channel, QSC):
        run = _run_qsc_chunk
    elif isinstance(spec.channel, BAWGN):
        run = _run_bawgn_chunk
    elif isinstance(spec.channel, QEC):
        run = _run_qec_chunk
        lexicographic = False  # erasure contract: uniform tie-break
    else:
        raise DomainError(f"unsupported channel {spec.channel!r}")

    chunk = _chunk_size(n, len(words))
    ranges = [(s, min(s + chunk, spec.trials))
              for s in range(0, spec.trials, chunk)]

    def job(rng):
        return run(spec, words, t_word, t_index, rng[0], rng[1], lexicographic)

    workers = _worker_count()
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(job, ranges))
    else:
        parts = [job(r) for r in ranges]
    totals = np.sum(parts, axis=0)

    block = ErrorEstimate.from_counts(int(totals[0]), spec.trials)
    bit = ErrorEstimate.from_counts(int(totals[1]), spec.trials * n)
    ambiguity = ErrorEstimate.from_counts(int(totals[2]), spec.trials) \
        if isinstance(spec.channel, QEC) else None
    return SimulationResult(block=block, bit=bit, ambiguity=ambiguity)


def sweep(code: LinearCode, channels: Sequence[Channel], trials: int, seed: int,
          xs: Optional[Sequence[float]] = None, name: str = "sweep",
          tie_break: str = "lexicographic") -> Curve:
    """One simulate() per grid point with per-point seeds splitmix(seed, i).

    xs defaults to each channel's own parameter (p, lambda, or sigma2) and
    must be strictly increasing.
    """
    if len(channels) == 0:
        raise DomainError("sweep: empty channel grid")
    if xs is None:
        xs = [ch.p if isinstance(ch, QSC) else
              ch.lam if isinstance(ch, QEC) else ch.sigma2
              for ch in channels]
    if len(xs) != len(channels):
        raise DomainError("sweep: xs and channels length mismatch")
    cols = {lab: [] for lab in
            ("block", "block_lo", "block_hi", "bit", "bit_lo", "bit_hi")}
    for i, ch in enumerate(channels):
        spec = SimulationSpec(code=code, channel=ch, trials=trials,
                              seed=splitmix(seed, i))
        res = simulate(spec, tie_break=tie_break)
        cols["block"].append(res.block.p_hat)
        cols["block_lo"].append(res.block.ci95[0])
        cols["block_hi"].append(res.block.ci95[1])
        cols["bit"].append(res.bit.p_hat)
        cols["bit_lo"].append(res.bit.ci95[0])
        cols["bit_hi"].append(res.bit.ci95[1])
    return Curve(name=name, x_label="x", x=tuple(float(v) for v in xs),
                 series=tuple((lab, tuple(vals)) for lab, vals in cols.items()))
