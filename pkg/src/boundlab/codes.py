"""Explicit linear codes over prime fields.

Everything is enumeration-backed and exact: weight distributions come from
listing all q^k codewords, erasure-channel statistics from a sum-over-subsets
transform on codeword supports (2^n patterns), and list sizes from exhausting
all q^n centers. Budgets guard each of these.

Generator matrix text format (external interface): a header line "q n k",
then k lines of n space-separated digits in [0, q). Rank-deficient matrices
are rejected with a diagnostic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetExceededError, DomainError

_ENUM_BUDGET = 2 ** 24       # codeword enumeration: q^k
_PATTERN_BUDGET = 2 ** 24    # erasure patterns: 2^n
_CENTER_BUDGET = 2 ** 24     # list-size centers: q^n


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for f in range(2, math.isqrt(q) + 1):
        if q % f == 0:
            return False
    return True


def _rref_mod(matrix: np.ndarray, q: int):
    """Row-reduce over Z_q (q prime). Returns (rref rows, pivot columns)."""
    m = (np.array(matrix, dtype=np.int64) % q).copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, q)) % q
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % q
        pivots.append(c)
        r += 1
    return m[:len(pivots)], pivots


def _rank_mod(matrix: np.ndarray, q: int) -> int:
    if matrix.shape[0] == 0:
        return 0
    return len(_rref_mod(matrix, q)[1])


def _null_space_mod(matrix: np.ndarray, q: int) -> np.ndarray:
    """Basis of {v : matrix @ v = 0 mod q}, shape (n - rank, n)."""
    n = matrix.shape[1]
    rref, pivots = _rref_mod(matrix, q) if matrix.shape[0] else (matrix, [])
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-rref[r, f]) % q
    return basis


def _all_vectors(q: int, k: int) -> np.ndarray:
    """All q^k vectors of length k, lexicographic order, dtype int16."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int16)
    out = np.zeros((q ** k, k), dtype=np.int16)
    idx = np.arange(q ** k)
    for j in range(k - 1, -1, -1):
        out[:, j] = idx % q
        idx //= q
    return out


class LinearCode:
    """A linear [n, k] code over the prime field Z_q, given by a generator.

    The generator must have full row rank; k = 0 (the zero code {0^n}) is
    allowed with an empty generator. Instances are immutable by convention;
    enumerations are cached.
    """

    def __init__(self, q: int, generator) -> None:
        if not (isinstance(q, int) and _is_prime(q)):
            raise DomainError(f"field size must be prime, got {q!r}")
        gen = np.array(generator, dtype=np.int64)
        if gen.ndim != 2:
            raise DomainError("generator must be a 2-D matrix")
        if gen.shape[1] < 1:
            raise DomainError("block length must be at least 1")
        if gen.size and (gen.min() < 0 or gen.max() >= q):
            raise DomainError(f"generator entries must lie in [0, {q})")
        if _rank_mod(gen, q) != gen.shape[0]:
            raise DomainError(
                f"generator has rank {_rank_mod(gen, q)} < k = {gen.shape[0]}"
                " (rows are linearly dependent)")
        gen.setflags(write=False)
        self.q = q
        self.generator = gen

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def size(self) -> int:
        return self.q ** self.k

    @property
    def rate(self) -> float:
        return self.k / self.n

    @cached_property
    def codewords(self) -> np.ndarray:
        """All q^k codewords, shape (q^k, n), dtype int16."""
        if self.size > _ENUM_BUDGET:
            raise BudgetExceededError(
                f"codeword enumeration: q^k = {self.size} exceeds {_ENUM_BUDGET}")
        msgs = _all_vectors(self.q, self.k)
        words = (msgs.astype(np.int64) @ self.generator) % self.q
        words = words.astype(np.int16)
        words.setflags(write=False)
        return words

    @cached_property
    def min_distance(self) -> Optional[int]:
        """d(C): smallest nonzero codeword weight; None for the zero code."""
        if self.k == 0:
            return None
        w = np.count_nonzero(self.codewords, axis=1)
        return int(w[w > 0].min())

    @property
    def relative_distance(self) -> Optional[float]:
        d = self.min_distance
        return None if d is None else d / self.n

    def contains(self, word: Sequence[int]) -> bool:
        arr = np.asarray(word, dtype=np.int64) % self.q
        stacked = np.vstack([self.generator, arr]) if self.k else arr[None, :]
        return _rank_mod(stacked, self.q) == self.k

    def __repr__(self) -> str:
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k})"


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple
    reference_point: Optional[tuple] = None

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def min_positive_weight(self) -> Optional[int]:
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None


def weight_distribution(code: LinearCode,
                        x: Optional[Sequence[int]] = None) -> WeightDistribution:
    """Exact (A_0(x), ..., A_n(x)) by full enumeration; x defaults to 0^n."""
    words = code.codewords
    if x is None:
        weights = np.count_nonzero(words, axis=1)
        ref = None
    else:
        arr = np.asarray(x, dtype=np.int16)
        if arr.shape != (code.n,):
            raise DomainError(f"reference point must have length {code.n}")
        weights = np.count_nonzero(words != arr[None, :], axis=1)
        ref = tuple(int(v) for v in arr)
    counts = np.bincount(weights, minlength=code.n + 1)
    return WeightDistribution(tuple(int(c) for c in counts), ref)


def dual(code: LinearCode) -> LinearCode:
    """The dual code C^perp = null space of the generator, dim n - k."""
    basis = _null_space_mod(code.generator, code.q)
    return LinearCode(code.q, basis.reshape(len(basis), code.n))


# ---------------------------------------------------------------------------
# exact erasure-channel statistics
#
# For a linear code and transmitted word 0^n, the set of codewords consistent
# with erasure pattern E is the subcode {c : supp(c) subseteq E}. Its size
# f(E) = q^(k - rank(columns outside E)) for every E at once comes from a
# sum-over-subsets transform on codeword support masks, and the union of the
# supports (which symbols stay undetermined) from the same transform with OR.

def _check_pattern_budget(code: LinearCode) -> None:
    if 2 ** code.n > _PATTERN_BUDGET:
        raise BudgetExceededError(
            f"erasure patterns: 2^n = {2 ** code.n} exceeds {_PATTERN_BUDGET}")


def _support_masks(code: LinearCode) -> np.ndarray:
    words = code.codewords
    bits = (words != 0).astype(np.int64)
    return bits @ (1 << np.arange(code.n, dtype=np.int64))


def _subset_sum(values: np.ndarray, n: int) -> np.ndarray:
    out = values.reshape([2] * n) if n else values.copy()
    for axis in range(n):
        lo = [slice(None)] * n
        hi = [slice(None)] * n
        lo[axis], hi[axis] = 0, 1
        out[tuple(hi)] += out[tuple(lo)]
    return out.reshape(-1)

def _subset_or(values: np.ndarray, n: int) -> np.ndarray:
    out = values.reshape([2] * n) if n else values.copy()
    for axis in range(n):
        lo = [slice(None)] * n
        hi = [slice(None)] * n
        lo[axis], hi[axis] = 0, 1
        out[tuple(hi)] |= out[tuple(lo)]
    return out.reshape(-1)


def consistent_counts(code: LinearCode) -> np.ndarray:
    """f[E] = |{c in C : supp(c) subseteq E}| for every erasure mask E."""
    _check_pattern_budget(code)
    f = np.zeros(2 ** code.n, dtype=np.int64)
    np.add.at(f, _support_masks(code), 1)
    return _subset_sum(f, code.n)


def _undetermined_masks(code: LinearCode) -> np.ndarray:
    """OR of supports of the codewords consistent with each pattern E."""
    _check_pattern_budget(code)
    u = np.zeros(2 ** code.n, dtype=np.int64)
    masks = _support_masks(code)
    np.bitwise_or.at(u, masks, masks)
    return _subset_or(u, code.n)


def _pattern_probs(n: int, lam: float) -> np.ndarray:
    pc = np.bitwise_count(np.arange(2 ** n, dtype=np.uint64)).astype(np.int64)
    return np.power(lam, pc) * np.power(1.0 - lam, n - pc)


def erasure_entropy_exact(code: LinearCode, lam: float) -> float:
    """H(X|Y) in bits for a uniform codeword X sent through qEC_lam.

    Equals sum_E Pr[E] (k - rank(G columns outside E)) log2 q, computed as
    sum_E Pr[E] log2 f(E).
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lam must be in [0,1], got {lam}")
    f = consistent_counts(code)
    return float(np.dot(_pattern_probs(code.n, lam), np.log2(f)))


def erasure_error_exact(code: LinearCode, lam: float):
    """(ambiguity_PB, map_PB, Pb) for qEC_lam, all exact.

    ambiguity_PB = Pr[|S(E)| > 1]; map_PB = E[1 - 1/|S(E)|] (uniform
    tie-break over the consistent coset); Pb averages, over coordinates, the
    probability the symbol is undetermined times (q-1)/q (an undetermined
    coordinate of the consistent subcode is uniform over the field).
    """
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"lam must be in [0,1], got {lam}")
    f = consistent_counts(code)
    probs = _pattern_probs(code.n, lam)
    ambiguity = float(probs[f > 1].sum())
    map_pb = float(np.dot(probs, 1.0 - 1.0 / f))
    undet = _undetermined_masks(code)
    per_symbol = 0.0
    for i in range(code.n):
        per_symbol += float(np.dot(probs, (undet >> i) & 1))
    pb = (code.q - 1) / code.q * per_symbol / code.n
    return ambiguity, map_pb, pb


# ---------------------------------------------------------------------------
# list sizes by exhaustion

@dataclass(frozen=True)
class ListDecodingCertificate:
    t: float
    L: int
    witness: tuple


def list_size_max(code: LinearCode, t: float) -> ListDecodingCertificate:
    """max over all centers y in Sigma^n of |C cap B(y, floor(t))|, exact."""
    if t < 0:
        raise DomainError(f"radius must be >= 0, got {t}")
    total = code.q ** code.n
    if total > _CENTER_BUDGET:
        raise BudgetExceededError(
            f"center enumeration: q^n = {total} exceeds {_CENTER_BUDGET}")
    T = min(int(math.floor(t)), code.n)
    words = code.codewords
    best_count, best_center = 0, None
    chunk = max(1, (1 << 22) // max(1, len(words)))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        centers = np.empty((len(idx), code.n), dtype=np.int16)
        rem = idx.copy()
        for j in range(code.n - 1, -1, -1):
            centers[:, j] = rem % code.q
            rem //= code.q
        dists = (centers[:, None, :] != words[None, :, :]).sum(axis=2)
        counts = (dists <= T).sum(axis=1)
        local = int(counts.argmax())
        if int(counts[local]) > best_count:
            best_count = int(counts[local])
            best_center = tuple(int(v) for v in centers[local])
    return ListDecodingCertificate(float(T), best_count, best_center)


def erasure_list_size_max(code: LinearCode, rho: float) -> ListDecodingCertificate:
    """max consistent-coset size over revealed sets T with |T| > (1-rho) n.

    For rho = 0 the strict constraint is vacuous; the convention here reads
    the full word (min revealed size clamped to n), giving L = 1.
    """
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho must be in [0,1], got {rho}")
    _check_pattern_budget(code)
    f = consistent_counts(code)
    n = code.n
    min_revealed = min(n, int(math.floor((1.0 - rho) * n + 1e-9)) + 1)
    max_erased = n - min_revealed
    pc = np.bitwise_count(np.arange(2 ** n, dtype=np.uint64)).astype(np.int64)
    eligible = pc <= max_erased
    masked = np.where(eligible, f, 0)
    best = int(masked.argmax())
    revealed = tuple(i for i in range(n) if not (best >> i) & 1)
    return ListDecodingCertificate(rho, int(masked[best]), revealed)


# ---------------------------------------------------------------------------
# generator matrix text format

def format_generator_text(code: LinearCode) -> str:
    lines = [f"{code.q} {code.n} {code.k}"]
    for row in code.generator:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_generator_text(text: str) -> LinearCode:
    """Parse the "q n k" + k rows format; full row rank is enforced."""
    rows = [ln for ln in (s.strip() for s in text.splitlines())
            if ln and not ln.startswith("#")]
    if not rows:
        raise DomainError("empty generator matrix file")
    try:
        q, n, k = (int(v) for v in rows[0].split())
    except ValueError as exc:
        raise DomainError(f"bad header line {rows[0]!r}: {exc}") from None
    if len(rows) != k + 1:
        raise DomainError(f"expected {k} generator rows, found {len(rows) - 1}")
    mat = []
    for ln in rows[1:]:
        try:
            row = [int(v) for v in ln.split()]
        except ValueError as exc:
            raise DomainError(f"bad generator row {ln!r}: {exc}") from None
        if len(row) != n:
            raise DomainError(
                f"generator row has {len(row)} entries, expected n = {n}")
        mat.append(row)
    return LinearCode(q, np.array(mat, dtype=np.int64).reshape(k, n))


def load_code(path: str) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_generator_text(fh.read())


# ---------------------------------------------------------------------------
# test corpus

def zero_code(q: int, n: int) -> LinearCode:
    return LinearCode(q, np.zeros((0, n), dtype=np.int64))


def full_space(q: int, n: int) -> LinearCode:
    return LinearCode(q, np.eye(n, dtype=np.int64))


def repetition_code(q: int, n: int) -> LinearCode:
    return LinearCode(q, np.ones((1, n), dtype=np.int64))


def single_parity_check_code(q: int, n: int) -> LinearCode:
    gen = np.zeros((n - 1, n), dtype=np.int64)
    gen[:, :-1] = np.eye(n - 1, dtype=np.int64)
    gen[:, -1] = (q - 1)  # each row sums to 0 mod q
    return LinearCode(q, gen)


def hamming_7_4() -> LinearCode:
    gen = np.array([
        [1, 0, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 1, 0, 1],
        [0, 0, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ])
    return LinearCode(2, gen)


def extended_hamming_8_4() -> LinearCode:
    gen = np.array([
        [1, 0, 0, 0, 1, 1, 0, 1],
        [0, 1, 0, 0, 1, 0, 1, 1],
        [0, 0, 1, 0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 0],
    ])
    return LinearCode(2, gen)


def random_code(q: int, n: int, k: int, seed: int) -> LinearCode:
    """Seeded random full-rank generator (resampled until full rank)."""
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        gen = rng.integers(0, q, size=(k, n))
        if _rank_mod(gen, q) == k:
            return LinearCode(q, gen)
    raise RuntimeError("could not sample a full-rank generator")


def corpus() -> list:
    """The named verification corpus: spans d(C) from 1 to n."""
    codes = [
        zero_code(2, 6),
        zero_code(3, 4),
        full_space(2, 6),
        full_space(3, 4),
        repetition_code(2, 3),
        repetition_code(2, 7),
        repetition_code(3, 5),
        repetition_code(5, 4),
        single_parity_check_code(2, 6),
        single_parity_check_code(3, 5),
        hamming_7_4(),
        extended_hamming_8_4(),
        random_code(2, 10, 5, seed=101),
        random_code(2, 12, 4, seed=202),
        random_code(3, 8, 4, seed=303),
        random_code(3, 12, 3, seed=404),
        random_code(5, 8, 3, seed=505),
        random_code(5, 12, 2, seed=606),
    ]
    return codes
