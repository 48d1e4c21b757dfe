"""Symplectic weights and minimum symplectic distance.

Codewords are handled bit-packed: each row becomes a ``(2, W)`` block of
uint64 words holding the first half (X) and second half (Z), so the
symplectic weight is ``popcount(X | Z)``.

Three routes are provided:

* :func:`min_distance_exact` enumerates the whole code (meet-in-the-middle
  over two tables of partial sums);
* :func:`info_set_search` draws random permutations of coordinate *pairs*,
  reduces to systematic form and enumerates low-weight messages; it yields an
  upper bound with a witness;
* :func:`weight_distribution` in ``enumerate_to_w`` mode enumerates the
  symplectic dual instead and applies the MacWilliams transform, which gives
  exact counts when 2n - k is small even though k is not.
"""

from __future__ import annotations

import concurrent.futures
import json
import math
from dataclasses import dataclass, field, replace
from typing import Literal, Sequence

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

from qc2qecc.f2linalg import BitMatrix, in_rowspace, nullspace, row_reduce
from qc2qecc.qc2code import TwoGenQC, dual_basis

RNG_ALGORITHM = "philox4x64-10/key=seed/counter=trial"
DEFAULT_DIM_LIMIT = 26
DEFAULT_DUAL_LIMIT = 32
_LO_BITS = 16
_BLOCK_ELEMS = 1 << 20

Method = Literal["brute_force", "info_set_search"]


class DistanceLimitError(ValueError):
    """Requested enumeration is too large for the chosen route."""


def symplectic_weight(u: np.ndarray, n: int) -> int:
    u = np.asarray(u, dtype=np.uint8)
    if u.shape != (2 * n,):
        raise ValueError(f"expected length {2 * n}, got {u.shape}")
    return int(np.count_nonzero(u[:n] | u[n:]))


def hamming_weight(u: np.ndarray) -> int:
    return int(np.count_nonzero(u))


def bits_to_str(u: np.ndarray) -> str:
    return "".join("1" if b else "0" for b in np.asarray(u).tolist())


def str_to_bits(s: str) -> np.ndarray:
    return np.frombuffer(s.encode("ascii"), dtype=np.uint8) - ord("0")


@dataclass
class DistanceReport:
    d_upper: int
    witness: np.ndarray
    certified: bool
    method: Method
    trials: int
    seed: int | None = None
    depth: int | None = None
    rng: str | None = None
    certificate: str | None = None

    def to_dict(self) -> dict:
        return {
            "d_upper": self.d_upper,
            "witness": bits_to_str(self.witness),
            "certified": self.certified,
            "method": self.method,
            "trials": self.trials,
            "seed": self.seed,
            "depth": self.depth,
            "rng": self.rng,
            "certificate": self.certificate,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> DistanceReport:
        data = dict(data)
        data["witness"] = str_to_bits(data["witness"])
        return cls(**data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()


@dataclass
class PartialWeightDistribution:
    n: int
    counts: dict[int, int]
    w_max: int
    complete: bool
    method: str = field(default="exact_small")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "counts": {str(w): c for w, c in sorted(self.counts.items())},
            "w_max": self.w_max,
            "complete": self.complete,
            "method": self.method,
        }


# ---------------------------------------------------------------------------
# packing helpers


def _generator_rows(code: TwoGenQC | BitMatrix) -> tuple[np.ndarray, int]:
    if isinstance(code, TwoGenQC):
        return code.generator_matrix.entries, code.n
    if code.cols % 2:
        raise ValueError("generator matrix must have an even number of columns")
    return code.entries, code.cols // 2


def pack_rows(rows: np.ndarray, n: int) -> np.ndarray:
    """(r, 2n) bits -> (r, 2, W) uint64 words, X half then Z half."""
    rows = np.asarray(rows, dtype=np.uint8)
    r = rows.shape[0]
    words = max(1, (n + 63) // 64)
    halves = np.zeros((r, 2, words * 64), dtype=np.uint8)
    halves[:, 0, :n] = rows[:, :n]
    halves[:, 1, :n] = rows[:, n:]
    packed = np.packbits(halves, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").reshape(r, 2, words)


def unpack_rows(packed: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`pack_rows`."""
    packed = np.ascontiguousarray(packed, dtype="<u8")
    lead = packed.shape[:-2]
    bits = np.unpackbits(packed.view(np.uint8), axis=-1, bitorder="little")
    bits = bits.reshape(*lead, 2, -1)[..., :n]
    return np.concatenate([bits[..., 0, :], bits[..., 1, :]], axis=-1)


def packed_weights(block: np.ndarray) -> np.ndarray:
    return np.bitwise_count(block[..., 0, :] | block[..., 1, :]).sum(axis=-1, dtype=np.int64)


def _span_table(P: np.ndarray) -> np.ndarray:
    """All 2^r combinations; bit i of the index selects row i."""
    table = np.zeros((1,) + P.shape[1:], dtype=P.dtype)
    for row in P:
        table = np.concatenate([table, table ^ row])
    return table


def _lex_smallest(words: np.ndarray) -> np.ndarray:
    """Lexicographically smallest bit vector among the rows of ``words``."""
    order = np.lexsort(words.T[::-1])
    return words[order[0]]


def _popcount64(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


def _hist_kernel(low, high, n):
    hist = np.zeros(n + 1, np.int64)
    words = low.shape[2]
    for h in range(high.shape[0]):
        for l in range(low.shape[0]):
            w = 0
            for j in range(words):
                w += _popcount64((low[l, 0, j] ^ high[h, 0, j]) | (low[l, 1, j] ^ high[h, 1, j]))
            hist[w] += 1
    return hist


if numba is not None:
    _popcount64 = numba.njit(cache=True)(_popcount64)
    _hist_kernel = numba.njit(cache=True)(_hist_kernel)


def span_histogram(basis: np.ndarray, n: int, use_numba: bool = True) -> np.ndarray:
    """Symplectic weight histogram of the span of independent rows (zero word included)."""
    if not use_numba or numba is None:
        return _enumerate_span(basis, n)[0]
    P = pack_rows(basis, n)
    lo = min(P.shape[0], _LO_BITS)
    return _hist_kernel(_span_table(P[:lo]), _span_table(P[lo:]), n)


def _enumerate_span(
    basis: np.ndarray, n: int, track_min: bool = False
) -> tuple[np.ndarray, int | None, np.ndarray | None]:
    """Histogram of symplectic weights over the span of independent rows.

    Returns (hist, min nonzero weight, lexicographically smallest witness).
    """
    P = pack_rows(basis, n)
    r = P.shape[0]
    lo = min(r, _LO_BITS)
    low = _span_table(P[:lo])
    high = _span_table(P[lo:])
    hist = np.zeros(n + 1, dtype=np.int64)
    batch = max(1, _BLOCK_ELEMS // len(low))
    best = None
    cand: list[np.ndarray] = []
    for start in range(0, len(high), batch):
        block = low[None] ^ high[start : start + batch, None]
        w = packed_weights(block)
        hist += np.bincount(w.ravel(), minlength=n + 1)
        if not track_min:
            continue
        if start == 0:
            w[0, 0] = n + 1
        m = int(w.min())
        if best is None or m < best:
            best, cand = m, []
        if m == best and m <= n:
            hi, li = np.nonzero(w == m)
            cand.append(unpack_rows(block[hi, li], n))
    if not track_min or best is None or best > n:
        return hist, None, None
    return hist, best, _lex_smallest(np.vstack(cand))


# ---------------------------------------------------------------------------
# exact routes


def min_distance_exact(
    code: TwoGenQC | BitMatrix, dim_limit: int = DEFAULT_DIM_LIMIT
) -> DistanceReport:
    rows, n = _generator_rows(code)
    basis = row_reduce(BitMatrix(rows))[0].entries
    k = basis.shape[0]
    if k > dim_limit:
        raise DistanceLimitError(f"dimension {k} exceeds exact limit {dim_limit}")
    if k == 0:
        raise DistanceLimitError("zero-dimensional code has no nonzero codeword")
    _, d, witness = _enumerate_span(basis, n, track_min=True)
    return DistanceReport(
        d_upper=int(d), witness=witness, certified=True, method="brute_force", trials=(1 << k) - 1
    )


def _krawtchouk_row(n: int, w: int) -> list[int]:
    """K_w(j) for the 4-ary Hamming scheme, j = 0..n."""
    out = []
    for j in range(n + 1):
        total = 0
        for s in range(0, min(j, w) + 1):
            if w - s > n - j:
                continue
            total += (-1) ** s * 3 ** (w - s) * math.comb(j, s) * math.comb(n - j, w - s)
        out.append(total)
    return out


def macwilliams_transform(dual_hist: Sequence[int], n: int, w_max: int) -> dict[int, int]:
    """Symplectic weight counts of C from those of its symplectic dual, w <= w_max."""
    size = sum(int(b) for b in dual_hist)
    out = {}
    for w in range(w_max + 1):
        K = _krawtchouk_row(n, w)
        total = sum(int(b) * K[j] for j, b in enumerate(dual_hist) if b)
        if total % size:
            raise ArithmeticError(f"MacWilliams transform not integral at weight {w}")
        out[w] = total // size
    return out


def weight_distribution(
    code: TwoGenQC | BitMatrix,
    w_max: int,
    mode: Literal["exact_small", "enumerate_to_w"] = "exact_small",
    dim_limit: int = DEFAULT_DIM_LIMIT,
    dual_limit: int = DEFAULT_DUAL_LIMIT,
) -> PartialWeightDistribution:
    """Exact codeword counts per symplectic weight, for weights 0..w_max."""
    rows, n = _generator_rows(code)
    w_max = min(w_max, n)
    if mode == "exact_small":
        basis = row_reduce(BitMatrix(rows))[0].entries
        if basis.shape[0] > dim_limit:
            raise DistanceLimitError(f"dimension {basis.shape[0]} exceeds limit {dim_limit}")
        if basis.shape[0] == 0:
            return PartialWeightDistribution(n, {0: 1}, w_max, True, mode)
        hist = span_histogram(basis, n)
        counts = {w: int(hist[w]) for w in range(w_max + 1) if hist[w]}
        return PartialWeightDistribution(n, counts, w_max, True, mode)
    if mode == "enumerate_to_w":
        if isinstance(code, TwoGenQC):
            dual = dual_basis(code).entries
        else:
            swapped = np.hstack([rows[:, n:], rows[:, :n]])
            dual = nullspace(BitMatrix(swapped)).entries
        if dual.shape[0] > dual_limit:
            raise DistanceLimitError(f"dual dimension {dual.shape[0]} exceeds limit {dual_limit}")
        if dual.shape[0] == 0:
            hist = np.zeros(n + 1, dtype=np.int64)
            hist[0] = 1
        else:
            hist = span_histogram(dual, n)
        full = macwilliams_transform(hist.tolist(), n, w_max)
        counts = {w: c for w, c in full.items() if c}
        return PartialWeightDistribution(n, counts, w_max, True, mode)
    raise ValueError(f"unknown mode {mode!r}")


def certify(
    code: TwoGenQC, report: DistanceReport, dual_limit: int = DEFAULT_DUAL_LIMIT
) -> DistanceReport:
    """Upgrade a search report to certified when the dual enumerator proves it.

    The report is returned unchanged if the dual is too large or a lighter
    codeword exists.
    """
    if report.certified:
        return report
    try:
        wd = weight_distribution(code, report.d_upper, "enumerate_to_w", dual_limit=dual_limit)
    except DistanceLimitError:
        return report
    if any(wd.counts.get(w, 0) for w in range(1, report.d_upper)):
        return report
    return replace(report, certified=True, certificate="dual_weight_enumerator")


# ---------------------------------------------------------------------------
# information-set search


def _trial_generator(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, 0, 0, trial]))


def _systematic_rows(G: np.ndarray, n: int, perm: np.ndarray) -> np.ndarray:
    """RREF with pivots chosen in pair order ``perm``, returned in original coordinates."""
    order = np.empty(2 * n, dtype=np.intp)
    order[0::2] = perm
    order[1::2] = perm + n
    R = row_reduce(BitMatrix(G[:, order]))[0].entries
    return R[:, np.argsort(order)]


def _search_one(G: np.ndarray, n: int, seed: int, trial: int, depth: int) -> tuple[int, np.ndarray]:
    perm = _trial_generator(seed, trial).permutation(n)
    rows = _systematic_rows(G, n, perm)
    P = pack_rows(rows, n)
    k = P.shape[0]
    best = n + 1
    cand: list[np.ndarray] = []

    def consider(block: np.ndarray) -> None:
        nonlocal best, cand
        if block.shape[0] == 0:
            return
        w = packed_weights(block)
        m = int(w.min())
        if m < best:
            best, cand = m, []
        if m == best:
            cand.append(unpack_rows(block[w == m], n))

    # level holds all combinations of a fixed size, sorted by smallest row index
    level_first = np.arange(k)
    level = P
    consider(level)
    for size in range(2, min(depth, k) + 1):
        keep = size < depth
        next_first, next_level = [], []
        for i in range(k):
            start = np.searchsorted(level_first, i, side="right")
            block = P[i] ^ level[start:]
            consider(block)
            if keep:
                next_first.append(np.full(block.shape[0], i))
                next_level.append(block)
        if keep:
            level_first = np.concatenate(next_first)
            level = np.concatenate(next_level)
    return best, _lex_smallest(np.vstack(cand))


def _search_chunk(args: tuple) -> list[tuple[int, np.ndarray]]:
    G, n, seed, trials, depth = args
    return [_search_one(G, n, seed, t, depth) for t in trials]


def _key(weight: int, witness: np.ndarray) -> tuple:
    return (weight, tuple(witness.tolist()))


def info_set_search(
    code: TwoGenQC | BitMatrix,
    target: int | None = None,
    budget: int = 1000,
    seed: int = 0,
    depth: int = 3,
    workers: int = 1,
    chunk: int = 8,
) -> DistanceReport:
    """Randomized low-weight codeword search; stops early once ``target`` is reached.

    Trial ``t`` draws its pair permutation from Philox keyed by ``seed`` with
    counter ``t``, so results do not depend on ``workers``.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    G, n = _generator_rows(code)
    if G.shape[0] == 0:
        raise DistanceLimitError("zero-dimensional code has no nonzero codeword")
    best: tuple | None = None
    best_witness = None
    used = 0

    def absorb(results: list[tuple[int, np.ndarray]]) -> bool:
        nonlocal best, best_witness, used
        for weight, witness in results:
            used += 1
            key = _key(weight, witness)
            if best is None or key < best:
                best, best_witness = key, witness
            if target is not None and best[0] <= target:
                return True
        return False

    if workers <= 1:
        for t in range(budget):
            if absorb([_search_one(G, n, seed, t, depth)]):
                break
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            t0 = 0
            while t0 < budget:
                spans = [
                    range(s, min(s + chunk, budget))
                    for s in range(t0, min(t0 + workers * chunk, budget), chunk)
                ]
                jobs = [(G, n, seed, span, depth) for span in spans]
                done = False
                for results in pool.map(_search_chunk, jobs):
                    if absorb(results):
                        done = True
                        break
                if done:
                    break
                t0 = spans[-1].stop
    return DistanceReport(
        d_upper=best[0],
        witness=best_witness,
        certified=False,
        method="info_set_search",
        trials=used,
        seed=seed,
        depth=depth,
        rng=RNG_ALGORITHM,
    )


def verify_witness(code: TwoGenQC | BitMatrix, report: DistanceReport) -> bool:
    """The witness is a nonzero codeword with the claimed symplectic weight."""
    rows, n = _generator_rows(code)
    w = np.asarray(report.witness, dtype=np.uint8)
    if w.shape != (2 * n,) or not w.any():
        return False
    if symplectic_weight(w, n) != report.d_upper:
        return False
    return in_rowspace(BitMatrix(rows), w)
