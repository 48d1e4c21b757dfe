"""Dense linear algebra over F2 on uint8 bit grids."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qc2qecc.algebra import BinaryPolynomial


@dataclass
class BitMatrix:
    """A rows x cols matrix over F2. ``entries`` is a C-contiguous uint8 array of 0/1."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.entries)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-d grid, got shape {a.shape}")
        self.entries = np.ascontiguousarray(a & 1, dtype=np.uint8)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls(np.eye(size, dtype=np.uint8))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def copy(self) -> BitMatrix:
        return BitMatrix(self.entries.copy())

    def vstack(self, other: BitMatrix | np.ndarray) -> BitMatrix:
        other_entries = other.entries if isinstance(other, BitMatrix) else np.atleast_2d(other)
        return BitMatrix(np.vstack([self.entries, other_entries]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.entries, other.entries))


def circulant_rows(a: BinaryPolynomial, n: int, row_count: int) -> BitMatrix:
    """Rows x^i a(x) mod x^n - 1 for i = 0 .. row_count - 1."""
    if a.ambient_n != n:
        raise ValueError(f"expected ambient {n}, got {a.ambient_n}")
    if not 1 <= row_count <= n:
        raise ValueError(f"row_count must lie in [1, {n}], got {row_count}")
    first = a.vector(n)
    out = np.empty((row_count, n), dtype=np.uint8)
    for i in range(row_count):
        out[i] = np.roll(first, i)
    return BitMatrix(out)


def row_reduce(M: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    A = M.entries.copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.flatnonzero(A[r:, c])
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        ones = np.flatnonzero(A[:, c])
        ones = ones[ones != r]
        if ones.size:
            A[ones] ^= A[r]
        pivots.append(c)
        r += 1
    return BitMatrix(A[:r]), pivots


def rank(M: BitMatrix) -> int:
    return len(row_reduce(M)[1])


def in_rowspace(M: BitMatrix, v: np.ndarray) -> bool:
    v = np.asarray(v, dtype=np.uint8) & 1
    if v.shape != (M.cols,):
        raise ValueError(f"vector length {v.shape} does not match {M.cols} columns")
    R, pivots = row_reduce(M)
    residual = v.copy()
    for row, c in zip(R.entries, pivots):
        if residual[c]:
            residual ^= row
    return not residual.any()


def nullspace(M: BitMatrix) -> BitMatrix:
    """Basis (as rows) of {x : M x^T = 0}."""
    R, pivots = row_reduce(M)
    cols = M.cols
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, p in zip(R.entries, pivots):
            if row[f]:
                basis[t, p] = 1
    return BitMatrix(basis)
