"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the library's arithmetic; vectors are plain Python
ints or lists so that disagreements point at the library, not the oracle.
"""

from __future__ import annotations

import numpy as np


def cyclic_mul(a: list[int], b: list[int], n: int) -> list[int]:
    """Schoolbook product of coefficient lists modulo x^n - 1 over F2."""
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % n] ^= 1
    return out


def negate_index(a: list[int], n: int) -> list[int]:
    return [a[(-i) % n] for i in range(n)]


def euclid(a: list[int], b: list[int]) -> int:
    return sum(x & y for x, y in zip(a, b)) & 1


def coeffs(bits: int, n: int) -> list[int]:
    return [(bits >> i) & 1 for i in range(n)]


def row_to_int(row) -> int:
    return sum(1 << j for j, b in enumerate(row) if b)


def gf2_rank(rows) -> int:
    """Rank of integer-encoded rows by leading-bit elimination."""
    pivots: dict[int, int] = {}
    for r in rows:
        r = row_to_int(r) if not isinstance(r, int) else r
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)


def independent_rows(rows) -> list[int]:
    pivots: dict[int, int] = {}
    kept = []
    for row in rows:
        r0 = r = row_to_int(row)
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                kept.append(r0)
                break
            r ^= pivots[top]
    return kept


def span_weight_histogram(rows, n: int) -> list[int]:
    """Symplectic weights of every codeword, X in bits 0..n-1 and Z in bits n..2n-1.

    Splits the basis in two and combines halves with numpy int64 arithmetic;
    needs 2n <= 62.
    """
    basis = independent_rows(rows)
    half = len(basis) // 2

    def span(vs):
        s = np.zeros(1, dtype=np.int64)
        for v in vs:
            s = np.concatenate([s, s ^ np.int64(v)])
        return s

    low, high = span(basis[:half]), span(basis[half:])
    mask = np.int64((1 << n) - 1)
    hist = np.zeros(n + 1, dtype=np.int64)
    for h in high:
        words = low ^ h
        w = np.bitwise_count((words & mask) | (words >> np.int64(n)))
        hist += np.bincount(w, minlength=n + 1)
    return [int(x) for x in hist]


def brute_min_distance(rows, n: int) -> int:
    hist = span_weight_histogram(rows, n)
    return next(w for w in range(1, n + 1) if hist[w])


def symplectic_form(u: int, w: int, n: int) -> int:
    mask = (1 << n) - 1
    return (((u & mask) & (w >> n)).bit_count() + ((u >> n) & (w & mask)).bit_count()) & 1


def dual_containing_brute(rows, n: int) -> bool:
    """C^{perp_s} <= C, by computing C^{perp_s} as a null space from scratch."""
    basis = independent_rows(rows)
    # symplectic dual = kernel of the form against every basis row
    # solve by Gaussian elimination on the swapped rows
    swapped = [((b >> n) | ((b & ((1 << n) - 1)) << n)) for b in basis]
    m = 2 * n
    mat = [list(coeffs(s, m)) for s in swapped]
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                mat[i] = [x ^ y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(m) if c not in piv_cols]
    dual = []
    for f in free:
        vec = [0] * m
        vec[f] = 1
        for i, pc in enumerate(piv_cols):
            vec[pc] = mat[i][f]
        dual.append(row_to_int(vec))
    k = len(basis)
    return all(gf2_rank(basis + [d]) == k for d in dual)
