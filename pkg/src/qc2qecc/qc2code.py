"""Two-generator quasi-cyclic codes of index 2 and their symplectic duals.

The code C of length 2n is spanned by the cyclic shifts of the two seeds
``(v*g1, g1)`` and ``(g2, v*g2)``. A codeword therefore reads

    ([a*v*g1 + b*g2], [a*g1 + b*v*g2])

and the first and second halves are symplectic partners (position i pairs
with position n + i).
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

import numpy as np

from qc2qecc.algebra import (
    BinaryPolynomial,
    bar,
    divides,
    divides_x_n_minus_1,
    format_compact,
    gcd_bits,
    parse_compact,
    reciprocal_dual,
)
from qc2qecc.f2linalg import BitMatrix, circulant_rows, in_rowspace, rank, row_reduce


class InvalidCodeError(ValueError):
    """The (n, g1, g2, v) tuple violates the construction's hypotheses."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class OracleInconsistencyError(RuntimeError):
    """Two independent linear-algebra checks disagreed; indicates a bug."""


@dataclass(frozen=True)
class TwoGenQC:
    n: int
    g1: BinaryPolynomial
    g2: BinaryPolynomial
    v: BinaryPolynomial
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for name in ("g1", "g2", "v"):
            p = getattr(self, name)
            if p.ambient_n != self.n:
                raise ValueError(f"{name} has ambient {p.ambient_n}, expected {self.n}")

    @classmethod
    def from_compact(cls, n: int, g1: str, g2: str, v: str, label: str = "") -> TwoGenQC:
        return cls(n, parse_compact(g1, n), parse_compact(g2, n), parse_compact(v, n), label)

    @classmethod
    def from_dict(cls, data: dict) -> TwoGenQC:
        n = int(data["n"])
        return cls.from_compact(n, data["g1"], data["g2"], data["v"], data.get("label", ""))

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "g1": format_compact(self.g1),
            "g2": format_compact(self.g2),
            "v": format_compact(self.v),
        }
        if self.label:
            d["label"] = self.label
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @property
    def top_seed(self) -> tuple[BinaryPolynomial, BinaryPolynomial]:
        return self.v * self.g1, self.g1

    @property
    def bottom_seed(self) -> tuple[BinaryPolynomial, BinaryPolynomial]:
        return self.g2, self.v * self.g2

    @functools.cached_property
    def generator_matrix(self) -> BitMatrix:
        ensure_valid(self)
        n = self.n
        blocks = []
        for (left, right), g in ((self.top_seed, self.g1), (self.bottom_seed, self.g2)):
            count = n - g.degree
            blocks.append(
                np.hstack(
                    [
                        circulant_rows(left, n, count).entries,
                        circulant_rows(right, n, count).entries,
                    ]
                )
            )
        return BitMatrix(np.vstack(blocks))


def validate(c: TwoGenQC) -> list[str]:
    """Every violated hypothesis, one message each; empty means valid."""
    n = c.n
    problems = []
    if n <= 0 or n % 2 == 0:
        problems.append(f"n = {n} must be odd and positive")
        return problems
    for name, g in (("g1", c.g1), ("g2", c.g2)):
        if not divides_x_n_minus_1(g, n):
            problems.append(f"{name} does not divide x^{n} - 1")
        elif g.degree >= n:  # pragma: no cover - excluded by ambient
            problems.append(f"{name} has degree >= n")
    if c.g1.bits and c.g2.bits and gcd_bits(c.g1.bits, c.g2.bits) != 1:
        problems.append("gcd(g1, g2) != 1")
    v_minus_1 = c.v.bits ^ 1
    if gcd_bits((1 << n) | 1, v_minus_1) != 1:
        problems.append(f"gcd(v - 1, x^{n} - 1) != 1")
    return problems


def ensure_valid(c: TwoGenQC) -> None:
    problems = validate(c)
    if problems:
        raise InvalidCodeError(problems)


def generator_matrix(c: TwoGenQC) -> BitMatrix:
    return c.generator_matrix


def dimension(c: TwoGenQC) -> int:
    ensure_valid(c)
    return 2 * c.n - c.g1.degree - c.g2.degree


def symplectic_inner(u: np.ndarray, w: np.ndarray, n: int) -> int:
    u = np.asarray(u, dtype=np.uint8)
    w = np.asarray(w, dtype=np.uint8)
    if u.shape != (2 * n,) or w.shape != (2 * n,):
        raise ValueError(f"vectors must have length {2 * n}")
    return int((np.dot(u[:n], w[n:]) + np.dot(u[n:], w[:n])) & 1)


def symplectic_gram(A: BitMatrix, B: BitMatrix, n: int) -> np.ndarray:
    """Matrix of symplectic products between rows of A and rows of B."""
    a = A.entries.astype(np.int64)
    b = B.entries.astype(np.int64)
    return ((a[:, :n] @ b[:, n:].T + a[:, n:] @ b[:, :n].T) & 1).astype(np.uint8)


@dataclass(frozen=True)
class DualGenerators:
    pair1: tuple[BinaryPolynomial, BinaryPolynomial]
    pair2: tuple[BinaryPolynomial, BinaryPolynomial]


def dual_generators(c: TwoGenQC) -> DualGenerators:
    ensure_valid(c)
    n = c.n
    vbar = bar(c.v, n)
    g1p = reciprocal_dual(c.g1, n)
    g2p = reciprocal_dual(c.g2, n)
    return DualGenerators(pair1=(g1p, vbar * g1p), pair2=(vbar * g2p, g2p))


def dual_generator_matrix(c: TwoGenQC) -> BitMatrix:
    """All n cyclic shifts of both dual seed pairs (rows may be dependent)."""
    n = c.n
    dg = dual_generators(c)
    blocks = []
    for left, right in (dg.pair1, dg.pair2):
        if left.is_zero() and right.is_zero():
            continue
        blocks.append(
            np.hstack([circulant_rows(left, n, n).entries, circulant_rows(right, n, n).entries])
        )
    if not blocks:
        return BitMatrix.zeros(0, 2 * n)
    return BitMatrix(np.vstack(blocks))


def dual_basis(c: TwoGenQC) -> BitMatrix:
    """Row-reduced basis of the span of the dual generator shifts."""
    return row_reduce(dual_generator_matrix(c))[0]


def is_dual_containing_conditions(c: TwoGenQC) -> bool:
    """Sufficient test: g2 | g1_perp, gcd(g1, g2) = 1 and bar(v) = v."""
    ensure_valid(c)
    n = c.n
    g1p = reciprocal_dual(c.g1, n)
    return (
        divides(c.g2, g1p)
        and gcd_bits(c.g1.bits, c.g2.bits) == 1
        and bar(c.v, n) == c.v
    )


def is_dual_containing_oracle(c: TwoGenQC) -> bool:
    """Decide C^{perp_s} <= C by linear algebra, two ways.

    The dual generator shifts are first confirmed to span exactly C^{perp_s}
    (orthogonal to every generator row, rank 2n - k). Then membership of each
    dual basis row in the row space of G is compared with the Gram test
    (dual basis symplectically self-orthogonal).
    """
    ensure_valid(c)
    n = c.n
    G = c.generator_matrix
    k = dimension(c)
    D = dual_basis(c)
    if D.rows != 2 * n - k:
        raise OracleInconsistencyError(f"dual generators have rank {D.rows}, expected {2 * n - k}")
    if D.rows and symplectic_gram(G, D, n).any():
        raise OracleInconsistencyError("dual generator not orthogonal to the code")
    if D.rows == 0:
        return True
    membership = rank(G.vstack(D)) == rank(G)
    gram = not symplectic_gram(D, D, n).any()
    if membership != gram:
        raise OracleInconsistencyError(f"membership says {membership}, Gram test says {gram}")
    return membership


def dual_rows_in_code(c: TwoGenQC) -> list[bool]:
    """Per-row membership of the dual basis in C (diagnostic form of the oracle)."""
    G = c.generator_matrix
    return [in_rowspace(G, row) for row in dual_basis(c).entries]


def exchange_identity_check(
    f: BinaryPolynomial, g: BinaryPolynomial, h: BinaryPolynomial, n: int
) -> bool:
    """<[f g], [h]>_e == <[g], [bar(f) h]>_e in R_n."""
    lhs = ((f * g).bits & h.bits).bit_count() & 1
    rhs = (g.bits & (bar(f, n) * h).bits).bit_count() & 1
    return lhs == rhs
