"""2-cyclotomic cosets, defining sets and generator polynomials of cyclic codes."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from typing import Iterable

from qc2qecc.algebra import (
    BinaryPolynomial,
    FieldContext,
    build_field,
    clmul,
    poly_from_field_coeffs,
)


def _check_odd(n: int) -> None:
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")


@dataclass(frozen=True)
class Coset:
    n: int
    members: tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.members[0]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members


def coset_of(n: int, i: int) -> Coset:
    _check_odd(n)
    if not 0 <= i < n:
        raise ValueError(f"index {i} outside Z_{n}")
    orbit = [i]
    j = (2 * i) % n
    while j != i:
        orbit.append(j)
        j = (2 * j) % n
    return Coset(n, tuple(sorted(orbit)))


@functools.lru_cache(maxsize=None)
def _all_cosets(n: int) -> tuple[Coset, ...]:
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i not in seen:
            c = coset_of(n, i)
            seen.update(c.members)
            out.append(c)
    return tuple(out)


def all_cosets(n: int) -> list[Coset]:
    """Partition of Z_n into cosets, sorted by representative."""
    _check_odd(n)
    return list(_all_cosets(n))


@dataclass(frozen=True)
class DefiningSet:
    n: int
    indices: frozenset[int]

    def __post_init__(self) -> None:
        for i in self.indices:
            if not 0 <= i < self.n:
                raise ValueError(f"index {i} outside Z_{self.n}")
            if (2 * i) % self.n not in self.indices:
                raise ValueError(f"defining set is not closed under doubling (at {i})")

    @classmethod
    def from_cosets(cls, n: int, representatives: Iterable[int]) -> DefiningSet:
        """Union of the cosets containing the given indices."""
        idx: set[int] = set()
        for r in representatives:
            idx.update(coset_of(n, r % n).members)
        return cls(n, frozenset(idx))

    @property
    def sorted_indices(self) -> list[int]:
        return sorted(self.indices)

    @property
    def coset_representatives(self) -> list[int]:
        return [c.representative for c in all_cosets(self.n) if c.representative in self.indices]

    def __len__(self) -> int:
        return len(self.indices)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "cosets": self.coset_representatives})

    @classmethod
    def from_json(cls, text: str) -> DefiningSet:
        data = json.loads(text)
        return cls.from_cosets(int(data["n"]), data["cosets"])


def negate_set(T: DefiningSet) -> DefiningSet:
    return DefiningSet(T.n, frozenset((T.n - i) % T.n for i in T.indices))


def coset_precheck(T1: DefiningSet, T2: DefiningSet) -> bool:
    """Disjointness test T1 & -T2 = T1 & T2 = {} on defining sets."""
    if T1.n != T2.n:
        raise ValueError(f"modulus mismatch: {T1.n} vs {T2.n}")
    return not (T1.indices & T2.indices) and not (T1.indices & negate_set(T2).indices)


def _gf_poly_mul_linear(ctx: FieldContext, poly: list[int], root: int) -> list[int]:
    # poly * (x + root); minus is plus in characteristic 2
    out = [0] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] ^= c
        out[i] ^= ctx.mul(c, root)
    return out


def minimal_polynomial(ctx: FieldContext, c: Coset) -> BinaryPolynomial:
    """prod_{j in c} (x - zeta^j), checked to have all coefficients in F2."""
    if ctx.n != c.n:
        raise ValueError(f"field built for n = {ctx.n}, coset for n = {c.n}")
    poly = [1]
    for j in c.members:
        poly = _gf_poly_mul_linear(ctx, poly, ctx.zeta_powers[j])
    return poly_from_field_coeffs(poly)


def generator_from_set(ctx: FieldContext, T: DefiningSet) -> BinaryPolynomial:
    """Generator polynomial with root set {zeta^i : i in T}, as a plain polynomial.

    ``T = Z_n`` yields x^n - 1 itself, which does not fit into R_n.
    """
    if ctx.n != T.n:
        raise ValueError(f"field built for n = {ctx.n}, defining set for n = {T.n}")
    bits = 1
    for c in all_cosets(T.n):
        if c.representative in T.indices:
            bits = clmul(bits, minimal_polynomial(ctx, c).bits)
    return BinaryPolynomial(bits)


def generator_for_cosets(n: int, representatives: Iterable[int]) -> BinaryPolynomial:
    """Convenience: generator in R_n for a union of cosets, using the canonical field."""
    T = DefiningSet.from_cosets(n, representatives)
    if len(T) == n:
        raise ValueError("defining set is all of Z_n (zero code)")
    return generator_from_set(build_field(n), T).with_ambient(n)
