"""Quantum code parameters, propagation rules and best-known comparisons."""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Iterable, Literal

from qc2qecc.distance import DistanceReport
from qc2qecc.qc2code import TwoGenQC, dimension, is_dual_containing_oracle

DistanceStatus = Literal["certified", "upper_bound", "claimed_by_paper"]
Verdict = Literal["beats", "ties", "below", "unknown"]


class PropagationError(ValueError):
    pass


@dataclass(frozen=True)
class QeccParams:
    """[[n, k, d]]. ``pure`` is None when purity is not established."""

    n: int
    k: int
    d: int
    pure: bool | None = True
    distance_status: DistanceStatus = "upper_bound"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"k = {self.k} outside [0, {self.n}]")
        if self.k < self.n and not 1 <= self.d <= self.n:
            raise ValueError(f"d = {self.d} outside [1, {self.n}]")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> QeccParams:
        return cls(**data)


def symplectic_to_qecc(c: TwoGenQC, report: DistanceReport) -> QeccParams:
    """[[n, k - n, d]] from a symplectic dual-containing [2n, k] code."""
    k = dimension(c)
    if k < c.n:
        raise ValueError(f"dimension {k} < n = {c.n}")
    if not is_dual_containing_oracle(c):
        raise ValueError("code is not symplectic dual-containing")
    status: DistanceStatus = "certified" if report.certified else "upper_bound"
    return QeccParams(c.n, k - c.n, report.d_upper, pure=True, distance_status=status)


def propagate_shrink(q: QeccParams) -> QeccParams:
    """[[n, k, d]] pure -> [[n, k-1, d]].

    Adding a logical operator to the stabilizer only shrinks the normalizer,
    so the result is again pure with distance at least d.
    """
    if q.k < 1:
        raise PropagationError(f"{q}: k must be >= 1")
    if q.pure is not True:
        raise PropagationError(f"{q}: shrinking needs a pure code")
    return replace(q, k=q.k - 1, pure=True)


def propagate_lengthen(q: QeccParams) -> QeccParams:
    """[[n, k, d]] -> [[n+1, k, d]]; purity of the result is left undetermined."""
    if q.k < 1:
        raise PropagationError(f"{q}: k must be > 0")
    return replace(q, n=q.n + 1, pure=None)


_RULES = (("shrink", propagate_shrink), ("lengthen", propagate_lengthen))


@dataclass(frozen=True)
class Derivation:
    params: QeccParams
    base: QeccParams
    steps: tuple[str, ...]

    @property
    def chain(self) -> str:
        parts = [str(self.base)]
        q = self.base
        for name in self.steps:
            q = dict(_RULES)[name](q)
            parts.append(f"-{name}-> {q}")
        return " ".join(parts)


def derivation_closure(
    bases: Iterable[QeccParams], max_steps: int
) -> dict[tuple[int, int, int], Derivation]:
    """Everything reachable from ``bases`` in at most ``max_steps`` rule applications.

    Breadth-first, so each triple carries one shortest chain; bases are
    visited in the given order and shrink is tried before lengthen.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    found: dict[tuple[int, int, int], Derivation] = {}
    seen: set[tuple[tuple[int, int, int], bool | None]] = set()
    queue: deque[tuple[Derivation, int]] = deque()

    def visit(der: Derivation, depth: int) -> None:
        state = (der.params.triple, der.params.pure)
        if state in seen:
            return
        seen.add(state)
        found.setdefault(der.params.triple, der)
        queue.append((der, depth))

    for b in bases:
        visit(Derivation(b, b, ()), 0)
    while queue:
        der, depth = queue.popleft()
        if depth == max_steps:
            continue
        for name, rule in _RULES:
            try:
                nxt = rule(der.params)
            except PropagationError:
                continue
            visit(Derivation(nxt, der.base, der.steps + (name,)), depth + 1)
    return found


class BestKnownLookupError(KeyError):
    pass


@dataclass
class BestKnownTable:
    """Best-known lower bounds on d, keyed by (n, k)."""

    entries: dict[tuple[int, int], int]
    origin: str = ""

    def __post_init__(self) -> None:
        for key, d in self.entries.items():
            if d <= 0:
                raise ValueError(f"non-positive distance {d} at {key}")

    def lookup(self, n: int, k: int) -> int:
        try:
            return self.entries[(n, k)]
        except KeyError:
            raise BestKnownLookupError((n, k)) from None

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self.entries

    @classmethod
    def from_csv(cls, source: str | Path) -> BestKnownTable:
        path = Path(source)
        return cls.parse(path.read_text(), origin=str(path))

    @classmethod
    def parse(cls, text: str, origin: str = "") -> BestKnownTable:
        """Rows ``n,k,d[,note]``; '#' comment lines and an ``n,k,d`` header are skipped."""
        entries: dict[tuple[int, int], int] = {}
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        for row in csv.reader(io.StringIO("\n".join(lines))):
            if row[0].strip() == "n":
                continue
            n, k, d = (int(x) for x in row[:3])
            if (n, k) in entries and entries[(n, k)] != d:
                raise ValueError(f"conflicting entries for ({n},{k}) in {origin}")
            entries[(n, k)] = d
        return cls(entries, origin)


def compare_best_known(q: QeccParams, table: BestKnownTable) -> Verdict:
    try:
        best = table.lookup(q.n, q.k)
    except BestKnownLookupError:
        return "unknown"
    if q.d > best:
        return "beats"
    return "ties" if q.d == best else "below"
