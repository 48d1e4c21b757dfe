"""CodeRecord and its JSON Lines persistence."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Literal

from qc2qecc import __version__
from qc2qecc.distance import DistanceReport
from qc2qecc.qc2code import TwoGenQC
from qc2qecc.qecctool.params import Derivation, QeccParams

Provenance = Literal["paper_fixture", "search", "derived"]


@dataclass
class CodeRecord:
    source: dict
    classical: tuple[int, int]
    quantum: QeccParams
    provenance: Provenance
    distance: DistanceReport | None = None
    chain: str = ""
    candidate_index: int | None = None
    timestamp: str | None = None
    tool_version: str = field(default=__version__)

    def __post_init__(self) -> None:
        if self.source.get("kind") == "2qc" and self.quantum.k != self.classical[1] - self.quantum.n:
            raise ValueError(
                f"quantum k = {self.quantum.k} but classical k - n = "
                f"{self.classical[1] - self.quantum.n}"
            )

    @classmethod
    def from_code(
        cls,
        c: TwoGenQC,
        k: int,
        quantum: QeccParams,
        report: DistanceReport | None,
        provenance: Provenance,
        **extra,
    ) -> CodeRecord:
        source = {"kind": "2qc", **c.to_dict()}
        return cls(source, (2 * c.n, k), quantum, provenance, report, **extra)

    @classmethod
    def from_derivation(cls, der: Derivation) -> CodeRecord:
        p = der.params
        source = {"kind": "derived", "base": list(der.base.triple), "steps": list(der.steps)}
        return cls(source, (2 * p.n, p.n + p.k), p, "derived", None, chain=der.chain)

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "classical": list(self.classical),
            "quantum": self.quantum.to_dict(),
            "provenance": self.provenance,
            "distance": self.distance.to_dict() if self.distance else None,
            "chain": self.chain,
            "candidate_index": self.candidate_index,
            "timestamp": self.timestamp,
            "tool_version": self.tool_version,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CodeRecord:
        return cls(
            source=data["source"],
            classical=tuple(data["classical"]),
            quantum=QeccParams.from_dict(data["quantum"]),
            provenance=data["provenance"],
            distance=DistanceReport.from_dict(data["distance"]) if data.get("distance") else None,
            chain=data.get("chain", ""),
            candidate_index=data.get("candidate_index"),
            timestamp=data.get("timestamp"),
            tool_version=data.get("tool_version", __version__),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> CodeRecord:
        return cls.from_dict(json.loads(line))


def append_jsonl(path: str | Path, records: Iterable[CodeRecord]) -> int:
    count = 0
    with open(path, "a", encoding="utf-8") as f:
        for r in records:
            f.write(r.to_json() + "\n")
            count += 1
    return count


def read_jsonl(path: str | Path) -> Iterator[CodeRecord]:
    with open(path, encoding="utf-8") as f:
        for line in f:
            if line.strip():
                yield CodeRecord.from_json(line)
