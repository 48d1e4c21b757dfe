"""Configurable search over (T1, T2, v) for new dual-containing 2-QC codes."""

from __future__ import annotations

import concurrent.futures
import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np

from qc2qecc.algebra import BinaryPolynomial, build_field, parse_compact
from qc2qecc.cyclotomic import DefiningSet, generator_from_set, coset_precheck
from qc2qecc.distance import (
    DEFAULT_DIM_LIMIT,
    DistanceReport,
    info_set_search,
    min_distance_exact,
)
from qc2qecc.qc2code import (
    TwoGenQC,
    dimension,
    is_dual_containing_conditions,
    is_dual_containing_oracle,
    validate,
)
from qc2qecc.qecctool.params import symplectic_to_qecc
from qc2qecc.qecctool.records import CodeRecord, append_jsonl


class ConfigError(ValueError):
    pass


@dataclass
class VStrategy:
    kind: str = "exhaustive"  # exhaustive | random | fixed
    max_weight: int | None = None
    seed: int = 0
    budget: int = 100
    palindromic: bool = True
    values: list[str] = field(default_factory=list)


@dataclass
class DistanceConfig:
    mode: str = "auto"  # auto | exact | search
    budget: int = 1000
    seed: int = 0
    depth: int = 3
    target: int | None = None
    dim_limit: int = DEFAULT_DIM_LIMIT


@dataclass
class SearchConfig:
    n: int
    t1_options: list[list[int]] | None = None
    t2_options: list[list[int]] | None = None
    g1_options: list[str] | None = None
    g2_options: list[str] | None = None
    v_strategy: VStrategy = field(default_factory=VStrategy)
    filter: str = "conditions"
    distance: DistanceConfig = field(default_factory=DistanceConfig)
    out: str | None = None
    workers: int = 1
    chunk: int = 64
    resume: bool = True
    timestamp: str | None = None

    @property
    def coset_driven(self) -> bool:
        return self.t1_options is not None

    @classmethod
    def from_dict(cls, data: dict) -> SearchConfig:
        try:
            n = int(data["n"])
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError("config needs an integer 'n'") from e
        if n <= 0 or n % 2 == 0:
            raise ConfigError(f"n must be odd and positive, got {n}")

        def options(key: str, nested: bool) -> list | None:
            if key not in data:
                return None
            val = data[key]
            if nested:
                # a flat list is one union of cosets; a list of lists is several candidates
                if val and all(isinstance(x, int) for x in val):
                    return [list(val)]
                if all(isinstance(x, list) for x in val):
                    return [list(x) for x in val]
                raise ConfigError(f"{key} must be a list of ints or a list of lists")
            return [val] if isinstance(val, str) else list(val)

        t1, t2 = options("t1_cosets", True), options("t2_cosets", True)
        g1, g2 = options("g1", False), options("g2", False)
        if (t1 is None) == (g1 is None) or (t2 is None) == (g2 is None):
            raise ConfigError("give exactly one of t1_cosets/g1 and one of t2_cosets/g2")
        if (t1 is None) != (t2 is None):
            raise ConfigError("mixing coset-driven and explicit generators is not supported")
        vs = dict(data.get("v_strategy", {}))
        if "v" in vs:
            vs["values"] = [vs.pop("v")] if isinstance(vs["v"], str) else list(vs.pop("v"))
        try:
            v_strategy = VStrategy(**vs)
            distance = DistanceConfig(**data.get("distance", {}))
        except TypeError as e:
            raise ConfigError(str(e)) from e
        if v_strategy.kind not in ("exhaustive", "random", "fixed"):
            raise ConfigError(f"unknown v_strategy kind {v_strategy.kind!r}")
        if v_strategy.kind == "fixed" and not v_strategy.values:
            raise ConfigError("v_strategy kind 'fixed' needs 'v'")
        if distance.mode not in ("auto", "exact", "search"):
            raise ConfigError(f"unknown distance mode {distance.mode!r}")
        flt = data.get("filter", "conditions")
        if flt not in ("conditions", "oracle"):
            raise ConfigError(f"filter must be 'conditions' or 'oracle', got {flt!r}")
        return cls(
            n=n,
            t1_options=t1,
            t2_options=t2,
            g1_options=g1,
            g2_options=g2,
            v_strategy=v_strategy,
            filter=flt,
            distance=distance,
            out=data.get("out"),
            workers=int(data.get("workers", 1)),
            chunk=int(data.get("chunk", 64)),
            resume=bool(data.get("resume", True)),
            timestamp=data.get("timestamp"),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> SearchConfig:
        try:
            return cls.from_dict(json.loads(Path(path).read_text()))
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path}: {e}") from e


# ---------------------------------------------------------------------------
# candidate generation


def palindromic_vs(n: int, max_weight: int | None = None) -> Iterator[BinaryPolynomial]:
    """All v with bar(v) = v, by increasing weight, then v_0, then pair choice."""
    half = (n - 1) // 2
    top = n if max_weight is None else max_weight
    for weight in range(top + 1):
        for v0 in (0, 1):
            if (weight - v0) % 2:
                continue
            pairs = (weight - v0) // 2
            if pairs > half:
                continue
            for combo in itertools.combinations(range(1, half + 1), pairs):
                bits = v0
                for i in combo:
                    bits |= (1 << i) | (1 << (n - i))
                yield BinaryPolynomial(bits, n)


def all_vs(n: int, max_weight: int | None = None) -> Iterator[BinaryPolynomial]:
    top = n if max_weight is None else max_weight
    for weight in range(top + 1):
        for combo in itertools.combinations(range(n), weight):
            yield BinaryPolynomial(sum(1 << i for i in combo), n)


def random_palindromic_vs(n: int, count: int, seed: int) -> Iterator[BinaryPolynomial]:
    rng = np.random.Generator(np.random.Philox(key=seed))
    half = (n - 1) // 2
    for _ in range(count):
        bits = 0
        chosen = rng.integers(0, 2, size=half)
        for i, b in enumerate(chosen, start=1):
            if b:
                bits |= (1 << i) | (1 << (n - i))
        yield BinaryPolynomial(bits, n)


def random_vs(n: int, count: int, seed: int) -> Iterator[BinaryPolynomial]:
    rng = np.random.Generator(np.random.Philox(key=seed))
    for _ in range(count):
        bits = 0
        for i, b in enumerate(rng.integers(0, 2, size=n)):
            if b:
                bits |= 1 << i
        yield BinaryPolynomial(bits, n)


def _v_candidates(cfg: SearchConfig) -> Iterator[BinaryPolynomial]:
    vs = cfg.v_strategy
    if vs.kind == "fixed":
        for text in vs.values:
            yield parse_compact(text, cfg.n)
    elif vs.kind == "exhaustive":
        gen = palindromic_vs if vs.palindromic else all_vs
        yield from gen(cfg.n, vs.max_weight)
    else:
        gen = random_palindromic_vs if vs.palindromic else random_vs
        yield from gen(cfg.n, vs.budget, vs.seed)


@dataclass(frozen=True)
class Candidate:
    index: int
    code: TwoGenQC
    t1: tuple[int, ...] | None = None
    t2: tuple[int, ...] | None = None


def candidates(cfg: SearchConfig) -> Iterator[Candidate]:
    n = cfg.n
    if cfg.coset_driven:
        ctx = build_field(n)
        pairs = []
        for r1, r2 in itertools.product(cfg.t1_options, cfg.t2_options):
            T1 = DefiningSet.from_cosets(n, r1)
            T2 = DefiningSet.from_cosets(n, r2)
            if len(T1) == n or len(T2) == n:
                continue
            g1 = generator_from_set(ctx, T1).with_ambient(n)
            g2 = generator_from_set(ctx, T2).with_ambient(n)
            pairs.append((g1, g2, tuple(r1), tuple(r2), coset_precheck(T1, T2)))
    else:
        pairs = [
            (parse_compact(a, n), parse_compact(b, n), None, None, True)
            for a, b in itertools.product(cfg.g1_options, cfg.g2_options)
        ]
    index = 0
    for v in _v_candidates(cfg):
        for g1, g2, r1, r2, ok in pairs:
            if ok:
                yield Candidate(index, TwoGenQC(n, g1, g2, v), r1, r2)
            index += 1


# ---------------------------------------------------------------------------
# evaluation


def distance_report(c: TwoGenQC, dc: DistanceConfig) -> DistanceReport:
    k = dimension(c)
    if dc.mode == "exact" or (dc.mode == "auto" and k <= dc.dim_limit):
        return min_distance_exact(c, dim_limit=dc.dim_limit)
    return info_set_search(c, target=dc.target, budget=dc.budget, seed=dc.seed, depth=dc.depth)


def evaluate(cand: Candidate, cfg: SearchConfig) -> CodeRecord | None:
    c = cand.code
    if validate(c):
        return None
    if dimension(c) < c.n:
        return None
    if cfg.filter == "conditions":
        if not is_dual_containing_conditions(c):
            return None
    elif not is_dual_containing_oracle(c):
        return None
    report = distance_report(c, cfg.distance)
    q = symplectic_to_qecc(c, report)
    rec = CodeRecord.from_code(
        c,
        dimension(c),
        q,
        report,
        "search",
        candidate_index=cand.index,
        timestamp=cfg.timestamp,
    )
    if cand.t1 is not None:
        rec.source["t1_cosets"] = list(cand.t1)
        rec.source["t2_cosets"] = list(cand.t2)
    return rec


def _evaluate_batch(args: tuple) -> list[CodeRecord | None]:
    batch, cfg = args
    return [evaluate(c, cfg) for c in batch]


def _cursor_path(out: str | Path) -> Path:
    return Path(str(out) + ".cursor")


def _batches(it: Iterator[Candidate], size: int) -> Iterator[list[Candidate]]:
    while True:
        batch = list(itertools.islice(it, size))
        if not batch:
            return
        yield batch


def run_search(cfg: SearchConfig) -> Iterator[CodeRecord]:
    """Evaluate candidates in index order, yielding accepted records.

    With ``cfg.out`` set, records are appended to that JSONL file and the
    index of the next unprocessed candidate is kept in ``<out>.cursor``;
    a rerun with ``resume`` skips what was already done.
    """
    start = 0
    if cfg.out:
        out = Path(cfg.out)
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            cursor = _cursor_path(out)
            if cfg.resume and cursor.exists():
                start = json.loads(cursor.read_text())["next_candidate"]
            elif not cfg.resume:
                out.write_text("")
            else:
                out.touch()
        except OSError as e:
            raise ConfigError(f"cannot write output {cfg.out}: {e}") from e

    pending = (c for c in candidates(cfg) if c.index >= start)
    for batch, recs in _evaluated(_batches(pending, max(1, cfg.chunk)), cfg):
        accepted = [r for r in recs if r is not None]
        if cfg.out:
            append_jsonl(cfg.out, accepted)
            _cursor_path(cfg.out).write_text(json.dumps({"next_candidate": batch[-1].index + 1}))
        yield from accepted


def _evaluated(
    batches: Iterator[list[Candidate]], cfg: SearchConfig
) -> Iterator[tuple[list[Candidate], list[CodeRecord | None]]]:
    if cfg.workers <= 1:
        for b in batches:
            yield b, _evaluate_batch((b, cfg))
        return
    with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        while True:
            window = list(itertools.islice(batches, 2 * cfg.workers))
            if not window:
                return
            # map preserves submission order, so output order is scheduling-independent
            yield from zip(window, pool.map(_evaluate_batch, [(b, cfg) for b in window]))
