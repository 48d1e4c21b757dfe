"""Command-line entry point: ``qc2qecc <command> ...``.

Exit codes: 0 when every check passes, 1 on a failed check, 2 on bad usage or config.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from qc2qecc import __version__
from qc2qecc.cyclotomic import all_cosets
from qc2qecc.distance import (
    DEFAULT_DIM_LIMIT,
    DistanceLimitError,
    certify,
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
from qc2qecc.qecctool.params import QeccParams, compare_best_known, derivation_closure
from qc2qecc.qecctool.records import read_jsonl
from qc2qecc.qecctool.reproduce import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    CLOSURE_STEPS,
    load_best_known,
    load_fixtures,
    reproduce_paper,
)
from qc2qecc.qecctool.search import ConfigError, SearchConfig, run_search

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load_codes(path: str) -> list[TwoGenQC]:
    """A fixture file holds one code object or a list of them."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}") from e
    items = data if isinstance(data, list) else [data]
    try:
        return [TwoGenQC.from_dict(d) for d in items]
    except (KeyError, ValueError, TypeError) as e:
        raise UsageError(f"{path}: bad fixture: {e}") from e


def cmd_cosets(args: argparse.Namespace) -> int:
    if args.n <= 0 or args.n % 2 == 0:
        raise UsageError("n must be odd and positive")
    for c in all_cosets(args.n):
        print(f"C{c.representative:<4} size {len(c):<3} {{{', '.join(map(str, sorted(c.members)))}}}")
    return OK


def cmd_build(args: argparse.Namespace) -> int:
    try:
        c = TwoGenQC.from_compact(args.n, args.g1, args.g2, args.v)
    except ValueError as e:
        raise UsageError(str(e)) from e
    problems = validate(c)
    info: dict = {"code": c.to_dict(), "violations": problems}
    if not problems:
        k = dimension(c)
        info.update(
            length=2 * c.n,
            dimension=k,
            deg_g1=c.g1.degree,
            deg_g2=c.g2.degree,
            conditions=is_dual_containing_conditions(c),
            oracle=is_dual_containing_oracle(c),
        )
        if k >= c.n and info["oracle"]:
            info["qecc"] = [c.n, k - c.n]
    if args.json:
        print(json.dumps(info, sort_keys=True))
    elif problems:
        for p in problems:
            print(f"invalid: {p}")
    else:
        print(f"[{2 * c.n}, {info['dimension']}] symplectic code, n = {c.n}")
        print(f"conditions: {info['conditions']}  oracle: {info['oracle']}")
        if "qecc" in info:
            print(f"quantum code: [[{c.n},{info['qecc'][1]},d]]")
    return FAILED if problems else OK


def cmd_check(args: argparse.Namespace) -> int:
    status = OK
    for c in _load_codes(args.fixture):
        problems = validate(c)
        name = c.label or f"n={c.n}"
        if problems:
            print(f"{name}: INVALID ({'; '.join(problems)})")
            status = FAILED
            continue
        cond, orc = is_dual_containing_conditions(c), is_dual_containing_oracle(c)
        print(f"{name}: k={dimension(c)} conditions={cond} oracle={orc}")
        if not orc:
            status = FAILED
    return status


def cmd_distance(args: argparse.Namespace) -> int:
    out = []
    for c in _load_codes(args.fixture):
        if validate(c):
            raise UsageError(f"{c.label or c.n}: invalid code: {'; '.join(validate(c))}")
        try:
            if args.mode == "exact":
                rep = min_distance_exact(c, dim_limit=args.dim_limit)
            else:
                rep = info_set_search(
                    c,
                    target=args.target,
                    budget=args.budget,
                    seed=args.seed,
                    depth=args.depth,
                    workers=args.workers,
                )
                if args.certify:
                    rep = certify(c, rep)
        except DistanceLimitError as e:
            raise UsageError(str(e)) from e
        d = rep.to_dict()
        if c.label:
            d["label"] = c.label
        out.append(d)
    for d in out:
        print(json.dumps(d, sort_keys=True))
    return OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    try:
        fixtures = load_fixtures(args.fixtures)
        table = load_best_known(args.best_known)
    except (OSError, ValueError) as e:
        raise UsageError(str(e)) from e
    rep = reproduce_paper(
        fixtures, table, seed=args.seed, budget=args.budget, depth=args.depth, do_certify=args.certify
    )
    print(rep.summary())
    if args.verbose:
        for t, chain in rep.derived.items():
            print(f"  [[{t[0]},{t[1]},{t[2]}]]  {chain}")
    return OK if rep.passed else FAILED


def _load_bases(path: str | None) -> list[QeccParams]:
    """Bases from a fixture JSON, a JSONL record file, or an ``n,k,d`` CSV."""
    if path is None:
        return [QeccParams(*fx["expected"]["qecc"]) for fx in load_fixtures()]
    p = Path(path)
    try:
        if p.suffix == ".jsonl":
            return [r.quantum for r in read_jsonl(p)]
        if p.suffix == ".json":
            return [QeccParams(*fx["expected"]["qecc"]) for fx in load_fixtures(p)]
        lines = [ln for ln in p.read_text().splitlines() if ln.strip() and not ln.startswith("#")]
        return [
            QeccParams(int(r[0]), int(r[1]), int(r[2]))
            for r in csv.reader(io.StringIO("\n".join(lines)))
            if r[0].strip() != "n"
        ]
    except (OSError, KeyError, ValueError, TypeError) as e:
        raise UsageError(f"cannot read bases from {path}: {e}") from e


def cmd_derive(args: argparse.Namespace) -> int:
    bases = _load_bases(args.bases)
    try:
        table = load_best_known(args.best_known)
    except (OSError, ValueError) as e:
        raise UsageError(str(e)) from e
    closure = derivation_closure(bases, args.max_steps)
    rows = [
        (t, der)
        for t, der in sorted(closure.items())
        if der.steps or args.include_bases
        if args.all or compare_best_known(der.params, table) == "beats"
    ]
    print(f"{'no':>3}  {'code':<14} {'best-known':>10}  chain")
    for i, (t, der) in enumerate(rows, start=1):
        best = table.entries.get((t[0], t[1]), "-")
        print(f"{i:>3}  {str(der.params):<14} {best!s:>10}  {der.chain}")
    return OK


def cmd_search(args: argparse.Namespace) -> int:
    try:
        cfg = SearchConfig.from_file(args.config)
    except OSError as e:
        raise UsageError(f"cannot read {args.config}: {e}") from e
    if args.out is not None:
        cfg.out = args.out
    if args.workers is not None:
        cfg.workers = args.workers
    if args.fresh:
        cfg.resume = False
    for rec in run_search(cfg):
        print(rec.to_json(), flush=True)
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qc2qecc", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", help="print the 2-cyclotomic cosets mod n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("build", help="validate a code given in compact notation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="dual-containment verdicts for a fixture file")
    p.add_argument("fixture")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("distance", help="minimum symplectic distance (exact or search)")
    p.add_argument("fixture")
    p.add_argument("--mode", choices=("exact", "search"), default="search")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--dim-limit", type=int, default=DEFAULT_DIM_LIMIT)
    p.add_argument("--certify", action="store_true", help="try to prove d via the dual enumerator")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("reproduce", help="re-derive the bundled codes and the propagated table")
    p.add_argument("--fixtures", default=None)
    p.add_argument("--best-known", default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--certify", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true", help="also list propagated codes")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("derive", help="propagate base codes and compare with a best-known table")
    p.add_argument("--bases", default=None, help=".json fixtures, .jsonl records or n,k,d CSV")
    p.add_argument("--best-known", default=None)
    p.add_argument("--max-steps", type=int, default=CLOSURE_STEPS)
    p.add_argument("--all", action="store_true", help="list everything, not only improvements")
    p.add_argument("--include-bases", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("search", help="run a search described by a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--fresh", action="store_true", help="ignore an existing cursor")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except (UsageError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
