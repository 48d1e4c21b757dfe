"""Quantum-code bookkeeping: parameters, records, search and reproduction."""

from qc2qecc.qecctool.params import (
    BestKnownTable,
    Derivation,
    PropagationError,
    QeccParams,
    compare_best_known,
    derivation_closure,
    propagate_lengthen,
    propagate_shrink,
    symplectic_to_qecc,
)
from qc2qecc.qecctool.records import CodeRecord, append_jsonl, read_jsonl
from qc2qecc.qecctool.reproduce import load_fixtures, reproduce_paper
from qc2qecc.qecctool.search import ConfigError, SearchConfig, run_search
