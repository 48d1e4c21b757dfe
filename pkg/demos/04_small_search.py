"""
A complete search at n = 7
==========================

Small enough to try every palindromic v against a handful of defining sets,
with exact distances. The same config format drives long runs on the CLI.
"""

import collections

from qc2qecc.qecctool.search import SearchConfig, run_search

config = SearchConfig.from_dict(
    {
        "n": 7,
        "t1_cosets": [[0], [1], [3], [0, 1], [0, 3]],
        "t2_cosets": [[0], [1], [3], [0, 1], [0, 3]],
        "v_strategy": {"kind": "exhaustive", "palindromic": True},
        "filter": "oracle",
        "distance": {"mode": "exact"},
    }
)

records = list(run_search(config))
print(len(records), "dual-containing candidates")
print(collections.Counter(str(r.quantum) for r in records).most_common())

best = max(records, key=lambda r: (r.quantum.d, r.quantum.k))
print("best:", best.quantum, best.source)
