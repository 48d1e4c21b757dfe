"""
From eight codes to a table of improvements
===========================================

Shrinking k and lengthening n both keep d. Starting from the eight base
codes, collect every reachable [[n,k,d]] that beats the shipped snapshot of
best-known distances.
"""

from qc2qecc.qecctool.params import QeccParams, derivation_closure
from qc2qecc.qecctool.reproduce import derived_improvements, load_best_known, load_fixtures

bases = [QeccParams(*fx["expected"]["qecc"]) for fx in load_fixtures()]
table = load_best_known()
print("bases:", ", ".join(map(str, bases)))

closure = derivation_closure(bases, max_steps=5)
print(len(closure), "parameter sets reachable in at most 5 steps")

better = derived_improvements(bases, table)
for (n, k, d), chain in better.items():
    print(f"[[{n},{k},{d}]]  best known {table.lookup(n, k)}   {chain}")
print(len(better), "improvements")
