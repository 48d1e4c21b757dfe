"""
Building a dual-containing 2-QC code
====================================

Start from three polynomials in run-length notation, look at the generator
matrix, and ask whether the symplectic dual sits inside the code.
"""

from qc2qecc import TwoGenQC, dimension, is_dual_containing_conditions, is_dual_containing_oracle
from qc2qecc.algebra import bar, reciprocal_dual
from qc2qecc.qecctool.reproduce import load_fixtures

# The bundled fixture file holds the eight codes; take the length-45 one.
fx = load_fixtures()[0]
code = TwoGenQC.from_dict(fx)
print(fx["label"], "n =", code.n)
print("g1 =", code.g1, " deg", code.g1.degree)
print("g2 =", code.g2, " deg", code.g2.degree)

# Generator rows are the n - deg(g) shifts of (v g1, g1) and of (g2, v g2).
G = code.generator_matrix
print("generator matrix", G.shape, "-> dimension", dimension(code))

# The sufficient conditions: v is fixed by x -> x^{-1} and g2 divides g1's dual.
print("bar(v) == v:", bar(code.v, code.n) == code.v)
print("g1 dual:", reciprocal_dual(code.g1, code.n))
print("conditions:", is_dual_containing_conditions(code))

# The oracle does not trust the conditions; it works with the matrices directly.
print("oracle:", is_dual_containing_oracle(code))

k = dimension(code)
print(f"quantum code [[{code.n},{k - code.n},d]]")
