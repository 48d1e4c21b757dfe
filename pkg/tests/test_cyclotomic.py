import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qc2qecc.algebra import BinaryPolynomial, build_field, field_eval, parse_compact, x_n_minus_1
from qc2qecc.cyclotomic import (
    DefiningSet,
    all_cosets,
    coset_of,
    generator_for_cosets,
    generator_from_set,
    minimal_polynomial,
    negate_set,
    coset_precheck,
)
from qc2qecc.qecctool.reproduce import load_fixtures

ODD = st.integers(1, 121).filter(lambda n: n % 2)


def test_cosets_of_15():
    got = {c.representative: sorted(c.members) for c in all_cosets(15)}
    assert got == {0: [0], 1: [1, 2, 4, 8], 3: [3, 6, 9, 12], 5: [5, 10], 7: [7, 11, 13, 14]}


def test_cosets_of_45():
    # ord_45(2) = 12; orbit sizes checked by hand: 3 -> 6 -> 12 -> 24 -> 3 has 4 elements, etc.
    sizes = {c.representative: len(c) for c in all_cosets(45)}
    assert sizes == {0: 1, 1: 12, 3: 4, 5: 6, 7: 12, 9: 4, 15: 2, 21: 4}


@given(ODD)
def test_cosets_partition(n):
    seen = [i for c in all_cosets(n) for i in c.members]
    assert sorted(seen) == list(range(n))
    for c in all_cosets(n):
        assert {(2 * i) % n for i in c.members} == set(c.members)
        assert c.representative == min(c.members)


def test_coset_of_matches_partition():
    for i in range(51):
        assert i in coset_of(51, i)


def test_minimal_polynomials_n7():
    # frozen after the first build; both cubics are the two irreducible cubics
    ctx = build_field(7)
    got = {c.representative: minimal_polynomial(ctx, c).coeffs for c in all_cosets(7)}
    assert got == {0: (1, 1), 1: (1, 0, 1, 1), 3: (1, 1, 0, 1)}


@pytest.mark.parametrize("n", [7, 15, 45, 51, 73])
def test_minimal_polynomials_multiply_to_x_n_minus_1(n):
    ctx = build_field(n)
    prod = BinaryPolynomial(1)
    for c in all_cosets(n):
        m = minimal_polynomial(ctx, c)
        assert m.degree == len(c)
        prod = prod * m
    assert prod == x_n_minus_1(n)


def test_generator_roots_are_defining_set():
    n = 45
    ctx = build_field(n)
    T = DefiningSet.from_cosets(n, [0, 1])
    g = generator_from_set(ctx, T)
    assert g.degree == 13
    assert {i for i in range(n) if field_eval(ctx, g, i) == 0} == set(T.indices)


def test_example_generator_degrees():
    assert generator_for_cosets(45, [0, 1]).degree == 13
    assert generator_for_cosets(45, [3, 5, 9, 15]).degree == 16
    assert generator_for_cosets(51, [0]).degree == 1


def test_full_set_is_x_n_minus_1():
    ctx = build_field(7)
    T = DefiningSet.from_cosets(7, [0, 1, 3])
    assert generator_from_set(ctx, T) == x_n_minus_1(7)


def test_defining_set_must_be_closed():
    with pytest.raises(ValueError):
        DefiningSet(15, frozenset({1, 2}))


def test_defining_set_json():
    T = DefiningSet.from_cosets(45, [1, 0])
    assert json.loads(T.to_json()) == {"n": 45, "cosets": [0, 1]}
    assert DefiningSet.from_json(T.to_json()) == T


def test_negate_set():
    T = DefiningSet.from_cosets(7, [1])
    assert negate_set(T) == DefiningSet.from_cosets(7, [3])


def test_coset_precheck():
    T1 = DefiningSet.from_cosets(7, [0])
    assert coset_precheck(T1, DefiningSet.from_cosets(7, [1]))
    assert not coset_precheck(T1, DefiningSet.from_cosets(7, [0, 1]))


def test_fixture_generators_vanish_on_negated_sets():
    # under the canonical field the published generators have root sets -T
    for fx in load_fixtures()[:2]:
        n = fx["n"]
        ctx = build_field(n)
        for key, g in (("t1_cosets", "g1"), ("t2_cosets", "g2")):
            T = DefiningSet.from_cosets(n, fx[key])
            poly = parse_compact(fx[g], n)
            roots = {i for i in range(n) if field_eval(ctx, poly, i) == 0}
            assert roots == set(negate_set(T).indices)
