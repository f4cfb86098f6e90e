import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from powersum.errors import EvenModulus, Unsolvable
from powersum.grouplat import (
    box_relations, check_pq, hnf, invariants, reduce_to_box, square_root_group, subgroup_chain, unit_lattice,
)
from powersum.instance import Instance
from powersum.modmath import mult_order


def residue(d, t, c):
    out = 1
    for base, e in zip(d, t):
        out = out * pow(base, e, c) % c
    return out


def brute_parities(d, c):
    """Parity vectors of t with prod d^t == -1, scanning t_i in [0, 2*ord(d_i))."""
    boxes = [range(2 * mult_order(x, c)) for x in d]
    return {tuple(e % 2 for e in t) for t in product(*boxes) if residue(d, t, c) == c - 1}


def brute_square_roots(d, c):
    group = {1}
    frontier = {1}
    while frontier:
        frontier = {h * x % c for h in frontier for x in d} - group
        group |= frontier
    return sorted(h for h in group if h * h % c == 1)


small_instance = st.builds(
    lambda c, d: (c, d),
    st.integers(1, 60).map(lambda k: 2 * k + 1),
    st.lists(st.integers(2, 30), min_size=1, max_size=3, unique=True).map(tuple),
)


def test_examples():
    inv = invariants(Instance(13, (10, 3)))
    assert inv.U_basis == [[2, 1], [0, 3]]
    assert (inv.p, inv.q) == (2, 1)
    assert invariants(Instance(3, (2,))).p == 1
    assert check_pq(Instance(3, (2, 5))).product == 2
    with pytest.raises(Unsolvable):
        check_pq(Instance(15, (2,)))
    with pytest.raises(EvenModulus):
        unit_lattice(Instance(10, (3,)))


def test_hnf_is_canonical():
    a = hnf([[2, 1], [0, 3]], 2)
    b = hnf([[2, 4], [4, 5], [0, 6]], 2)
    assert a == b == [[2, 1], [0, 3]]
    with pytest.raises(ValueError):
        hnf([[1, 2], [2, 4]], 2)


@given(small_instance)
@settings(max_examples=150, deadline=None)
def test_box_and_group_routes_agree(inst):
    c, d = inst
    assume(all(math.gcd(x, c) == 1 for x in d))
    box = box_relations(d, c)
    group = hnf(subgroup_chain(d, c)[1], len(d))
    assert box == group
    for row in box:
        assert residue(d, row, c) == 1


@given(small_instance)
@settings(max_examples=100, deadline=None)
def test_lattice_membership_matches_brute_force(inst):
    c, d = inst
    assume(all(math.gcd(x, c) == 1 for x in d))
    basis = unit_lattice(Instance(c, d))
    boxes = [range(min(mult_order(x, c), 8) + 1) for x in d]
    for t in product(*boxes):
        in_lattice = not any(reduce_to_box(t, basis))
        assert in_lattice == (residue(d, t, c) == 1)


@given(small_instance)
@settings(max_examples=150, deadline=None)
def test_parity_classes_match_brute_force(inst):
    c, d = inst
    assume(all(math.gcd(x, c) == 1 for x in d))
    boxes = 1
    for x in d:
        boxes *= 2 * mult_order(x, c)
    assume(boxes <= 20_000)
    inv = invariants(Instance(c, d))
    expected = brute_parities(d, c)
    assert inv.p == len(expected)
    assert set(inv.parity_classes) == expected
    if inv.solvable:
        # witness is the lexicographically least t in the box prod [0, ord(d_i))
        box = product(*(range(mult_order(x, c)) for x in d))
        assert inv.witness == next(t for t in box if residue(d, t, c) == c - 1)


@given(small_instance)
@settings(max_examples=150, deadline=None)
def test_square_root_group_matches_brute_force(inst):
    c, d = inst
    assume(all(math.gcd(x, c) == 1 for x in d))
    M = square_root_group(Instance(c, d))
    assert M == brute_square_roots(d, c)
    assert invariants(Instance(c, d)).q == Fraction(len(M), 2)


@given(small_instance)
@settings(max_examples=200, deadline=None)
def test_pq_identity_small(inst):
    c, d = inst
    assume(all(math.gcd(x, c) == 1 for x in d))
    try:
        res = check_pq(Instance(c, d))
    except Unsolvable:
        assert invariants(Instance(c, d)).p == 0
        return
    assert res.ok and res.product == 2 ** (len(d) - 1)
