import math
from collections import defaultdict
from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from powersum.errors import DepthInvalid, NotCoprime
from powersum.instance import Instance
from powersum.search import (
    distinct_values, enumerate_general, enumerate_solutions, products_below, representations, two_power_search,
)


def exponent_table(d, bound):
    """value -> every exponent vector e with prod d^e < bound (plain nested loops)."""
    limits = [int(math.log(bound, x)) + 2 for x in d]
    table = defaultdict(list)
    for e in product(*(range(k) for k in limits)):
        v = math.prod(x**k for x, k in zip(d, e))
        if v < bound:
            table[v].append(e)
    return table


def naive_solutions(c, d, z_max, r=1, s=1):
    """Full scan over every X below c^z; independent of the side-assignment search."""
    table = exponent_table(d, c**z_max)
    out = set()
    for z in range(1, z_max + 1):
        cz = c**z
        for X in range(1, cz // r + 1):
            rem = cz - r * X
            if rem <= 0 or rem % s or X not in table or rem // s not in table:
                continue
            Y = rem // s
            if r == s == 1 and X >= Y:
                continue
            for ex in table[X]:
                for ey in table[Y]:
                    if all(min(a, b) == 0 < max(a, b) for a, b in zip(ex, ey)):
                        out.add((z, X, Y, ex, ey))
    return sorted(out)


def as_tuples(sols):
    return [(s.z, s.A, s.B, s.x, s.y) for s in sols]


@pytest.mark.parametrize(
    "c, d, z_max, expected",
    [
        (5, (3, 2), 10, [(2, 3, 1), (1, 24, 2), (9, 16, 2)]),
        (3, (5, 2), 10, [(4, 5, 2), (2, 25, 3), (1, 80, 4)]),
        (13, (10, 3), 9, [(3, 10, 1), (10, 2187, 3)]),
        (3, (2,), 10, [(1, 2, 1), (1, 8, 2)]),
        (7, (3, 2), 10, [(1, 6, 1), (3, 4, 1), (1, 48, 2)]),
        (15, (2,), 10, []),
    ],
)
def test_known_instances(c, d, z_max, expected):
    assert distinct_values(enumerate_solutions(Instance(c, d, z_max))) == expected


def test_general_form_three_x_plus_y():
    # 3*1 + 2 = 5 and 3*8 + 1 = 25; the second also obeys the support rule
    sols = enumerate_general(Instance(5, (2,), 4, r=3, s=1))
    assert as_tuples(sols) == [(1, 1, 2, (0,), (1,)), (2, 8, 1, (3,), (0,))]
    assert as_tuples(sols) == naive_solutions(5, (2,), 4, r=3, s=1)


def test_dependent_bases_give_one_solution_per_exponent_tuple():
    sols = enumerate_solutions(Instance(5, (2, 4), 2))
    # 2^a 4^b has several exponent forms; each valid split is its own Solution
    assert as_tuples(sols) == naive_solutions(5, (2, 4), 2)


@given(
    st.integers(1, 20).map(lambda k: 2 * k + 1),
    st.lists(st.integers(2, 12), min_size=1, max_size=3, unique=True).map(tuple),
    st.integers(1, 4),
)
@settings(max_examples=150, deadline=None)
def test_matches_naive_scan(c, d, z_max):
    assume(all(math.gcd(x, c) == 1 for x in d))
    assume(c**z_max <= 200_000)
    assert as_tuples(enumerate_solutions(Instance(c, d, z_max))) == naive_solutions(c, d, z_max)


@given(
    st.integers(2, 6), st.integers(1, 6),
    st.integers(1, 8).map(lambda k: 2 * k + 1),
    st.lists(st.integers(2, 9), min_size=1, max_size=2, unique=True).map(tuple),
)
@settings(max_examples=100, deadline=None)
def test_general_matches_naive_scan(r, s, c, d):
    assume(math.gcd(r * s, c) == 1 and all(math.gcd(x, c) == 1 for x in d))
    z_max = 3 if c <= 9 else 2
    sols = enumerate_general(Instance(c, d, z_max, r, s))
    assert as_tuples(sols) == naive_solutions(c, d, z_max, r, s)


@given(
    st.integers(1, 40).map(lambda k: 2 * k + 1),
    st.lists(st.integers(2, 20), min_size=1, max_size=3, unique=True).map(tuple),
)
@settings(max_examples=100, deadline=None)
def test_solution_invariants(c, d):
    assume(all(math.gcd(x, c) == 1 for x in d))
    sols = enumerate_solutions(Instance(c, d, 6))
    assert sols == sorted(sols)
    values = distinct_values(sols)
    assert len(values) <= len(sols)
    for s in sols:
        assert s.A + s.B == c**s.z and s.A < s.B
        assert math.gcd(s.A, s.B) == 1
        assert all(min(a, b) == 0 < max(a, b) for a, b in zip(s.x, s.y))
    # a deeper search only adds solutions
    deeper = distinct_values(enumerate_solutions(Instance(c, d, 7)))
    assert set(values) <= set(deeper)


def test_products_and_representations():
    assert products_below((2, 3), [0, 1], 20) == [(6, (1, 1)), (12, (2, 1)), (18, (1, 2))]
    assert representations(16, (2, 4), [0, 1]) == [(2, 1)]
    assert representations(16, (2, 4), [0]) == [(4, 0)]
    assert representations(16, (2, 4), [1]) == [(0, 2)]
    assert representations(15, (2, 4), [0, 1]) == []


def test_errors():
    with pytest.raises(DepthInvalid):
        Instance(5, (2,), 0)
    with pytest.raises(NotCoprime):
        enumerate_general(Instance(5, (2,), 3, r=5, s=1))


def test_two_power_search():
    assert two_power_search(1, 1, 3, 10, 13, 40, 40, 12) == [(1, 1, 1), (7, 1, 3)]
    assert two_power_search(1, 1, 2, 89, 91, 40, 40, 12) == [(1, 1, 1), (13, 1, 2)]
    # oracle: direct scan of all (x, y, z)
    direct = sorted(
        ((x, y, z) for z in range(1, 7) for x in range(1, 15) for y in range(1, 15) if 2 * 3**x + 5**y == 7**z),
        key=lambda t: (t[2], t[0]),
    )
    assert two_power_search(2, 1, 3, 5, 7, 14, 14, 6) == direct
