import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from powersum.classify import IdealPairTag, association_tag, group_by_association
from powersum.errors import NotFound
from powersum.instance import Instance
from powersum.orbits import (
    OrbitSeed, cornacchia, detect_case, lifted_key, minimal_pair_power, orbit_crosscheck, orbit_power,
    predicted_solution, representable, verify_lemma1,
)
from powersum.search import Solution, distinct_values, enumerate_solutions


def primitive_reps(D, m):
    out = []
    for y in range(1, math.isqrt(m // D) + 1):
        x2 = m - D * y * y
        x = math.isqrt(x2)
        if x * x == x2 and math.gcd(x, y) == 1:
            out.append((x, y))
    return out


@given(st.integers(1, 60), st.integers(2, 3000))
@settings(max_examples=300, deadline=None)
def test_cornacchia_against_brute_force(D, m):
    assume(D < m and math.gcd(D, m) == 1)
    for r0 in range(m):
        if (r0 * r0 + D) % m:
            continue
        got = cornacchia(D, m, r0)
        attached = [(x, y) for x, y in primitive_reps(D, m) if (x - r0 * y) % m == 0 or (x + r0 * y) % m == 0]
        if got is None:
            assert not attached
        else:
            assert got in attached


def test_lifted_key():
    s = lifted_key(3, 30, 13, 4)
    assert (s * s + 30) % 13**4 == 0 and (s - 3) % 13 == 0


def test_seed_for_ten_three_thirteen():
    inst = Instance(13, (10, 3), 9)
    seed = minimal_pair_power(IdealPairTag(30, 3), inst)
    assert seed == OrbitSeed(1, -7, 2, 30)
    assert predicted_solution(seed, 1, 13) == (3, 10, 1)
    assert predicted_solution(seed, 3, 13) == (10, 2187, 3)
    assert orbit_power(seed, 3) == (2177, 54)
    for t in range(1, 10):
        u, v = orbit_power(seed, t)
        assert u * u + 30 * v * v == 13 ** (2 * t)


def test_seed_needs_even_power():
    inst = Instance(5, (3, 2), 10)
    seed = minimal_pair_power(IdealPairTag(1, 2), inst)
    assert (seed.j, seed.D) == (2, 1)
    assert predicted_solution(seed, 1, 5) == (9, 16, 2)


def test_orbit_power_rejects_nonpositive():
    with pytest.raises(ValueError):
        orbit_power(OrbitSeed(1, 1, 4, 3), 0)
    assert orbit_power(OrbitSeed(1, 1, 4, 3), 2) == (-47, 8)


def test_seed_search_depth():
    # 25 = 3^2 + 4^2 but v^2 must be divisible by both 2 and 3, so j = 1 has no seed
    with pytest.raises(NotFound):
        minimal_pair_power(IdealPairTag(1, 2), Instance(5, (3, 2), 10), j_max=1)


@pytest.mark.parametrize(
    "value, kind, partner",
    [
        ((3, 10, 1), "case1", (10, 2187, 3)),
        ((2, 3, 1), "case2", (1, 24, 2)),
        ((4, 5, 2), "case2", (1, 80, 4)),
        ((9, 16, 2), "none", None),
        ((10, 2187, 3), "none", None),
    ],
)
def test_detect_case(value, kind, partner):
    case = detect_case(*value)
    assert case.kind == kind and case.partner == partner


def test_case_one_family_by_formula():
    # nu odd > 1 with 8A + 3 = 3^nu and 8B + 1 = 3^(nu + 1)
    for nu in (3, 5, 7, 9):
        A, B = (3**nu - 3) // 8, (3 ** (nu + 1) - 1) // 8
        case = detect_case(A, B, 1)
        assert case.kind == "case1" and case.nu == nu
        assert case.partner == (B, 3 ** (2 * nu) * A, 3)
    assert detect_case(3, 10, 1).nu == 3


def test_representable():
    inst = Instance(5, (3, 2), 10)
    assert representable((1, 24, 2), inst)
    assert not representable((1, 4, 1), inst)  # 4 uses only base 2
    assert not representable((27, 98, 3), inst)  # 98 = 2 * 7^2


@given(
    st.integers(1, 40).map(lambda k: 2 * k + 1),
    st.lists(st.integers(2, 20), min_size=1, max_size=3, unique=True).map(tuple),
)
@settings(max_examples=120, deadline=None)
def test_orbit_predictions_cover_search(c, d):
    assume(all(math.gcd(x, c) == 1 for x in d))
    inst = Instance(c, d, 6)
    sols = enumerate_solutions(inst)
    assert orbit_crosscheck(inst, sols) == []
    assert verify_lemma1(inst, sols).ok
    # the other direction: every representable prediction was found by the search
    values = set(distinct_values(sols))
    for tag in group_by_association(sols, inst).tags:
        seed = minimal_pair_power(tag, inst)
        for t in range(1, inst.z_max // seed.j + 1):
            pred = predicted_solution(seed, t, c)
            assert representable(pred, inst) == (pred in values)
            if pred in values:
                A, B, z = pred
                assert association_tag(Solution(z, A, B, (), ()), inst) == tag
