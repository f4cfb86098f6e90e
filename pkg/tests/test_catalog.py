import pytest

from powersum.catalog import (
    FAMILIES, anomalous_catalog, check_entry, family_instances, mersenne_quotient, mersenne_quotient_scan,
    pair_transform,
)
from powersum.errors import ParamOutOfRange, PremiseFails
from powersum.instance import Instance
from powersum.search import distinct_values, enumerate_solutions

RANGES = {"k": range(2, 7), "m": range(2, 7), "r": range(1, 9), "g": range(3, 9)}


def ranges_for(name):
    return {p: [v for v in RANGES[p] if v >= lo] for p, lo in FAMILIES[name]}


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_verify(name):
    entries = family_instances(name, **ranges_for(name))
    assert entries and all(e.verified for e in entries)


def test_family_examples():
    (f1,) = family_instances("F1", k=[2], m=[2])
    assert (f1.d, f1.c, f1.values()) == ((2, 3), 7, [(3, 4, 1), (1, 6, 1)])
    (f5,) = family_instances("F5", r=[2])
    assert (f5.d, f5.c, f5.values()) == ((3, 5), 2, [(3, 5, 3), (1, 15, 4)])
    (t2,) = family_instances("T2", g=[3])
    assert (t2.d, t2.c, t2.values()) == ((3, 2), 7, [(3, 4, 1), (1, 6, 1), (1, 48, 2)])
    assert family_instances("F2d", r=[3]) == []
    (f2d,) = family_instances("F2d", r=[2])
    assert f2d.d == (4, 5) and f2d.verified


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_search_finds_family_solutions(name):
    for e in family_instances(name, **ranges_for(name)):
        if e.c % 2 == 0 or e.c > 10**6:
            continue
        z_max = 2 * max(z for _, _, z in e.solutions)
        found = set(distinct_values(enumerate_solutions(Instance(e.c, e.d, z_max))))
        assert set(e.values()) <= found, e


def test_family_parameter_errors():
    with pytest.raises(ParamOutOfRange):
        family_instances("F1", k=[1], m=[2])
    with pytest.raises(ParamOutOfRange):
        family_instances("F9", r=[2])
    with pytest.raises(ParamOutOfRange):
        family_instances("F2", g=[3])


def test_anomalous():
    entries = anomalous_catalog()
    assert len(entries) == 14 and all(e.verified for e in entries)
    assert (2, 11) in [e.d for e in entries]
    assert not check_entry((2, 3), 5, [((1, 0), (0, 1), 2)])
    assert not check_entry((2, 3), 5, [((1, 1), (0, 0), 1)])


def test_pair_transform():
    res = pair_transform(5, 11, 56, 1, 1, 5, 2)
    assert res.triple == (5, 56, 15681) and res.verified
    assert res.sums == ((15680, 1), (15625, 56))
    # 2*1 + 1 = 3 and 2 + 1 = 3 give 2*3 + 1 = 4 + 3 = 7
    assert pair_transform(2, 1, 3, 1, 1, 1, 1).triple == (2, 3, 7)
    # the other listed parameter tuples; each output is a genuine double solution
    assert pair_transform(2, 1, 3, 1, 1, 3, 2).sums == ((18, 1), (16, 3))  # 2*9 + 1 = 2^4 + 3 = 19
    assert pair_transform(3, 5, 2, 1, 4, 3, 5).triple == (3, 2, 97)
    assert pair_transform(5, 3, 2, 1, 4, 3, 7).triple == (5, 2, 641)
    with pytest.raises(PremiseFails):
        pair_transform(5, 11, 56, 0, 1, 5, 2)


def test_mersenne_quotients():
    assert mersenne_quotient(3, 1) == 73
    assert mersenne_quotient(3, 2) == 262657
    scan = {(m.p, m.t): m for m in mersenne_quotient_scan([3, 5, 7], t_max=2)}
    assert scan[(3, 1)].verdict == scan[(3, 2)].verdict == scan[(7, 1)].verdict == "prime"
    assert scan[(7, 1)].value == 4432676798593
    assert scan[(5, 1)].verdict == "composite" and scan[(5, 1)].factor == 601
    assert 1082401 == 601 * 1801
    for (p, t), m in scan.items():
        if m.value is not None:
            assert m.value * (2 ** (p**t) - 1) == 2 ** (p ** (t + 1)) - 1


def test_mersenne_scan_skips_large():
    (m,) = mersenne_quotient_scan([59], 1, digit_limit=400)
    assert m.verdict == "skipped" and m.value is None and m.digits > 400
