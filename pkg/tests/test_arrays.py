import pytest

from starfactors.arrays import (
    BalancedStarArray,
    DifferenceLedger,
    complete_arrays,
    ledger_from_factors,
    part2_factors,
    reduced_differences,
    render_arrays,
)
from starfactors.construct import arrays_for, part1_factors
from starfactors.core import ConstructionDefectError, Factor, Star
from starfactors.direct import V42, V102


def enumerate_cells(v, stars):
    """Covered (class, difference) cells of the +6 development, by brute force."""
    cells = {}
    for j in range(v // 6):
        for s in stars:
            a = (s.center + 6 * j) % v
            for leaf in s.leaves:
                b = (leaf + 6 * j) % v
                for d in range(1, v // 2):
                    if (a + d) % v == b:
                        tail = a
                        break
                    if (b + d) % v == a:
                        tail = b
                        break
                else:
                    continue
                if d % 6:
                    cells.setdefault(tail % 6, set()).add(d)
    return cells


@pytest.fixture(scope="module")
def arrays42():
    return arrays_for(42)


@pytest.fixture(scope="module")
def arrays102():
    return arrays_for(102)


def test_reduced_differences():
    assert reduced_differences(42) == [1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 19, 20]


def test_ledger_42_matches_enumeration(arrays42):
    ledger, _ = arrays42
    expected = enumerate_cells(42, V42.part1_stars)
    assert [ledger.covered_sorted(i) for i in range(6)] == [sorted(expected.get(i, ())) for i in range(6)]
    assert ledger.covered_sorted(0) == [1, 2, 3, 4, 5, 13, 20]
    assert ledger.covered_sorted(5) == [7, 14]
    # edge {0, 28} has difference 14 and tail 28, so class 4 holds 14
    assert ledger.covered_sorted(4) == [13, 14]
    for i in (1, 2, 3):
        assert ledger.covered_sorted(i) == [13, 20]


def test_ledger_102_reference_sets(arrays102):
    ledger, _ = arrays102
    reference = {
        0: {7, 8, 9, 10, 11, 43, 50},
        1: {13, 14, 15, 16, 11, 43, 50},
        2: {19, 20, 21, 16, 17, 43, 50},
        3: {25, 26, 21, 22, 23, 43, 50},
        4: {1, 2, 9, 16, 23, 43, 44},
        5: {37, 44},
    }
    assert {i: ledger.covered[i] for i in range(6)} == reference
    assert enumerate_cells(102, V102.part1_stars) == reference


def test_t2_rows_42(arrays42):
    _, arrays = arrays42
    assert [len(a.t2_rows) for a in arrays] == [2, 3, 3, 3, 3, 3]
    assert arrays[0].t2_rows == [(7, 8, 9, 10, 11), (19, 14, 15, 16, 17)]
    assert arrays[1].t2_rows == [(1, 2, 3, 4, 5), (7, 8, 9, 10, 11), (19, 14, 15, 16, 17)]


def test_t2_rows_102(arrays102):
    _, arrays = arrays102
    assert [len(a.t2_rows) for a in arrays] == [7, 7, 7, 7, 7, 8]


@pytest.mark.parametrize("v", [42, 72, 102, 132, 162, 192, 222, 252, 282, 312, 342, 372, 402])
def test_array_partition_and_columns(v):
    _, arrays = arrays_for(v)
    universe = sorted(reduced_differences(v))
    for arr in arrays:
        assert sorted(arr.entries()) == universe
        for row in arr.t1_rows + arr.t2_rows:
            assert len(row) == 5
            for col, d in enumerate(row, start=1):
                assert d is None or d % 6 == col
        assert all(None not in row for row in arr.t2_rows)


def test_part2_factor_covers_one_class():
    arr = BalancedStarArray(3, [], [(7, 8, 9, 10, 11)])
    (f,) = part2_factors([arr], 42)
    verts = sorted(x for s in f.stars for x in s.vertices)
    assert verts == list(range(42))
    for s in f.stars:
        assert s.center % 6 == 3
        assert sorted((x - s.center) % 42 for x in s.leaves) == [7, 8, 9, 10, 11]


def test_part2_count_42(arrays42):
    _, arrays = arrays42
    assert len(part2_factors(arrays, 42)) == 17


def test_double_coverage_detected():
    f = Factor((Star(0, (1, 2, 3, 4, 5)), Star(6, (7, 8, 9, 10, 11))))
    with pytest.raises(ConstructionDefectError) as e:
        ledger_from_factors(12, [f, f])
    assert e.value.prop == "double-coverage"


def test_partial_coverage_detected():
    # one factor alone covers only part of the (class 0, difference 1) cell at v=42
    p1 = part1_factors(42)
    with pytest.raises(ConstructionDefectError) as e:
        ledger_from_factors(42, p1[:3])
    assert e.value.prop == "partial-coverage"


def test_unequal_buckets_detected(arrays42):
    good, _ = arrays42
    ledger = DifferenceLedger(42, [set(c) for c in good.covered], good.groups)
    ledger.covered[2].add(1)
    with pytest.raises(ConstructionDefectError) as e:
        complete_arrays(ledger)
    assert e.value.prop == "unequal-buckets"
    assert "class 2" in str(e.value)


def test_render(arrays42):
    _, arrays = arrays42
    text = render_arrays(arrays)
    assert text.startswith("T_0\n  T1\n")
    assert "  13   20    *    *    *" in text
    assert text.count("T_") == 6
