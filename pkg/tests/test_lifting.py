import pytest

from starfactors.base_factors import MIN_M, OFFSET, BaseParams, build_base_factor
from starfactors.core import ConstructionDefectError, Star, tail_of
from starfactors.lifting import (
    MalformedMixedStarError,
    build_base_block,
    check_spanning,
    develop,
    lift_mixed,
    lift_prime,
    lift_pure,
    orbit,
    patch_stars,
)


def primed(center, *leaves, primes=()):
    return Star(center, leaves, frozenset(primes))


def test_lift_pure():
    assert lift_pure(Star(1, (6, 5, 4, 3, 2)), 3) == Star(9, (39, 33, 27, 21, 15))
    assert lift_pure(Star(0, (5, 4, 3, 2, 1)), 0) == Star(0, (30, 24, 18, 12, 6))


M = primed(18, 36, 30, 24, 34, 33, primes=(34, 33))


def test_lift_mixed():
    assert lift_mixed(M, 0) == Star(108, (216, 180, 144, 205, 200))
    s = lift_mixed(M, 5)
    assert s == Star(113, (221, 185, 149, 204, 199))
    # the pure part at i=5
    assert s.center == 113 and s.leaves[:3] == (221, 185, 149)


def test_lift_mixed_prime_differences():
    s = lift_mixed(M, 0)
    assert s.leaves[3] - s.center == 6 * (34 - 18) + 1
    assert s.leaves[4] - s.center == 6 * (33 - 18) + 2


def test_lift_mixed_rejects_bad_split():
    with pytest.raises(MalformedMixedStarError):
        lift_mixed(primed(18, 36, 30, 24, 34, 33, primes=(34,)), 0)


def test_lift_prime():
    p = primed(14, 20, 19, 17, 16, 15, primes=(20, 19, 17, 16, 15))
    assert lift_prime(p, 4) == Star(88, (125, 114, 103, 98, 93))
    q = primed(19, 32, 31, 29, 28, 27, primes=(32, 31, 29, 28, 27))
    s = lift_prime(q, 0)
    assert s == Star(114, (193, 188, 177, 172, 167))
    assert [x - s.center for x in s.leaves] == [79, 74, 63, 58, 53]
    assert [(x - s.center) % 6 for x in s.leaves] == [1, 2, 3, 4, 5]


def test_prime_copies_cover_each_position_once_per_class():
    p = primed(19, 32, 31, 29, 28, 27, primes=(32, 31, 29, 28, 27))
    copies = [lift_prime(p, i) for i in range(6)]
    verts = [x for s in copies for x in s.vertices]
    assert len(verts) == len(set(verts)) == 36
    assert {x // 6 for x in verts} == {19, 32, 31, 29, 28, 27}


def test_shared_prime_center_fails_spanning():
    """With a common center 6c' the six copies collide at that vertex."""
    f = build_base_factor(BaseParams(37, 1, 1))
    stars = []
    for s in f.pure_stars:
        stars += [lift_pure(s, i) for i in range(6)]
    stars += [lift_mixed(f.mixed_star, i) for i in range(6)]
    for s in f.prime_stars:
        stars += [lift_prime(s, i, shared_center=True) for i in range(6)]
    stars += patch_stars(1, sorted(f.isolated))
    with pytest.raises(ConstructionDefectError) as e:
        check_spanning(stars, 222)
    assert e.value.prop == "spanning"


def test_patch_t1():
    assert patch_stars(1, [35]) == [Star(210, (211, 212, 213, 214, 215))]


def test_patch_t3():
    assert patch_stars(3, [13, 21, 26]) == [
        Star(78, (127, 128, 129, 130, 131)),
        Star(79, (156, 158, 159, 160, 161)),
        Star(80, (81, 82, 83, 126, 157)),
    ]


def test_patch_t2_corrected_leaf():
    stars = patch_stars(2, [12, 27])
    assert stars == [Star(72, (163, 164, 165, 166, 167)), Star(73, (74, 75, 76, 77, 162))]
    assert sorted(x for s in stars for x in s.vertices) == list(range(72, 78)) + list(range(162, 168))


@pytest.mark.parametrize("t, xs", [
    (2, [12, 27]), (3, [13, 21, 26]), (4, [6, 14, 15, 16]), (5, [8, 20, 30, 40, 50])])
def test_patch_covers_excluded_blocks(t, xs):
    stars = patch_stars(t, xs)
    assert len(stars) == t
    verts = sorted(x for s in stars for x in s.vertices)
    assert verts == sorted(6 * x + r for x in xs for r in range(6))


def test_standard_t3_patch_hits_half_period_at_162():
    """At v=162 the standard t=3 patch joins two vertices v/2 apart."""
    f = build_base_factor(BaseParams.from_g(27))
    assert 2 * (max(f.isolated) - min(f.isolated)) + 1 == 27
    plain = patch_stars(3, sorted(f.isolated))
    assert any(2 * abs(x - s.center) == 162 for s in plain for x in s.leaves)
    fixed = patch_stars(3, sorted(f.isolated), g=27)
    assert not any(2 * abs(x - s.center) == 162 for s in fixed for x in s.leaves)
    assert sorted(x for s in fixed for x in s.vertices) == sorted(x for s in plain for x in s.vertices)


@pytest.mark.parametrize("g, count", [(12, 12), (37, 37), (47, 47)])
def test_base_block_sizes(g, count):
    block = build_base_block(build_base_factor(BaseParams.from_g(g)))
    assert block.v == 6 * g
    assert len(block.stars) == count
    assert len(block.provenance) == count


def supported_g(limit=1000):
    for t, off in OFFSET.items():
        m = MIN_M[t]
        while 30 * m + off <= limit:
            yield 30 * m + off
            m += 1


@pytest.mark.parametrize("g", sorted(supported_g()))
def test_base_block_properties(g):
    f = build_base_factor(BaseParams.from_g(g))
    block = build_base_block(f)
    v = block.v
    verts = sorted(x for s in block.stars for x in s.vertices)
    assert verts == list(range(v))
    cells = set()
    for s, prov in zip(block.stars, block.provenance):
        for slot, leaf in enumerate(s.leaves, start=1):
            d = min((leaf - s.center) % v, (s.center - leaf) % v)
            assert 2 * d != v
            if prov == "pure-lift":
                assert d % 6 == 0
            elif prov == "prime-lift":
                assert d % 6 == slot
            elif prov == "mixed-lift" and slot > 3:
                assert d % 6 in (1, 2)
            if prov in ("prime-lift", "mixed-lift") and not (prov == "mixed-lift" and slot <= 3):
                assert d % 6 != 0
            # one edge per (difference, tail class) inside the block
            cell = (d, tail_of(s.center, leaf, v) % 6)
            assert cell not in cells
            cells.add(cell)


def test_develop_42_difference_one_orbit():
    from starfactors.direct import V42
    factors = develop(V42.part1_stars, 42, 7)
    assert len(factors) == 7
    ones = {(s.center, x) for f in factors for s in f.stars for x in s.leaves
            if min((x - s.center) % 42, (s.center - x) % 42) == 1}
    assert len(ones) == 7
    assert {tail_of(a, b, 42) % 6 for a, b in ones} == {0}


def test_develop_count_one_is_identity():
    block = [Star(0, (1, 2, 3, 4, 5)), Star(6, (7, 8, 9, 10, 11))]
    (f,) = develop(block, 12, 1)
    assert f.stars == (Star(0, (5, 4, 3, 2, 1)), Star(6, (11, 10, 9, 8, 7)))


def test_develop_rejects_too_many():
    with pytest.raises(ValueError):
        develop([Star(0, (1, 2, 3, 4, 5))], 12, 3)


def test_orbit_covers_one_class_per_difference():
    f = orbit(Star(0, (7, 8, 9, 10, 11)), 42)
    assert len(f.stars) == 7
    edges = [(s.center, x) for s in f.stars for x in s.leaves]
    for d in range(7, 12):
        with_d = [(a, b) for a, b in edges if (b - a) % 42 == d]
        assert len(with_d) == 7
        assert {tail_of(a, b, 42) % 6 for a, b in with_d} == {0}
