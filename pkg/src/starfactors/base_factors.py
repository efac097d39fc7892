"""Almost 5-star factors on g points, one constructor per isolated-vertex count t.

Each constructor places the closed-form pure stars (``P0``, ``P1``, ``P2``), the
mixed star and the little star on the excluded vertices, then fills the rest
with :func:`greedy_prime_stars`. Every factor is checked by
:func:`validate_base` before it is returned.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .core import (
    AlmostStarFactor,
    ConstructionDefectError,
    DifferenceCensus,
    Star,
    UnsupportedParameterError,
)

# g = 30m + OFFSET[t]
OFFSET = {0: 12, 1: 7, 2: 2, 3: 27, 4: 22, 5: 17}
MIN_M = {0: 0, 1: 1, 2: 1, 3: 0, 4: 0, 5: 1}


def declared_max_diff(t: int, m: int) -> int:
    return {1: 15 * m + 3, 3: 15 * m + 13, 5: 15 * m + 8,
            0: 15 * m + 5, 2: 15 * m, 4: 15 * m + 10}[t]


@dataclass(frozen=True)
class BaseParams:
    g: int
    m: int
    t: int

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1

    @classmethod
    def from_g(cls, g: int) -> "BaseParams":
        t = g % 6
        if g < OFFSET[t] or (g - OFFSET[t]) % 30:
            raise UnsupportedParameterError(f"g={g} is not of the form 30m+{OFFSET[t]}")
        return cls(g, (g - OFFSET[t]) // 30, t)

    @classmethod
    def from_tm(cls, t: int, m: int) -> "BaseParams":
        if t not in OFFSET:
            raise UnsupportedParameterError(f"t={t} is not in 0..5")
        return cls(30 * m + OFFSET[t], m, t)

    def check(self) -> None:
        if self.t not in OFFSET or self.g != 30 * self.m + OFFSET[self.t]:
            raise UnsupportedParameterError(f"inconsistent parameters {self}")
        if self.m < MIN_M[self.t]:
            raise UnsupportedParameterError(
                f"t={self.t} needs m >= {MIN_M[self.t]} (got m={self.m}); "
                f"v={6 * self.g} is handled by the direct constructions")


def _consecutive(count: int, top: Callable[[int], int]) -> list[Star]:
    # (i-1; j, j-1, j-2, j-3, j-4) for i = 1..count
    return [Star(i - 1, tuple(top(i) - k for k in range(5))) for i in range(1, count + 1)]


def _stride6(center: Callable[[int], int], top: Callable[[int], int],
             idx: Iterable[int]) -> list[Star]:
    # (c_i; j, j-6, j-12, j-18, j-24)
    return [Star(center(i), tuple(top(i) - 6 * k for k in range(5))) for i in idx]


def _mixed(center: int, pure: Sequence[int], prime: Sequence[int],
           order: Optional[Sequence[int]] = None) -> Star:
    leaves = tuple(order) if order is not None else (*pure, *prime)
    return Star(center, leaves, frozenset(prime))


def _little(center: int, leaves: Sequence[int]) -> Star:
    return Star(center, tuple(leaves), frozenset(leaves))


def greedy_prime_stars(available: Iterable[int]) -> list[Star]:
    """Smallest remaining vertex as center, five largest remaining as leaves."""
    pool = sorted(set(available))
    if len(pool) % 6:
        raise ConstructionDefectError(
            "leftover-size", f"{len(pool)} leftover vertices is not a multiple of 6", len(pool))
    out = []
    lo, hi = 0, len(pool)
    while lo < hi:
        leaves = tuple(pool[hi - 1 - k] for k in range(5))
        out.append(Star(pool[lo], leaves, frozenset(leaves)))
        lo += 1
        hi -= 5
    return out


def _assemble(p: BaseParams, pure: list[Star], mixed: Optional[Star],
              little: Optional[Star], isolated: Iterable[int]) -> AlmostStarFactor:
    isolated = frozenset(isolated)
    used = set(isolated)
    for s in pure + ([mixed] if mixed else []):
        for x in s.vertices:
            if x in used or not 0 <= x < p.g:
                raise ConstructionDefectError(
                    "partition", f"vertex {x} of closed-form star {s} reused or out of range", x)
            used.add(x)
    primes = greedy_prime_stars(x for x in range(p.g) if x not in used)
    f = AlmostStarFactor(p.g, p.t, p.m, pure, mixed, primes, little, isolated)
    validate_base(f, declared_max_diff(p.t, p.m))
    return f


def build_t1(m: int) -> AlmostStarFactor:
    p = BaseParams.from_tm(1, m)
    p.check()
    if p.odd:
        pure = _consecutive((5 * m + 1) // 2, lambda i: 15 * m + 7 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 3 + i, lambda i: 30 * m + 18 - 29 * i,
                         range(1, (m - 1) // 2 + 1))
        mixed = _mixed(15 * m + 3, [30 * m + 6, 30 * m, 30 * m - 6], [30 * m + 4, 30 * m + 3])
        isolated = [30 * m + 5]
    else:
        pure = _consecutive(5 * m // 2, lambda i: 15 * m + 4 - 5 * i)
        pure += _stride6(lambda i: 15 * m - 1 + i, lambda i: 30 * m + 29 - 29 * i,
                         range(1, min(3, m // 2) + 1))
        pure += _stride6(lambda i: 15 * m + i, lambda i: 30 * m + 30 - 29 * i,
                         range(4, m // 2 + 1))
        mixed = _mixed(15 * m + 3, [30 * m + 6, 30 * m + 5, 30 * m + 4], [30 * m + 3, 30 * m + 2])
        isolated = [30 * m + 1]
    return _assemble(p, pure, mixed, None, isolated)


def build_t3(m: int) -> AlmostStarFactor:
    p = BaseParams.from_tm(3, m)
    p.check()
    if p.odd:
        pure = [Star(15 * m + 13, tuple(range(30 * m + 26, 30 * m + 21, -1)))]
        pure += _consecutive((5 * m + 3) // 2, lambda i: 15 * m + 13 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 10 + i, lambda i: 30 * m + 25 - 29 * i,
                         range(1, min(2, (m - 1) // 2) + 1))
        pure += _stride6(lambda i: 15 * m + 11 + i, lambda i: 30 * m + 26 - 29 * i,
                         range(3, (m - 1) // 2 + 1))
        pure_leaves = [30 * m + 13, 30 * m + 7, 30 * m + 1]
        prime_leaves = [30 * m + 19, 30 * m + 18]
        mixed = _mixed(15 * m + 10, pure_leaves, prime_leaves, prime_leaves + pure_leaves)
        little = _little(15 * m + 9, [30 * m + 21, 30 * m + 20])
    else:
        pure = _consecutive((5 * m + 4) // 2, lambda i: 15 * m + 16 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 13 + i, lambda i: 30 * m + 43 - 29 * i,
                         range(1, m // 2 + 1))
        pure_leaves = [30 * m + 25, 30 * m + 24, 30 * m + 18]
        prime_leaves = [30 * m + 22, 30 * m + 23]
        mixed = _mixed(15 * m + 12, pure_leaves, prime_leaves, prime_leaves + pure_leaves)
        little = _little(15 * m + 13, [30 * m + 21, 30 * m + 26])
    return _assemble(p, pure, mixed, little, little.vertices)


def build_t5(m: int) -> AlmostStarFactor:
    p = BaseParams.from_tm(5, m)
    p.check()
    if p.odd:
        pure = _consecutive((5 * m + 3) // 2, lambda i: 15 * m + 13 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 10 + i, lambda i: 30 * m + 25 - 29 * i,
                         range(1, (m - 1) // 2 + 1))
        pure_leaves = [30 * m + 13, 30 * m + 7, 30 * m + 1]
        prime_leaves = [30 * m + 11, 30 * m + 10]
        mixed = _mixed(15 * m + 10, pure_leaves, prime_leaves,
                       [30 * m + 13, 30 * m + 11, 30 * m + 10, 30 * m + 7, 30 * m + 1])
        little = _little(15 * m + 9, [30 * m + 16, 30 * m + 15, 30 * m + 14, 30 * m + 12])
    else:
        pure = _consecutive((5 * m + 2) // 2, lambda i: 15 * m + 10 - 5 * i)
        pure.append(Star(15 * m + 7, tuple(30 * m + 7 - 6 * k for k in range(5))))
        pure += _stride6(lambda i: 15 * m + 7 + i, lambda i: 30 * m + 37 - 29 * i,
                         range(2, m // 2 + 1))
        mixed = _mixed(15 * m + 6, [30 * m + 14, 30 * m + 13, 30 * m + 12],
                       [30 * m + 11, 30 * m + 10])
        little = _little(15 * m + 8, [30 * m + 16, 30 * m + 15, 30 * m + 9, 30 * m + 8])
    return _assemble(p, pure, mixed, little, little.vertices)


def build_t0(m: int) -> AlmostStarFactor:
    p = BaseParams.from_tm(0, m)
    p.check()
    if p.odd:
        pure = [Star(15 * m + 6, (30 * m + 11, 30 * m + 10, 30 * m + 9, 30 * m + 3, 30 * m - 3))]
        pure += _consecutive((5 * m + 1) // 2, lambda i: 15 * m + 7 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 6 + i, lambda i: 30 * m + 21 - 29 * i,
                         range(1, (m - 1) // 2 + 1))
    else:
        pure = _consecutive((5 * m + 2) // 2, lambda i: 15 * m + 10 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 5 + i, lambda i: 30 * m + 35 - 29 * i,
                         range(1, m // 2 + 1))
    return _assemble(p, pure, None, None, ())


def build_t2(m: int) -> AlmostStarFactor:
    p = BaseParams.from_tm(2, m)
    p.check()
    if p.odd:
        pure = [Star(15 * m + 1, (30 * m + 1, 30 * m, 30 * m - 1, 30 * m - 2, 30 * m - 8))]
        pure += _consecutive((5 * m - 1) // 2, lambda i: 15 * m + 1 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 1 + i, lambda i: 30 * m + 16 - 29 * i,
                         range(1, (m - 1) // 2 + 1))
        little = _little(15 * m - 3, [30 * m - 3])
    else:
        pure = _consecutive(5 * m // 2, lambda i: 15 * m + 4 - 5 * i)
        pure += _stride6(lambda i: 15 * m + i, lambda i: 30 * m + 30 - 29 * i,
                         range(1, m // 2 + 1))
        little = _little(15 * m, [30 * m])
    return _assemble(p, pure, None, little, little.vertices)


def build_t4(m: int) -> AlmostStarFactor:
    p = BaseParams.from_tm(4, m)
    p.check()
    if p.odd:
        pure = [Star(15 * m + 11, (30 * m + 21, 30 * m + 20, 30 * m + 14, 30 * m + 8, 30 * m + 2))]
        pure += _consecutive((5 * m + 3) // 2, lambda i: 15 * m + 13 - 5 * i)
        # centers shifted down by one so these stars cover the multiples of 6
        pure += _stride6(lambda i: 15 * m + 11 + i, lambda i: 30 * m + 26 - 29 * i,
                         range(1, (m - 1) // 2 + 1))
        little = _little(15 * m + 9, [30 * m + 19, 30 * m + 18, 30 * m + 17])
    else:
        pure = [Star(15 * m + 11, tuple(range(30 * m + 21, 30 * m + 16, -1)))]
        pure += _consecutive((5 * m + 2) // 2, lambda i: 15 * m + 10 - 5 * i)
        pure += _stride6(lambda i: 15 * m + 11 + i, lambda i: 30 * m + 41 - 29 * i,
                         range(1, m // 2 + 1))
        little = _little(15 * m + 6, [30 * m + 16, 30 * m + 15, 30 * m + 14])
    return _assemble(p, pure, None, little, little.vertices)


BUILDERS = {0: build_t0, 1: build_t1, 2: build_t2, 3: build_t3, 4: build_t4, 5: build_t5}


def build_base_factor(params: BaseParams) -> AlmostStarFactor:
    params.check()
    return BUILDERS[params.t](params.m)


def validate_base(f: AlmostStarFactor, declared_max_diff: int) -> DifferenceCensus:
    """Check the defining properties of an almost 5-star factor.

    Raises :class:`ConstructionDefectError` naming the first violated
    property; returns the difference census otherwise.
    """
    g = f.g
    if len(f.isolated) != f.t:
        raise ConstructionDefectError(
            "isolated", f"{len(f.isolated)} isolated vertices, expected t={f.t}", sorted(f.isolated))

    seen: dict[int, Star] = {}
    for s in f.stars():
        if len(s.leaves) != 5:
            raise ConstructionDefectError("star-size", f"{s} does not have 5 leaves", s)
        for x in s.vertices:
            if not 0 <= x < g:
                raise ConstructionDefectError("partition", f"vertex {x} out of range", x)
            if x in f.isolated or x in seen:
                raise ConstructionDefectError(
                    "partition", f"vertex {x} covered twice ({s} and {seen.get(x, 'isolated')})", x)
            seen[x] = s
    missing = set(range(g)) - f.isolated - seen.keys()
    if missing:
        x = min(missing)
        raise ConstructionDefectError("partition", f"vertex {x} is not covered", x)

    if f.t >= 2:
        if f.little_star is None or set(f.little_star.vertices) != set(f.isolated):
            raise ConstructionDefectError(
                "little-star", f"little star {f.little_star} does not span {sorted(f.isolated)}")
        if len(f.little_star.leaves) != f.t - 1:
            raise ConstructionDefectError("little-star", f"little star {f.little_star} has wrong size")
    elif f.little_star is not None:
        raise ConstructionDefectError("little-star", f"t={f.t} admits no little star")

    if f.mixed_star is not None:
        n_prime = sum(1 for x in f.mixed_star.leaves if f.mixed_star.is_primed(x))
        if n_prime != 2:
            raise ConstructionDefectError(
                "mixed-star", f"{f.mixed_star} has {n_prime} prime leaves, expected 2", f.mixed_star)

    census = DifferenceCensus()
    prime_edges: dict[int, tuple[int, int]] = {}

    def record(s: Star, prime_star: bool) -> None:
        for leaf in s.leaves:
            gap = abs(leaf - s.center)
            if 2 * gap > g:
                raise ConstructionDefectError(
                    "wrap-around", f"edge {{{s.center}, {leaf}}} of {s} wraps around", (s.center, leaf))
            if prime_star or s.is_primed(leaf):
                census.prime[gap] += 1
                if gap in prime_edges:
                    raise ConstructionDefectError(
                        "prime-distinct",
                        f"prime difference {gap} used by {prime_edges[gap]} and {(s.center, leaf)}", gap)
                prime_edges[gap] = (s.center, leaf)
            else:
                census.pure[gap] += 1
                if census.pure[gap] > 1:
                    raise ConstructionDefectError(
                        "pure-once", f"pure difference {gap} appears twice", gap)

    for s in f.pure_stars:
        record(s, False)
    if f.mixed_star is not None:
        record(f.mixed_star, False)
    for s in f.prime_stars:
        record(s, True)
    if f.little_star is not None:
        record(f.little_star, True)

    absent = [d for d in range(1, declared_max_diff + 1) if d not in census.covered()]
    if absent:
        raise ConstructionDefectError(
            "coverage", f"difference {absent[0]} is not covered (missing {absent})", absent[0])
    return census
