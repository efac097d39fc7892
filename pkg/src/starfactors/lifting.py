"""Lift an almost 5-star factor on g points to a 5-star factor on 6g points.

Base vertex x becomes the six vertices 6x, ..., 6x+5. Pure stars keep every
vertex in one residue class, prime leaves are spread over the other five
classes, and the 6t vertices over the isolated set are covered by patch
stars. Development by +6 (mod v) then gives g factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import numpy as np

from .core import AlmostStarFactor, ConstructionDefectError, Factor, Star, StarFactorError

Provenance = Literal["pure-lift", "mixed-lift", "prime-lift", "patch"]


class MalformedMixedStarError(StarFactorError, ValueError):
    pass


@dataclass(frozen=True)
class BaseBlock:
    v: int
    stars: tuple[Star, ...]
    provenance: tuple[Provenance, ...]


def lift_pure(s: Star, i: int) -> Star:
    return Star(6 * s.center + i, tuple(6 * x + i for x in s.leaves))


def lift_mixed(mst: Star, i: int) -> Star:
    pure = [x for x in mst.leaves if not mst.is_primed(x)]
    prime = [x for x in mst.leaves if mst.is_primed(x)]
    if len(pure) != 3 or len(prime) != 2:
        raise MalformedMixedStarError(
            f"mixed star {mst} needs 3 pure and 2 prime leaves, has {len(pure)} and {len(prime)}")
    return Star(6 * mst.center + i,
                (*(6 * x + i for x in pure),
                 6 * prime[0] + (i + 1) % 6,
                 6 * prime[1] + (i + 2) % 6))


def lift_prime(p: Star, i: int, *, shared_center: bool = False) -> Star:
    """Leaf slot j (1-based) goes to residue (i+j) mod 6, the center to residue i.

    ``shared_center`` puts every copy on the common center 6c, which does
    not give vertex-disjoint copies; it exists for regression tests only.
    """
    center = 6 * p.center + (0 if shared_center else i)
    return Star(center, tuple(6 * x + (j + i) % 6 for j, x in enumerate(p.leaves, start=1)))


def patch_stars(t: int, isolated: Sequence[int], g: Optional[int] = None) -> list[Star]:
    """Stars covering {6x + r : x isolated, r in 0..5}.

    With ``g`` given, t = 3 factors whose little star spans difference
    (g-1)/2 get a rearranged patch: the standard one would join 6x1+1 to
    6x3+4, an edge of difference exactly v/2.
    """
    xs = sorted(isolated)
    if len(xs) != t:
        raise ValueError(f"t={t} needs {t} isolated vertices, got {xs}")
    if t == 0:
        return []
    if t == 1:
        (x,) = xs
        return [Star(6 * x, tuple(6 * x + r for r in range(1, 6)))]

    b = [6 * x for x in xs]
    # first star: lowest vertex over x1 joined to the upper five over x2
    out = [Star(b[0], tuple(b[1] + r for r in range(1, 6)))]
    if t == 2:
        out.append(Star(b[0] + 1, (b[0] + 2, b[0] + 3, b[0] + 4, b[0] + 5, b[1])))
    elif t == 3 and g is not None and 2 * (xs[2] - xs[0]) + 1 == g:
        out.append(Star(b[0] + 1, (b[0] + 2, b[0] + 3, b[0] + 4, b[0] + 5, b[1])))
        out.append(Star(b[2], tuple(b[2] + r for r in range(1, 6))))
    elif t == 3:
        out.append(Star(b[0] + 1, (b[2], b[2] + 2, b[2] + 3, b[2] + 4, b[2] + 5)))
        out.append(Star(b[0] + 2, (b[0] + 3, b[0] + 4, b[0] + 5, b[1], b[2] + 1)))
    elif t == 4:
        out.append(Star(b[0] + 1, (b[2] + 2, b[2] + 3, b[2] + 4, b[2] + 5, b[2])))
        out.append(Star(b[0] + 2, (b[3] + 3, b[3] + 4, b[3] + 5, b[3], b[3] + 1)))
        out.append(Star(b[0] + 3, (b[0] + 4, b[0] + 5, b[1], b[2] + 1, b[3] + 2)))
    elif t == 5:
        out.append(Star(b[0] + 1, (b[2], b[2] + 2, b[2] + 3, b[2] + 4, b[2] + 5)))
        out.append(Star(b[0] + 2, (b[3], b[3] + 1, b[3] + 3, b[3] + 4, b[3] + 5)))
        out.append(Star(b[0] + 3, (b[4], b[4] + 1, b[4] + 2, b[4] + 4, b[4] + 5)))
        out.append(Star(b[0] + 4, (b[0] + 5, b[1], b[2] + 1, b[3] + 2, b[4] + 3)))
    else:
        raise ValueError(f"no patch stars for t={t}")
    return out


def check_spanning(stars: Sequence[Star], v: int) -> None:
    owner: dict[int, Star] = {}
    for s in stars:
        for x in s.vertices:
            if not 0 <= x < v:
                raise ConstructionDefectError("spanning", f"vertex {x} of {s} out of range", x)
            if x in owner:
                raise ConstructionDefectError(
                    "spanning", f"vertex {x} covered by {owner[x]} and {s}", x)
            owner[x] = s
    if len(owner) != v:
        x = min(set(range(v)) - owner.keys())
        raise ConstructionDefectError("spanning", f"vertex {x} is not covered", x)


def build_base_block(f: AlmostStarFactor) -> BaseBlock:
    stars: list[Star] = []
    prov: list[Provenance] = []
    for s in f.pure_stars:
        for i in range(6):
            stars.append(lift_pure(s, i))
            prov.append("pure-lift")
    if f.mixed_star is not None:
        for i in range(6):
            stars.append(lift_mixed(f.mixed_star, i))
            prov.append("mixed-lift")
    for s in f.prime_stars:
        for i in range(6):
            stars.append(lift_prime(s, i))
            prov.append("prime-lift")
    for s in patch_stars(f.t, sorted(f.isolated), f.g):
        stars.append(s)
        prov.append("patch")
    v = 6 * f.g
    check_spanning(stars, v)
    for s in stars:
        for leaf in s.leaves:
            if 2 * abs(leaf - s.center) == v:
                raise ConstructionDefectError(
                    "half-period", f"edge {{{s.center}, {leaf}}} has difference v/2", (s.center, leaf))
    return BaseBlock(v, tuple(stars), tuple(prov))


def stars_from_arrays(centers: np.ndarray, leaves: np.ndarray) -> tuple[Star, ...]:
    """Stars sorted by center with leaves in descending order."""
    order = np.argsort(centers, kind="stable")
    cs = centers[order].tolist()
    ls = (-np.sort(-leaves[order], axis=1)).tolist()
    return tuple(Star(c, tuple(row)) for c, row in zip(cs, ls))


def develop(block: Sequence[Star], v: int, count: int) -> list[Factor]:
    """Factors block + 6j (mod v) for j = 0..count-1, each normalized."""
    if 6 * count > v:
        raise ValueError(f"count={count} exceeds v/6 for v={v}")
    centers = np.array([s.center for s in block], dtype=np.int64)
    leaves = np.array([s.leaves for s in block], dtype=np.int64)
    return [Factor(stars_from_arrays((centers + 6 * j) % v, (leaves + 6 * j) % v))
            for j in range(count)]


def orbit(s: Star, v: int) -> Factor:
    """The v/6 translates of one star by multiples of 6, as a single factor."""
    shifts = 6 * np.arange(v // 6, dtype=np.int64)
    centers = (s.center + shifts) % v
    leaves = (np.array(s.leaves, dtype=np.int64)[None, :] + shifts[:, None]) % v
    return Factor(stars_from_arrays(centers, leaves))
