"""Shared types and difference arithmetic on cyclic vertex sets.

Vertices are 0-based integers. ``g`` is the order of a base graph and ``v``
the order of the lifted complete graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Literal, Optional

Orientation = Literal["forward", "wrap-around"]
Label = Literal["pure", "prime"]


class StarFactorError(Exception):
    """Base class for every error raised by this package."""


class DegenerateEdgeError(StarFactorError, ValueError):
    pass


class AmbiguousTailError(StarFactorError, ValueError):
    pass


class UnsupportedParameterError(StarFactorError, ValueError):
    pass


class InadmissibleOrderError(StarFactorError, ValueError):
    def __init__(self, v: int, reason: str):
        super().__init__(f"v={v} is not admissible: {reason}")
        self.v = v
        self.reason = reason


class ConstructionDefectError(StarFactorError):
    """A construction step produced an object violating a required property.

    ``prop`` names the violated property and ``witness`` carries the offending
    difference, vertex or edge.
    """

    def __init__(self, prop: str, message: str, witness: object = None):
        super().__init__(f"{prop}: {message}")
        self.prop = prop
        self.witness = witness


@dataclass(frozen=True, slots=True)
class Star:
    center: int
    leaves: tuple[int, ...]
    # leaves whose edge to the center carries a prime label
    primed: frozenset[int] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        # distinctness is checked by the consumers; the verifier must accept hostile stars
        if not isinstance(self.leaves, tuple):
            object.__setattr__(self, "leaves", tuple(self.leaves))

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    def edges(self) -> Iterator[tuple[int, int]]:
        for leaf in self.leaves:
            yield self.center, leaf

    def is_primed(self, leaf: int) -> bool:
        return leaf in self.primed

    def translate(self, shift: int, v: int) -> "Star":
        return Star((self.center + shift) % v,
                    tuple((x + shift) % v for x in self.leaves))

    def __str__(self) -> str:
        leaves = ", ".join(f"{x}'" if x in self.primed else str(x) for x in self.leaves)
        return f"({self.center}; {leaves})"


@dataclass(frozen=True, slots=True)
class LabeledEdge:
    u: int
    w: int
    diff: int
    orientation: Orientation
    label: Optional[Label] = None


def edge_difference(u: int, w: int, g: int) -> LabeledEdge:
    """Difference of the edge {u, w} on ``g`` cyclically ordered points.

    The half-period difference g/2 counts as forward.
    """
    if u == w:
        raise DegenerateEdgeError(f"edge {{{u}, {w}}} is a loop")
    if not (0 <= u < g and 0 <= w < g):
        raise ValueError(f"edge {{{u}, {w}}} out of range for g={g}")
    gap = abs(w - u)
    if 2 * gap <= g:
        return LabeledEdge(min(u, w), max(u, w), gap, "forward")
    return LabeledEdge(min(u, w), max(u, w), g - gap, "wrap-around")


def tail_of(u: int, w: int, v: int) -> int:
    """Endpoint x of {u, w} with x + d = the other endpoint (mod v)."""
    d = edge_difference(u, w, v).diff
    if 2 * d == v:
        raise AmbiguousTailError(f"edge {{{u}, {w}}} has half-period difference {d}")
    return u if (u + d) % v == w else w


@dataclass
class AlmostStarFactor:
    g: int
    t: int
    m: int
    pure_stars: list[Star]
    mixed_star: Optional[Star]
    prime_stars: list[Star]
    little_star: Optional[Star]
    isolated: frozenset[int]

    def stars(self) -> list[Star]:
        out = list(self.pure_stars)
        if self.mixed_star is not None:
            out.append(self.mixed_star)
        return out + list(self.prime_stars)


@dataclass(frozen=True, slots=True)
class Factor:
    stars: tuple[Star, ...]

    def edges(self) -> Iterator[tuple[int, int]]:
        for s in self.stars:
            yield from s.edges()

    def is_normalized(self) -> bool:
        centers = [s.center for s in self.stars]
        return (all(a < b for a, b in zip(centers, centers[1:]))
                and all(all(x > y for x, y in zip(s.leaves, s.leaves[1:])) for s in self.stars))

    def normalized(self) -> "Factor":
        if self.is_normalized():
            return self
        return Factor(tuple(
            Star(s.center, tuple(sorted(s.leaves, reverse=True)))
            for s in sorted(self.stars, key=lambda s: s.center)))


@dataclass(frozen=True)
class Decomposition:
    v: int
    one_factor: tuple[tuple[int, int], ...]
    factors: tuple[Factor, ...]

    def normalized(self) -> "Decomposition":
        pairs = tuple(sorted((min(p), max(p)) for p in self.one_factor))
        return Decomposition(self.v, pairs, tuple(f.normalized() for f in self.factors))


@dataclass
class DifferenceCensus:
    pure: Counter = field(default_factory=Counter)
    prime: Counter = field(default_factory=Counter)

    def covered(self) -> set[int]:
        return {d for d, n in self.pure.items() if n} | {d for d, n in self.prime.items() if n}


def half_period_matching(v: int) -> tuple[tuple[int, int], ...]:
    """The perfect matching of all edges with difference v/2."""
    if v % 2:
        raise ValueError(f"v={v} is odd")
    return tuple((u, u + v // 2) for u in range(v // 2))
