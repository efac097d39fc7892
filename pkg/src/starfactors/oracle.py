"""Brute-force existence search for tiny orders.

This module shares nothing with the constructive pipeline beyond the core
types, so agreement between the two is meaningful evidence.

The matching is fixed to the half-period edges {x, x + v/2}. Any perfect
matching of K_v can be relabeled to this one by a vertex permutation, so no
solutions are lost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal, Optional, Sequence

from .core import Decomposition, Factor, Star

Status = Literal["found", "nonexistent", "budget-exhausted"]


@dataclass(frozen=True)
class SearchConfig:
    v: int
    budget: int = 10_000_000
    matching: Optional[tuple[tuple[int, int], ...]] = None


@dataclass
class SearchResult:
    status: Status
    decomposition: Optional[Decomposition] = None
    witness: str = ""
    nodes: int = 0
    seconds: float = 0.0
    stats: dict = field(default_factory=dict)


class _BudgetExhausted(Exception):
    pass


def _counting_obstruction(v: int) -> Optional[str]:
    if v % 2:
        return f"v={v} is odd, so K_v has no perfect matching"
    if v % 6:
        return f"v={v} is not divisible by 6, so no 5-star factor spans Z_v"
    if (3 * (v - 2)) % 5:
        return (f"each 5-star factor has 5v/6 = {5 * v // 6} edges but K_v - I has "
                f"v(v-2)/2 = {v * (v - 2) // 2} edges; 3(v-2)/5 = {3 * (v - 2)}/5 is not an integer")
    return None


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _Search:
    def __init__(self, v: int, matching: Sequence[tuple[int, int]], budget: int):
        self.v = v
        self.budget = budget
        self.nodes = 0
        self.full = (1 << v) - 1
        self.adj = [self.full & ~(1 << x) for x in range(v)]
        for a, b in matching:
            self.adj[a] &= ~(1 << b)
            self.adj[b] &= ~(1 << a)
        self.total = 3 * (v - 2) // 5
        self.factors: list[list[Star]] = []

    def _remove(self, c: int, leaves: Sequence[int]) -> None:
        for x in leaves:
            self.adj[c] &= ~(1 << x)
            self.adj[x] &= ~(1 << c)

    def _restore(self, c: int, leaves: Sequence[int]) -> None:
        for x in leaves:
            self.adj[c] |= 1 << x
            self.adj[x] |= 1 << c

    def _degrees_feasible(self, remaining: int) -> bool:
        # a vertex that is a center in a of the remaining factors and a leaf in
        # the rest has residual degree 5a + (remaining - a)
        for x in range(self.v):
            extra = self.adj[x].bit_count() - remaining
            if extra < 0 or extra % 4 or extra // 4 > remaining:
                return False
        return True

    def _centers_left(self, x: int, remaining: int) -> int:
        extra = self.adj[x].bit_count() - remaining
        if extra < 0 or extra % 4 or extra // 4 > remaining:
            return -1
        return extra // 4

    def _star_feasible(self, verts) -> bool:
        # the star's vertices are finished with the current factor
        after = self.total - len(self.factors)
        for z in verts:
            a = self._centers_left(z, after)
            if a < 0:
                return False
            if a == 0:
                # z is a leaf from now on, so each remaining neighbour must
                # still be able to serve as a center
                for y in _bits(self.adj[z]):
                    if self.adj[y].bit_count() < 5:
                        return False
        return True

    def _first_edge(self) -> Optional[tuple[int, int]]:
        for x in range(self.v):
            if self.adj[x]:
                y = (self.adj[x] & -self.adj[x]).bit_length() - 1
                return x, y
        return None

    def run(self) -> bool:
        if len(self.factors) == self.total:
            return self._first_edge() is None
        if not self._degrees_feasible(self.total - len(self.factors)):
            return False
        edge = self._first_edge()
        if edge is None:
            return False
        self.factors.append([])
        if self._fill(self.full, edge):
            return True
        self.factors.pop()
        return False

    def _place(self, free: int, edge: tuple[int, int], c: int, leaves: tuple[int, ...]) -> bool:
        x, y = edge
        verts = {c, *leaves}
        if (x in verts) != (y in verts):
            return False
        if x in verts and not (c in (x, y) and (x in leaves or y in leaves)):
            return False
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        self._remove(c, leaves)
        # vertices of this star are done for the current factor
        if not self._star_feasible(verts):
            self._restore(c, leaves)
            return False
        self.factors[-1].append(Star(c, leaves))
        mask = free
        for z in verts:
            mask &= ~(1 << z)
        if self._fill(mask, edge):
            return True
        self.factors[-1].pop()
        self._restore(c, leaves)
        return False

    def _fill(self, free: int, edge: tuple[int, int]) -> bool:
        if not free:
            return self.run()
        u = (free & -free).bit_length() - 1
        rest = free & ~(1 << u)
        # u as the center
        for leaves in combinations(_bits(self.adj[u] & rest), 5):
            if self._place(rest, edge, u, leaves):
                return True
        # u as a leaf of a later center
        for c in _bits(self.adj[u] & rest):
            others = _bits(self.adj[c] & rest & ~(1 << c))
            for more in combinations(others, 4):
                if self._place(rest, edge, c, (u, *more)):
                    return True
        return False


def exhaustive_search(cfg: SearchConfig) -> SearchResult:
    """Search for a decomposition of K_v - I into 5-star factors.

    Returns ``found`` with a decomposition, ``nonexistent`` with a witness
    (an arithmetic obstruction or an exhausted search space), or
    ``budget-exhausted`` when the node budget ran out first.
    """
    v = cfg.v
    start = time.perf_counter()
    if v < 2:
        return SearchResult("nonexistent", witness=f"v={v} is too small to carry a perfect matching")
    reason = _counting_obstruction(v)
    if reason:
        return SearchResult("nonexistent", witness=reason, seconds=time.perf_counter() - start)

    matching = cfg.matching or tuple((x, x + v // 2) for x in range(v // 2))
    search = _Search(v, matching, cfg.budget)
    try:
        ok = search.run()
    except _BudgetExhausted:
        return SearchResult("budget-exhausted", nodes=search.nodes,
                            witness=f"node budget {cfg.budget} exhausted",
                            seconds=time.perf_counter() - start)
    elapsed = time.perf_counter() - start
    if not ok:
        return SearchResult("nonexistent", nodes=search.nodes, seconds=elapsed,
                            witness="search space exhausted without a solution")
    d = Decomposition(
        v, tuple(sorted(tuple(sorted(p)) for p in matching)),
        tuple(Factor(tuple(stars)) for stars in search.factors)).normalized()
    return SearchResult("found", d, nodes=search.nodes, seconds=elapsed)
