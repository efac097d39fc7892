"""Top-level construction of a decomposition of K_v - I into 5-star factors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arrays import BalancedStarArray, DifferenceLedger, complete_arrays, ledger_from_factors, part2_factors
from .base_factors import BaseParams, build_base_factor
from .core import (
    ConstructionDefectError,
    Decomposition,
    Factor,
    InadmissibleOrderError,
    half_period_matching,
)
from .direct import V42, V102, direct_12, direct_part1
from .lifting import build_base_block, develop
from .verifier import admissible, verify_decomposition

DIRECT_ROUTES = {12: "direct-12", 42: "direct-42", 102: "direct-102"}


@dataclass(frozen=True)
class ConstructPlan:
    v: int
    route: str  # "direct-12", "direct-42", "direct-102" or "general"
    t: Optional[int]
    m: Optional[int]
    part1_factors: int
    part2_factors: int

    def describe(self) -> str:
        if self.route == "general":
            return f"route=general(t={self.t}, m={self.m})"
        return f"route={self.route}"


def plan(v: int) -> ConstructPlan:
    res = admissible(v)
    if not res.admissible:
        raise InadmissibleOrderError(v, res.describe())
    total = 3 * (v - 2) // 5
    if v == 12:
        return ConstructPlan(v, "direct-12", None, None, 0, total)
    part1 = v // 6
    route = DIRECT_ROUTES.get(v, "general")
    params = BaseParams.from_g(v // 6)
    return ConstructPlan(v, route, params.t, params.m, part1, total - part1)


def part1_factors(v: int) -> list[Factor]:
    """The v/6 Part I factors (empty for v = 12)."""
    p = plan(v)
    if p.route == "direct-12":
        return []
    if p.route == "direct-42":
        return direct_part1(V42)
    if p.route == "direct-102":
        return direct_part1(V102)
    block = build_base_block(build_base_factor(BaseParams.from_g(v // 6)))
    return develop(block.stars, v, v // 6)


def arrays_for(v: int) -> tuple[DifferenceLedger, list[BalancedStarArray]]:
    p1 = part1_factors(v)
    if not p1:
        raise ValueError(f"v={v} has no Part I factors and no arrays")
    ledger = ledger_from_factors(v, p1)
    return ledger, complete_arrays(ledger)


def construct(v: int, *, verify: bool = True) -> Decomposition:
    """Build, normalize and (by default) verify a decomposition of K_v - I."""
    p = plan(v)
    if p.route == "direct-12":
        d = direct_12()
    else:
        p1 = part1_factors(v)
        arrays = complete_arrays(ledger_from_factors(v, p1))
        d = Decomposition(v, half_period_matching(v), tuple(p1 + part2_factors(arrays, v)))
    d = d.normalized()
    if verify:
        report = verify_decomposition(d)
        if not report.valid:
            first = report.errors[0]
            raise ConstructionDefectError(first.code, f"v={v}: {first.message}", first.witness)
    return d
