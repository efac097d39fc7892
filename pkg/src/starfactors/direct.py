"""Explicit decompositions for v = 12, 42 and 102.

These orders sit below the m bounds of the general base-factor families. For
v = 42 and v = 102 a single hand-built factor is developed by +6 and the
remaining edges are completed through the balanced star arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrays import DifferenceLedger, BalancedStarArray, complete_arrays, ledger_from_factors, part2_factors
from .core import Decomposition, Factor, Star, half_period_matching
from .lifting import check_spanning, develop


@dataclass(frozen=True)
class DirectCase:
    v: int
    part1_stars: tuple[Star, ...]
    needs_completion: bool


def _s(center: int, *leaves: int) -> Star:
    return Star(center, leaves)


V12_FACTORS = tuple(
    Factor((_s(i, *[(i + k) % 12 for k in range(1, 6)]),
            _s(i + 6, *[(i + 6 + k) % 12 for k in range(1, 6)])))
    for i in range(6)
)

V42 = DirectCase(42, (
    _s(36, 37, 38, 39, 40, 41),
    _s(0, 6, 12, 18, 28, 35),
    _s(1, 7, 13, 19, 29, 30),
    _s(2, 8, 14, 20, 24, 31),
    _s(3, 9, 15, 21, 25, 32),
    _s(4, 10, 16, 22, 26, 33),
    _s(5, 11, 17, 23, 27, 34),
), True)

V102 = DirectCase(102, (
    # F1
    _s(0, 6, 12, 18, 24, 30),
    _s(1, 7, 13, 19, 25, 31),
    _s(2, 8, 14, 20, 26, 32),
    _s(3, 9, 15, 21, 27, 33),
    _s(4, 10, 16, 22, 28, 34),
    _s(5, 11, 17, 23, 29, 35),
    # F2
    _s(36, 72, 78, 84, 94, 101),
    _s(37, 73, 79, 85, 95, 96),
    _s(38, 74, 80, 86, 90, 97),
    _s(39, 75, 81, 87, 91, 98),
    _s(40, 76, 82, 88, 92, 99),
    _s(41, 77, 83, 89, 93, 100),
    # F3
    _s(42, 49, 50, 51, 52, 53),
    _s(43, 54, 56, 57, 58, 59),
    _s(44, 60, 61, 63, 64, 65),
    _s(45, 66, 67, 68, 70, 71),
    _s(46, 47, 48, 55, 62, 69),
), True)


def direct_12() -> Decomposition:
    return Decomposition(12, half_period_matching(12), V12_FACTORS)


def direct_part1(case: DirectCase) -> list[Factor]:
    check_spanning(case.part1_stars, case.v)
    return develop(case.part1_stars, case.v, case.v // 6)


def direct_arrays(case: DirectCase) -> tuple[DifferenceLedger, list[BalancedStarArray]]:
    ledger = ledger_from_factors(case.v, direct_part1(case))
    return ledger, complete_arrays(ledger)


def _developed(case: DirectCase) -> Decomposition:
    part1 = direct_part1(case)
    arrays = complete_arrays(ledger_from_factors(case.v, part1))
    factors = part1 + part2_factors(arrays, case.v)
    return Decomposition(case.v, half_period_matching(case.v), tuple(factors))


def direct_42() -> Decomposition:
    return _developed(V42)


def direct_102() -> Decomposition:
    return _developed(V102)
