"""Decompositions of K_v minus a perfect matching into 5-star factors, v = 12 (mod 30)."""

from .construct import ConstructPlan, arrays_for, construct, plan
from .core import (
    AlmostStarFactor,
    ConstructionDefectError,
    Decomposition,
    Factor,
    InadmissibleOrderError,
    Star,
    StarFactorError,
    UnsupportedParameterError,
    edge_difference,
    tail_of,
)
from .oracle import SearchConfig, exhaustive_search
from .serialize import dumps, loads
from .verifier import VerifyReport, admissible, factor_count, verify_decomposition

__all__ = [
    "AlmostStarFactor", "ConstructPlan", "ConstructionDefectError", "Decomposition",
    "Factor", "InadmissibleOrderError", "SearchConfig", "Star", "StarFactorError",
    "UnsupportedParameterError", "VerifyReport", "admissible", "arrays_for", "construct",
    "dumps", "edge_difference", "exhaustive_search", "factor_count", "loads", "plan",
    "tail_of", "verify_decomposition",
]
