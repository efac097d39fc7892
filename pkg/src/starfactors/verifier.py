"""Admissibility and edge-exact verification of claimed decompositions.

Nothing here depends on the construction modules, so the verifier can act as
an independent check on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .core import Decomposition

# the pair table holds v(v-1)/2 counters; this keeps it near 150 MB
MAX_ORDER = 6000


@dataclass(frozen=True)
class AdmissibilityResult:
    v: int
    admissible: bool
    reason: str  # "ok", "v-odd", "v-not-div-6", "v-minus-2-not-div-5"
    g: Optional[int] = None
    m: Optional[int] = None
    t: Optional[int] = None
    # every failing condition in chain order; reason is the first of these
    failures: tuple[str, ...] = ()

    def describe(self, all_failures: bool = False) -> str:
        codes = self.failures if all_failures and self.failures else (self.reason,)
        return "; ".join(_REASON_TEXT[c] for c in codes)


_REASON_TEXT = {
    "ok": "admissible",
    "v-odd": "v is odd, so K_v has no perfect matching",
    "v-not-div-6": "v is not divisible by 6",
    "v-minus-2-not-div-5": "v-2 not divisible by 5",
}


def admissible(v: int) -> AdmissibilityResult:
    if v < 1:
        raise ValueError(f"v must be positive, got {v}")
    failures = tuple(code for code, bad in (
        ("v-odd", v % 2),
        ("v-not-div-6", v % 6),
        ("v-minus-2-not-div-5", (v - 2) % 5),
    ) if bad)
    if failures:
        return AdmissibilityResult(v, False, failures[0], failures=failures)
    g = v // 6
    return AdmissibilityResult(v, True, "ok", g, g // 30, g % 6)


def factor_count(v: int) -> int:
    res = admissible(v)
    if not res.admissible:
        raise ValueError(f"v={v} is not admissible: {res.describe()}")
    return 3 * (v - 2) // 5


@dataclass
class VerifyError:
    code: str
    message: str
    witness: Any = None


@dataclass
class VerifyReport:
    valid: bool
    errors: list[VerifyError] = field(default_factory=list)
    stats: dict[str, Any] = field(default_factory=dict)

    def codes(self) -> set[str]:
        return {e.code for e in self.errors}


def _pair_index(a: np.ndarray, b: np.ndarray, v: int) -> np.ndarray:
    """Index of {a, b} among the v(v-1)/2 pairs in lexicographic order."""
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    return lo * (2 * v - lo - 1) // 2 + (hi - lo - 1)


def _pair_from_index(idx: int, v: int) -> tuple[int, int]:
    lo = 0
    while idx >= v - 1 - lo:
        idx -= v - 1 - lo
        lo += 1
    return lo, lo + 1 + idx


def verify_decomposition(d: Decomposition, max_witnesses: int = 5) -> VerifyReport:
    """Check a decomposition of K_v into one perfect matching and 5-star factors.

    All failures are reported, each error code with up to ``max_witnesses``
    examples. Nothing is raised for malformed content.
    """
    v = d.v
    errors: list[VerifyError] = []
    extra_cover: dict[int, Optional[np.ndarray]] = {}

    def err(code: str, message: str, witness: Any = None) -> None:
        if sum(e.code == code for e in errors) < max_witnesses:
            errors.append(VerifyError(code, message, witness))

    if isinstance(v, bool) or not isinstance(v, int) or v < 2:
        return VerifyReport(False, [VerifyError("order", f"invalid order {v!r}")], {})
    if v > MAX_ORDER:
        return VerifyReport(False, [VerifyError(
            "order", f"order {v} exceeds the verifier limit {MAX_ORDER}", v)], {})

    # (1) labels in range, gathered into flat arrays on the way
    us: list[int] = []
    ws: list[int] = []
    for k, (a, b) in enumerate(d.one_factor):
        if not (0 <= a < v and 0 <= b < v):
            err("range", f"matching pair {k} = {{{a}, {b}}} out of range", (a, b))
        elif a == b:
            err("loop", f"matching pair {k} is a loop at {a}", (a, b))
        else:
            us.append(a)
            ws.append(b)
    n_matching = len(us)

    # (2) perfect matching
    if 2 * len(d.one_factor) != v:
        err("matching", f"one-factor has {len(d.one_factor)} pairs, expected {v // 2}",
            len(d.one_factor))
    deg = np.bincount(np.array(us + ws, dtype=np.int64), minlength=v) if us else np.zeros(v, np.int64)
    for x in np.flatnonzero(deg != 1)[:max_witnesses]:
        err("matching", f"vertex {int(x)} lies on {int(deg[x])} matching edges", int(x))

    # (3) each factor: v/6 stars of five distinct leaves partitioning Z_v
    centers: list[int] = []
    leaf_rows: list[tuple[int, ...]] = []
    factor_of: list[int] = []
    for k, f in enumerate(d.factors):
        stars = f.stars
        if 6 * len(stars) != v:
            err("factor-size", f"factor {k} has {len(stars)} stars, expected {v // 6}", k)
        cover = None
        for s in stars:
            leaves = tuple(s.leaves)
            verts = (s.center, *leaves)
            bad = [x for x in verts if not (isinstance(x, (int, np.integer)) and 0 <= x < v)]
            if bad:
                err("range", f"factor {k}: star at {s.center} has out-of-range vertex {bad[0]}",
                    (k, bad[0]))
                cover = False
                continue
            if len(set(verts)) != len(verts):
                err("repeated-vertex", f"factor {k}: star at {s.center} repeats a vertex {list(verts)}",
                    (k, s.center))
            if len(leaves) == 5:
                centers.append(s.center)
                leaf_rows.append(leaves)
                factor_of.append(k)
                continue
            err("star-size", f"factor {k}: star at {s.center} has {len(leaves)} leaves",
                (k, s.center))
            # irregular stars go through the slow path
            if cover is None:
                cover = np.zeros(v, dtype=np.int64)
            if cover is not False:
                np.add.at(cover, list(verts), 1)
            for leaf in leaves:
                if leaf != s.center:
                    us.append(s.center)
                    ws.append(leaf)
        if cover is False:
            extra_cover[k] = None
        elif cover is not None:
            extra_cover[k] = cover
        else:
            extra_cover.setdefault(k, np.zeros(0, dtype=np.int64))

    c_arr = np.array(centers, dtype=np.int64)
    l_arr = np.array(leaf_rows, dtype=np.int64).reshape(-1, 5)
    f_arr = np.array(factor_of, dtype=np.int64)
    n_f = len(d.factors)
    if n_f:
        verts = np.concatenate([c_arr, l_arr.ravel()])
        owners = np.concatenate([f_arr, np.repeat(f_arr, 5)])
        keys, counts = np.unique(owners * v + verts, return_counts=True)
        distinct = np.bincount(keys // v, minlength=n_f)
        over = keys[counts > 1]
        for k in range(n_f):
            extra = extra_cover.get(k)
            if extra is None:
                continue  # an out-of-range vertex makes coverage meaningless
            if extra.size:
                cover = extra.copy()
                lo, hi = np.searchsorted(keys, [k * v, (k + 1) * v])
                cover[keys[lo:hi] - k * v] += counts[lo:hi]
            elif distinct[k] == v and not over.size:
                continue
            else:
                cover = np.zeros(v, dtype=np.int64)
                lo, hi = np.searchsorted(keys, [k * v, (k + 1) * v])
                cover[keys[lo:hi] - k * v] = counts[lo:hi]
            for x in np.flatnonzero(cover == 0)[:max_witnesses]:
                err("non-spanning", f"factor {k} misses vertex {int(x)}", (k, int(x)))
            for x in np.flatnonzero(cover > 1)[:max_witnesses]:
                err("overlap", f"factor {k} covers vertex {int(x)} {int(cover[x])} times", (k, int(x)))

    # (4) every edge of K_v exactly once
    keep = l_arr != c_arr[:, None]
    a = np.concatenate([np.array(us, dtype=np.int64), np.broadcast_to(c_arr[:, None], l_arr.shape)[keep]])
    b = np.concatenate([np.array(ws, dtype=np.int64), l_arr[keep]])
    n_pairs = v * (v - 1) // 2
    counts = np.bincount(_pair_index(a, b, v), minlength=n_pairs)
    dup = np.flatnonzero(counts > 1)
    for idx in dup[:max_witnesses]:
        x, y = _pair_from_index(int(idx), v)
        err("double-cover", f"edge {{{x}, {y}}} covered {counts[idx]} times", (x, y))
    miss = np.flatnonzero(counts == 0)
    for idx in miss[:max_witnesses]:
        x, y = _pair_from_index(int(idx), v)
        err("uncovered", f"edge {{{x}, {y}}} not covered", (x, y))

    # (5) number of star factors
    expected = 3 * (v - 2) / 5
    if len(d.factors) != expected:
        err("factor-count", f"{len(d.factors)} factors, expected {expected:g}", len(d.factors))

    total = len(a)
    by_diff = np.bincount(np.minimum((a - b) % v, (b - a) % v), minlength=v // 2 + 1) if total else np.zeros(1)
    stats = {
        "v": v,
        "edges": total,
        "expected_edges": v * (v - 1) // 2,
        "matching_edges": n_matching,
        "factors": len(d.factors),
        "double_covered": int(len(dup)),
        "uncovered": int(len(miss)),
        "edges_per_difference": {int(k): int(n) for k, n in enumerate(by_diff) if k and n},
    }
    return VerifyReport(not errors, errors, stats)
