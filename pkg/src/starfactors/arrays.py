"""Balanced star arrays: which differences each residue class still needs.

An edge of difference d is owned by the residue class (mod 6) of its tail.
Part I factors cover some (class, difference) cells; the leftover differences
of each class are bucketed by residue mod 6 and zipped into rows of five, and
every row becomes one Part II factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .core import ConstructionDefectError, Factor, Star, tail_of
from .lifting import orbit

Row = tuple[Optional[int], ...]


def reduced_differences(v: int) -> list[int]:
    """Differences 1..(v-2)/2 that are not multiples of 6."""
    return [d for d in range(1, (v - 2) // 2 + 1) if d % 6]


@dataclass
class DifferenceLedger:
    v: int
    covered: list[set[int]] = field(default_factory=lambda: [set() for _ in range(6)])
    # differences grouped by the base-block star that covers them, per class
    groups: list[list[list[int]]] = field(default_factory=lambda: [[] for _ in range(6)])

    def covered_sorted(self, i: int) -> list[int]:
        return sorted(self.covered[i])


@dataclass
class BalancedStarArray:
    i: int
    t1_rows: list[Row]
    t2_rows: list[tuple[int, ...]]

    def entries(self) -> list[int]:
        out = [d for row in self.t1_rows for d in row if d is not None]
        return out + [d for row in self.t2_rows for d in row]

    def empty_cells(self) -> int:
        return sum(1 for row in self.t1_rows for d in row if d is None)


def _edge_arrays(factors: Sequence[Factor]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    fid, a, b = [], [], []
    for k, f in enumerate(factors):
        for s in f.stars:
            for leaf in s.leaves:
                fid.append(k)
                a.append(s.center)
                b.append(leaf)
    return (np.array(fid, dtype=np.int64), np.array(a, dtype=np.int64),
            np.array(b, dtype=np.int64))


def ledger_from_factors(v: int, part1: Sequence[Factor]) -> DifferenceLedger:
    """Account for the edges of the Part I factors cell by cell.

    A cell (class i, difference d) holds v/6 edges. Non-multiples of 6 must be
    covered fully or not at all, multiples of 6 must be covered fully in
    every class, and no edge may be covered twice.
    """
    n = v // 6
    half = v // 2
    fid, a, b = _edge_arrays(part1)
    d = np.minimum((a - b) % v, (b - a) % v)
    at_half = np.flatnonzero(d == half)
    if at_half.size:
        k = at_half[0]
        raise ConstructionDefectError(
            "half-period", f"Part I edge {{{a[k]}, {b[k]}}} has difference v/2", (int(a[k]), int(b[k])))
    tail = np.where((a + d) % v == b, a, b)

    # an edge is identified by (difference, tail)
    key = d * v + tail
    order = np.argsort(key, kind="stable")
    repeats = np.flatnonzero(key[order][1:] == key[order][:-1])
    if repeats.size:
        first, second = order[repeats[0]], order[repeats[0] + 1]
        edge = (int(a[second]), int(b[second]))
        raise ConstructionDefectError(
            "double-coverage",
            f"class {tail[first] % 6}, difference {d[first]}: edge {{{edge[0]}, {edge[1]}}} "
            f"in factor {fid[second]} already covered in factor {fid[first]} "
            f"as {{{a[first]}, {b[first]}}}",
            ((int(a[first]), int(b[first])), edge))

    cells = np.bincount((tail % 6) * (half + 1) + d, minlength=6 * (half + 1)).reshape(6, half + 1)
    partial = np.argwhere((cells != 0) & (cells != n))
    if partial.size:
        i, dd = (int(x) for x in partial[0])
        raise ConstructionDefectError(
            "partial-coverage", f"class {i}, difference {dd} covered by {cells[i, dd]} of {n} edges",
            (i, dd))
    for dd in range(6, half, 6):
        for i in range(6):
            if cells[i, dd] == 0:
                raise ConstructionDefectError(
                    "multiple-of-6", f"difference {dd} not covered in class {i}", (i, dd))

    ledger = DifferenceLedger(v)
    for i in range(6):
        ledger.covered[i] = {int(x) for x in np.flatnonzero(cells[i]) if x % 6}
    if part1:
        for s in part1[0].stars:
            per_class: dict[int, list[int]] = {}
            for leaf in s.leaves:
                dd = min((s.center - leaf) % v, (leaf - s.center) % v)
                if dd % 6:
                    per_class.setdefault(tail_of(s.center, leaf, v) % 6, []).append(dd)
            for i, ds in per_class.items():
                ledger.groups[i].append(ds)
    return ledger


def _rows_from_groups(covered: set[int], groups: list[list[int]]) -> list[Row]:
    rows: list[list[Optional[int]]] = []
    placed: set[int] = set()
    for ds in groups:
        row: list[Optional[int]] = [None] * 5
        for d in sorted(ds, key=lambda d: d % 6):
            slot = d % 6 - 1
            if row[slot] is not None:
                rows.append(row)
                row = [None] * 5
            row[slot] = d
            placed.add(d)
        rows.append(row)
    # anything not traceable to a base star is packed greedily by residue
    for d in sorted(covered - placed):
        for row in rows:
            if row[d % 6 - 1] is None:
                row[d % 6 - 1] = d
                break
        else:
            row = [None] * 5
            row[d % 6 - 1] = d
            rows.append(row)
    # merge partial rows whose filled slots do not collide
    merged: list[list[Optional[int]]] = []
    for row in rows:
        for target in merged:
            if all(a is None or b is None for a, b in zip(target, row)):
                target[:] = [a if a is not None else b for a, b in zip(target, row)]
                break
        else:
            merged.append(list(row))
    rows = merged
    # full rows first, then partial ones
    rows.sort(key=lambda r: sum(x is None for x in r))
    return [tuple(r) for r in rows]


def complete_arrays(ledger: DifferenceLedger) -> list[BalancedStarArray]:
    out = []
    universe = reduced_differences(ledger.v)
    for i in range(6):
        left = [d for d in universe if d not in ledger.covered[i]]
        buckets = [[d for d in left if d % 6 == j] for j in range(1, 6)]
        sizes = [len(b) for b in buckets]
        if len(set(sizes)) != 1:
            raise ConstructionDefectError(
                "unequal-buckets",
                f"class {i}: leftover residue buckets 1..5 have sizes {sizes}", (i, sizes))
        t2 = [tuple(col[k] for col in buckets) for k in range(sizes[0])]
        t1 = _rows_from_groups(ledger.covered[i], ledger.groups[i])
        out.append(BalancedStarArray(i, t1, t2))
    return out


def part2_factors(arrays: Sequence[BalancedStarArray], v: int) -> list[Factor]:
    out = []
    for arr in arrays:
        i = arr.i
        for row in arr.t2_rows:
            out.append(orbit(Star(i, tuple((i + d) % v for d in row)), v))
    return out


def render_arrays(arrays: Sequence[BalancedStarArray]) -> str:
    """Plain-text tables, one block per class, '*' for empty slots."""
    lines = []
    for arr in arrays:
        lines.append(f"T_{arr.i}")
        lines.append("  T1")
        for row in arr.t1_rows:
            lines.append("    " + " ".join(f"{'*' if d is None else d:>4}" for d in row))
        lines.append("  T2")
        for row in arr.t2_rows:
            lines.append("    " + " ".join(f"{d:>4}" for d in row))
        lines.append("")
    return "\n".join(lines)
