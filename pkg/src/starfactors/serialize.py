"""JSON and text certificate formats.

JSON layout::

    {"v": 12,
     "one_factor": [[0, 6], [1, 7], ...],
     "factors": [[{"center": 0, "leaves": [5, 4, 3, 2, 1]}, ...], ...]}

Pairs are sorted by their first vertex, stars by center, leaves descending.
The text layout is one ``c; l1 l2 l3 l4 l5`` line per star with a blank line
between factors, preceded by ``v = ...`` and a ``matching`` line.
"""

from __future__ import annotations

import json
from typing import Any

from .core import Decomposition, Factor, Star


class CertificateFormatError(ValueError):
    """The input is not a well-formed certificate (as opposed to an invalid one)."""


def to_dict(d: Decomposition) -> dict[str, Any]:
    d = d.normalized()
    return {
        "v": d.v,
        "one_factor": [[a, b] for a, b in d.one_factor],
        "factors": [[{"center": s.center, "leaves": list(s.leaves)} for s in f.stars]
                    for f in d.factors],
    }


def dumps(d: Decomposition) -> str:
    # fixed separators and no key sorting: output is byte-stable across runs
    return json.dumps(to_dict(d), separators=(",", ":")) + "\n"


def _int(x: Any, where: str) -> int:
    # bool is an int subclass, but true/false are not vertex labels
    if isinstance(x, bool) or not isinstance(x, int):
        raise CertificateFormatError(f"{where}: expected an integer, got {x!r}")
    return x


def _list(x: Any, where: str) -> list:
    if not isinstance(x, list):
        raise CertificateFormatError(f"{where}: expected a list, got {type(x).__name__}")
    return x


def from_dict(obj: Any) -> Decomposition:
    """Structural parse only. Range, size and coverage checks are the verifier's job."""
    if not isinstance(obj, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    missing = {"v", "one_factor", "factors"} - obj.keys()
    if missing:
        raise CertificateFormatError(f"missing keys: {sorted(missing)}")
    v = _int(obj["v"], "v")
    pairs = []
    for k, p in enumerate(_list(obj["one_factor"], "one_factor")):
        p = _list(p, f"one_factor[{k}]")
        if len(p) != 2:
            raise CertificateFormatError(f"one_factor[{k}]: expected a pair, got {len(p)} entries")
        pairs.append((_int(p[0], f"one_factor[{k}][0]"), _int(p[1], f"one_factor[{k}][1]")))
    factors = []
    for k, f in enumerate(_list(obj["factors"], "factors")):
        stars = []
        for j, s in enumerate(_list(f, f"factors[{k}]")):
            where = f"factors[{k}][{j}]"
            if not isinstance(s, dict) or "center" not in s or "leaves" not in s:
                raise CertificateFormatError(f"{where}: expected {{'center', 'leaves'}}")
            raw = s["leaves"]
            # type() rather than isinstance(): bool is an int subclass
            if type(raw) is list and all(type(x) is int for x in raw):
                leaves = tuple(raw)
            else:
                leaves = tuple(_int(x, f"{where}.leaves") for x in _list(raw, f"{where}.leaves"))
            stars.append(Star(_int(s["center"], f"{where}.center"), leaves))
        factors.append(Factor(tuple(stars)))
    return Decomposition(v, tuple(pairs), tuple(factors))


def loads(text: str) -> Decomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateFormatError(f"not valid JSON: {e}") from e
    return from_dict(obj)


def to_text(d: Decomposition) -> str:
    d = d.normalized()
    lines = [f"v = {d.v}", "matching: " + " ".join(f"{a}-{b}" for a, b in d.one_factor), ""]
    for f in d.factors:
        for s in f.stars:
            lines.append(f"{s.center}; " + " ".join(str(x) for x in s.leaves))
        lines.append("")
    return "\n".join(lines)


def from_text(text: str) -> Decomposition:
    blocks: list[list[str]] = [[]]
    v = None
    pairs: list[tuple[int, int]] = []
    try:
        for raw in text.splitlines():
            line = raw.strip()
            if line.startswith("v ="):
                v = int(line[3:])
            elif line.startswith("matching:"):
                for tok in line[len("matching:"):].split():
                    a, b = tok.split("-")
                    pairs.append((int(a), int(b)))
            elif not line:
                if blocks[-1]:
                    blocks.append([])
            else:
                blocks[-1].append(line)
        if v is None:
            raise CertificateFormatError("missing 'v = ...' line")
        factors = []
        for block in blocks:
            if not block:
                continue
            stars = []
            for line in block:
                c, _, rest = line.partition(";")
                stars.append(Star(int(c), tuple(int(x) for x in rest.split())))
            factors.append(Factor(tuple(stars)))
    except ValueError as e:
        if isinstance(e, CertificateFormatError):
            raise
        raise CertificateFormatError(f"malformed text certificate: {e}") from e
    return Decomposition(v, tuple(pairs), tuple(factors))
