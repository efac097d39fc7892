"""Command-line interface.

Exit codes: 0 success, 1 verification failed or unreadable certificate,
2 inadmissible order or usage error, 3 internal construction defect.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .arrays import render_arrays
from .base_factors import BaseParams, build_base_factor, declared_max_diff, validate_base
from .construct import arrays_for, construct, plan
from .core import ConstructionDefectError, InadmissibleOrderError, UnsupportedParameterError
from .oracle import SearchConfig, exhaustive_search
from .serialize import CertificateFormatError, dumps, from_text, loads, to_text
from .verifier import admissible, verify_decomposition

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INADMISSIBLE = 2
EXIT_DEFECT = 3


def _cmd_check(args) -> int:
    res = admissible(args.v)
    if not res.admissible:
        print(f"not admissible: {res.describe(all_failures=True)}")
        return EXIT_INADMISSIBLE
    p = plan(args.v)
    print(f"admissible, g={res.g}, t={res.t}, {p.describe()}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    d = construct(args.v)
    text = dumps(d) if args.format == "json" else to_text(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        if args.file == "-":
            raw = sys.stdin.read()
        else:
            with open(args.file) as fh:
                raw = fh.read()
    except (OSError, UnicodeDecodeError) as e:
        print(f"cannot read {args.file}: {e}", file=sys.stderr)
        return EXIT_INVALID
    try:
        d = loads(raw) if raw.lstrip().startswith("{") else from_text(raw)
    except CertificateFormatError as e:
        print(f"invalid certificate: {e}", file=sys.stderr)
        return EXIT_INVALID
    report = verify_decomposition(d)
    if report.valid:
        st = report.stats
        print(f"valid: v={st['v']}, {st['factors']} factors, {st['edges']} edges")
        return EXIT_OK
    print(f"invalid: {len(report.errors)} error(s)")
    for e in report.errors:
        print(f"  [{e.code}] {e.message}")
    return EXIT_INVALID


def _cmd_base(args) -> int:
    try:
        params = BaseParams.from_g(args.g)
        f = build_base_factor(params)
    except UnsupportedParameterError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    census = validate_base(f, declared_max_diff(f.t, f.m))
    print(f"g={f.g}, t={f.t}, m={f.m}")
    for s in f.pure_stars:
        print(f"  pure   {s}")
    if f.mixed_star is not None:
        print(f"  mixed  {f.mixed_star}")
    for s in f.prime_stars:
        print(f"  prime  {s}")
    if f.little_star is not None:
        print(f"  little {f.little_star}")
    print(f"  isolated {sorted(f.isolated)}")
    print(f"  pure differences  {sorted(census.pure)}")
    print(f"  prime differences {sorted(census.prime)}")
    return EXIT_OK


def _cmd_arrays(args) -> int:
    _, arrays = arrays_for(args.v)
    print(render_arrays(arrays), end="")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    r = exhaustive_search(SearchConfig(args.v, args.budget))
    print(f"{r.status}: {r.nodes} nodes, {r.seconds:.2f} s")
    if r.witness:
        print(f"  {r.witness}")
    if r.decomposition is not None:
        report = verify_decomposition(r.decomposition)
        print(f"  verifier: {'valid' if report.valid else 'INVALID'}")
        if args.show:
            sys.stdout.write(to_text(r.decomposition))
        return EXIT_OK if report.valid else EXIT_DEFECT
    return EXIT_OK if r.status == "nonexistent" else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="starfactors",
        description="Decompose K_v minus a perfect matching into 5-star factors.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="admissibility and construction route")
    p.add_argument("v", type=int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="build and verify a decomposition")
    p.add_argument("v", type=int)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a certificate file ('-' for stdin)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("base", help="print the almost 5-star factor on g points")
    p.add_argument("g", type=int)
    p.set_defaults(func=_cmd_base)

    p = sub.add_parser("arrays", help="print the balanced star arrays for v")
    p.add_argument("v", type=int)
    p.set_defaults(func=_cmd_arrays)

    p = sub.add_parser("oracle", help="brute-force search for small v")
    p.add_argument("v", type=int)
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--show", action="store_true", help="print the decomposition found")
    p.set_defaults(func=_cmd_oracle)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InadmissibleOrderError as e:
        print(str(e), file=sys.stderr)
        return EXIT_INADMISSIBLE
    except ConstructionDefectError as e:
        print(f"construction defect: {e}", file=sys.stderr)
        return EXIT_DEFECT
    except ValueError as e:
        # e.g. a non-positive order
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE


if __name__ == "__main__":
    sys.exit(main())
