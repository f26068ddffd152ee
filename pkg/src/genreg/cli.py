"""Command-line driver.

System files look like::

    # comment
    parameters: u
    variables: x1 x2
    (u-1)*x2^2 + x2 + u^2 - u
    x1 - u

The ``parameters:`` line may be omitted.  Variables are listed in ascending
order.  Exit codes: 0 success, 2 parse error, 3 non-generic input,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .chains import TriangularSet
from .decompose import NonGenericSystemError, nonredundant_wu, rdu_for_zd
from .oracle import check_decomposition, check_wrsd_at_points
from .polycore import Context, ParseError, format_polynomial, parse_polynomial
from .wrsd import wrsd
from .wu import wu_decompose

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NONGENERIC = 3
EXIT_VERIFY = 4

_IDENT_OK = str.isidentifier


def _header(line: str, key: str, lineno: int) -> tuple[str, ...]:
    start = line.index(":") + 1
    names = []
    for m in re.finditer(r"\S+", line[start:]):
        name, col = m.group(), start + m.start() + 1
        if not _IDENT_OK(name):
            raise ParseError(f"bad {key[:-1]} name {name!r}", lineno, col)
        if name in names:
            raise ParseError(f"duplicate name {name!r}", lineno, col)
        names.append(name)
    return tuple(names)


def parse_system_text(text: str) -> tuple[Context, list]:
    params: tuple[str, ...] = ()
    variables: tuple[str, ...] | None = None
    ctx = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head = line.strip().split(":", 1)[0].strip()
        if ":" in line and head in ("parameters", "variables"):
            if ctx is not None:
                raise ParseError(f"'{head}:' after the first polynomial", lineno, 1)
            if head == "parameters":
                params = _header(line, "parameters", lineno)
            else:
                variables = _header(line, "variables", lineno)
            continue
        if ctx is None:
            if not variables:
                raise ParseError("missing or empty 'variables:' line", lineno, 1)
            clash = set(params) & set(variables)
            if clash:
                raise ParseError(f"name declared as both parameter and variable: {sorted(clash)[0]}", lineno, 1)
            ctx = Context(params, variables)
        polys.append(parse_polynomial(line, ctx, line=lineno))
    if ctx is None:
        if not variables:
            raise ParseError("missing or empty 'variables:' line", 1, 1)
        raise ParseError("no polynomials", len(text.splitlines()) or 1, 1)
    return ctx, polys


def parse_system(path) -> tuple[Context, list]:
    return parse_system_text(Path(path).read_text(encoding="utf-8"))


def format_system(ctx: Context, polys) -> str:
    lines = []
    if ctx.params:
        lines.append("parameters: " + " ".join(ctx.params))
    lines.append("variables: " + " ".join(ctx.variables))
    lines.extend(format_polynomial(p) for p in polys)
    return "\n".join(lines) + "\n"


def _chain_strings(C) -> list[str]:
    return [format_polynomial(p) for p in C]


def _factor_strings(F) -> list[str]:
    return [format_polynomial(f) for f in F]


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _campaign(args, P, chains, factors):
    if args.samples <= 0:
        return None
    return check_decomposition(P, chains, factors, samples=args.samples, seed=args.seed, height=args.height)


def _campaign_lines(report) -> list[str]:
    if report is None:
        return []
    out = [f"stable sample checks (seed {report.seed}):"]
    for pc in report.points:
        coords = ", ".join(str(c) for c in pc.point.coords) or "-"
        status = " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in sorted(pc.checks.items()))
        if pc.error:
            status += f" error={pc.error}"
        out.append(f"  a=({coords}): {status}")
    out.append("all identities pass" if report.passed else "VERIFICATION FAILED")
    return out


def cmd_decompose(args) -> int:
    ctx, P = parse_system(args.system)
    D = rdu_for_zd(P)
    chains = [list(c.polys) for c in D.chains]
    report = _campaign(args, P, chains, D.rdu_factors)
    payload = {
        "chains": [_chain_strings(c) for c in chains],
        "rdu_factors": _factor_strings(D.rdu_factors),
        "stable_sample_checks": report.to_json() if report else {},
    }
    lines = [f"{len(chains)} regular chain(s):"]
    for c, prov in zip(D.chains, D.provenance):
        lines.append(f"  {c}    <- {' / '.join(prov)}")
    lines.append("rdu factors: " + (", ".join(payload["rdu_factors"]) or "(none)"))
    lines += _campaign_lines(report)
    _emit(args, payload, lines)
    return EXIT_OK if report is None or report.passed else EXIT_VERIFY


def cmd_verify(args) -> int:
    if args.samples <= 0:
        args.samples = 5
    return cmd_decompose(args)


def cmd_wu(args) -> int:
    ctx, P = parse_system(args.system)
    W = wu_decompose(P)
    payload = {
        "branches": [
            {"chain": _chain_strings(b.chain), "kind": b.chain.kind, "path": list(b.path)} for b in W.branches
        ],
        "removed_contents": _factor_strings(W.removed),
    }
    lines = [f"{len(W.branches)} Wu chain(s):"]
    for i, b in enumerate(W.branches, 1):
        where = " after " + ", ".join(f"{s} = 0" for s in b.path) if b.path else ""
        lines.append(f"  C{i} = {b.chain}  [{b.chain.kind}{where}]")
    if payload["removed_contents"]:
        lines.append("parameter contents removed: " + ", ".join(payload["removed_contents"]))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_nonredundant(args) -> int:
    ctx, P = parse_system(args.system)
    keep, F = nonredundant_wu(P)
    payload = {"chains": [_chain_strings(c) for c in keep], "rdu_factors": _factor_strings(F)}
    lines = [f"{len(keep)} non-redundant Wu chain(s):"]
    lines += [f"  {c}" for c in keep]
    lines.append("rdu factors: " + (", ".join(payload["rdu_factors"]) or "(none)"))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_wrsd(args) -> int:
    ctx, T = parse_system(args.chain)
    P = parse_polynomial(args.polynomial, ctx)
    TriangularSet(tuple(T))
    R = wrsd(T, P)
    report = None
    if args.samples > 0:
        report = check_wrsd_at_points(T, P, R.H, R.G, samples=args.samples, seed=args.seed, height=args.height)
    payload = {
        "H": [_chain_strings(c) for c in R.H],
        "G": [_chain_strings(c) for c in R.G],
        "F": _factor_strings(R.F),
        "stable_sample_checks": report.to_json() if report else {},
    }
    lines = ["H (P vanishes):"] + [f"  {c}" for c in R.H]
    lines += ["G (P does not vanish):"] + [f"  {c}" for c in R.G]
    lines.append("F: " + (", ".join(payload["F"]) or "(none)"))
    lines += _campaign_lines(report)
    _emit(args, payload, lines)
    return EXIT_OK if report is None or report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="genreg", description="Generic regular decomposition of parametric systems.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--samples", type=int, default=5, help="stable sample points for the numeric check")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--height", type=int, default=50, help="bound on sample numerators/denominators")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="regular chains and RDU factors")
    p.add_argument("system")
    p.set_defaults(func=cmd_decompose)
    p = sub.add_parser("wu", parents=[common], help="Wu decomposition")
    p.add_argument("system")
    p.set_defaults(func=cmd_wu)
    p = sub.add_parser("nonredundant", parents=[common], help="Wu chains that survive conversion")
    p.add_argument("system")
    p.set_defaults(func=cmd_nonredundant)
    p = sub.add_parser("wrsd", parents=[common], help="split a regular chain by a polynomial")
    p.add_argument("chain", help="system file whose polynomials form the chain")
    p.add_argument("polynomial")
    p.set_defaults(func=cmd_wrsd)
    p = sub.add_parser("verify", parents=[common], help="decompose, then check at stable sample points")
    p.add_argument("system")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonGenericSystemError as exc:
        print(f"non-generic input: {exc}", file=sys.stderr)
        return EXIT_NONGENERIC
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
