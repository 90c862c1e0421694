"""Command-line interface.

Subcommands: enumerate, table, access-structure, deal, recover, audit.
Every document embeds a manifest (tool version plus fully resolved
parameters) so results are reproducible from the output alone; output
files are written atomically (temp file + rename).

Exit codes: 0 success, 2 parameter error, 3 authorization error,
4 capacity error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import __version__
from .audit import DOMAINS, FULL_FIELD, perfectness_report
from .coalition import (
    CoalitionQuery,
    minimal_privileged_coalitions,
    privileged_coalitions,
    valid_lengths,
)
from .errors import AuthorizationError, CapacityError, ParameterError
from .field import PrimeField
from .scheme import (
    SchemeConfig,
    SecretVector,
    deal,
    derive_access_structure,
    extension_track,
    recover,
)

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_PARAMETER = 2
EXIT_AUTHORIZATION = 3
EXIT_CAPACITY = 4


def _manifest(
    subcommand: str,
    params: dict,
    seed: int | None = None,
    input_path: str | None = None,
    output_path: str | None = None,
) -> dict:
    out = {
        "tool": "privcoal",
        "version": __version__,
        "subcommand": subcommand,
        "parameters": params,
        "input": input_path,
        "output": output_path,
    }
    if seed is not None:
        out["seed"] = seed
    return out


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".privcoal-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_identities(raw: str) -> list[int]:
    """Accepts comma-separated values and a..b ranges, e.g. '1..6' or '1,2,9'."""
    out: list[int] = []
    for token in raw.split(","):
        token = token.strip()
        if ".." in token:
            lo, hi = token.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif token:
            out.append(int(token))
    if not out:
        raise ParameterError(f"no identities in {raw!r}")
    return out


def _parse_int_list(raw: str) -> list[int]:
    return [int(tok) for tok in raw.split(",") if tok.strip()]


def _cmd_enumerate(args: argparse.Namespace) -> int:
    query = CoalitionQuery(
        t=args.t, j=args.j, field=PrimeField(args.p), n_max=args.N, r=args.r
    )
    report = (
        minimal_privileged_coalitions(query)
        if args.minimal
        else privileged_coalitions(query)
    )
    doc = report.to_dict()
    if args.descending:
        doc["coalitions"] = [sorted(c, reverse=True) for c in doc["coalitions"]]
    doc["manifest"] = _manifest(
        "enumerate",
        {
            "t": args.t,
            "j": args.j,
            "r": args.r,
            "p": args.p,
            "N": args.N,
            "minimal": bool(args.minimal),
            "descending": bool(args.descending),
            "format": args.format,
        },
        output_path=args.output,
    )
    if args.format == "json":
        _emit(json.dumps(doc, indent=2), args.output)
    elif args.format == "csv":
        lines = ["elements"] + [" ".join(str(x) for x in c) for c in doc["coalitions"]]
        _emit("\n".join(lines), args.output)
    else:
        lines = [
            f"({query.t},{query.j})-privileged coalitions over F_{query.field.p}, "
            f"identities 1..{query.n_max}"
            + (" (minimal only)" if args.minimal else "")
        ]
        for c in doc["coalitions"]:
            lines.append("  {" + ", ".join(str(x) for x in c) + "}")
        lines.append(f"count: {doc['count']}")
        if doc["r_min"] is not None:
            lines.append(f"shortest length: {doc['r_min']} ({doc['N_min']} coalitions)")
        _emit("\n".join(lines), args.output)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    primes = _parse_int_list(args.p)
    j_list = _parse_int_list(args.j) if args.j else list(range(1, args.t - 1))
    grid: dict[int, dict[int, dict]] = {}
    for p in primes:
        field = PrimeField(p)
        grid[p] = {}
        for j in j_list:
            report = minimal_privileged_coalitions(
                CoalitionQuery(t=args.t, j=j, field=field, n_max=args.N)
            )
            grid[p][j] = {
                "count": report.count,
                "r_min": report.r_min,
                "N_min": report.n_min,
                "per_length": {str(r): c for r, c in sorted(report.per_length().items())},
            }
    manifest = _manifest(
        "table",
        {"t": args.t, "N": args.N, "p": primes, "j": j_list, "format": args.format},
        output_path=args.output,
    )
    if args.format == "json":
        doc = {
            "version": 1,
            "t": args.t,
            "N": args.N,
            "cells": {str(p): {str(j): grid[p][j] for j in j_list} for p in primes},
            "manifest": manifest,
        }
        _emit(json.dumps(doc, indent=2), args.output)
        return EXIT_OK
    if args.per_length:
        lengths: dict[int, list[int]] = {
            j: [r for r in valid_lengths(args.t, j) if r <= args.N]
            for j in j_list
        }
        header = ["p"] + [f"j={j}:r={r}" for j in j_list for r in lengths[j]]
        lines = [",".join(header)]
        for p in primes:
            row = [str(p)]
            for j in j_list:
                for r in lengths[j]:
                    row.append(str(grid[p][j]["per_length"].get(str(r), 0)))
            lines.append(",".join(row))
    else:
        lines = [",".join(["p"] + [f"j={j}" for j in j_list])]
        for p in primes:
            lines.append(",".join([str(p)] + [str(grid[p][j]["count"]) for j in j_list]))
    _emit("\n".join(lines), args.output)
    return EXIT_OK


def _cmd_access_structure(args: argparse.Namespace) -> int:
    cfg = SchemeConfig(
        t=args.t, field=PrimeField(args.p), identities=_parse_identities(args.identities)
    )
    structure = derive_access_structure(cfg)
    doc = structure.to_dict()
    doc["manifest"] = _manifest(
        "access-structure",
        {"t": args.t, "p": args.p, "identities": list(cfg.identities)},
        output_path=args.output,
    )
    if args.format == "text":
        lines = []
        for j in range(cfg.t - 1):
            sets = structure.minimal_sets(j)
            lines.append(f"minimal authorized sets for secret {j} ({len(sets)}):")
            for a in sets:
                lines.append(
                    "  {" + ", ".join(str(x) for x in a.members) + "} " + f"[{a.kind}]"
                )
        _emit("\n".join(lines), args.output)
    else:
        _emit(json.dumps(doc, indent=2), args.output)
    return EXIT_OK


def _cmd_deal(args: argparse.Namespace) -> int:
    field = PrimeField(args.p)
    cfg = SchemeConfig(t=args.t, field=field, identities=_parse_identities(args.identities))
    if args.seed is not None:
        if args.secrets or args.blinding is not None:
            raise ParameterError("give either --seed or explicit --secrets/--blinding")
        sv = SecretVector.random(field, args.t, args.seed)
    else:
        if not args.secrets or args.blinding is None:
            raise ParameterError("explicit dealing needs --secrets and --blinding")
        sv = SecretVector(
            secrets=tuple(_parse_int_list(args.secrets)),
            blinding=args.blinding,
            field=field,
        )
    table = deal(cfg, sv)
    doc = {
        "version": 1,
        "p": args.p,
        "t": args.t,
        "participants": [{"id": i, "share": y} for i, y in table.entries],
        "manifest": _manifest(
            "deal",
            {"t": args.t, "p": args.p, "identities": list(cfg.identities)},
            seed=args.seed,
            output_path=args.output,
        ),
    }
    print(
        "warning: shares are sensitive and this output is plaintext; "
        "distribute over a secure channel",
        file=sys.stderr,
    )
    _emit(json.dumps(doc, indent=2), args.output)
    return EXIT_OK


def _load_shares(path: str) -> tuple[SchemeConfig, dict[int, int]]:
    with open(path) as handle:
        doc = json.load(handle)
    try:
        p = int(doc["p"])
        t = int(doc["t"])
        pairs = {int(e["id"]): int(e["share"]) for e in doc["participants"]}
    except (KeyError, TypeError) as exc:
        raise ParameterError(f"malformed shares file {path}: {exc}") from exc
    cfg = SchemeConfig(t=t, field=PrimeField(p), identities=tuple(pairs))
    return cfg, pairs


def _cmd_recover(args: argparse.Namespace) -> int:
    cfg, shares = _load_shares(args.shares)
    subset = sorted(set(_parse_identities(args.subset)))
    missing = [i for i in subset if i not in shares]
    if missing:
        raise ParameterError(f"identities {missing} not present in the shares file")
    pairs = [(i, shares[i]) for i in subset]
    value = recover(pairs, args.j, cfg)
    if args.explain:
        if len(pairs) >= cfg.t:
            used = [i for i, _ in pairs[: cfg.t]]
            print(f"route: full solve with identities {used}", file=sys.stderr)
        else:
            ext = extension_track(tuple(subset), cfg.t, cfg.field)
            print(
                f"route: coalition formula with extension track {list(ext)}",
                file=sys.stderr,
            )
    print(value)
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    cfg = SchemeConfig(
        t=args.t, field=PrimeField(args.p), identities=_parse_identities(args.identities)
    )
    report = perfectness_report(cfg, domain=args.domain, seed=args.seed)
    doc = report.to_dict()
    doc["manifest"] = _manifest(
        "audit",
        {
            "t": args.t,
            "p": args.p,
            "identities": list(cfg.identities),
            "domain": args.domain,
        },
        seed=args.seed,
        output_path=args.output,
    )
    _emit(json.dumps(doc, indent=2), args.output)
    return EXIT_OK if report.passed else EXIT_AUDIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="privcoal",
        description=(
            "Privileged-coalition enumeration and multi-secret sharing "
            "over prime fields"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="list (t,j)-privileged coalitions")
    enum.add_argument("--t", type=int, required=True, help="threshold")
    enum.add_argument("--j", type=int, required=True, help="coefficient index")
    enum.add_argument(
        "--r", type=int, default=None, help="coalition length (omit to sweep all)"
    )
    enum.add_argument("--p", type=int, required=True, help="prime field order")
    enum.add_argument("--N", type=int, required=True, help="identity bound")
    enum.add_argument("--minimal", action="store_true", help="minimal coalitions only")
    enum.add_argument("--descending", action="store_true", help="print elements descending")
    enum.add_argument("--format", choices=("json", "csv", "text"), default="json")
    enum.add_argument("--output", default=None, help="write to file instead of stdout")
    enum.set_defaults(func=_cmd_enumerate)

    table = sub.add_parser("table", help="minimal-coalition count grid per (p, j)")
    table.add_argument("--t", type=int, required=True)
    table.add_argument("--N", type=int, required=True)
    table.add_argument("--p", required=True, help="comma-separated primes")
    table.add_argument("--j", default=None, help="comma-separated indices (default 1..t-2)")
    table.add_argument("--per-length", action="store_true", dest="per_length")
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.add_argument("--output", default=None)
    table.set_defaults(func=_cmd_table)

    access = sub.add_parser("access-structure", help="minimal authorized sets per secret")
    access.add_argument("--t", type=int, required=True)
    access.add_argument("--p", type=int, required=True)
    access.add_argument("--identities", required=True, help="e.g. 1..6 or 1,2,9")
    access.add_argument("--format", choices=("json", "text"), default="json")
    access.add_argument("--output", default=None)
    access.set_defaults(func=_cmd_access_structure)

    deal_p = sub.add_parser("deal", help="evaluate shares for every participant")
    deal_p.add_argument("--t", type=int, required=True)
    deal_p.add_argument("--p", type=int, required=True)
    deal_p.add_argument("--identities", required=True)
    deal_p.add_argument("--secrets", default=None, help="comma-separated s_0..s_{t-2}")
    deal_p.add_argument("--blinding", type=int, default=None, help="nonzero top coefficient")
    deal_p.add_argument("--seed", type=int, default=None, help="derive coefficients from a seed")
    deal_p.add_argument("--output", default=None)
    deal_p.set_defaults(func=_cmd_deal)

    rec = sub.add_parser("recover", help="recover a secret from a share subset")
    rec.add_argument("--shares", required=True, help="shares JSON file")
    rec.add_argument("--subset", required=True, help="identities, e.g. 1,2,4")
    rec.add_argument("--j", type=int, required=True, help="secret index")
    rec.add_argument("--explain", action="store_true", help="describe the route used")
    rec.set_defaults(func=_cmd_recover)

    audit_p = sub.add_parser("audit", help="exhaustive perfectness audit")
    audit_p.add_argument("--t", type=int, required=True)
    audit_p.add_argument("--p", type=int, required=True)
    audit_p.add_argument("--identities", required=True)
    audit_p.add_argument("--domain", choices=DOMAINS, default=FULL_FIELD)
    audit_p.add_argument("--seed", type=int, default=0)
    audit_p.add_argument("--output", default=None)
    audit_p.set_defaults(func=_cmd_audit)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except AuthorizationError as exc:
        print(f"authorization error: {exc}", file=sys.stderr)
        return EXIT_AUTHORIZATION
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ZeroDivisionError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


def app() -> None:
    raise SystemExit(main())
