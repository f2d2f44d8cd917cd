"""Command-line front end.

Verbs: classify, fer, orbits, comb, family, example, oracle, check.
Exit codes: 0 success/pass, 1 falsification, 2 usage error, 3 size guard.
"-" means standard input/output.  AMOEBA_MAX_N overrides the size guards
(default 30 for the group engine, 6 for the oracle).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import classify as cls
from . import construct, oracle
from .fer import (
    InfeasibleReplacementError,
    fer_fixed_group,
    fer_group,
    hang_group,
)
from .lgraph import FormatError, GraphError, LabeledGraph, from_json, to_dot, to_json
from .permgroup import PermutationError, cycle_notation, flat, orbits

ENGINE_LIMIT = 30
ORACLE_LIMIT = 6


def _limit(args, default: int) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("AMOEBA_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise FormatError(f"AMOEBA_MAX_N is not an integer: {env!r}") from None
    return default


def _read_graph(path: str, limit: int) -> LabeledGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise FormatError(f"cannot read {path}: {err.strerror}") from None
    try:
        g = from_json(text)
    except FormatError as err:
        raise FormatError(f"{path}: {err}") from None
    if len(g.labels) > limit:
        raise oracle.SizeGuardError(
            f"{path}: {len(g.labels)} labels exceeds the guard of {limit}"
        )
    return g


def _write(text: str, out) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _emit_graph(g: LabeledGraph, args) -> None:
    _write(to_dot(g) if getattr(args, "dot", False) else to_json(g), args.out)


def _orbit_text(parts) -> str:
    return "".join("{" + " ".join(flat(x) for x in orbit) + "}" for orbit in parts)


def _do_classify(args) -> int:
    g = _read_graph(args.file, _limit(args, ENGINE_LIMIT))
    if args.root is not None:
        g = g.with_root(args.root)
    report = cls.classify_graph(g)
    if args.format == "json":
        _write(json.dumps(report.to_json(), indent=2) + "\n", None)
        return 0
    data = report.to_json()
    lines = [
        f"root: {data['root'] if data['root'] is not None else '-'}",
        f"fer order: {data['fer_order']}",
        f"fer orbits: {_orbit_text(report.fer_orbits)}",
        f"local amoeba: {_yn(report.local_amoeba)}",
        f"global amoeba: {_yn(report.global_amoeba)}",
    ]
    if report.root is not None:
        lines += [
            f"stem-symmetric at root: {_yn(report.stem_symmetric_at_root)}",
            f"hang-symmetric at root: {_yn(report.hang_symmetric_at_root)}",
            f"stem-transitive at root: {_yn(report.stem_transitive_at_root)}",
            f"root-similar vertex: {_yn(report.has_root_similar_vertex)}",
        ]
    witnesses = data["witnesses"]
    if witnesses["block_system"] is not None:
        lines.append(f"block system: {_orbit_text(report.block_system)}")
    if witnesses["skew"] is not None:
        lines.append(f"skew: {witnesses['skew']}")
    _write("\n".join(lines) + "\n", None)
    return 0


def _yn(value: bool) -> str:
    return "yes" if value else "no"


def _select_group(g: LabeledGraph, args):
    if getattr(args, "fixed", None) is not None and getattr(args, "hang", None) is not None:
        raise FormatError("--fixed and --hang are mutually exclusive")
    if getattr(args, "hang", None) is not None:
        return hang_group(g, args.hang), f"hang group at {args.hang}"
    if getattr(args, "fixed", None) is not None:
        return fer_fixed_group(g, args.fixed), f"fer group fixing {args.fixed}"
    return fer_group(g), "fer group"


def _do_fer(args) -> int:
    g = _read_graph(args.file, _limit(args, ENGINE_LIMIT))
    group, description = _select_group(g, args)
    parts = orbits(group)
    if args.format == "json":
        payload = group.to_json()
        payload["orbits"] = [[flat(x) for x in orbit] for orbit in parts]
        _write(json.dumps(payload, indent=2) + "\n", None)
        return 0
    lines = [
        f"{description}: order {group.order}",
        f"orbits: {_orbit_text(parts)}",
        f"generators ({len(group.generators)}):",
    ]
    lines += [f"  {cycle_notation(p)}" for p in group.generators]
    _write("\n".join(lines) + "\n", None)
    return 0


def _do_orbits(args) -> int:
    g = _read_graph(args.file, _limit(args, ENGINE_LIMIT))
    group, _ = _select_group(g, args)
    parts = orbits(group)
    if args.format == "json":
        _write(
            json.dumps([[flat(x) for x in orbit] for orbit in parts], indent=2) + "\n",
            None,
        )
        return 0
    _write(_orbit_text(parts) + "\n", None)
    return 0


def _do_comb(args) -> int:
    limit = _limit(args, ENGINE_LIMIT)
    g = _read_graph(args.g, limit)
    h = _read_graph(args.h, limit)
    product = construct.comb_product(g, h)
    if len(product.labels) > limit:
        raise oracle.SizeGuardError(
            f"product has {len(product.labels)} labels, exceeding the guard of {limit}"
        )
    _emit_graph(product, args)
    return 0


def _do_family(args) -> int:
    g = construct.family(args.name, args.n, root=args.root)
    _emit_graph(g, args)
    return 0


def _do_example(args) -> int:
    g = construct.example(args.name)
    _emit_graph(g, args)
    return 0


def _do_oracle(args) -> int:
    g = _read_graph(args.file, _limit(args, ORACLE_LIMIT))
    result = oracle.reachability(g)
    aut_size = len(oracle.brute_automorphisms(g))
    engine_order = fer_group(g).order
    local_engine = engine_order == math.factorial(len(g.labels))
    local_oracle = len(result.reached) == result.total_copies
    agree = (
        len(result.reached) * aut_size == engine_order
        and local_engine == local_oracle
    )
    payload = result.to_json()
    payload.update(
        {
            "fer_order": str(engine_order),
            "local_amoeba": local_oracle,
            "agrees_with_engine": agree,
        }
    )
    if args.format == "json":
        _write(json.dumps(payload, indent=2) + "\n", None)
    else:
        _write(
            "reached: {reached} of {total_copies} labeled copies\n"
            "fer order: {fer_order}\n"
            "local amoeba: {local}\n"
            "agreement: {verdict}\n".format(
                reached=payload["reached"],
                total_copies=payload["total_copies"],
                fer_order=payload["fer_order"],
                local=_yn(local_oracle),
                verdict="pass" if agree else "falsified",
            ),
            None,
        )
    return 0 if agree else 1


def _do_check(args) -> int:
    limit = _limit(args, ENGINE_LIMIT)
    if args.checker == "thm3":
        g = _read_graph(args.file, limit)
        a, b, c = cls.check_theorem3(g, args.root)
        ok = a == b == c
        _write(f"thm3: a={_yn(a)} b={_yn(b)} c={_yn(c)} -> {_verdict(ok)}\n", None)
        return 0 if ok else 1
    if args.checker == "hangcorr":
        g = _read_graph(args.file, limit)
        ok = cls.check_hang_correspondence(g, args.root)
        _write(f"hangcorr: {_verdict(ok)}\n", None)
        return 0 if ok else 1
    if args.checker == "globaltrans":
        g = _read_graph(args.file, limit)
        glob, trans = cls.check_global_transitive(g)
        ok = glob == trans
        _write(
            f"globaltrans: global={_yn(glob)} transitive={_yn(trans)} -> {_verdict(ok)}\n",
            None,
        )
        return 0 if ok else 1
    g = _read_graph(args.g, limit)
    h = _read_graph(args.h, limit)
    if args.checker == "wreath":
        ok = cls.check_wreath_embedding(g, h)
        _write(f"wreath: {_verdict(ok)}\n", None)
        return 0 if ok else 1
    if args.checker == "fixedwreath":
        ok = cls.check_fixed_wreath_embedding(g, h)
        _write(f"fixedwreath: {_verdict(ok)}\n", None)
        return 0 if ok else 1
    verdict = cls.check_big_corollary(g, h)
    _write(f"bigcor: {verdict} -> {_verdict(verdict != 'violated')}\n", None)
    return 0 if verdict != "violated" else 1


def _verdict(ok: bool) -> str:
    return "pass" if ok else "falsified"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amoeba",
        description="Classify labeled graphs by their feasible edge-replacement groups.",
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="override the size guard (default 30; 6 for the oracle verb)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="emit a classification report")
    p.add_argument("file", help='graph JSON path, or "-" for stdin')
    p.add_argument("--root", help="classify with this root label")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_do_classify)

    p = sub.add_parser("fer", help="emit a fer group: order, generators, orbits")
    p.add_argument("file")
    p.add_argument("--fixed", help="use the subgroup fixing this label")
    p.add_argument("--hang", help="use the hang group at this label")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_do_fer)

    p = sub.add_parser("orbits", help="emit the fer orbit partition")
    p.add_argument("file")
    p.add_argument("--fixed", help="use the subgroup fixing this label")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_do_orbits)

    p = sub.add_parser("comb", help="write the comb product of two graphs")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("-o", "--out", help='output path, or "-" for stdout')
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(run=_do_comb)

    p = sub.add_parser("family", help="write a named family member")
    p.add_argument("name", choices=construct.FAMILY_NAMES)
    p.add_argument("n", nargs="?", type=int, help="size parameter (not for cube)")
    p.add_argument("--root", help="root label override")
    p.add_argument("--out", help='output path, or "-" for stdout')
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(run=_do_family)

    p = sub.add_parser("example", help="write a named example graph")
    p.add_argument("name", choices=construct.EXAMPLE_NAMES)
    p.add_argument("--out", help='output path, or "-" for stdout')
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(run=_do_example)

    p = sub.add_parser("oracle", help="reachability BFS summary and agreement")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(run=_do_oracle)

    p = sub.add_parser("check", help="run a theorem checker")
    checker = p.add_subparsers(dest="checker", required=True)
    for name in ("thm3", "hangcorr"):
        q = checker.add_parser(name)
        q.add_argument("file")
        q.add_argument("--root", help="root label (defaults to the file's root)")
    q = checker.add_parser("globaltrans")
    q.add_argument("file")
    for name in ("wreath", "fixedwreath", "bigcor"):
        q = checker.add_parser(name)
        q.add_argument("g")
        q.add_argument("h")
    p.set_defaults(run=_do_check)

    return parser


def run(argv) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except oracle.SizeGuardError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except (
        FormatError,
        GraphError,
        PermutationError,
        InfeasibleReplacementError,
        cls.PreconditionError,
    ) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
