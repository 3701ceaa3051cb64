"""Command-line front end.

Sources are file paths or `fixture:<name>` references to the bundled tables.
Exit codes: 0 success / property true; 1 property false or not isomorphic;
2 invalid input; 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions, search
from .core import parse_cayley, serialize
from .errors import LoopError
from .fixtures import FIXTURE_NAMES, load_fixture
from .identities import CATALOG, parse_identity, satisfies
from .report import (
    analysis_report,
    classify_report,
    render_analysis_text,
    render_classify_text,
    render_json,
)
from .structure import decompose_torsion, internal_direct_product, isomorphic, quotient

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _load_source(src: str):
    if src.startswith("fixture:"):
        return load_fixture(src.split(":", 1)[1])
    return parse_cayley(Path(src).read_text(), name=os.path.basename(src))


def _parse_members(raw: str) -> frozenset[int]:
    return frozenset(int(tok) for tok in raw.replace(",", " ").split())


def _cmd_validate(args) -> int:
    loop = _load_source(args.src)
    print(f"ok order={loop.order}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    loop = _load_source(args.src)
    report = classify_report(loop)
    sys.stdout.write(render_json(report) if args.json else render_classify_text(report))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    loop = _load_source(args.src)
    report = analysis_report(loop, full_subloops=args.full_subloops or None)
    sys.stdout.write(render_json(report) if args.json else render_analysis_text(report))
    return EXIT_OK


def _cmd_check(args) -> int:
    loop = _load_source(args.src)
    ident = parse_identity(args.identity)
    verdict = satisfies(loop, ident)
    if verdict.holds:
        print("holds=true")
        return EXIT_OK
    witness = ",".join(f"{k}={v}" for k, v in sorted(verdict.counterexample.items()))
    print("holds=false")
    print(f"counterexample={witness}")
    return EXIT_FALSE


def _cmd_iso(args) -> int:
    l1 = _load_source(args.src1)
    l2 = _load_source(args.src2)
    result = isomorphic(l1, l2)
    if args.json:
        doc = {"isomorphic": result.isomorphic}
        if result.mapping is not None:
            doc["mapping"] = list(result.mapping)
        sys.stdout.write(render_json(doc))
    else:
        print(f"isomorphic={'true' if result.isomorphic else 'false'}")
        if result.mapping is not None:
            print("mapping=[" + ",".join(str(v) for v in result.mapping) + "]")
    return EXIT_OK if result.isomorphic else EXIT_FALSE


def _cmd_quotient(args) -> int:
    loop = _load_source(args.src)
    sub = _parse_members(args.by)
    sys.stdout.write(serialize(quotient(loop, sub)))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    loop = _load_source(args.src)
    u, v = decompose_torsion(loop, args.prime)
    result = internal_direct_product(loop, u, v)
    print("U=[" + ",".join(str(x) for x in sorted(u)) + "]")
    print("V=[" + ",".join(str(x) for x in sorted(v)) + "]")
    print(f"direct_product={'true' if result.holds else 'false'}")
    return EXIT_OK if result.holds else EXIT_FALSE


def _cmd_construct(args) -> int:
    kind = args.kind
    params = args.params
    if kind == "sts":
        ts = constructions.build_sts(int(params[0]))
        sys.stdout.write(constructions.serialize_triple_system(ts))
        return EXIT_OK
    if kind == "steiner":
        spec = params[0]
        if spec.isdigit():
            ts = constructions.build_sts(int(spec))
        else:
            ts = constructions.parse_triple_system(Path(spec).read_text())
        sys.stdout.write(serialize(constructions.steiner_loop(ts)))
        return EXIT_OK
    if kind == "family":
        orders = [int(tok) for tok in params[0].replace(",", " ").split()]
        alpha = int(params[1])
        loop = constructions.constr_family(constructions.abelian_group(orders), alpha)
        sys.stdout.write(serialize(loop))
        return EXIT_OK
    if kind == "product":
        l1 = _load_source(params[0])
        l2 = _load_source(params[1])
        sys.stdout.write(serialize(constructions.direct_product(l1, l2)))
        return EXIT_OK
    if kind == "std":
        name = params[0]
        param = int(params[1]) if len(params) > 1 else None
        sys.stdout.write(serialize(constructions.standard_loop(name, param)))
        return EXIT_OK
    if kind == "factorset":
        doc = json.loads(Path(params[0]).read_text())
        from .core import loop_from_rows

        fs = constructions.factor_set(
            loop_from_rows(doc["g_table"]),
            loop_from_rows(doc["a_table"]),
            doc["mu"],
        )
        sys.stdout.write(serialize(constructions.extension(fs)))
        return EXIT_OK
    raise LoopError(f"unknown construct kind {kind!r}")


def _cmd_search(args) -> int:
    identities = []
    properties = []
    if args.variety:
        key = args.variety.strip()
        if key in CATALOG:
            identities.append(CATALOG[key])
        elif key.lower() in ("steiner", "totally-symmetric", "commutative"):
            properties.append(key.lower())
        else:
            raise LoopError(f"unknown variety {args.variety!r}")
    if args.identity:
        identities.append(parse_identity(args.identity))
    spec = search.SearchSpec(
        order=args.order,
        required_identities=tuple(identities),
        required_properties=tuple(properties),
        forbid_associative=args.nonassoc,
        up_to_isomorphism=args.up_to_iso,
        node_budget=args.budget or search.default_budget(),
        table_limit=args.limit,
    )
    outcome = search.enumerate_loops(spec, workers=args.workers)
    constraint = args.variety or (args.identity and "identity") or "none"
    print(
        f"order={args.order} constraint={constraint} classes={outcome.count} "
        f"exhausted={'true' if outcome.exhausted else 'false'}"
    )
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for seq, table in enumerate(outcome.tables):
            path = out_dir / f"{args.order}_{constraint}_{seq}.tbl"
            path.write_text(serialize(table))
            print(f"wrote {path}")
    return EXIT_OK if outcome.exhausted else EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopsmith",
        description="Finite-loop toolkit: validate, classify, analyze, construct, and search Cayley tables.",
        epilog=f"Fixtures: {', '.join('fixture:' + n for n in FIXTURE_NAMES)}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a Cayley table")
    p.add_argument("src")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="evaluate the 14 variety flags and named properties")
    p.add_argument("src")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("analyze", help="full structural report")
    p.add_argument("src")
    p.add_argument("--json", action="store_true")
    p.add_argument(
        "--full-subloops",
        action="store_true",
        help="force full subloop enumeration for the weak-Lagrange report",
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("check", help="test one identity, printing a counterexample if it fails")
    p.add_argument("src")
    p.add_argument("--identity", required=True, help='e.g. "x*(y*(y*z)) = ((x*y)*y)*z"')
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("iso", help="isomorphism test between two tables")
    p.add_argument("src1")
    p.add_argument("src2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("quotient", help="factor loop by a normal subloop")
    p.add_argument("src")
    p.add_argument("--by", required=True, help="comma-separated subloop members")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("decompose", help="torsion decomposition U x V")
    p.add_argument("src")
    p.add_argument("--prime", type=int, default=2)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("construct", help="build a loop or triple system")
    p.add_argument(
        "kind", choices=("sts", "steiner", "factorset", "family", "product", "std")
    )
    p.add_argument("params", nargs="+")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("search", help="enumerate loops under constraints")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--variety", help="catalog variety (e.g. C, moufang) or steiner/commutative")
    p.add_argument("--identity", help="additional identity the models must satisfy")
    p.add_argument("--nonassoc", action="store_true", help="keep nonassociative models only")
    p.add_argument("--up-to-iso", action="store_true", help="count isomorphism classes")
    p.add_argument("--budget", type=int, help="node budget per branch (default: LOOPSMITH_BUDGET or 10^9)")
    p.add_argument("--limit", type=int, help="retain at most this many tables")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="directory for found tables (.tbl files)")
    p.set_defaults(func=_cmd_search)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (LoopError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
