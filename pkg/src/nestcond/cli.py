"""Command line front end: ``nestcond <command> ...``.

Every command is a thin shell over the library.  Results are printed as
JSON workspace documents (or written with ``--out``) so they can be fed
back in.  Exit codes: 0 ok, 1 law failure or negative verdict with
``--check``, 2 input error, 3 generator exhaustion.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import io
from .category import (
    AgreementError,
    amalgamate_typed_graphs,
    decompose_typed_graph,
    find_typed_isomorphism,
    restrict_typed_graph,
    restrict_typed_morphism,
)
from .conditions import (
    amalgamate_conditions,
    conditions_isomorphic,
    decompose_condition,
    is_positive,
    restrict_condition,
)
from .fixtures import FIXTURES, fixture
from .generators import INSTANCE_KINDS, GeneratorExhausted, generate_instance
from .graph import GraphError
from .laws import DEFAULT_SEED, LAWS, Bounds, run_law
from .satisfaction import (
    Certificate,
    amalgamate_solutions,
    decompose_solution,
    find_solution,
    generally_satisfies,
    initially_satisfies,
    is_initially_satisfied,
    restrict_certificate,
    satisfies,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_EXHAUSTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _u64(text: str) -> int:
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: Optional[str]):
    _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", out)


def _load(path: str) -> io.Workspace:
    return io.load(path)


def _pick(ws: io.Workspace, section: str, name: str):
    items = getattr(ws, section)
    if name not in items:
        raise InputError(f"dangling reference: {section}/{name}")
    return items[name]


# --------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    status = EXIT_OK
    for path in args.files:
        try:
            ws = _load(path)
        except GraphError as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            status = EXIT_INPUT
            continue
        counts = {s: len(getattr(ws, s)) for s in io.SECTIONS if getattr(ws, s)}
        print(f"{path}: ok " + json.dumps(counts, sort_keys=True))
    return status


def cmd_satisfy(args) -> int:
    ws = _load(args.workspace)
    host = _pick(ws, "typed_graphs", args.graph)
    cond = _pick(ws, "conditions", args.condition)
    result: dict = {"mode": args.mode}
    sol = None
    if args.mode == "general":
        result["verdict"] = generally_satisfies(host, cond)
    elif args.mode == "initial":
        if is_positive(cond):
            sol = initially_satisfies(host, cond)
            result["verdict"] = sol is not None
        else:
            result["verdict"] = is_initially_satisfied(host, cond)
    else:
        if not args.match:
            raise InputError("match mode needs --match")
        p = _pick(ws, "morphisms", args.match)
        if is_positive(cond):
            sol = find_solution(p, cond, host)
            result["verdict"] = sol is not None
        else:
            result["verdict"] = satisfies(p, cond, host)
    if sol is not None:
        result["solution"] = io.encode_item(sol, ws)
    _emit_json(result, args.out)
    return EXIT_FAIL if args.check and not result["verdict"] else EXIT_OK


def cmd_restrict(args) -> int:
    ws = _load(args.workspace)
    t = _pick(ws, "morphisms", args.along)
    out = io.Workspace()
    if args.what == "graph":
        out.typed_graphs[args.name] = restrict_typed_graph(_pick(ws, "typed_graphs", args.item), t).typed
    elif args.what == "morphism":
        if not (args.src and args.tgt):
            raise InputError("restricting a morphism needs --src and --tgt typed graphs")
        m = _pick(ws, "morphisms", args.item)
        b, _, _ = restrict_typed_morphism(m, _pick(ws, "typed_graphs", args.src), _pick(ws, "typed_graphs", args.tgt), t)
        out.morphisms[args.name] = b
    elif args.what == "condition":
        out.conditions[args.name] = restrict_condition(_pick(ws, "conditions", args.item), t)
    else:
        cert = _pick(ws, "solutions", args.item)
        r = restrict_certificate(cert, t)
        if args.check and not r.verify():
            print("restricted solution does not verify", file=sys.stderr)
            return EXIT_FAIL
        out.solutions[args.name] = r
    _emit(io.dumps(out), args.out)
    return EXIT_OK


def cmd_amalgamate(args) -> int:
    ws = _load(args.workspace)
    ctx = _pick(ws, "contexts", args.context)
    section = {"graph": "typed_graphs", "condition": "conditions", "solution": "solutions"}[args.what]
    b, c, d = (_pick(ws, section, n) for n in args.items)
    out = io.Workspace()
    if args.what == "graph":
        res = amalgamate_typed_graphs(ctx, b, c, d).typed
        ok = not args.check or _graph_round_trip(ctx, res, (b, c, d))
    elif args.what == "condition":
        res = amalgamate_conditions(ctx, b, c, d)
        parts = decompose_condition(ctx, res)
        ok = not args.check or all(conditions_isomorphic(x, y) for x, y in zip(parts, (b, c, d)))
    else:
        res = amalgamate_solutions(ctx, b, c, d)
        ok = not args.check or (res.verify() and decompose_solution(ctx, res)[0] == b)
    out.add(args.name, res)
    _emit(io.dumps(out), args.out)
    if not ok:
        print("round trip check failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _graph_round_trip(ctx, g_a, parts) -> bool:
    return all(find_typed_isomorphism(x, y) is not None for x, y in zip(decompose_typed_graph(ctx, g_a), parts))


def cmd_decompose(args) -> int:
    ws = _load(args.workspace)
    ctx = _pick(ws, "contexts", args.context)
    out = io.Workspace()
    if args.what == "graph":
        a = _pick(ws, "typed_graphs", args.item)
        parts = decompose_typed_graph(ctx, a)
        ok = not args.check or find_typed_isomorphism(amalgamate_typed_graphs(ctx, *parts).typed, a) is not None
    elif args.what == "condition":
        a = _pick(ws, "conditions", args.item)
        parts = decompose_condition(ctx, a)
        ok = not args.check or conditions_isomorphic(amalgamate_conditions(ctx, *parts), a)
    else:
        a = _pick(ws, "solutions", args.item)
        parts = decompose_solution(ctx, a)
        ok = not args.check or (all(p.verify() for p in parts) and amalgamate_solutions(ctx, *parts) == a)
    for suffix, item in zip("bcd", parts):
        out.add(f"{args.name}_{suffix}", item)
    _emit(io.dumps(out), args.out)
    if not ok:
        print("round trip check failed", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_laws(args) -> int:
    ids = sorted(LAWS) if not args.laws or args.laws == ["all"] else args.laws
    for law in ids:
        if law not in LAWS:
            raise InputError(f"unknown law {law!r}; choose from {', '.join(sorted(LAWS))}")
    bounds = Bounds(args.max_nodes, args.depth)
    try:
        bounds.check()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    status = EXIT_OK
    out_dir = Path(args.out) if args.out else None
    for law in ids:
        rep = run_law(law, cases=args.cases, seed=args.seed, bounds=bounds)
        print(json.dumps(rep.summary(), sort_keys=True))
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
            for f in rep.failures:
                if "instance" in f:
                    path = out_dir / f"failure-{law}-{f['case']}.json"
                    path.write_text(json.dumps(f["instance"], indent=2, sort_keys=True) + "\n", encoding="utf-8")
        for f in rep.failures:
            print(f"  case {f['case']}: {f['message']}", file=sys.stderr)
        code = rep.exit_code()
        if code == EXIT_FAIL or (code == EXIT_EXHAUSTED and status == EXIT_OK):
            status = code
    return status


def cmd_fixtures(args) -> int:
    names = args.names or sorted(FIXTURES)
    for n in names:
        if n not in FIXTURES:
            raise InputError(f"unknown fixture {n!r}; choose from {', '.join(sorted(FIXTURES))}")
    if not args.out:
        if args.names:
            for n in names:
                sys.stdout.write(io.dumps(fixture(n)))
        else:
            for n in names:
                print(f"{n}: " + (FIXTURES[n].__doc__ or "").strip().splitlines()[0].replace("``", ""))
        return EXIT_OK
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for n in names:
        io.save(fixture(n), out_dir / f"{n}.json")
        print(out_dir / f"{n}.json")
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        ws = generate_instance(args.seed, args.kind, args.max_nodes, args.depth)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(io.dumps(ws), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nestcond", description="Nested graph conditions over typed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="load workspace files and run all validators")
    v.add_argument("files", nargs="+")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("satisfy", help="decide satisfaction and print a solution")
    s.add_argument("workspace")
    s.add_argument("--mode", choices=["general", "initial", "match"], default="general")
    s.add_argument("--graph", required=True, help="typed host graph")
    s.add_argument("--condition", required=True)
    s.add_argument("--match", help="morphism from the condition root (match mode)")
    s.add_argument("--check", action="store_true", help="exit 1 when not satisfied")
    s.add_argument("--out")
    s.set_defaults(func=cmd_satisfy)

    r = sub.add_parser("restrict", help="restrict an item along a type morphism")
    r.add_argument("workspace")
    r.add_argument("--what", choices=["graph", "morphism", "condition", "solution"], required=True)
    r.add_argument("--item", required=True)
    r.add_argument("--along", required=True, help="injective type morphism TG_B -> TG_A")
    r.add_argument("--src", help="typed domain of a morphism")
    r.add_argument("--tgt", help="typed codomain of a morphism")
    r.add_argument("--name", default="result")
    r.add_argument("--check", action="store_true")
    r.add_argument("--out")
    r.set_defaults(func=cmd_restrict)

    for cmd, func, helptext in (
        ("amalgamate", cmd_amalgamate, "amalgamate B, C over D along a context"),
        ("decompose", cmd_decompose, "split an item over TG_A into its B, C and D parts"),
    ):
        a = sub.add_parser(cmd, help=helptext)
        a.add_argument("workspace")
        a.add_argument("--what", choices=["graph", "condition", "solution"], required=True)
        if cmd == "amalgamate":
            a.add_argument("--items", nargs=3, metavar=("B", "C", "D"), required=True)
        else:
            a.add_argument("--item", required=True)
        a.add_argument("--context", required=True)
        a.add_argument("--name", default="result")
        a.add_argument("--check", action="store_true", help="assert the round trip")
        a.add_argument("--out")
        a.set_defaults(func=func)

    law = sub.add_parser("laws", help="run seeded law campaigns")
    law.add_argument("laws", nargs="*", help=f"law ids or 'all' ({', '.join(sorted(LAWS))})")
    law.add_argument("--cases", type=int, default=100)
    law.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    law.add_argument("--max-nodes", type=int, default=4)
    law.add_argument("--depth", type=int, default=3)
    law.add_argument("--out", help="directory for failing instances")
    law.set_defaults(func=cmd_laws)

    f = sub.add_parser("fixtures", help="list or export the reference fixtures")
    f.add_argument("names", nargs="*")
    f.add_argument("--out", help="directory to write <name>.json files to")
    f.set_defaults(func=cmd_fixtures)

    g = sub.add_parser("generate", help="emit one seeded random instance")
    g.add_argument("kind", choices=sorted(INSTANCE_KINDS))
    g.add_argument("--seed", type=_u64, default=DEFAULT_SEED)
    g.add_argument("--max-nodes", type=int, default=4)
    g.add_argument("--depth", type=int, default=3)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if getattr(args, "cases", 0) < 0:
            raise InputError("--cases must be non-negative")
        return args.func(args)
    except GeneratorExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (InputError, GraphError, AgreementError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
