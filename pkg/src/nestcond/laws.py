"""Seeded law campaigns.

Each campaign draws premise-satisfying instances from
:mod:`nestcond.generators`, checks one law on every case, and records every
failing case as a workspace document that can be loaded and re-run.

Campaign ids (``LAWS``) name the law under test; their titles say what is
checked.  Exit codes of :meth:`LawReport.exit_code`: 0 ok, 1 law failure,
3 generator exhaustion.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import generators as gen
from .category import (
    AmalgamationContext,
    amalgamate_typed_graphs,
    check_vk_cube,
    decompose_typed_graph,
    find_typed_isomorphism,
    is_effective_pushout,
    is_typed_amalgamation,
)
from .conditions import (
    Exists,
    amalgamate_conditions,
    amalgamate_conditions_traced,
    conditions_isomorphic,
    decompose_condition,
    is_positive,
    levels,
    restrict_condition,
    validate_condition,
)
from .fixtures import fig5
from .io import Workspace, to_document
from .renaming import image_iso, transport_certificate
from .satisfaction import (
    Certificate,
    amalgamate_solutions_traced,
    decompose_solution,
    generally_satisfies,
    initial_amalgamation_check,
    initially_satisfies,
    is_initially_satisfied,
    restrict_certificate,
    satisfies,
    solutions_agree,
)

MAX_NODES_LIMIT = 8
MAX_DEPTH_LIMIT = 5


@dataclass
class Bounds:
    max_nodes: int = 4
    depth: int = 3

    def check(self):
        if not 0 <= self.max_nodes <= MAX_NODES_LIMIT:
            raise ValueError(f"max nodes must be between 0 and {MAX_NODES_LIMIT}")
        if not 0 <= self.depth <= MAX_DEPTH_LIMIT:
            raise ValueError(f"depth must be between 0 and {MAX_DEPTH_LIMIT}")


@dataclass
class CaseResult:
    ok: bool
    message: str = ""
    instance: Optional[Workspace] = None


@dataclass
class LawReport:
    law: str
    title: str
    seed: int
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    exhausted: Optional[str] = None
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.exhausted is None

    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.exhausted is not None:
            return 3
        return 0

    def summary(self) -> dict:
        return {
            "law": self.law,
            "title": self.title,
            "seed": self.seed,
            "cases": self.cases,
            "failures": len(self.failures),
            "exhausted": self.exhausted,
            "wall_time": round(self.wall_time, 3),
            "notes": self.notes,
        }


def case_rng(seed: int, law: str, index: int) -> random.Random:
    """Independent stream per case so failures can be replayed one by one."""
    return random.Random(f"{seed}:{law}:{index}")


# --------------------------------------------------------------------------
# instance packaging


def _ws(**items) -> Workspace:
    ws = Workspace()
    for name, item in items.items():
        if isinstance(item, dict):
            ws.meta[name] = item
        elif item is not None:
            ws.add(name, item)
    return ws


def _ctx_ws(ctx: AmalgamationContext, **items) -> Workspace:
    ws = _ws(**items)
    ws.contexts["ctx"] = ctx
    for name in ("tg_db", "tg_dc", "tg_ba", "tg_ca"):
        ws.morphisms.setdefault(name, getattr(ctx, name))
    return ws


def _fail(msg: str, ws: Workspace) -> CaseResult:
    return CaseResult(False, msg, ws)


# --------------------------------------------------------------------------
# the laws


def law_restricted_solutions(rng: random.Random, b: Bounds) -> CaseResult:
    t, cert = gen.restriction_instance(rng, b.max_nodes, b.depth)
    ws = _ws(t=t, input=cert)
    r = restrict_certificate(cert, t)
    ws.add("restricted", r)
    if not is_positive(r.condition) or not validate_condition(r.condition).ok:
        return _fail("restricted condition is not a valid positive condition", ws)
    if not r.verify():
        return _fail("restricted solution does not verify", ws)
    if not satisfies(r.match, r.condition, r.host):
        return _fail("restricted match does not satisfy the restricted condition", ws)
    return CaseResult(True)


def law_typed_graph_round_trip(rng: random.Random, b: Bounds) -> CaseResult:
    ctx = gen.random_context(rng)
    # composition then decomposition
    g_b, g_c, g_d = gen.agreeing_typed_triple(rng, ctx, b.max_nodes)
    ws = _ctx_ws(ctx, g_b=g_b, g_c=g_c, g_d=g_d)
    am = amalgamate_typed_graphs(ctx, g_b, g_c, g_d)
    if not is_typed_amalgamation(ctx, g_b, g_c, g_d, am):
        return _fail("amalgamation squares are not pushout/pullbacks", ws)
    b2, c2, d2 = decompose_typed_graph(ctx, am.typed)
    if b2 != g_b or d2 != g_d:
        return _fail("decomposition does not return the B or D component", ws)
    if find_typed_isomorphism(c2, g_c) is None:
        return _fail("decomposition does not return the C component up to iso", ws)
    # decomposition then composition
    g_a = gen.random_typed_graph(rng, ctx.tg_a, b.max_nodes)
    ws.add("g_a", g_a)
    parts = decompose_typed_graph(ctx, g_a)
    back = amalgamate_typed_graphs(ctx, *parts).typed
    if find_typed_isomorphism(back, g_a) is None:
        return _fail("amalgamating the decomposition does not give the graph back", ws)
    return CaseResult(True)


def law_condition_round_trip(rng: random.Random, b: Bounds) -> CaseResult:
    ctx, c_b, c_c, c_d = gen.agreeing_conditions(rng, b.max_nodes, b.depth)
    ws = _ctx_ws(ctx, c_b=c_b, c_c=c_c, c_d=c_d)
    trace = amalgamate_conditions_traced(ctx, c_b, c_c, c_d)
    c_a = trace.condition
    ws.add("c_a", c_a)
    if not validate_condition(c_a).ok or not is_positive(c_a):
        return _fail("amalgamated condition is not valid and positive", ws)
    for got, want, side in zip(decompose_condition(ctx, c_a), (c_b, c_c, c_d), "BCD"):
        if not conditions_isomorphic(got, want):
            return _fail(f"decomposition does not return the {side} component", ws)
    # every level of the result is the amalgamation of the corresponding levels
    if not _levels_amalgamate(ctx, c_a, c_b, c_c, c_d):
        return _fail("some nesting level is not an amalgamation", ws)
    # the other direction starts from a condition over TG_A
    back = amalgamate_conditions(ctx, *decompose_condition(ctx, c_a))
    if not conditions_isomorphic(back, c_a):
        return _fail("amalgamating the decomposition does not give the condition back", ws)
    return CaseResult(True)


def _levels_amalgamate(ctx, c_a, c_b, c_c, c_d) -> bool:
    la, lb, lc, ld = (dict(levels(c)) for c in (c_a, c_b, c_c, c_d))
    for path, node in la.items():
        am = amalgamate_typed_graphs(ctx, lb[path].root, lc[path].root, ld[path].root)
        if am.typed != node.root:
            return False
    return True


def _c_side_isos(trace) -> dict:
    """Per level, the iso from the C-side root onto its image in the amalgamation."""
    isos = {}

    def walk(level, path):
        isos[path] = image_iso(level.root.from_c)
        if isinstance(level.condition, Exists):
            walk(level.parts[0], path + ".sub")
        else:
            for i, part in enumerate(level.parts):
                walk(part, f"{path}[{i}]")

    walk(trace, "root")
    return isos


def law_solution_round_trip(rng: random.Random, b: Bounds) -> CaseResult:
    # composition: agreeing local solutions give a global one
    ctx, cb, cc, cd = gen.agreeing_certificates(rng, b.max_nodes, b.depth)
    ws = _ctx_ws(ctx, local_b=cb, local_c=cc, local_d=cd)
    am = amalgamate_solutions_traced(ctx, cb, cc, cd)
    a = am.certificate
    ws.add("global_a", a)
    if not a.verify():
        return _fail("amalgamated solution does not verify", ws)
    b2, c2, d2 = decompose_solution(ctx, a)
    if b2 != cb or d2 != cd:
        return _fail("decomposition does not return the B or D solution", ws)
    isos = _c_side_isos(am.condition)
    expected_c = transport_certificate(cc, lambda path, g: isos[path], image_iso(am.host.from_c))
    if c2 != expected_c:
        return _fail("decomposition does not return the C solution up to canonical renaming", ws)
    # decomposition: a global solution restricts to agreeing local ones
    ctx2, glob = gen.amalgamation_instance(rng, b.max_nodes, b.depth)
    ws2 = _ctx_ws(ctx2, global_input=glob)
    parts = decompose_solution(ctx2, glob)
    for part, side in zip(parts, "BCD"):
        if not part.verify():
            return _fail(f"restricted {side} solution does not verify", ws2)
    if not solutions_agree(ctx2, *parts):
        return _fail("restricted solutions do not agree", ws2)
    back = amalgamate_solutions_traced(ctx2, *parts).certificate
    if back != glob:
        return _fail("amalgamating the restrictions does not give the solution back", ws2)
    return CaseResult(True)


def law_initial_amalgamation(rng: random.Random, b: Bounds) -> CaseResult:
    ctx, ac, host = gen.initial_instance(rng, b.max_nodes, b.depth)
    ws = _ctx_ws(ctx, constraint=ac, host=host)
    rep = initial_amalgamation_check(ctx, ac, host)
    if not rep.equivalent:
        return _fail("global initial satisfaction and agreeing local solutions disagree", ws)
    bad = [k for k, v in rep.verdicts.items() if not v]
    if bad:
        return _fail("failed checks: " + ", ".join(bad), ws)
    return CaseResult(True)


def law_initial_restriction(rng: random.Random, b: Bounds) -> CaseResult:
    ctx, ac, host = gen.initial_instance(rng, b.max_nodes, b.depth)
    ws = _ctx_ws(ctx, constraint=ac, host=host)
    sol = initially_satisfies(host, ac)
    if sol is None:
        return CaseResult(True)
    cert = Certificate.initial(ac, host, sol)
    for t, side in ((ctx.tg_ba, "B"), (ctx.tg_ca, "C"), (ctx.tg_da, "D")):
        r = restrict_certificate(cert, t)
        if not r.verify():
            return _fail(f"restricted solution on {side} does not verify", ws)
        if not is_initially_satisfied(r.host, restrict_condition(ac, t)):
            return _fail(f"restriction to {side} is not initially satisfied", ws)
    return CaseResult(True)


def law_effective_po(rng: random.Random, b: Bounds) -> CaseResult:
    f, g = gen.random_injective_cospan(rng, b.max_nodes)
    if not is_effective_pushout(f, g):
        return _fail("pushout of the pullback is not effective", _ws(a=f, b=g))
    return CaseResult(True)


def law_vk_cube(rng: random.Random, b: Bounds) -> CaseResult:
    mode = rng.choice(["vertical", "horizontal"])
    cube = gen.random_vk_cube(rng, mode, b.max_nodes)
    rep = check_vk_cube(cube)
    ws = gen.cube_workspace(cube)
    if not rep.premises_ok:
        return _fail("generated cube does not satisfy the premises", ws)
    if not rep.vk_holds:
        return _fail(
            f"top pushout={rep.top_is_pushout} but front pullbacks={rep.fronts_are_pullbacks}", ws
        )
    return CaseResult(True)


def law_counterexample(rng: random.Random, b: Bounds) -> CaseResult:
    """Succeeds when general satisfaction is *not* preserved by restriction."""
    ws = fig5()
    g_a, g_b = ws.typed_graphs["G_A"], ws.typed_graphs["G_B"]
    ac_a, ac_b = ws.conditions["ac_PA"], ws.conditions["ac_PB"]
    if not generally_satisfies(g_a, ac_a):
        return _fail("G_A does not generally satisfy the condition", ws)
    if generally_satisfies(g_b, ac_b):
        return _fail("the restriction is still generally satisfied", ws)
    if satisfies(ws.morphisms["p_B_bad"], ac_b, g_b):
        return _fail("the witness match satisfies the restricted condition", ws)
    return CaseResult(True, "negative witness p_B_bad reproduced")


@dataclass(frozen=True)
class Law:
    id: str
    title: str
    check: Callable[[random.Random, Bounds], CaseResult]
    single: bool = False


LAWS: dict[str, Law] = {law.id: law for law in (
    Law("fact-3.5", "restriction preserves solutions", law_restricted_solutions),
    Law("fact-4.2", "typed graphs: amalgamation and decomposition are inverse", law_typed_graph_round_trip),
    Law("fact-4.5", "positive conditions: amalgamation and decomposition are inverse", law_condition_round_trip),
    Law("thm-4.8", "solutions: amalgamation and decomposition", law_solution_round_trip),
    Law("thm-5.1", "initial satisfaction is compatible with amalgamation", law_initial_amalgamation),
    Law("cor-5.2", "initial satisfaction is preserved by restriction", law_initial_restriction),
    Law("effective-po", "pushouts of pullbacks of injective cospans are effective", law_effective_po),
    Law("vk-cube", "van Kampen cubes, vertical and horizontal", law_vk_cube),
    Law("counterexample-5.4", "general satisfaction is not preserved by restriction", law_counterexample,
        single=True),
)}

DEFAULT_SEED = 42


def run_law(law_id: str, cases: int = 100, seed: int = DEFAULT_SEED, bounds: Optional[Bounds] = None) -> LawReport:
    if law_id not in LAWS:
        raise KeyError(f"unknown law {law_id!r}; choose from {sorted(LAWS)}")
    bounds = bounds or Bounds()
    bounds.check()
    if cases < 0:
        raise ValueError("cases must be non-negative")
    law = LAWS[law_id]
    report = LawReport(law.id, law.title, seed)
    start = time.perf_counter()
    n = min(cases, 1) if law.single else cases
    for i in range(n):
        try:
            res = law.check(case_rng(seed, law.id, i), bounds)
        except gen.GeneratorExhausted as exc:
            report.exhausted = f"case {i}: {exc}"
            break
        except Exception as exc:  # a crash inside a law is a failure of that case
            res = CaseResult(False, f"{type(exc).__name__}: {exc}")
        report.cases += 1
        if res.message and res.ok:
            report.notes.append(res.message)
        if not res.ok:
            entry = {"case": i, "message": res.message}
            if res.instance is not None:
                inst = res.instance
                inst.seed = seed
                inst.meta.update(law=law.id, case=i, message=res.message)
                entry["instance"] = to_document(inst)
            report.failures.append(entry)
    report.wall_time = time.perf_counter() - start
    return report
