"""Acceptance criteria 1-10, each timed against its budget.

Every test prints one ``PASS``/``FAIL`` line with the wall time, then
asserts both the outcome and the time limit.
"""
from __future__ import annotations

import inspect
import random
import time

import pytest

from nestcond import generators as gen
from nestcond.category import (
    TypedGraph,
    check_vk_cube,
    is_effective_pushout,
    pullback,
    pushout,
)
from nestcond.fixtures import fixture, type_graphs
from nestcond.graph import GraphMorphism, compose, identity, is_injective
from nestcond.laws import Bounds, run_law
from nestcond.satisfaction import enumerate_extensions, enumerate_injective_morphisms, generally_satisfies

import test_fixtures
from oracles import (
    all_graphs,
    all_subgraphs,
    all_typed_injective,
    _comp,
    brute_general,
    injective_dup_scan,
    key,
    naive_pushout_apex,
)

SEED = 42
TG_A = type_graphs()["TG_A"]


class Clock:
    def __init__(self):
        self.start = time.perf_counter()

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def report(capsys, n: int, title: str, problems: list, clock: Clock, limit: float):
    elapsed = clock.elapsed
    ok = not problems and elapsed < limit
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        extra = f" ({len(problems)} problems, first: {problems[0]})" if problems else ""
        print(f"\n{status} criterion {n}: {title}: {elapsed:.2f} s (limit {limit:.0f} s){extra}")
    assert not problems, problems[:3]
    assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"


def _laws(ids, cases, bounds=None) -> list:
    problems = []
    for law_id in ids:
        rep = run_law(law_id, cases=cases, seed=SEED, bounds=bounds)
        if rep.cases != cases:
            problems.append(f"{law_id}: ran {rep.cases} of {cases} cases ({rep.exhausted})")
        problems += [f"{law_id} case {f['case']}: {f['message']}" for f in rep.failures]
    return problems


# -- 1 ---------------------------------------------------------------------

def test_criterion_1_category_laws(capsys):
    clock, problems, n = Clock(), [], 500
    for i in range(n):
        rng = random.Random(f"{SEED}-cat-{i}")
        f, g, h = gen.composable_triple(rng, 5)
        if compose(compose(f, g), h) != compose(f, compose(g, h)):
            problems.append(f"case {i}: associativity")
        if compose(identity(f.dom), f) != f or compose(f, identity(f.cod)) != f:
            problems.append(f"case {i}: unit")
        # M is closed under composition
        a = gen.random_graph(rng, 5)
        m1 = gen.random_morphism(rng, a, injective=True, prefix="b")
        m2 = gen.random_morphism(rng, m1.cod, injective=True, prefix="c")
        if not injective_dup_scan(compose(m1, m2)):
            problems.append(f"case {i}: composite of injectives")
        # decomposition: g . f in M implies f in M
        if injective_dup_scan(compose(f, g)) and not injective_dup_scan(f):
            problems.append(f"case {i}: decomposition")
        if injective_dup_scan(compose(f, g)) != is_injective(compose(f, g)):
            problems.append(f"case {i}: injectivity check disagrees with the oracle")
        # pullbacks preserve M: the leg opposite an injective one is injective
        d = gen.random_graph(rng, 5)
        inj = GraphMorphism.inclusion(gen.random_subgraph(rng, d), d)
        any_map = gen.random_map_into(rng, d, 5)
        pb = pullback(any_map, inj)
        if not injective_dup_scan(pb.left):
            problems.append(f"case {i}: pullback leg")
        # pushouts preserve M: the leg opposite an injective one is injective
        s, t = gen.random_injective_span(rng, 5)
        po = pushout(s, t)
        if is_injective(s) and not injective_dup_scan(po.right):
            problems.append(f"case {i}: pushout leg")
        if is_injective(t) and not injective_dup_scan(po.left):
            problems.append(f"case {i}: pushout leg")
    report(capsys, 1, f"category laws, {n} cases each", problems, clock, 10)


# -- 2 ---------------------------------------------------------------------

def test_criterion_2_effective_pushouts(capsys):
    clock, problems, pairs = Clock(), [], 0
    for g in all_graphs(3, 3):
        subs = all_subgraphs(g)
        for s1 in subs:
            a = GraphMorphism.inclusion(s1, g)
            for s2 in subs:
                b = GraphMorphism.inclusion(s2, g)
                pairs += 1
                if not is_effective_pushout(a, b):
                    problems.append(f"{g!r}: {s1!r}, {s2!r}")
                    continue
                # independent check: the quotient of the intersection span has
                # exactly as many elements as the union of the two images
                pb = pullback(a, b)
                apex = naive_pushout_apex(pb.left, pb.right)
                if len(apex.nodes) != len(s1.node_set | s2.node_set) or \
                        len(apex.edges) != len(set(s1.edge_ids) | set(s2.edge_ids)):
                    problems.append(f"{g!r}: oracle size mismatch")
    problems += _laws(["effective-po"], 500, Bounds(max_nodes=4))
    report(capsys, 2, f"effective pushouts, {pairs} exhaustive pairs + 500 random", problems, clock, 60)


# -- 3 ---------------------------------------------------------------------

def test_criterion_3_vk_cubes(capsys):
    clock, problems, n = Clock(), [], 500
    for mode in ("vertical", "horizontal"):
        for i in range(n):
            rng = random.Random(f"{SEED}-vk-{mode}-{i}")
            rep = check_vk_cube(gen.random_vk_cube(rng, mode, 4))
            if not rep.premises_ok:
                problems.append(f"{mode} {i}: premises")
            elif not rep.vk_holds:
                problems.append(f"{mode} {i}: top={rep.top_is_pushout} fronts={rep.fronts_are_pullbacks}")
    report(capsys, 3, f"VK property, {n} cubes per mode", problems, clock, 60)


# -- 4-7 -------------------------------------------------------------------

def test_criterion_4_restriction_of_solutions(capsys):
    clock = Clock()
    problems = _laws(["fact-3.5"], 200, Bounds(4, 3))
    report(capsys, 4, "restriction of solutions, 200 cases", problems, clock, 60)


@pytest.mark.parametrize("law_id", ["fact-4.2", "fact-4.5"])
def test_criterion_5_amalgamation_round_trips(capsys, law_id):
    clock = Clock()
    problems = _laws([law_id], 200, Bounds(4, 3))
    report(capsys, 5, f"{law_id} round trips, 200 per direction", problems, clock, 60)


def test_criterion_6_amalgamation_of_solutions(capsys):
    clock = Clock()
    problems = _laws(["thm-4.8"], 200, Bounds(4, 3))
    report(capsys, 6, "amalgamation of solutions, 200 per direction", problems, clock, 120)


def test_criterion_7_initial_satisfaction(capsys):
    clock = Clock()
    problems = _laws(["thm-5.1", "cor-5.2"], 200, Bounds(4, 3))
    report(capsys, 7, "initial satisfaction with amalgamation and restriction, 200 each", problems, clock, 120)


# -- 8 ---------------------------------------------------------------------

def test_criterion_8_counterexample(capsys):
    clock, problems = Clock(), []
    ws = fixture("fig5")
    g_a, g_b = ws.typed_graphs["G_A"], ws.typed_graphs["G_B"]
    ac_a, ac_b = ws.conditions["ac_PA"], ws.conditions["ac_PB"]
    if not (generally_satisfies(g_a, ac_a) and brute_general(g_a, ac_a)):
        problems.append("G_A should generally satisfy ac_PA")
    if generally_satisfies(g_b, ac_b) or brute_general(g_b, ac_b):
        problems.append("G_B should not generally satisfy ac_PB")
    problems += _laws(["counterexample-5.4"], 1)
    report(capsys, 8, "general satisfaction is not preserved by restriction", problems, clock, 5)


# -- 9 ---------------------------------------------------------------------

def test_criterion_9_example_fixtures(capsys):
    clock, problems, count = Clock(), [], 0
    for cls in (test_fixtures.TestFig1, test_fixtures.TestFig2, test_fixtures.TestFig3, test_fixtures.TestFig4):
        obj = cls()
        for name, meth in inspect.getmembers(obj, inspect.ismethod):
            if not name.startswith("test_"):
                continue
            count += 1
            try:
                meth()
            except AssertionError as exc:
                problems.append(f"{cls.__name__}.{name}: {exc}")
    report(capsys, 9, f"fig1-fig4 prose properties, {count} checks", problems, clock, 10)


# -- 10 --------------------------------------------------------------------

def _typed(g) -> TypedGraph:
    return TypedGraph.by_labels(g, TG_A)


def test_criterion_10_matching_completeness(capsys):
    clock, problems = Clock(), []
    hosts = [_typed(g) for g in all_graphs(4, 3)]
    patterns = [_typed(g) for g in all_graphs(3, 2)] + [_typed(g) for g in all_graphs(4, 1, min_nodes=4)]
    matches = 0
    for p in patterns:
        for h in hosts:
            got = enumerate_injective_morphisms(p, h)
            want = all_typed_injective(p, h)
            matches += len(want)
            if len(got) != len({key(m) for m in got}) or {key(m) for m in got} != {key(m) for m in want}:
                problems.append(f"matches {p.graph!r} -> {h.graph!r}")
    # extensions along every subgraph inclusion of small patterns; the oracle
    # enumerates all maps out of C once and groups them by their restriction
    checked, root_matches = 0, {}
    for c in (_typed(g) for g in all_graphs(3, 2)):
        subs = [(c.sub(s.nodes, s.edge_ids), GraphMorphism.inclusion(s, c.graph)) for s in all_subgraphs(c.graph)]
        for h in hosts:
            full = all_typed_injective(c, h)
            for p_root, a in subs:
                by_restriction = {}
                for q in full:
                    by_restriction.setdefault(_comp(a, q), set()).add(key(q))
                if (p_root, h) not in root_matches:
                    root_matches[p_root, h] = all_typed_injective(p_root, h)
                for p in root_matches[p_root, h]:
                    got = enumerate_extensions(a, p, c, h)
                    checked += 1
                    if {key(m) for m in got} != by_restriction.get(key(p), set()) or \
                            len(got) != len(by_restriction.get(key(p), ())):
                        problems.append(f"extensions of {p!r} along {a!r}")
    title = (f"matching completeness, {len(patterns)} patterns x {len(hosts)} hosts ({matches} matches), "
             f"{checked} extension queries")
    report(capsys, 10, title, problems, clock, 60)
