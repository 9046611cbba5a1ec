"""Reference instances built over the two-label type graph.

The type graph ``TG_A`` has one node ``v`` with a ``b``-loop and a
``c``-loop.  ``TG_B`` keeps only the ``b``-loop, ``TG_C`` only the
``c``-loop and ``TG_D`` only the node; together with the inclusions they
form the amalgamation context returned by :func:`bc_context`.

Each ``figN`` function returns a :class:`~nestcond.io.Workspace` whose
names are the ones used throughout the tests, demos and docs.
"""
from __future__ import annotations

from typing import Callable

from .category import AmalgamationContext, TypedGraph, initial_morphism
from .conditions import conj, disj, exists, restrict_condition, true
from .graph import Graph, GraphMorphism
from .io import Workspace
from .satisfaction import EMPTY, Certificate, Indexed, Witness

_V = "v"


def type_graphs() -> dict[str, Graph]:
    return {
        "TG_A": Graph.of([_V], [("b", _V, _V, "b"), ("c", _V, _V, "c")]),
        "TG_B": Graph.of([_V], [("b", _V, _V, "b")]),
        "TG_C": Graph.of([_V], [("c", _V, _V, "c")]),
        "TG_D": Graph.of([_V]),
    }


def bc_context() -> AmalgamationContext:
    tg = type_graphs()
    ctx = AmalgamationContext(
        GraphMorphism.inclusion(tg["TG_D"], tg["TG_B"]),
        GraphMorphism.inclusion(tg["TG_D"], tg["TG_C"]),
        GraphMorphism.inclusion(tg["TG_B"], tg["TG_A"]),
        GraphMorphism.inclusion(tg["TG_C"], tg["TG_A"]),
    )
    ctx.validate()
    return ctx


def typed(nodes, edges=(), type_graph: Graph | None = None) -> TypedGraph:
    """A graph typed by edge labels; every node has type ``v``."""
    return TypedGraph.by_labels(Graph.of(nodes, edges), type_graph or type_graphs()["TG_A"])


def incl(a: TypedGraph, b: TypedGraph) -> GraphMorphism:
    return GraphMorphism.inclusion(a.graph, b.graph)


def _base_workspace() -> Workspace:
    ws = Workspace()
    ws.graphs.update(type_graphs())
    ctx = bc_context()
    ws.contexts["bc"] = ctx
    for name in ("tg_db", "tg_dc", "tg_ba", "tg_ca"):
        ws.morphisms[name] = getattr(ctx, name)
    return ws


def fig1() -> Workspace:
    """Two matches of a ``b``-edge, both satisfying a nested conjunction.

    ``ac_P = exists(a1, true) and exists(a2, exists(a3, true) or exists(a4, true))``
    """
    P = typed(["1", "2"], [("b1", "1", "2", "b")])
    C1 = typed(["1", "2"], [("b1", "1", "2", "b"), ("l1", "1", "1", "b")])
    C2 = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c")])
    C3 = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c"),
                                 ("b2", "3", "2", "b"), ("c2", "2", "1", "c")])
    C4 = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c"),
                                 ("c3", "3", "2", "c"), ("b3", "2", "1", "b")])
    G = typed(["1", "2", "3"], [
        ("b1", "1", "2", "b"), ("c1", "2", "3", "c"), ("b2", "3", "2", "b"),
        ("c2", "2", "1", "c"), ("l1", "1", "1", "b"), ("l3", "3", "3", "b"),
    ])
    a1, a2, a3, a4 = incl(P, C1), incl(P, C2), incl(C2, C3), incl(C2, C4)
    ac_P = conj(exists(a1, C1), exists(a2, disj(exists(a3, C3), exists(a4, C4))))
    I = TypedGraph.empty(P.type_graph)
    ac_I = exists(initial_morphism(P.graph), ac_P, root=I)

    # the first match in search order is the inclusion
    p1 = incl(P, G)
    q1, q2, q3 = incl(C1, G), incl(C2, G), incl(C3, G)
    Q_gen = Indexed((Witness(q1, EMPTY), Witness(q2, Indexed((Witness(q3, EMPTY), EMPTY)))))
    Q_init = Witness(p1, Q_gen)

    ws = _base_workspace()
    for name, t in (("P", P), ("C1", C1), ("C2", C2), ("C3", C3), ("C4", C4), ("G_A", G), ("I", I)):
        ws.typed_graphs[name] = t
        ws.graphs[name] = t.graph
    ws.graphs["I"] = I.graph
    ws.morphisms.update(a1=a1, a2=a2, a3=a3, a4=a4, p1=p1, q1=q1, q2=q2, q3=q3)
    ws.conditions.update(ac_P=ac_P, ac_I=ac_I)
    ws.solutions["Q_gen"] = Certificate(ac_P, G, p1, Q_gen)
    ws.solutions["Q_init"] = Certificate.initial(ac_I, G, Q_init)
    return ws


def _fig2_graphs() -> dict[str, TypedGraph]:
    tg = type_graphs()
    nodes = ["1", "2", "3"]
    bs = [("b1", "1", "2", "b"), ("b2", "3", "2", "b")]
    cs = [("c1", "2", "3", "c"), ("c2", "2", "1", "c")]
    return {
        "G_A": typed(nodes, bs + cs, tg["TG_A"]),
        "G_B": typed(nodes, bs, tg["TG_B"]),
        "G_C": typed(nodes, cs, tg["TG_C"]),
        "G_D": typed(nodes, (), tg["TG_D"]),
    }


def fig2() -> Workspace:
    """A graph with ``b``- and ``c``-edges as the amalgamation of its two views."""
    ws = _base_workspace()
    for name, t in _fig2_graphs().items():
        ws.typed_graphs[name] = t
        ws.graphs[name] = t.graph
    return ws


def _fig3_condition():
    P = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c")])
    C1 = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c"),
                                 ("b2", "3", "2", "b"), ("c2", "2", "1", "c")])
    C2 = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c"),
                                 ("b4", "2", "3", "b"), ("c4", "3", "1", "c")])
    a1, a2 = incl(P, C1), incl(P, C2)
    return P, C1, C2, a1, a2, disj(exists(a1, C1), exists(a2, C2))


def fig3() -> Workspace:
    """A disjunctive condition over a ``b``/``c`` path and its three restrictions."""
    P, C1, C2, a1, a2, ac = _fig3_condition()
    ctx = bc_context()
    ws = _base_workspace()
    for name, t in (("P_A", P), ("C1_A", C1), ("C2_A", C2)):
        ws.typed_graphs[name] = t
        ws.graphs[name] = t.graph
    ws.morphisms.update(a1_A=a1, a2_A=a2)
    ac_b = restrict_condition(ac, ctx.tg_ba)
    ac_c = restrict_condition(ac, ctx.tg_ca)
    ws.conditions.update(
        ac_PA=ac, ac_PB=ac_b, ac_PC=ac_c, ac_PD=restrict_condition(ac_b, ctx.tg_db)
    )
    return ws


def fig4() -> Workspace:
    """Initial satisfaction of ``exists(P_A, ac_PA)`` by the graph of :func:`fig2`."""
    ws = fig3()
    ws.merge(fig2())
    ctx = bc_context()
    P, C1, _, a1, _, ac_P = _fig3_condition()
    G = ws.typed_graphs["G_A"]
    I = TypedGraph.empty(ctx.tg_a)
    ac_A = exists(initial_morphism(P.graph), ac_P, root=I)
    q_A, q1_A = incl(P, G), incl(C1, G)
    Q_A = Witness(q_A, Indexed((Witness(q1_A, EMPTY), EMPTY)))
    ws.conditions["ac_A"] = ac_A
    ws.typed_graphs["I_A"] = I
    ws.morphisms.update(q_A=q_A, q1_A=q1_A)
    ws.solutions["Q_A"] = Certificate.initial(ac_A, G, Q_A)
    return ws


def fig5() -> Workspace:
    """General satisfaction holds for ``G_A`` but fails for its ``b``-view."""
    ctx = bc_context()
    P = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c")])
    C = typed(["1", "2", "3"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c"),
                                ("b2", "3", "2", "b"), ("c2", "2", "1", "c")])
    G = typed(["1", "2", "3", "4"], [("b1", "1", "2", "b"), ("c1", "2", "3", "c"),
                                     ("b2", "3", "2", "b"), ("c2", "2", "1", "c")])
    a = incl(P, C)
    ac = exists(a, C)
    ws = _base_workspace()
    for name, t in (("P_A", P), ("C_A", C), ("G_A", G)):
        ws.typed_graphs[name] = t
        ws.graphs[name] = t.graph
    from .category import restrict_typed_graph

    G_B = restrict_typed_graph(G, ctx.tg_ba).typed
    ws.typed_graphs["G_B"] = G_B
    ws.graphs["G_B"] = G_B.graph
    ws.morphisms["a_A"] = a
    ws.conditions["ac_PA"] = ac
    ws.conditions["ac_PB"] = restrict_condition(ac, ctx.tg_ba)
    # the B-side match that has no extension: node 3 goes to the isolated node 4
    P_B = ws.conditions["ac_PB"].root
    ws.morphisms["p_B_bad"] = GraphMorphism(P_B.graph, G_B.graph, {"1": "1", "2": "2", "3": "4"}, {"b1": "b1"})
    return ws


FIXTURES: dict[str, Callable[[], Workspace]] = {
    "fig1": fig1,
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
}


def fixture(name: str) -> Workspace:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
