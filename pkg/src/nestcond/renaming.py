"""Transport of typed graphs, conditions and solutions along id bijections.

Everything in this package compares by exact ids.  Results that are only
determined up to isomorphism are compared after renaming one side; the
functions here apply such a renaming consistently at every nesting level.

A *renamer* is a callable ``ren(path, graph) -> iso`` returning a bijective
morphism out of ``graph``; ``path`` is the nesting path of the level in the
notation of :func:`nestcond.conditions.levels` (``"root"``, ``"root.sub"``,
``"root[1].sub"`` and so on).
"""
from __future__ import annotations

from typing import Callable, Mapping

from .category import TypedGraph
from .conditions import And, Condition, Exists, Not, Or, TrueCondition
from .graph import Edge, Graph, GraphError, GraphMorphism, compose, inverse, is_bijective
from .satisfaction import EMPTY, Certificate, Empty, Indexed, Solution, Witness

Renamer = Callable[[str, Graph], GraphMorphism]


def rename_graph(g: Graph, nodes: Mapping[str, str] = None, edges: Mapping[str, str] = None) -> GraphMorphism:
    """The iso from ``g`` onto its copy with ids renamed (missing ids stay)."""
    nodes, edges = nodes or {}, edges or {}
    nm = {n: nodes.get(n, n) for n in g.nodes}
    em = {e: edges.get(e, e) for e in g.edge_ids}
    if len(set(nm.values())) != len(nm) or len(set(em.values())) != len(em):
        raise GraphError("renaming is not injective")
    h = Graph(
        tuple(nm.values()),
        tuple(Edge(em[e.id], nm[e.src], nm[e.tgt], e.label) for e in g.edges),
        {nm[n]: l for n, l in g.node_labels.items()},
    )
    return GraphMorphism(g, h, nm, em)


def image_iso(m: GraphMorphism) -> GraphMorphism:
    """For injective ``m: G -> H``, the iso from ``G`` onto its image in ``H``."""
    iso = rename_graph(m.dom, m.node_map, m.edge_map)
    if not is_bijective(iso):
        raise GraphError("morphism is not injective")
    return iso


def transport_typed(t: TypedGraph, iso: GraphMorphism) -> TypedGraph:
    return TypedGraph(compose(inverse(iso), t.typing))


def transport_morphism(m: GraphMorphism, iso_dom: GraphMorphism, iso_cod: GraphMorphism) -> GraphMorphism:
    return compose(inverse(iso_dom), compose(m, iso_cod))


def transport_condition(c: Condition, ren: Renamer, root_iso: GraphMorphism = None) -> Condition:
    return _walk(c, None, ren, root_iso or ren("root", c.root.graph), None, "root")[0]


def transport_certificate(cert: Certificate, ren: Renamer, host_iso: GraphMorphism) -> Certificate:
    """Rename every level of the condition by ``ren`` and the host by ``host_iso``."""
    root_iso = ren("root", cert.condition.root.graph)
    cond, sol = _walk(cert.condition, cert.solution, ren, root_iso, host_iso, "root")
    return Certificate(
        cond,
        transport_typed(cert.host, host_iso),
        transport_morphism(cert.match, root_iso, host_iso),
        sol,
    )


def _walk(c: Condition, sol, ren: Renamer, iso: GraphMorphism, host_iso, path: str):
    root = transport_typed(c.root, iso)
    if isinstance(c, TrueCondition):
        return TrueCondition(root), (EMPTY if sol is not None else None)
    if isinstance(c, Exists):
        sub_path = path + ".sub"
        sub_iso = ren(sub_path, c.sub.root.graph)
        a = transport_morphism(c.morphism, iso, sub_iso)
        if isinstance(sol, Witness):
            sub_c, sub_s = _walk(c.sub, sol.sub, ren, sub_iso, host_iso, sub_path)
            return Exists(root, a, sub_c), Witness(transport_morphism(sol.morphism, sub_iso, host_iso), sub_s)
        sub_c, _ = _walk(c.sub, None, ren, sub_iso, host_iso, sub_path)
        return Exists(root, a, sub_c), (EMPTY if isinstance(sol, Empty) else None)
    if isinstance(c, Not):
        sub_c, _ = _walk(c.sub, None, ren, iso, host_iso, path + ".sub")
        return Not(root, sub_c), None
    kids, sols = [], []
    sol_kids = sol.children if isinstance(sol, Indexed) else [None] * len(c.children)
    for i, (ch, s) in enumerate(zip(c.children, sol_kids)):
        k, ks = _walk(ch, s, ren, iso, host_iso, f"{path}[{i}]")
        kids.append(k)
        sols.append(ks)
    cls = And if isinstance(c, And) else Or
    new_sol = None
    if isinstance(sol, Indexed):
        new_sol = Indexed(tuple(sols))
    elif isinstance(sol, Empty):
        new_sol = EMPTY
    return cls(root, tuple(kids)), new_sol


def level_roots(c: Condition) -> dict[str, Graph]:
    """The root graph of every level of ``c`` keyed by path."""
    from .conditions import levels

    return {path: node.root.graph for path, node in levels(c)}
