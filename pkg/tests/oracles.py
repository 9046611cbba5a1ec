"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the library's search engine: morphisms are
enumerated as plain products of maps and filtered afterwards.
"""
from __future__ import annotations

import itertools

from nestcond.category import TypedGraph
from nestcond.conditions import And, Exists, Not, Or, TrueCondition
from nestcond.graph import Edge, Graph, GraphMorphism
from nestcond.satisfaction import EMPTY, Indexed, Witness


def all_node_maps(dom: Graph, cod: Graph):
    for img in itertools.product(cod.nodes, repeat=len(dom.nodes)):
        yield dict(zip(dom.nodes, img))


def all_morphisms(dom: Graph, cod: Graph):
    """Every structure-preserving morphism, by exhaustive product."""
    for nmap in all_node_maps(dom, cod):
        if any(dom.node_label(n) != cod.node_label(nmap[n]) for n in dom.nodes):
            continue
        choices = []
        for e in dom.edges:
            opts = [f.id for f in cod.edges
                    if f.label == e.label and f.src == nmap[e.src] and f.tgt == nmap[e.tgt]]
            choices.append(opts)
        for img in itertools.product(*choices):
            yield GraphMorphism(dom, cod, nmap, dict(zip(dom.edge_ids, img)))


def injective_dup_scan(m: GraphMorphism) -> bool:
    vals = list(m.node_map.values())
    if any(vals[i] == vals[j] for i in range(len(vals)) for j in range(i + 1, len(vals))):
        return False
    vals = list(m.edge_map.values())
    return not any(vals[i] == vals[j] for i in range(len(vals)) for j in range(i + 1, len(vals)))


def all_injective(dom: Graph, cod: Graph):
    return [m for m in all_morphisms(dom, cod) if injective_dup_scan(m)]


def all_typed_injective(p: TypedGraph, g: TypedGraph):
    out = []
    for m in all_injective(p.graph, g.graph):
        if all(g.typing.node_map[m.node_map[x]] == p.typing.node_map[x] for x in p.graph.nodes) and all(
            g.typing.edge_map[m.edge_map[x]] == p.typing.edge_map[x] for x in p.graph.edge_ids
        ):
            out.append(m)
    return out


def key(m: GraphMorphism):
    return (tuple(sorted(m.node_map.items())), tuple(sorted(m.edge_map.items())))


def isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    if len(g.nodes) != len(h.nodes) or len(g.edges) != len(h.edges):
        return False
    for m in all_morphisms(g, h):
        if len(set(m.node_map.values())) == len(h.nodes) and len(set(m.edge_map.values())) == len(h.edges):
            return True
    return False


def image_union_covers(f: GraphMorphism, g: GraphMorphism) -> bool:
    cod = f.cod
    nodes = set(f.node_map.values()) | set(g.node_map.values())
    edges = set(f.edge_map.values()) | set(g.edge_map.values())
    return nodes == set(cod.nodes) and edges == set(cod.edge_ids)


# --------------------------------------------------------------------------
# universal properties by enumerating (co)cones


def probe_graphs(labels=("b", "c")) -> list[Graph]:
    """Small graphs that detect nodes, edges and identifications."""
    out = [Graph(), Graph.of(["x"]), Graph.of(["x", "y"])]
    for l in labels:
        out.append(Graph.of(["x", "y"], [("e", "x", "y", l)]))
        out.append(Graph.of(["x"], [("e", "x", "x", l)]))
    return out


def pullback_by_cones(f, g, h, k, probes=None) -> bool:
    """Square ``A -f-> B``, ``A -g-> C``, ``B -h-> D``, ``C -k-> D`` is a pullback iff
    every cone from every probe factors uniquely through ``A``."""
    A = f.dom
    for X in probes or probe_graphs():
        maps_a = list(all_morphisms(X, A))
        for u in all_morphisms(X, f.cod):
            for v in all_morphisms(X, g.cod):
                if _comp(u, h) != _comp(v, k):
                    continue
                facts = [m for m in maps_a if _comp(m, f) == key(u) and _comp(m, g) == key(v)]
                if len(facts) != 1:
                    return False
    return True


def pushout_by_cocones(f, g, h, k, targets) -> bool:
    """Every cocone into each target graph factors uniquely through ``D``."""
    D = h.cod
    for X in targets:
        maps_d = list(all_morphisms(D, X))
        for u in all_morphisms(f.cod, X):
            for v in all_morphisms(g.cod, X):
                if _comp(f, u) != _comp(g, v):
                    continue
                facts = [m for m in maps_d if _comp(h, m) == key(u) and _comp(k, m) == key(v)]
                if len(facts) != 1:
                    return False
    return True


def _comp(m1: GraphMorphism, m2: GraphMorphism):
    return (
        tuple(sorted((x, m2.node_map[y]) for x, y in m1.node_map.items())),
        tuple(sorted((x, m2.edge_map[y]) for x, y in m1.edge_map.items())),
    )


# --------------------------------------------------------------------------
# naive pushout quotient


def naive_pushout_apex(f: GraphMorphism, g: GraphMorphism) -> Graph:
    """Quotient of the disjoint union by repeated closure (no union-find)."""
    B, C = f.cod, g.cod
    n_items = [("B", n) for n in B.nodes] + [("C", n) for n in C.nodes]
    n_cls = {x: {x} for x in n_items}
    for d in f.dom.nodes:
        a, b = ("B", f.node_map[d]), ("C", g.node_map[d])
        merged = n_cls[a] | n_cls[b]
        for x in merged:
            n_cls[x] = merged
    e_items = [("B", e) for e in B.edge_ids] + [("C", e) for e in C.edge_ids]
    e_cls = {x: {x} for x in e_items}
    for d in f.dom.edge_ids:
        a, b = ("B", f.edge_map[d]), ("C", g.edge_map[d])
        merged = e_cls[a] | e_cls[b]
        for x in merged:
            e_cls[x] = merged

    def nname(x):
        return repr(sorted(n_cls[x]))

    edges = {}
    for side, G in (("B", B), ("C", C)):
        for e in G.edges:
            name = repr(sorted(e_cls[(side, e.id)]))
            edges[name] = Edge(name, nname((side, e.src)), nname((side, e.tgt)), e.label)
    nodes = {nname(x) for x in n_items}
    return Graph(tuple(nodes), tuple(edges.values()))


# --------------------------------------------------------------------------
# exhaustive satisfaction


def brute_extensions(a, p, c: TypedGraph, g: TypedGraph):
    return [q for q in all_typed_injective(c, g) if _comp(a, q) == key(p)]


def brute_satisfies(p, cond, host) -> bool:
    if isinstance(cond, TrueCondition):
        return True
    if isinstance(cond, Exists):
        return any(brute_satisfies(q, cond.sub, host)
                   for q in brute_extensions(cond.morphism, p, cond.sub.root, host))
    if isinstance(cond, Not):
        return not brute_satisfies(p, cond.sub, host)
    if isinstance(cond, And):
        return all(brute_satisfies(p, x, host) for x in cond.children)
    return any(brute_satisfies(p, x, host) for x in cond.children)


def brute_solutions(p, cond, host) -> list:
    """All solutions, enumerated by combining all extension choices."""
    if isinstance(cond, TrueCondition):
        return [EMPTY]
    if isinstance(cond, Exists):
        out = []
        for q in brute_extensions(cond.morphism, p, cond.sub.root, host):
            out.extend(Witness(q, s) for s in brute_solutions(q, cond.sub, host))
        return out
    if isinstance(cond, And):
        per = [brute_solutions(p, x, host) for x in cond.children]
        return [Indexed(t) for t in itertools.product(*per)]
    if isinstance(cond, Or):
        out = []
        n = len(cond.children)
        for j, x in enumerate(cond.children):
            for s in brute_solutions(p, x, host):
                sol = Indexed(tuple(s if i == j else EMPTY for i in range(n)))
                if sol not in out:
                    out.append(sol)
        return out
    raise TypeError("negation has no solutions")


def brute_general(g: TypedGraph, cond) -> bool:
    return all(brute_satisfies(p, cond, g) for p in all_typed_injective(cond.root, g))


# --------------------------------------------------------------------------
# enumeration of small graphs up to isomorphism


def canonical_form(nodes: int, edges) -> tuple:
    best = None
    for perm in itertools.permutations(range(nodes)):
        form = tuple(sorted((perm[s], perm[t], l) for s, t, l in edges))
        if best is None or form < best:
            best = form
    return best


def all_graphs(max_nodes: int, max_edges: int, labels=("b", "c"), min_nodes: int = 0) -> list[Graph]:
    """One representative per isomorphism class."""
    out = []
    for n in range(min_nodes, max_nodes + 1):
        slots = [(s, t, l) for s in range(n) for t in range(n) for l in labels]
        seen = set()
        for m in range(max_edges + 1):
            for combo in itertools.combinations_with_replacement(slots, m):
                form = canonical_form(n, combo)
                if form in seen:
                    continue
                seen.add(form)
                out.append(Graph.of(
                    [str(i) for i in range(n)],
                    [(f"e{j}", str(s), str(t), l) for j, (s, t, l) in enumerate(form)],
                ))
    return out


def all_subgraphs(g: Graph) -> list[Graph]:
    out = []
    for r in range(len(g.nodes) + 1):
        for ns in itertools.combinations(g.nodes, r):
            inner = [e.id for e in g.edges if e.src in ns and e.tgt in ns]
            for k in range(len(inner) + 1):
                for es in itertools.combinations(inner, k):
                    out.append(g.subgraph(ns, es))
    return out
