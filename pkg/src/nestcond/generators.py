"""Seeded random instances for law campaigns and property tests.

Every generator takes a :class:`random.Random` and produces the same value
for the same seed.  Instances that must satisfy premises (agreement,
satisfiability, pushout bottoms of cubes) are built so that the premises
hold by construction; generators that may still fail raise
:class:`GeneratorExhausted` after their retry budget.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .category import (
    AmalgamationContext,
    CommutativeSquare,
    TypedGraph,
    VKCube,
    _pullback,
    initial_morphism,
    pushout,
)
from .conditions import And, Condition, Exists, Or, TrueCondition, decompose_condition, levels
from .graph import Edge, Graph, GraphMorphism, compose, identity, is_injective
from .renaming import rename_graph, transport_certificate, transport_condition, transport_typed
from .satisfaction import Certificate, decompose_solution, find_solution

LABELS = ("b", "c")


class GeneratorExhausted(RuntimeError):
    """No premise-satisfying instance was found within the retry budget."""


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def retry(rng: random.Random, build, budget: int = 50):
    for _ in range(budget):
        out = build(rng)
        if out is not None:
            return out
    raise GeneratorExhausted(f"no instance after {budget} attempts")


# --------------------------------------------------------------------------
# plain graphs and morphisms


def random_graph(
    rng: random.Random,
    max_nodes: int = 4,
    labels=LABELS,
    max_edges: Optional[int] = None,
    min_nodes: int = 0,
    prefix: str = "n",
) -> Graph:
    n = rng.randint(min_nodes, max_nodes)
    nodes = [f"{prefix}{i}" for i in range(n)]
    if not nodes:
        return Graph()
    m = rng.randint(0, max_edges if max_edges is not None else n + 1)
    edges = [
        Edge(f"e{i}", rng.choice(nodes), rng.choice(nodes), rng.choice(labels)) for i in range(m)
    ]
    return Graph(tuple(nodes), tuple(edges))


def random_subgraph(rng: random.Random, g: Graph, keep: float = 0.6) -> Graph:
    ns = {n for n in g.nodes if rng.random() < keep}
    es = [e.id for e in g.edges if e.src in ns and e.tgt in ns and rng.random() < keep]
    return g.subgraph(ns, es)


def random_morphism(
    rng: random.Random,
    dom: Graph,
    *,
    injective: Optional[bool] = None,
    extra_nodes: int = 1,
    extra_edges: int = 1,
    labels=LABELS,
    prefix: str = "m",
) -> GraphMorphism:
    """A random morphism out of ``dom`` with a freshly built codomain.

    Non-injective morphisms glue nodes and parallel edges at random; the
    codomain ids are shuffled so that maps are not order preserving.
    """
    if injective is None:
        injective = rng.random() < 0.5
    merge = 0.0 if injective else 0.4
    node_img: dict[str, int] = {}
    count = 0
    for n in dom.nodes:
        if node_img and rng.random() < merge:
            node_img[n] = rng.choice(sorted(set(node_img.values())))
        else:
            node_img[n] = count
            count += 1
    count += rng.randint(0, extra_nodes)
    cod_edges: list[tuple[int, int, str]] = []
    edge_img: dict[str, int] = {}
    for e in dom.edges:
        key = (node_img[e.src], node_img[e.tgt], e.label)
        cands = [i for i, k in enumerate(cod_edges) if k == key]
        if cands and rng.random() < merge:
            edge_img[e.id] = rng.choice(cands)
        else:
            edge_img[e.id] = len(cod_edges)
            cod_edges.append(key)
    if count:
        for _ in range(rng.randint(0, extra_edges)):
            cod_edges.append((rng.randrange(count), rng.randrange(count), rng.choice(labels)))
    node_names = [f"{prefix}{i}" for i in range(count)]
    edge_names = [f"{prefix}e{i}" for i in range(len(cod_edges))]
    rng.shuffle(node_names)
    rng.shuffle(edge_names)
    cod = Graph(
        tuple(node_names),
        tuple(Edge(edge_names[i], node_names[s], node_names[t], l) for i, (s, t, l) in enumerate(cod_edges)),
    )
    return GraphMorphism(
        dom,
        cod,
        {n: node_names[i] for n, i in node_img.items()},
        {e: edge_names[i] for e, i in edge_img.items()},
    )


def random_map_into(rng: random.Random, cod: Graph, max_nodes: int = 4, prefix: str = "y") -> GraphMorphism:
    """A random morphism from a fresh graph into ``cod`` (not necessarily injective)."""
    if not cod.nodes:
        return initial_morphism(cod)
    n = rng.randint(0, max_nodes)
    nodes = [f"{prefix}{i}" for i in range(n)]
    nmap = {x: rng.choice(cod.nodes) for x in nodes}
    edges, emap = [], {}
    for i in range(rng.randint(0, n + 1)):
        if not cod.edges:
            break
        target = rng.choice(cod.edges)
        srcs = [x for x in nodes if nmap[x] == target.src]
        tgts = [x for x in nodes if nmap[x] == target.tgt]
        if not srcs or not tgts:
            continue
        eid = f"{prefix}e{i}"
        edges.append(Edge(eid, rng.choice(srcs), rng.choice(tgts), target.label))
        emap[eid] = target.id
    return GraphMorphism(Graph(tuple(nodes), tuple(edges)), cod, nmap, emap)


def composable_triple(rng: random.Random, max_nodes: int = 5):
    """Random ``f: A -> B``, ``g: B -> C``, ``h: C -> D``."""
    a = random_graph(rng, max_nodes=max_nodes)
    f = random_morphism(rng, a, prefix="b")
    g = random_morphism(rng, f.cod, prefix="c")
    h = random_morphism(rng, g.cod, prefix="d")
    return f, g, h


def random_injective_span(rng: random.Random, max_nodes: int = 4):
    """``(f, g)`` with common domain; ``f`` injective, ``g`` arbitrary."""
    d = random_graph(rng, max_nodes=max(0, max_nodes - 1))
    f = random_morphism(rng, d, injective=True, prefix="b")
    g = random_morphism(rng, d, prefix="c")
    return (f, g) if rng.random() < 0.5 else (g, f)


def random_injective_cospan(rng: random.Random, max_nodes: int = 4):
    """Two injective morphisms into a common random graph, both from subgraphs."""
    x = random_graph(rng, max_nodes=max_nodes)
    b, c = random_subgraph(rng, x), random_subgraph(rng, x)
    return GraphMorphism.inclusion(b, x), GraphMorphism.inclusion(c, x)


# --------------------------------------------------------------------------
# cubes


def _pullback_factor(pb, u: GraphMorphism, v: GraphMorphism) -> GraphMorphism:
    """The map into a pullback apex given compatible legs ``u``, ``v``."""
    nodes = {(pb.left.node_map[z], pb.right.node_map[z]): z for z in pb.apex.nodes}
    edges = {(pb.left.edge_map[z], pb.right.edge_map[z]): z for z in pb.apex.edge_ids}
    return GraphMorphism(
        u.dom,
        pb.apex,
        {x: nodes[(u.node_map[x], v.node_map[x])] for x in u.dom.nodes},
        {x: edges[(u.edge_map[x], v.edge_map[x])] for x in u.dom.edge_ids},
    )


def _cube_over(bottom: CommutativeSquare, d: GraphMorphism, mode: str) -> VKCube:
    """Pull the bottom square back along ``d: D' -> D``."""
    f, g, h, k = bottom.f, bottom.g, bottom.h, bottom.k
    pb_b = _pullback(h, d)  # B' with b: B'->B and h': B'->D'
    pb_c = _pullback(k, d)
    pb_a = _pullback(f, pb_b.left)  # A' with a: A'->A and f': A'->B'
    a = pb_a.left
    f_top = pb_a.right
    # g': A' -> C' factors through the pullback of (k, d)
    g_top = _pullback_factor(pb_c, compose(a, g), compose(f_top, pb_b.right))
    top = CommutativeSquare(f_top, g_top, pb_b.right, pb_c.right)
    return VKCube(bottom, top, a, pb_b.left, pb_c.left, d, mode)


def random_vk_cube(rng: random.Random, mode: str = "vertical", max_nodes: int = 4) -> VKCube:
    """A cube over a pushout along an injective leg with pullback back faces.

    Most cubes are pulled back along ``d`` and so have pullback fronts; some
    get an extra element in the top apex, which breaks both sides of the
    equivalence at once.
    """
    if mode == "vertical":
        f, g = random_injective_span(rng, max_nodes)
        if not is_injective(f):
            f, g = g, f
    else:
        d0 = random_graph(rng, max_nodes=max(0, max_nodes - 1))
        f = random_morphism(rng, d0, injective=True, prefix="b")
        g = random_morphism(rng, d0, injective=True, prefix="c")
    po = pushout(f, g)
    bottom = CommutativeSquare(f, g, po.left, po.right)
    D = po.apex
    if mode == "vertical":
        d = GraphMorphism.inclusion(random_subgraph(rng, D, keep=0.75), D)
    else:
        d = random_map_into(rng, D, max_nodes=max_nodes)
    cube = _cube_over(bottom, d, mode)
    roll = rng.random()
    if roll < 0.2:
        return _with_extra_apex_node(cube, rng)
    if roll < 0.3 and mode == "vertical":
        return _with_shrunk_fronts(cube, rng)
    return cube


def _with_extra_apex_node(cube: VKCube, rng: random.Random) -> VKCube:
    """Add one node to ``D'`` mapped into ``D`` (injectively when possible)."""
    d = cube.d
    D = d.cod
    if not D.nodes:
        return cube
    free = [n for n in D.nodes if n not in set(d.node_map.values())]
    if cube.mode == "vertical" and not free:
        return cube
    target = rng.choice(free or list(D.nodes))
    new = "extra"
    while new in d.dom.node_set:
        new += "'"
    dom2 = Graph(d.dom.nodes + (new,), d.dom.edges, d.dom.node_labels)
    d2 = GraphMorphism(dom2, D, {**d.node_map, new: target}, d.edge_map)
    incl = GraphMorphism.inclusion(d.dom, dom2)
    top = CommutativeSquare(cube.top.f, cube.top.g, compose(cube.top.h, incl), compose(cube.top.k, incl))
    return VKCube(cube.bottom, top, cube.a, cube.b, cube.c, d2, cube.mode)


def _with_shrunk_fronts(cube: VKCube, rng: random.Random) -> VKCube:
    """Pull back along a smaller ``D''`` but keep ``D'`` as the top apex."""
    D_top = cube.d.dom
    smaller = GraphMorphism.inclusion(random_subgraph(rng, D_top, keep=0.7), D_top)
    inner = _cube_over(cube.bottom, compose(smaller, cube.d), cube.mode)
    top = CommutativeSquare(
        inner.top.f, inner.top.g, compose(inner.top.h, smaller), compose(inner.top.k, smaller)
    )
    return VKCube(cube.bottom, top, inner.a, inner.b, inner.c, cube.d, cube.mode)


def identity_cube(bottom: CommutativeSquare, mode: str = "vertical") -> VKCube:
    f, g, h = bottom.f, bottom.g, bottom.h
    return VKCube(bottom, bottom, identity(f.dom), identity(f.cod), identity(g.cod), identity(h.cod), mode)


# --------------------------------------------------------------------------
# typed graphs and contexts


def random_typed_graph(
    rng: random.Random, type_graph: Graph, max_nodes: int = 4, max_edges: Optional[int] = None, prefix: str = "n"
) -> TypedGraph:
    if not type_graph.nodes:
        return TypedGraph.empty(type_graph)
    n = rng.randint(0, max_nodes)
    nodes = [f"{prefix}{i}" for i in range(n)]
    ntype = {x: rng.choice(type_graph.nodes) for x in nodes}
    edges, etype = [], {}
    for i in range(rng.randint(0, max_edges if max_edges is not None else n + 2)):
        if not type_graph.edges:
            break
        t = rng.choice(type_graph.edges)
        srcs = [x for x in nodes if ntype[x] == t.src]
        tgts = [x for x in nodes if ntype[x] == t.tgt]
        if not srcs or not tgts:
            continue
        eid = f"{prefix}e{i}"
        edges.append(Edge(eid, rng.choice(srcs), rng.choice(tgts), t.label))
        etype[eid] = t.id
    g = Graph(tuple(nodes), tuple(edges))
    return TypedGraph(GraphMorphism(g, type_graph, ntype, etype))


def _extend_graph(rng: random.Random, base: Graph, extra_nodes: int, extra_edges: int, prefix: str) -> Graph:
    nodes = list(base.nodes) + [f"{prefix}{i}" for i in range(rng.randint(0, extra_nodes))]
    edges = list(base.edges)
    if nodes:
        for i in range(rng.randint(0, extra_edges)):
            edges.append(Edge(f"{prefix}e{i}", rng.choice(nodes), rng.choice(nodes), rng.choice(LABELS)))
    return Graph(tuple(nodes), tuple(edges))


def random_context(rng: random.Random, max_type_nodes: int = 2, collide: Optional[bool] = None) -> AmalgamationContext:
    """A pushout of type graphs ``TG_B <- TG_D -> TG_C`` along inclusions.

    With ``collide`` the extra elements of both sides share ids, so the
    pushout has to rename some of them.
    """
    if collide is None:
        collide = rng.random() < 0.3
    tg_d = random_graph(rng, max_nodes=max_type_nodes - 1, max_edges=1, prefix="d")
    tg_b = _extend_graph(rng, tg_d, 1, 2, "x" if collide else "b")
    tg_c = _extend_graph(rng, tg_d, 1, 2, "x" if collide else "c")
    if not tg_b.nodes:
        tg_b = Graph(("b0",), (Edge("b0e", "b0", "b0", "b"),))
    ctx = AmalgamationContext.from_span(
        GraphMorphism.inclusion(tg_d, tg_b), GraphMorphism.inclusion(tg_d, tg_c)
    )
    return ctx


def _extend_typed_outside(rng, g_d: TypedGraph, tg: Graph, t: GraphMorphism, max_nodes: int, prefix: str) -> TypedGraph:
    """Extend ``g_d`` (over ``t.dom``) to a graph over ``tg`` with elements typed outside ``t``."""
    outside_n = [n for n in tg.nodes if n not in set(t.node_map.values())]
    outside_e = [e for e in tg.edges if e.id not in set(t.edge_map.values())]
    ntype = {x: t.node_map[y] for x, y in g_d.typing.node_map.items()}
    etype = {x: t.edge_map[y] for x, y in g_d.typing.edge_map.items()}
    nodes = list(g_d.graph.nodes)
    edges = list(g_d.graph.edges)
    if outside_n:
        for i in range(rng.randint(0, max(0, max_nodes - len(nodes)))):
            x = f"{prefix}{i}"
            nodes.append(x)
            ntype[x] = rng.choice(outside_n)
    for i in range(rng.randint(0, 3)):
        if not outside_e:
            break
        te = rng.choice(outside_e)
        srcs = [x for x in nodes if ntype[x] == te.src]
        tgts = [x for x in nodes if ntype[x] == te.tgt]
        if srcs and tgts:
            eid = f"{prefix}e{i}"
            edges.append(Edge(eid, rng.choice(srcs), rng.choice(tgts), te.label))
            etype[eid] = te.id
    g = Graph(tuple(nodes), tuple(edges))
    return TypedGraph(GraphMorphism(g, tg, ntype, etype))


def agreeing_typed_triple(
    rng: random.Random, ctx: AmalgamationContext, max_nodes: int = 4, collide: Optional[bool] = None
) -> tuple[TypedGraph, TypedGraph, TypedGraph]:
    """``(g_B, g_C, g_D)`` agreeing in ``g_D``, built by extending ``g_D`` on both sides."""
    if collide is None:
        collide = rng.random() < 0.4
    g_d = random_typed_graph(rng, ctx.tg_d, max_nodes=max(0, max_nodes - 1), prefix="d")
    g_b = _extend_typed_outside(rng, g_d, ctx.tg_b, ctx.tg_db, max_nodes, "x" if collide else "b")
    g_c = _extend_typed_outside(rng, g_d, ctx.tg_c, ctx.tg_dc, max_nodes, "x" if collide else "c")
    return g_b, g_c, g_d


# --------------------------------------------------------------------------
# conditions


@dataclass
class _Fresh:
    counter: itertools.count

    def node(self) -> str:
        return f"n{next(self.counter)}"

    def edge(self) -> str:
        return f"e{next(self.counter)}"


def _extension(
    rng: random.Random,
    base: TypedGraph,
    fresh: _Fresh,
    host: Optional[TypedGraph],
    p: Optional[GraphMorphism],
    guided: bool,
    max_new: int = 2,
):
    """``C`` extending ``base`` by inclusion, plus ``q: C -> host`` when guided."""
    tg = base.type_graph
    nodes = list(base.graph.nodes)
    edges = list(base.graph.edges)
    ntype = dict(base.typing.node_map)
    etype = dict(base.typing.edge_map)
    if guided and host is not None and p is not None:
        qn, qe = dict(p.node_map), dict(p.edge_map)
        used_n, used_e = set(qn.values()), set(qe.values())
        back = {v: k for k, v in qn.items()}
        cands = [n for n in host.graph.nodes if n not in used_n]
        rng.shuffle(cands)
        for hn in cands[: rng.randint(0, max_new)]:
            x = fresh.node()
            nodes.append(x)
            ntype[x] = host.typing.node_map[hn]
            qn[x], back[hn] = hn, x
        for he in host.graph.edges:
            if he.id in used_e or he.src not in back or he.tgt not in back:
                continue
            if rng.random() < 0.5:
                x = fresh.edge()
                edges.append(Edge(x, back[he.src], back[he.tgt], he.label))
                etype[x] = host.typing.edge_map[he.id]
                qe[x] = he.id
        c = TypedGraph(GraphMorphism(Graph(tuple(nodes), tuple(edges)), tg, ntype, etype))
        q = GraphMorphism(c.graph, host.graph, qn, qe)
        return c, GraphMorphism.inclusion(base.graph, c.graph), q
    if tg.nodes and rng.random() < 0.6:
        x = fresh.node()
        nodes.append(x)
        ntype[x] = rng.choice(tg.nodes)
    for _ in range(rng.randint(0, 2)):
        if not tg.edges or not nodes:
            break
        te = rng.choice(tg.edges)
        srcs = [x for x in nodes if ntype[x] == te.src]
        tgts = [x for x in nodes if ntype[x] == te.tgt]
        if srcs and tgts:
            x = fresh.edge()
            edges.append(Edge(x, rng.choice(srcs), rng.choice(tgts), te.label))
            etype[x] = te.id
    c = TypedGraph(GraphMorphism(Graph(tuple(nodes), tuple(edges)), tg, ntype, etype))
    return c, GraphMorphism.inclusion(base.graph, c.graph), None


def random_condition(
    rng: random.Random,
    root: TypedGraph,
    depth: int = 3,
    host: Optional[TypedGraph] = None,
    match: Optional[GraphMorphism] = None,
    guided: float = 0.85,
    junctions: int = 2,
) -> Condition:
    """A random positive condition over ``root`` with at most ``depth`` nested ``exists``.

    Given a host and a match, most extensions are copied from the host
    around the image of the match, which keeps the condition satisfiable
    with good probability.
    """
    fresh = _Fresh(itertools.count())
    budget = [junctions]

    def go(base: TypedGraph, p: Optional[GraphMorphism], d: int) -> Condition:
        if d == 0 or rng.random() < 0.2:
            return TrueCondition(base)
        roll = rng.random()
        if roll < 0.3 and budget[0] > 0:
            budget[0] -= 1
            kids = tuple(go(base, p, d - 1 if rng.random() < 0.5 else d) for _ in range(rng.randint(1, 2)))
            return (And if roll < 0.15 else Or)(base, kids)
        c, a, q = _extension(rng, base, fresh, host, p, rng.random() < guided)
        return Exists(base, a, go(c, q, d - 1))

    return go(root, match, depth)


def random_constraint(
    rng: random.Random, host: TypedGraph, depth: int = 3, guided: float = 0.85
) -> Condition:
    """A positive constraint over the empty graph, usually satisfiable in ``host``."""
    root = TypedGraph.empty(host.type_graph)
    c = random_condition(rng, root, depth=depth, host=host, match=initial_morphism(host.graph), guided=guided)
    if isinstance(c, TrueCondition) and rng.random() < 0.7:
        return random_constraint(rng, host, depth, guided)
    return c


def random_match_root(rng: random.Random, host: TypedGraph) -> tuple[TypedGraph, GraphMorphism]:
    """A typed copy ``P`` of a random subgraph of ``host`` with its embedding."""
    sub = host.sub(*_random_sub_ids(rng, host.graph))
    ids_n = {n: f"p{i}" for i, n in enumerate(sub.graph.nodes)}
    ids_e = {e: f"pe{i}" for i, e in enumerate(sub.graph.edge_ids)}
    iso = rename_graph(sub.graph, ids_n, ids_e)
    p_typed = transport_typed(sub, iso)
    back = {v: k for k, v in ids_n.items()}
    back_e = {v: k for k, v in ids_e.items()}
    p = GraphMorphism(p_typed.graph, host.graph, back, back_e)
    return p_typed, p


def _random_sub_ids(rng: random.Random, g: Graph):
    ns = {n for n in g.nodes if rng.random() < 0.5}
    es = [e.id for e in g.edges if e.src in ns and e.tgt in ns and rng.random() < 0.6]
    return ns, es


# --------------------------------------------------------------------------
# satisfaction instances


def certificate_instance(
    rng: random.Random, type_graph: Graph, max_nodes: int = 4, depth: int = 3, budget: int = 50
) -> Certificate:
    """A verified solution for a random match of a random positive condition."""

    def build(r: random.Random):
        host = random_typed_graph(r, type_graph, max_nodes=max_nodes)
        root, p = random_match_root(r, host)
        cond = random_condition(r, root, depth=depth, host=host, match=p)
        sol = find_solution(p, cond, host)
        return None if sol is None else Certificate(cond, host, p, sol)

    return retry(rng, build, budget)


def restriction_instance(rng: random.Random, max_nodes: int = 4, depth: int = 3):
    """``(t, certificate)`` with ``t`` an injective type morphism into the certificate's type graph."""
    ctx = random_context(rng)
    t = rng.choice([ctx.tg_ba, ctx.tg_ca, ctx.tg_da, identity(ctx.tg_a)])
    return t, certificate_instance(rng, ctx.tg_a, max_nodes, depth)


def amalgamation_instance(rng: random.Random, max_nodes: int = 4, depth: int = 3):
    """``(ctx, certificate over TG_A)`` for the decomposition direction."""
    ctx = random_context(rng)
    return ctx, certificate_instance(rng, ctx.tg_a, max_nodes, depth)


def _collision_renamer(c_x: Condition, c_d: Condition, c_other: Condition, host_x, host_d, host_other):
    """Rename the private part of one side onto ids used privately by the other side."""
    lx, ld, lo = (dict((p, n.root.graph) for p, n in levels(c)) for c in (c_x, c_d, c_other))

    def plan(gx: Graph, gd: Graph, go: Graph) -> GraphMorphism:
        def part(own, shared, other):
            private = [i for i in own if i not in shared]
            targets = [i for i in other if i not in shared and i not in own] + [f"{i}~" for i in private]
            return dict(zip(private, targets))

        return rename_graph(
            gx,
            part(gx.nodes, gd.node_set, go.nodes),
            part(gx.edge_ids, set(gd.edge_ids), go.edge_ids),
        )

    def ren(path: str, g: Graph) -> GraphMorphism:
        return plan(g, ld[path], lo[path])

    return ren, plan(host_x, host_d, host_other)


def collide_certificate(ctx: AmalgamationContext, b: Certificate, c: Certificate, d: Certificate) -> Certificate:
    """A renamed copy of ``c`` that still agrees with ``b`` over ``d`` but reuses ``b``'s private ids."""
    ren, host_iso = _collision_renamer(
        c.condition, d.condition, b.condition, c.host.graph, d.host.graph, b.host.graph
    )
    return transport_certificate(c, ren, host_iso)


def collide_condition(c_c: Condition, c_d: Condition, c_b: Condition) -> Condition:
    g0 = Graph()
    ren, _ = _collision_renamer(c_c, c_d, c_b, g0, g0, g0)
    return transport_condition(c_c, ren)


def agreeing_certificates(rng: random.Random, max_nodes: int = 4, depth: int = 3):
    """``(ctx, b, c, d)`` agreeing certificates, the C side renamed to collide with B when possible."""
    ctx, a = amalgamation_instance(rng, max_nodes, depth)
    b, c, d = decompose_solution(ctx, a)
    if rng.random() < 0.5:
        c = collide_certificate(ctx, b, c, d)
    return ctx, b, c, d


def agreeing_conditions(rng: random.Random, max_nodes: int = 4, depth: int = 3):
    """``(ctx, c_b, c_c, c_d)`` positive agreeing conditions."""
    ctx = random_context(rng)
    host = random_typed_graph(rng, ctx.tg_a, max_nodes=max_nodes)
    root, p = random_match_root(rng, host)
    c_a = random_condition(rng, root, depth=depth, host=host, match=p, guided=0.7)
    c_b, c_c, c_d = decompose_condition(ctx, c_a)
    if rng.random() < 0.5:
        c_c = collide_condition(c_c, c_d, c_b)
    return ctx, c_b, c_c, c_d


def initial_instance(rng: random.Random, max_nodes: int = 4, depth: int = 3, guided: float = 0.85):
    """``(ctx, constraint over TG_A, host over TG_A)``; satisfiable most of the time."""
    ctx = random_context(rng)
    host = random_typed_graph(rng, ctx.tg_a, max_nodes=max_nodes)
    return ctx, random_constraint(rng, host, depth=depth, guided=guided), host


# --------------------------------------------------------------------------
# packaged instances


def cube_workspace(cube: VKCube):
    from .io import Workspace

    ws = Workspace()
    for side, sq in (("bottom", cube.bottom), ("top", cube.top)):
        for leg in ("f", "g", "h", "k"):
            ws.morphisms[f"{side}_{leg}"] = getattr(sq, leg)
    for v in ("a", "b", "c", "d"):
        ws.morphisms[v] = getattr(cube, v)
    ws.meta["mode"] = cube.mode
    return ws


def cube_from_workspace(ws) -> VKCube:
    sq = {
        side: CommutativeSquare(*(ws.morphisms[f"{side}_{leg}"] for leg in "fghk"))
        for side in ("bottom", "top")
    }
    return VKCube(sq["bottom"], sq["top"], *(ws.morphisms[v] for v in "abcd"),
                  mode=ws.meta.get("mode", "vertical"))


def _instance_graph(rng, b):
    from .io import Workspace

    return Workspace(graphs={"g": random_graph(rng, b.max_nodes)})


def _instance_context(rng, b):
    from .io import Workspace

    ctx = random_context(rng)
    ws = Workspace(contexts={"ctx": ctx})
    for name in ("tg_db", "tg_dc", "tg_ba", "tg_ca"):
        ws.morphisms[name] = getattr(ctx, name)
    return ws


def _instance_certificate(rng, b):
    ws = _instance_context(rng, b)
    ws.solutions["cert"] = certificate_instance(rng, ws.contexts["ctx"].tg_a, b.max_nodes, b.depth)
    return ws


def _instance_agreeing(rng, b):
    ws = _instance_context(rng, b)
    ctx = ws.contexts["ctx"]
    for name, g in zip(("g_b", "g_c", "g_d"), agreeing_typed_triple(rng, ctx, b.max_nodes)):
        ws.typed_graphs[name] = g
    return ws


def _instance_agreeing_solutions(rng, b):
    from .io import Workspace

    ctx, cb, cc, cd = agreeing_certificates(rng, b.max_nodes, b.depth)
    ws = Workspace(contexts={"ctx": ctx}, solutions={"local_b": cb, "local_c": cc, "local_d": cd})
    return ws


def _instance_initial(rng, b):
    from .io import Workspace

    ctx, ac, host = initial_instance(rng, b.max_nodes, b.depth)
    return Workspace(contexts={"ctx": ctx}, conditions={"constraint": ac}, typed_graphs={"host": host})


def _instance_cube(mode):
    def build(rng, b):
        return cube_workspace(random_vk_cube(rng, mode, b.max_nodes))

    return build


INSTANCE_KINDS = {
    "graph": _instance_graph,
    "amalgamation-context": _instance_context,
    "certificate": _instance_certificate,
    "agreeing-graphs": _instance_agreeing,
    "thm-4.8-premises": _instance_agreeing_solutions,
    "thm-5.1-premises": _instance_initial,
    "vk-cube-vertical": _instance_cube("vertical"),
    "vk-cube-horizontal": _instance_cube("horizontal"),
}


def generate_instance(seed: int, kind: str, max_nodes: int = 4, depth: int = 3):
    """A workspace holding one instance of ``kind``; deterministic in ``seed``."""
    from .laws import Bounds

    if kind not in INSTANCE_KINDS:
        raise KeyError(f"unknown instance kind {kind!r}; choose from {sorted(INSTANCE_KINDS)}")
    bounds = Bounds(max_nodes, depth)
    bounds.check()
    ws = INSTANCE_KINDS[kind](make_rng(seed), bounds)
    ws.seed = seed
    ws.meta["kind"] = kind
    return ws
