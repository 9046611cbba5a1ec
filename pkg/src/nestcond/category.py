"""Pullbacks, pushouts and the typed-graph constructions built on them.

The instance category is finite labelled multigraphs with M = injective
morphisms.  Besides the plain limit/colimit constructions this module
decides universal properties of given squares, checks effectiveness of
pushouts and concrete van Kampen cubes, and implements restriction of typed
graphs along injective type morphisms together with amalgamation over a
pushout of type graphs.

Restriction is computed as the canonical pullback *renamed to the ids of the
restricted graph*: the result is the subgraph of elements whose type lies in
the image of the type morphism, so ids survive restriction unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

from .graph import (
    Edge,
    Graph,
    GraphError,
    GraphMorphism,
    compose,
    identity,
    iter_injective,
    is_bijective,
    is_injective,
    validate_morphism,
)


class NotInMError(GraphError):
    """A construction that needs an injective leg was given none."""


class AgreementError(GraphError):
    """Components handed to an amalgamation do not share the required restriction."""


class SpanResult(NamedTuple):
    apex: Graph
    left: GraphMorphism
    right: GraphMorphism


class CospanResult(NamedTuple):
    apex: Graph
    left: GraphMorphism
    right: GraphMorphism


@dataclass(frozen=True)
class CommutativeSquare:
    """``f: A -> B``, ``g: A -> C``, ``h: B -> D``, ``k: C -> D``."""

    f: GraphMorphism
    g: GraphMorphism
    h: GraphMorphism
    k: GraphMorphism

    def commutes(self) -> bool:
        if self.f.dom != self.g.dom or self.h.cod != self.k.cod:
            return False
        if self.f.cod != self.h.dom or self.g.cod != self.k.dom:
            return False
        return compose(self.f, self.h) == compose(self.g, self.k)


def pair_id(x: str, y: str) -> str:
    return f"({x}|{y})"


def _pullback(f: GraphMorphism, g: GraphMorphism) -> SpanResult:
    B, C = f.dom, g.dom
    by_image: dict[str, list[str]] = {}
    for c in C.nodes:
        by_image.setdefault(g.node_map[c], []).append(c)
    nodes, labels, left_n, right_n = [], {}, {}, {}
    for b in B.nodes:
        for c in by_image.get(f.node_map[b], ()):
            pid = pair_id(b, c)
            nodes.append(pid)
            left_n[pid], right_n[pid] = b, c
            if B.node_label(b) is not None:
                labels[pid] = B.node_label(b)
    by_image_e: dict[str, list[Edge]] = {}
    for e in C.edges:
        by_image_e.setdefault(g.edge_map[e.id], []).append(e)
    edges, left_e, right_e = [], {}, {}
    for e in B.edges:
        for e2 in by_image_e.get(f.edge_map[e.id], ()):
            pid = pair_id(e.id, e2.id)
            edges.append(Edge(pid, pair_id(e.src, e2.src), pair_id(e.tgt, e2.tgt), e.label))
            left_e[pid], right_e[pid] = e.id, e2.id
    if len(set(nodes)) != len(nodes) or len(set(x.id for x in edges)) != len(edges):
        raise GraphError("pair ids collide; ids containing '|' are ambiguous")
    apex = Graph(tuple(nodes), tuple(edges), labels)
    return SpanResult(apex, GraphMorphism(apex, B, left_n, left_e), GraphMorphism(apex, C, right_n, right_e))


def pullback(f: GraphMorphism, g: GraphMorphism) -> SpanResult:
    """Pullback of the cospan ``B -f-> A <-g- C``.

    Apex elements are the pairs ``(b|c)`` with ``f(b) = g(c)``; ``left`` and
    ``right`` are the two projections.
    """
    if f.cod != g.cod:
        raise GraphError("pullback needs a common codomain")
    if not (is_injective(f) or is_injective(g)):
        raise NotInMError("pullback is only taken along an injective leg")
    return _pullback(f, g)


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller key becomes the root so roots are least representatives
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def _class_names(roots: Iterable[tuple[str, str]]) -> dict:
    # roots are (id, side) least representatives; colliding ids get primes
    names, taken = {}, set()
    for root in sorted(roots):
        name = root[0]
        while name in taken:
            name += "'"
        taken.add(name)
        names[root] = name
    return names


def _pushout(f: GraphMorphism, g: GraphMorphism) -> CospanResult:
    B, C = f.cod, g.cod
    nuf = _UnionFind([(n, "B") for n in B.nodes] + [(n, "C") for n in C.nodes])
    for d in f.dom.nodes:
        nuf.union((f.node_map[d], "B"), (g.node_map[d], "C"))
    euf = _UnionFind([(e, "B") for e in B.edge_ids] + [(e, "C") for e in C.edge_ids])
    for d in f.dom.edge_ids:
        euf.union((f.edge_map[d], "B"), (g.edge_map[d], "C"))

    nnames = _class_names(nuf.classes())
    enames = _class_names(euf.classes())

    def node_name(x, side):
        return nnames[nuf.find((x, side))]

    labels = {}
    for side, G in (("B", B), ("C", C)):
        for n, l in G.node_labels.items():
            labels[node_name(n, side)] = l
    edges = {}
    for side, G in (("B", B), ("C", C)):
        for e in G.edges:
            eid = enames[euf.find((e.id, side))]
            edges[eid] = Edge(eid, node_name(e.src, side), node_name(e.tgt, side), e.label)
    apex = Graph(tuple(nnames.values()), tuple(edges.values()), labels)
    left = GraphMorphism(
        B, apex, {n: node_name(n, "B") for n in B.nodes}, {e: enames[euf.find((e, "B"))] for e in B.edge_ids}
    )
    right = GraphMorphism(
        C, apex, {n: node_name(n, "C") for n in C.nodes}, {e: enames[euf.find((e, "C"))] for e in C.edge_ids}
    )
    return CospanResult(apex, left, right)


def pushout(f: GraphMorphism, g: GraphMorphism) -> CospanResult:
    """Pushout of the span ``B <-f- D -g-> C``.

    The apex is the disjoint union of ``B`` and ``C`` modulo ``f(d) ~ g(d)``;
    each class is named after its lexicographically least member id (ties
    between distinct classes are broken by appending primes).
    """
    if f.dom != g.dom:
        raise GraphError("pushout needs a common domain")
    if not (is_injective(f) or is_injective(g)):
        raise NotInMError("pushout is only taken along an injective leg")
    return _pushout(f, g)


def induced_pushout_morphism(
    po: CospanResult,
    u_b: GraphMorphism,
    u_c: GraphMorphism,
    span: Optional[tuple[GraphMorphism, GraphMorphism]] = None,
) -> GraphMorphism:
    """The unique ``u: apex -> X`` with ``u . left = u_b`` and ``u . right = u_c``.

    If ``span`` is given the cocone condition ``u_b . f = u_c . g`` is
    checked first.
    """
    if u_b.cod != u_c.cod:
        raise GraphError("cocone legs must share a codomain")
    if span is not None:
        f, g = span
        if compose(f, u_b) != compose(g, u_c):
            raise GraphError("cocone does not commute")
    nmap: dict[str, str] = {}
    emap: dict[str, str] = {}
    for leg, u in ((po.left, u_b), (po.right, u_c)):
        for x, z in leg.node_map.items():
            if nmap.setdefault(z, u.node_map[x]) != u.node_map[x]:
                raise GraphError("cocone does not commute")
        for x, z in leg.edge_map.items():
            if emap.setdefault(z, u.edge_map[x]) != u.edge_map[x]:
                raise GraphError("cocone does not commute")
    if len(nmap) != len(po.apex.nodes) or len(emap) != len(po.apex.edges):
        raise GraphError("cospan legs are not jointly epic")
    return GraphMorphism(po.apex, u_b.cod, nmap, emap)


def _require_commuting(sq: CommutativeSquare):
    if not sq.commutes():
        raise GraphError("square does not commute")


def is_pullback_square(sq: CommutativeSquare) -> bool:
    """Whether ``A`` with ``f, g`` is a pullback of ``h, k``."""
    _require_commuting(sq)
    canon = _pullback(sq.h, sq.k)
    f, g = sq.f, sq.g
    m = GraphMorphism(
        f.dom,
        canon.apex,
        {a: pair_id(f.node_map[a], g.node_map[a]) for a in f.dom.nodes},
        {a: pair_id(f.edge_map[a], g.edge_map[a]) for a in f.dom.edge_ids},
    )
    return is_bijective(m)


def is_pushout_square(sq: CommutativeSquare) -> bool:
    """Whether ``D`` with ``h, k`` is a pushout of ``f, g``."""
    _require_commuting(sq)
    canon = _pushout(sq.f, sq.g)
    u = induced_pushout_morphism(canon, sq.h, sq.k)
    return is_bijective(u)


def is_square(sq: CommutativeSquare, kind: str) -> bool:
    if kind == "pullback":
        return is_pullback_square(sq)
    if kind == "pushout":
        return is_pushout_square(sq)
    raise ValueError(f"unknown square kind {kind!r}")


def is_effective_pushout(a: GraphMorphism, b: GraphMorphism) -> bool:
    if not (is_injective(a) and is_injective(b)):
        raise NotInMError("effective pushouts are defined for injective legs")
    if a.cod != b.cod:
        raise GraphError("legs must share a codomain")
    pb = pullback(a, b)
    po = pushout(pb.left, pb.right)
    u = induced_pushout_morphism(po, a, b, span=(pb.left, pb.right))
    return is_injective(u)


# --------------------------------------------------------------------------
# van Kampen cubes


@dataclass(frozen=True)
class VKCube:
    """A cube over ``bottom``.

    ``bottom.f`` is the M-leg ``m: A -> B``.  ``top`` is the square on
    ``A', B', C', D'`` and ``a, b, c, d`` are the vertical maps into the
    bottom corners.  ``mode`` is ``"vertical"`` or ``"horizontal"``.
    """

    bottom: CommutativeSquare
    top: CommutativeSquare
    a: GraphMorphism
    b: GraphMorphism
    c: GraphMorphism
    d: GraphMorphism
    mode: str = "vertical"

    @property
    def back_left(self) -> CommutativeSquare:
        return CommutativeSquare(self.top.f, self.a, self.b, self.bottom.f)

    @property
    def back_right(self) -> CommutativeSquare:
        return CommutativeSquare(self.top.g, self.a, self.c, self.bottom.g)

    @property
    def front_left(self) -> CommutativeSquare:
        return CommutativeSquare(self.top.h, self.b, self.d, self.bottom.h)

    @property
    def front_right(self) -> CommutativeSquare:
        return CommutativeSquare(self.top.k, self.c, self.d, self.bottom.k)

    def faces(self) -> list[CommutativeSquare]:
        return [self.bottom, self.top, self.back_left, self.back_right, self.front_left, self.front_right]


@dataclass(frozen=True)
class VKReport:
    premises_ok: bool
    top_is_pushout: bool
    fronts_are_pullbacks: bool

    @property
    def vk_holds(self) -> bool:
        return self.top_is_pushout == self.fronts_are_pullbacks


def check_vk_cube(cube: VKCube) -> VKReport:
    for face in cube.faces():
        _require_commuting(face)
    if cube.mode == "vertical":
        side = all(is_injective(m) for m in (cube.a, cube.b, cube.c, cube.d))
    elif cube.mode == "horizontal":
        horizontals = (cube.bottom.f, cube.bottom.g, cube.bottom.h, cube.bottom.k,
                       cube.top.f, cube.top.g, cube.top.h, cube.top.k)
        side = all(is_injective(m) for m in horizontals)
    else:
        raise ValueError(f"unknown cube mode {cube.mode!r}")
    premises = (
        side
        and is_injective(cube.bottom.f)
        and is_pushout_square(cube.bottom)
        and is_pullback_square(cube.back_left)
        and is_pullback_square(cube.back_right)
    )
    return VKReport(
        premises_ok=premises,
        top_is_pushout=is_pushout_square(cube.top),
        fronts_are_pullbacks=is_pullback_square(cube.front_left) and is_pullback_square(cube.front_right),
    )


def initial_graph() -> Graph:
    return Graph()


def initial_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism(Graph(), g, {}, {})


# --------------------------------------------------------------------------
# typed graphs


@dataclass(frozen=True)
class TypedGraph:
    """A graph together with its typing morphism into a type graph."""

    typing: GraphMorphism

    @property
    def graph(self) -> Graph:
        return self.typing.dom

    @property
    def type_graph(self) -> Graph:
        return self.typing.cod

    def __repr__(self):
        return f"TypedGraph({self.graph!r})"

    @classmethod
    def empty(cls, type_graph: Graph) -> "TypedGraph":
        return cls(initial_morphism(type_graph))

    @classmethod
    def by_labels(cls, graph: Graph, type_graph: Graph) -> "TypedGraph":
        """Type ``graph`` by matching node and edge labels against ``type_graph``.

        Every node must have exactly one type node with the same node label,
        and every edge exactly one type edge with its label between the
        endpoint types.
        """
        nmap = {}
        for n in graph.nodes:
            cands = [t for t in type_graph.nodes if type_graph.node_label(t) == graph.node_label(n)]
            if len(cands) != 1:
                raise GraphError(f"node {n!r} has {len(cands)} candidate types")
            nmap[n] = cands[0]
        emap = {}
        for e in graph.edges:
            cands = type_graph.edges_between(nmap[e.src], nmap[e.tgt], e.label)
            if len(cands) != 1:
                raise GraphError(f"edge {e.id!r} has {len(cands)} candidate types")
            emap[e.id] = cands[0]
        return cls(GraphMorphism(graph, type_graph, nmap, emap))

    def sub(self, nodes: Iterable[str], edges: Iterable[str]) -> "TypedGraph":
        """The typed subgraph on the given ids."""
        g = self.graph.subgraph(nodes, edges)
        return TypedGraph(GraphMorphism(
            g,
            self.type_graph,
            {n: self.typing.node_map[n] for n in g.nodes},
            {e: self.typing.edge_map[e] for e in g.edge_ids},
        ))


def validate_typed_graph(tg: TypedGraph):
    return validate_morphism(tg.typing)


def is_typed_morphism(m: GraphMorphism, src: TypedGraph, tgt: TypedGraph) -> bool:
    """Whether ``m: src -> tgt`` commutes with the typings."""
    return m.dom == src.graph and m.cod == tgt.graph and compose(m, tgt.typing) == src.typing


class Restriction(NamedTuple):
    original: TypedGraph
    typed: TypedGraph
    emb: GraphMorphism


def restrict_typed_graph(g_a: TypedGraph, t: GraphMorphism) -> Restriction:
    """Restrict ``g_a`` along the injective type morphism ``t: TG_B -> TG_A``.

    Returns the restricted typed graph and its embedding into ``g_a.graph``;
    the square formed with ``t`` and the two typings is a pullback.
    """
    if not is_injective(t):
        raise NotInMError("restriction needs an injective type morphism")
    if t.cod != g_a.type_graph:
        raise GraphError("type morphism does not land in the type graph of the object")
    inv_n = {v: k for k, v in t.node_map.items()}
    inv_e = {v: k for k, v in t.edge_map.items()}
    typing = g_a.typing
    nodes = [n for n in g_a.graph.nodes if typing.node_map[n] in inv_n]
    edges = [e for e in g_a.graph.edge_ids if typing.edge_map[e] in inv_e]
    sub = g_a.graph.subgraph(nodes, edges)
    typed = TypedGraph(GraphMorphism(
        sub,
        t.dom,
        {n: inv_n[typing.node_map[n]] for n in nodes},
        {e: inv_e[typing.edge_map[e]] for e in edges},
    ))
    return Restriction(g_a, typed, GraphMorphism.inclusion(sub, g_a.graph))


def restrict_morphism(
    a: GraphMorphism, t: GraphMorphism, r_tgt: Restriction, r_src: Restriction
) -> GraphMorphism:
    """Restriction of ``a: G'_A -> G_A`` given the restrictions of both ends.

    ``r_tgt`` restricts ``G_A`` and ``r_src`` restricts ``G'_A`` along ``t``.
    """
    if not is_typed_morphism(a, r_src.original, r_tgt.original):
        raise GraphError("morphism is not compatible with the typings")
    if r_tgt.typed.type_graph != t.dom or r_src.typed.type_graph != t.dom:
        raise GraphError("restrictions were not taken along the given type morphism")
    back_n = {v: k for k, v in r_tgt.emb.node_map.items()}
    back_e = {v: k for k, v in r_tgt.emb.edge_map.items()}
    src = r_src.typed.graph
    return GraphMorphism(
        src,
        r_tgt.typed.graph,
        {x: back_n[a.node_map[r_src.emb.node_map[x]]] for x in src.nodes},
        {x: back_e[a.edge_map[r_src.emb.edge_map[x]]] for x in src.edge_ids},
    )


def restrict_typed_morphism(
    a: GraphMorphism, src: TypedGraph, tgt: TypedGraph, t: GraphMorphism
) -> tuple[GraphMorphism, Restriction, Restriction]:
    """Convenience wrapper: restrict both ends, then the morphism."""
    r_src = restrict_typed_graph(src, t)
    r_tgt = restrict_typed_graph(tgt, t)
    return restrict_morphism(a, t, r_tgt, r_src), r_src, r_tgt


# --------------------------------------------------------------------------
# amalgamation


@dataclass(frozen=True)
class AmalgamationContext:
    """A pushout of type graphs ``TG_B <- TG_D -> TG_C`` into ``TG_A``."""

    tg_db: GraphMorphism
    tg_dc: GraphMorphism
    tg_ba: GraphMorphism
    tg_ca: GraphMorphism

    @classmethod
    def from_span(cls, tg_db: GraphMorphism, tg_dc: GraphMorphism) -> "AmalgamationContext":
        po = pushout(tg_db, tg_dc)
        return cls(tg_db, tg_dc, po.left, po.right)

    @property
    def tg_a(self) -> Graph:
        return self.tg_ba.cod

    @property
    def tg_b(self) -> Graph:
        return self.tg_ba.dom

    @property
    def tg_c(self) -> Graph:
        return self.tg_ca.dom

    @property
    def tg_d(self) -> Graph:
        return self.tg_db.dom

    @property
    def tg_da(self) -> GraphMorphism:
        return compose(self.tg_db, self.tg_ba)

    @property
    def square(self) -> CommutativeSquare:
        return CommutativeSquare(self.tg_db, self.tg_dc, self.tg_ba, self.tg_ca)

    def problems(self) -> list[str]:
        out = []
        for name in ("tg_db", "tg_dc", "tg_ba", "tg_ca"):
            m = getattr(self, name)
            if not validate_morphism(m).ok:
                out.append(f"{name} is not a valid morphism")
            elif not is_injective(m):
                out.append(f"{name} is not injective")
        if out:
            return out
        if not self.square.commutes():
            return ["type square does not commute"]
        if not is_pushout_square(self.square):
            out.append("type square is not a pushout")
        return out

    def validate(self):
        probs = self.problems()
        if probs:
            raise GraphError("invalid amalgamation context: " + "; ".join(probs))


def _check_corner(tg: TypedGraph, expected: Graph, name: str):
    if tg.type_graph != expected:
        raise GraphError(f"{name} is not typed over the matching corner of the context")


def typed_graphs_agree(g_b: TypedGraph, g_c: TypedGraph, g_d: TypedGraph, ctx: AmalgamationContext) -> bool:
    """Whether ``g_d`` is the restriction of both ``g_b`` and ``g_c``.

    Restrictions are canonical (ids are kept), so agreement is equality of
    typed graphs; the shared ids then fix the gluing.
    """
    _check_corner(g_b, ctx.tg_b, "g_b")
    _check_corner(g_c, ctx.tg_c, "g_c")
    _check_corner(g_d, ctx.tg_d, "g_d")
    return (
        restrict_typed_graph(g_b, ctx.tg_db).typed == g_d
        and restrict_typed_graph(g_c, ctx.tg_dc).typed == g_d
    )


class TypedAmalgamation(NamedTuple):
    """``g_A`` together with the comparison maps from the components."""

    typed: TypedGraph
    from_b: GraphMorphism
    from_c: GraphMorphism
    from_d: GraphMorphism


def amalgamate_typed_graphs(
    ctx: AmalgamationContext, g_b: TypedGraph, g_c: TypedGraph, g_d: TypedGraph
) -> TypedAmalgamation:
    if not typed_graphs_agree(g_b, g_c, g_d, ctx):
        raise AgreementError("typed graphs do not agree in the interface")
    emb_b = GraphMorphism.inclusion(g_d.graph, g_b.graph)
    emb_c = GraphMorphism.inclusion(g_d.graph, g_c.graph)
    po = _pushout(emb_b, emb_c)
    typing = induced_pushout_morphism(
        po, compose(g_b.typing, ctx.tg_ba), compose(g_c.typing, ctx.tg_ca), span=(emb_b, emb_c)
    )
    return TypedAmalgamation(TypedGraph(typing), po.left, po.right, compose(emb_b, po.left))


def decompose_typed_graph(ctx: AmalgamationContext, g_a: TypedGraph) -> tuple[TypedGraph, TypedGraph, TypedGraph]:
    _check_corner(g_a, ctx.tg_a, "g_a")
    g_b = restrict_typed_graph(g_a, ctx.tg_ba).typed
    g_c = restrict_typed_graph(g_a, ctx.tg_ca).typed
    g_d = restrict_typed_graph(g_b, ctx.tg_db).typed
    return g_b, g_c, g_d


def is_typed_amalgamation(
    ctx: AmalgamationContext, g_b: TypedGraph, g_c: TypedGraph, g_d: TypedGraph, amalg: TypedAmalgamation
) -> bool:
    """Check the defining squares of ``g_A = g_B +_{g_D} g_C``.

    The outer square of graphs must be a pushout, and the two trapezoids
    relating ``g_B``/``g_C`` to ``g_A`` must be pullbacks.
    """
    emb_b = GraphMorphism.inclusion(g_d.graph, g_b.graph)
    emb_c = GraphMorphism.inclusion(g_d.graph, g_c.graph)
    outer = CommutativeSquare(emb_b, emb_c, amalg.from_b, amalg.from_c)
    if not outer.commutes() or not is_pushout_square(outer):
        return False
    g_a = amalg.typed
    for leg, comp, tg in ((amalg.from_b, g_b, ctx.tg_ba), (amalg.from_c, g_c, ctx.tg_ca)):
        trap = CommutativeSquare(comp.typing, leg, tg, g_a.typing)
        if not trap.commutes() or not is_pullback_square(trap):
            return False
    return True


def iter_typed_morphisms(
    src: TypedGraph,
    tgt: TypedGraph,
    *,
    fixed_nodes=None,
    fixed_edges=None,
    bijective: bool = False,
) -> Iterator[GraphMorphism]:
    """Injective morphisms ``src -> tgt`` commuting with the typings, in search order."""
    if src.type_graph != tgt.type_graph:
        raise GraphError("typed graphs live over different type graphs")
    st, tt = src.typing, tgt.typing
    for nm, em in iter_injective(
        src.graph,
        tgt.graph,
        fixed_nodes=fixed_nodes,
        fixed_edges=fixed_edges,
        node_ok=lambda x, y: st.node_map[x] == tt.node_map[y],
        edge_ok=lambda x, y: st.edge_map[x] == tt.edge_map[y],
        bijective=bijective,
    ):
        yield GraphMorphism(src.graph, tgt.graph, nm, em)


def find_typed_isomorphism(g: TypedGraph, h: TypedGraph) -> Optional[GraphMorphism]:
    """A bijection ``g -> h`` that commutes with the typings, or ``None``."""
    if g.type_graph != h.type_graph:
        return None
    return next(iter_typed_morphisms(g, h, bijective=True), None)


__all__ = [
    "AgreementError",
    "AmalgamationContext",
    "CommutativeSquare",
    "CospanResult",
    "NotInMError",
    "Restriction",
    "SpanResult",
    "TypedAmalgamation",
    "TypedGraph",
    "VKCube",
    "VKReport",
    "amalgamate_typed_graphs",
    "check_vk_cube",
    "decompose_typed_graph",
    "find_typed_isomorphism",
    "identity",
    "induced_pushout_morphism",
    "initial_graph",
    "initial_morphism",
    "is_effective_pushout",
    "is_pullback_square",
    "is_pushout_square",
    "is_square",
    "is_typed_amalgamation",
    "is_typed_morphism",
    "iter_typed_morphisms",
    "pullback",
    "pushout",
    "restrict_morphism",
    "restrict_typed_graph",
    "restrict_typed_morphism",
    "typed_graphs_agree",
]
