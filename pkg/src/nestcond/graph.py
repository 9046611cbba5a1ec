"""Finite directed labelled multigraphs and their morphisms.

Graphs are immutable values.  Node and edge ids are opaque strings living in
two separate namespaces; every iteration order in this module is the
lexicographic order of ids so that results are reproducible.

The injective-morphism search used by isomorphism testing, matching and
extension lives here as :func:`iter_injective` so that every layer above
shares one backtracking engine.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Optional


class GraphError(ValueError):
    """Raised when a graph or morphism operation gets ill-formed input."""


@dataclass(frozen=True, order=True)
class Edge:
    id: str
    src: str
    tgt: str
    label: str


def _as_edge(e) -> Edge:
    if isinstance(e, Edge):
        return e
    if isinstance(e, Mapping):
        return Edge(str(e["id"]), str(e["src"]), str(e["tgt"]), str(e["label"]))
    eid, src, tgt, label = e
    return Edge(str(eid), str(src), str(tgt), str(label))


@dataclass(frozen=True, eq=False)
class Graph:
    """A finite directed multigraph with labelled edges and optionally labelled nodes.

    ``nodes`` and ``edges`` are stored sorted by id.  Duplicates are kept
    rather than rejected so that :func:`validate_graph` can report them.
    """

    nodes: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()
    node_labels: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(sorted(str(n) for n in self.nodes)))
        object.__setattr__(self, "edges", tuple(sorted(_as_edge(e) for e in self.edges)))
        labels = {str(k): str(v) for k, v in dict(self.node_labels).items() if v is not None}
        object.__setattr__(self, "node_labels", dict(sorted(labels.items())))

    @classmethod
    def of(cls, nodes: Iterable = (), edges: Iterable = (), node_labels=None) -> "Graph":
        """Build a graph; edges may be :class:`Edge`, 4-tuples or dicts."""
        return cls(tuple(nodes), tuple(edges), node_labels or {})

    @cached_property
    def _key(self):
        return (self.nodes, self.edges, tuple(self.node_labels.items()))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        es = ", ".join(f"{e.id}:{e.src}-{e.label}->{e.tgt}" for e in self.edges)
        return f"Graph(nodes={list(self.nodes)}, edges=[{es}])"

    @cached_property
    def node_set(self) -> frozenset:
        return frozenset(self.nodes)

    @cached_property
    def edge_index(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, eid: str) -> Edge:
        return self.edge_index[eid]

    def node_label(self, n: str) -> Optional[str]:
        return self.node_labels.get(n)

    def __len__(self):
        return len(self.nodes) + len(self.edges)

    def is_empty(self) -> bool:
        return not self.nodes and not self.edges

    def subgraph(self, nodes: Iterable[str], edges: Iterable[str]) -> "Graph":
        """The subgraph on the given node and edge ids (edges must not dangle)."""
        ns = set(nodes)
        es = [self.edge_index[e] for e in edges]
        labels = {n: l for n, l in self.node_labels.items() if n in ns}
        return Graph(tuple(ns), tuple(es), labels)

    @cached_property
    def _adjacency(self) -> dict[tuple[str, str, str], list[str]]:
        adj: dict[tuple[str, str, str], list[str]] = defaultdict(list)
        for e in self.edges:
            adj[(e.src, e.tgt, e.label)].append(e.id)
        return dict(adj)

    def edges_between(self, src: str, tgt: str, label: str) -> list[str]:
        return self._adjacency.get((src, tgt, label), [])

    @cached_property
    def _degrees(self) -> dict[str, Counter]:
        deg: dict[str, Counter] = {n: Counter() for n in self.nodes}
        for e in self.edges:
            if e.src == e.tgt:
                deg.setdefault(e.src, Counter())[("loop", e.label)] += 1
            else:
                deg.setdefault(e.src, Counter())[("out", e.label)] += 1
                deg.setdefault(e.tgt, Counter())[("in", e.label)] += 1
        return deg


def empty_graph() -> Graph:
    return Graph()


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.ok


def validate_graph(g: Graph) -> ValidationReport:
    problems = []
    seen = Counter(g.nodes)
    for n, k in sorted(seen.items()):
        if k > 1:
            problems.append(f"duplicate node id {n!r}")
    seen_e = Counter(e.id for e in g.edges)
    for eid, k in sorted(seen_e.items()):
        if k > 1:
            problems.append(f"duplicate edge id {eid!r}")
    for e in g.edges:
        if e.src not in g.node_set:
            problems.append(f"dangling edge {e.id!r}: source {e.src!r} is not a node")
        if e.tgt not in g.node_set:
            problems.append(f"dangling edge {e.id!r}: target {e.tgt!r} is not a node")
    for n in g.node_labels:
        if n not in g.node_set:
            problems.append(f"label given for unknown node {n!r}")
    return ValidationReport(tuple(problems))


@dataclass(frozen=True, eq=False)
class GraphMorphism:
    """A pair of maps on nodes and edges from ``dom`` to ``cod``.

    Equality is extensional: same domain, same codomain, same maps.
    """

    dom: Graph
    cod: Graph
    node_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "node_map", dict(sorted(self.node_map.items())))
        object.__setattr__(self, "edge_map", dict(sorted(self.edge_map.items())))

    @cached_property
    def _key(self):
        return (self.dom, self.cod, tuple(self.node_map.items()), tuple(self.edge_map.items()))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GraphMorphism):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GraphMorphism(nodes={self.node_map}, edges={self.edge_map})"

    def node(self, x: str) -> str:
        return self.node_map[x]

    def edge(self, e: str) -> str:
        return self.edge_map[e]

    @classmethod
    def inclusion(cls, sub: Graph, sup: Graph) -> "GraphMorphism":
        return cls(sub, sup, {n: n for n in sub.nodes}, {e.id: e.id for e in sub.edges})

    @property
    def is_inclusion(self) -> bool:
        return all(k == v for k, v in self.node_map.items()) and all(
            k == v for k, v in self.edge_map.items()
        )

    def image(self) -> tuple[frozenset, frozenset]:
        return frozenset(self.node_map.values()), frozenset(self.edge_map.values())


Morphism = GraphMorphism


def validate_morphism(m: GraphMorphism) -> ValidationReport:
    problems = list(validate_graph(m.dom).problems) + list(validate_graph(m.cod).problems)
    dom, cod = m.dom, m.cod
    for n in dom.nodes:
        if n not in m.node_map:
            problems.append(f"partial map: node {n!r} has no image")
    for e in dom.edges:
        if e.id not in m.edge_map:
            problems.append(f"partial map: edge {e.id!r} has no image")
    for n, img in m.node_map.items():
        if n not in dom.node_set:
            problems.append(f"node map has foreign key {n!r}")
        elif img not in cod.node_set:
            problems.append(f"node {n!r} mapped outside codomain ({img!r})")
        elif dom.node_label(n) != cod.node_label(img):
            problems.append(f"node label not preserved at {n!r}")
    for eid, img in m.edge_map.items():
        if eid not in dom.edge_index:
            problems.append(f"edge map has foreign key {eid!r}")
            continue
        if img not in cod.edge_index:
            problems.append(f"edge {eid!r} mapped outside codomain ({img!r})")
            continue
        e, f = dom.edge(eid), cod.edge(img)
        if e.label != f.label:
            problems.append(f"label not preserved at edge {eid!r} ({e.label!r} -> {f.label!r})")
        if m.node_map.get(e.src) != f.src:
            problems.append(f"source not preserved at edge {eid!r}")
        if m.node_map.get(e.tgt) != f.tgt:
            problems.append(f"target not preserved at edge {eid!r}")
    return ValidationReport(tuple(problems))


def identity(g: Graph) -> GraphMorphism:
    return GraphMorphism.inclusion(g, g)


def compose(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """Diagrammatic composite: first ``f``, then ``g`` (``x -> g(f(x))``)."""
    if f.cod != g.dom:
        raise GraphError("cannot compose: codomain of first map is not the domain of the second")
    return GraphMorphism(
        f.dom,
        g.cod,
        {x: g.node_map[y] for x, y in f.node_map.items()},
        {x: g.edge_map[y] for x, y in f.edge_map.items()},
    )


def _injective_map(m: Mapping) -> bool:
    return len(set(m.values())) == len(m)


def is_injective(m: GraphMorphism) -> bool:
    return _injective_map(m.node_map) and _injective_map(m.edge_map)


def is_surjective(m: GraphMorphism) -> bool:
    ns, es = m.image()
    return ns == m.cod.node_set and es == frozenset(m.cod.edge_ids)


def is_bijective(m: GraphMorphism) -> bool:
    return is_injective(m) and is_surjective(m)


def inverse(m: GraphMorphism) -> GraphMorphism:
    if not is_bijective(m):
        raise GraphError("only bijective morphisms have inverses")
    return GraphMorphism(
        m.cod, m.dom, {v: k for k, v in m.node_map.items()}, {v: k for k, v in m.edge_map.items()}
    )


def is_jointly_epic(f: GraphMorphism, g: GraphMorphism) -> bool:
    if f.cod != g.cod:
        raise GraphError("jointly epic test needs a common codomain")
    fn, fe = f.image()
    gn, ge = g.image()
    return (fn | gn) == f.cod.node_set and (fe | ge) == frozenset(f.cod.edge_ids)


# --------------------------------------------------------------------------
# backtracking search


NodePred = Callable[[str, str], bool]


def iter_injective(
    dom: Graph,
    cod: Graph,
    *,
    fixed_nodes: Optional[Mapping[str, str]] = None,
    fixed_edges: Optional[Mapping[str, str]] = None,
    node_ok: Optional[NodePred] = None,
    edge_ok: Optional[NodePred] = None,
    bijective: bool = False,
) -> Iterator[tuple[dict, dict]]:
    """Yield ``(node_map, edge_map)`` for every injective morphism ``dom -> cod``.

    Morphisms respect sources, targets and labels, agree with ``fixed_nodes``
    and ``fixed_edges``, and pass the optional ``node_ok(x, y)`` /
    ``edge_ok(e, f)`` filters.  Output is in lexicographic order of the
    images of the sorted domain ids.
    """
    fixed_nodes = dict(fixed_nodes or {})
    fixed_edges = dict(fixed_edges or {})
    if bijective and (len(dom.nodes) != len(cod.nodes) or len(dom.edges) != len(cod.edges)):
        return

    # endpoints of pinned edges are pinned too
    for eid, fid in fixed_edges.items():
        e, f = dom.edge(eid), cod.edge(fid)
        if e.label != f.label:
            return
        for x, y in ((e.src, f.src), (e.tgt, f.tgt)):
            if fixed_nodes.setdefault(x, y) != y:
                return
    if not _injective_map(fixed_nodes) or not _injective_map(fixed_edges):
        return

    dom_deg, cod_deg = dom._degrees, cod._degrees

    def degree_fits(x: str, y: str) -> bool:
        dx, dy = dom_deg.get(x, Counter()), cod_deg.get(y, Counter())
        if bijective:
            return dx == dy
        return all(dy[k] >= v for k, v in dx.items())

    def node_fits(x: str, y: str) -> bool:
        if dom.node_label(x) != cod.node_label(y):
            return False
        if node_ok is not None and not node_ok(x, y):
            return False
        return degree_fits(x, y)

    for x, y in fixed_nodes.items():
        if y not in cod.node_set or not node_fits(x, y):
            return

    free = [x for x in dom.nodes if x not in fixed_nodes]
    candidates = {x: [y for y in cod.nodes if node_fits(x, y)] for x in free}
    if any(not c for c in candidates.values()):
        return

    # dom edge multiplicities per (src, tgt, label) for forward checking
    need: dict[tuple[str, str, str], int] = Counter((e.src, e.tgt, e.label) for e in dom.edges)
    incident: dict[str, list[tuple[str, str, str]]] = defaultdict(list)
    for key in need:
        incident[key[0]].append(key)
        if key[1] != key[0]:
            incident[key[1]].append(key)

    node_map = dict(fixed_nodes)
    used = set(fixed_nodes.values())

    def consistent(x: str) -> bool:
        for s, t, l in incident.get(x, ()):
            if s in node_map and t in node_map:
                if len(cod.edges_between(node_map[s], node_map[t], l)) < need[(s, t, l)]:
                    return False
        return True

    for x in fixed_nodes:
        if not consistent(x):
            return

    free_edges = [e for e in dom.edges if e.id not in fixed_edges]
    if edge_ok is not None and not all(edge_ok(e, f) for e, f in fixed_edges.items()):
        return
    used_edges_init = set(fixed_edges.values())

    def assign_edges(i: int, edge_map: dict, used_e: set):
        if i == len(free_edges):
            yield dict(node_map), dict(edge_map)
            return
        e = free_edges[i]
        for fid in cod.edges_between(node_map[e.src], node_map[e.tgt], e.label):
            if fid in used_e or (edge_ok is not None and not edge_ok(e.id, fid)):
                continue
            edge_map[e.id] = fid
            used_e.add(fid)
            yield from assign_edges(i + 1, edge_map, used_e)
            used_e.discard(fid)
            del edge_map[e.id]

    def assign_nodes(i: int):
        if i == len(free):
            yield from assign_edges(0, dict(fixed_edges), set(used_edges_init))
            return
        x = free[i]
        for y in candidates[x]:
            if y in used:
                continue
            node_map[x] = y
            used.add(y)
            if consistent(x):
                yield from assign_nodes(i + 1)
            used.discard(y)
            del node_map[x]

    yield from assign_nodes(0)


def find_isomorphism(g: Graph, h: Graph, **kwargs) -> Optional[GraphMorphism]:
    """A label-preserving bijective morphism ``g -> h``, or ``None``."""
    for nm, em in iter_injective(g, h, bijective=True, **kwargs):
        return GraphMorphism(g, h, nm, em)
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
