"""JSON workspaces: named graphs, morphisms, conditions, solutions and contexts.

A workspace file is one JSON object with the optional sections ``graphs``,
``typed_graphs``, ``morphisms``, ``conditions``, ``solutions`` and
``contexts``, each a map from names to items, plus an optional ``seed``
and a free-form ``meta`` object.
Wherever an item refers to another one it may either give the name of an
item in the matching section or spell the item out inline.

Saving writes sorted keys, and replaces every nested item that equals a
named one by its name, so ``dumps(loads(dumps(ws))) == dumps(ws)``.
See ``docs/format.md`` for the full description.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .category import AmalgamationContext, TypedGraph
from .conditions import And, Condition, Exists, Not, Or, TrueCondition, validate_condition
from .graph import Edge, Graph, GraphError, GraphMorphism, validate_graph, validate_morphism
from .satisfaction import EMPTY, Certificate, Empty, Indexed, Solution, Witness

SECTIONS = ("graphs", "typed_graphs", "morphisms", "conditions", "solutions", "contexts")


class WorkspaceError(GraphError):
    """A workspace document is malformed, dangling or invalid."""


@dataclass
class Workspace:
    graphs: dict[str, Graph] = field(default_factory=dict)
    typed_graphs: dict[str, TypedGraph] = field(default_factory=dict)
    morphisms: dict[str, GraphMorphism] = field(default_factory=dict)
    conditions: dict[str, Condition] = field(default_factory=dict)
    solutions: dict[str, Certificate] = field(default_factory=dict)
    contexts: dict[str, AmalgamationContext] = field(default_factory=dict)
    seed: Optional[int] = None
    meta: dict[str, Any] = field(default_factory=dict)

    def section_for(self, item) -> str:
        for kind, name in (
            (Graph, "graphs"),
            (TypedGraph, "typed_graphs"),
            (GraphMorphism, "morphisms"),
            (Condition, "conditions"),
            (Certificate, "solutions"),
            (AmalgamationContext, "contexts"),
        ):
            if isinstance(item, kind):
                return name
        raise TypeError(f"cannot store {type(item).__name__} in a workspace")

    def add(self, name: str, item) -> None:
        getattr(self, self.section_for(item))[name] = item

    def get(self, name: str, section: Optional[str] = None):
        secs = [section] if section else SECTIONS
        hits = [getattr(self, s)[name] for s in secs if name in getattr(self, s)]
        if not hits:
            raise WorkspaceError(f"dangling reference: {name!r}")
        if len(hits) > 1:
            raise WorkspaceError(f"ambiguous name {name!r}; it is used in several sections")
        return hits[0]

    def merge(self, other: "Workspace") -> "Workspace":
        for s in SECTIONS:
            getattr(self, s).update(getattr(other, s))
        if other.seed is not None:
            self.seed = other.seed
        self.meta.update(other.meta)
        return self


# --------------------------------------------------------------------------
# encoding


class _Encoder:
    def __init__(self, ws: Workspace, skip: Optional[tuple[str, str]] = None):
        # name lookup for by-reference encoding; first name in sorted order wins
        self.names: dict[str, dict] = {}
        for s in SECTIONS:
            table = {}
            for name in sorted(getattr(ws, s)):
                if (s, name) != skip:
                    table.setdefault(getattr(ws, s)[name], name)
            self.names[s] = table

    def ref(self, section: str, item, encode):
        name = self.names[section].get(item)
        return name if name is not None else encode(item)

    def graph(self, g: Graph) -> dict:
        out: dict[str, Any] = {
            "nodes": list(g.nodes),
            "edges": [{"id": e.id, "src": e.src, "tgt": e.tgt, "label": e.label} for e in g.edges],
        }
        if g.node_labels:
            out["node_labels"] = dict(g.node_labels)
        return out

    def graph_ref(self, g: Graph):
        return self.ref("graphs", g, self.graph)

    def morphism(self, m: GraphMorphism) -> dict:
        return {
            "dom": self.graph_ref(m.dom),
            "cod": self.graph_ref(m.cod),
            "nodes": dict(m.node_map),
            "edges": dict(m.edge_map),
        }

    def morphism_ref(self, m: GraphMorphism):
        return self.ref("morphisms", m, self.morphism)

    def typed(self, t: TypedGraph) -> dict:
        return {
            "graph": self.graph_ref(t.graph),
            "type_graph": self.graph_ref(t.type_graph),
            "nodes": dict(t.typing.node_map),
            "edges": dict(t.typing.edge_map),
        }

    def typed_ref(self, t: TypedGraph):
        return self.ref("typed_graphs", t, self.typed)

    def condition(self, c: Condition) -> dict:
        root = self.typed_ref(c.root)
        if isinstance(c, TrueCondition):
            return {"op": "true", "root": root}
        if isinstance(c, Exists):
            return {"op": "exists", "root": root, "morphism": self.morphism_ref(c.morphism),
                    "sub": self.condition_ref(c.sub)}
        if isinstance(c, Not):
            return {"op": "not", "root": root, "sub": self.condition_ref(c.sub)}
        op = "and" if isinstance(c, And) else "or"
        return {"op": op, "root": root, "children": [self.condition_ref(x) for x in c.children]}

    def condition_ref(self, c: Condition):
        return self.ref("conditions", c, self.condition)

    def tree(self, s: Solution) -> dict:
        if isinstance(s, Empty):
            return {"op": "empty"}
        if isinstance(s, Witness):
            return {"op": "witness", "morphism": self.morphism_ref(s.morphism), "sub": self.tree(s.sub)}
        return {"op": "tuple", "children": [self.tree(x) for x in s.children]}

    def certificate(self, cert: Certificate) -> dict:
        return {
            "condition": self.condition_ref(cert.condition),
            "host": self.typed_ref(cert.host),
            "match": self.morphism_ref(cert.match),
            "tree": self.tree(cert.solution),
        }

    def context(self, ctx: AmalgamationContext) -> dict:
        return {k: self.morphism_ref(getattr(ctx, k)) for k in ("tg_db", "tg_dc", "tg_ba", "tg_ca")}


_TOP_ENCODERS = {
    "graphs": "graph",
    "typed_graphs": "typed",
    "morphisms": "morphism",
    "conditions": "condition",
    "solutions": "certificate",
    "contexts": "context",
}


def to_document(ws: Workspace) -> dict:
    doc: dict[str, Any] = {}
    for s in SECTIONS:
        items = getattr(ws, s)
        if not items:
            continue
        sec = {}
        for name in sorted(items):
            # the item itself is spelled out; only its parts become references
            enc = _Encoder(ws, skip=(s, name))
            sec[name] = getattr(enc, _TOP_ENCODERS[s])(items[name])
        doc[s] = sec
    if ws.seed is not None:
        doc["seed"] = ws.seed
    if ws.meta:
        doc["meta"] = dict(ws.meta)
    return doc


def dumps(ws: Workspace) -> str:
    return json.dumps(to_document(ws), indent=2, sort_keys=True) + "\n"


def save(ws: Workspace, path) -> None:
    Path(path).write_text(dumps(ws), encoding="utf-8")


def encode_item(item, ws: Optional[Workspace] = None) -> Any:
    """JSON value for one item, using names from ``ws`` for its parts."""
    enc = _Encoder(ws or Workspace())
    if isinstance(item, Solution):
        return enc.tree(item)
    sec = (ws or Workspace()).section_for(item)
    return getattr(enc, _TOP_ENCODERS[sec])(item)


# --------------------------------------------------------------------------
# decoding


def _need(obj, key: str, where: str):
    if not isinstance(obj, dict):
        raise WorkspaceError(f"{where}: expected an object")
    if key not in obj:
        raise WorkspaceError(f"{where}: missing field {key!r}")
    return obj[key]


def _str_map(obj, where: str) -> dict[str, str]:
    if not isinstance(obj, dict):
        raise WorkspaceError(f"{where}: expected an object")
    return {str(k): str(v) for k, v in obj.items()}


class _Decoder:
    """Lazy, memoised resolution of named items with cycle detection."""

    def __init__(self, doc: dict):
        if not isinstance(doc, dict):
            raise WorkspaceError("workspace document must be a JSON object")
        unknown = set(doc) - set(SECTIONS) - {"seed", "meta"}
        if unknown:
            raise WorkspaceError(f"unknown top-level keys: {sorted(unknown)}")
        self.doc = doc
        self.done: dict[tuple[str, str], Any] = {}
        self.active: set[tuple[str, str]] = set()

    def named(self, section: str, name: str, decode):
        key = (section, name)
        if key in self.done:
            return self.done[key]
        raw = self.doc.get(section, {})
        if not isinstance(raw, dict) or name not in raw:
            raise WorkspaceError(f"dangling reference: {section}/{name}")
        if key in self.active:
            raise WorkspaceError(f"cyclic reference: {section}/{name}")
        self.active.add(key)
        val = decode(raw[name], f"{section}/{name}")
        self.active.discard(key)
        self.done[key] = val
        return val

    def resolve(self, section: str, ref, decode, where: str):
        if isinstance(ref, str):
            return self.named(section, ref, decode)
        return decode(ref, where)

    def graph(self, obj, where: str) -> Graph:
        nodes = _need(obj, "nodes", where)
        edges = obj.get("edges", [])
        if not isinstance(nodes, list) or not isinstance(edges, list):
            raise WorkspaceError(f"{where}: nodes and edges must be lists")
        try:
            es = [Edge(str(e["id"]), str(e["src"]), str(e["tgt"]), str(e["label"])) for e in edges]
        except (KeyError, TypeError) as exc:
            raise WorkspaceError(f"{where}: malformed edge ({exc})") from None
        g = Graph(tuple(str(n) for n in nodes), tuple(es), _str_map(obj.get("node_labels", {}), where))
        rep = validate_graph(g)
        if not rep.ok:
            raise WorkspaceError(f"{where}: validator failure: " + "; ".join(rep.problems))
        return g

    def graph_ref(self, ref, where):
        return self.resolve("graphs", ref, self.graph, where)

    def _maps(self, obj, where, dom, cod) -> GraphMorphism:
        m = GraphMorphism(
            dom, cod,
            _str_map(obj.get("nodes", {}), where + ".nodes"),
            _str_map(obj.get("edges", {}), where + ".edges"),
        )
        rep = validate_morphism(m)
        if not rep.ok:
            raise WorkspaceError(f"{where}: validator failure: " + "; ".join(rep.problems))
        return m

    def morphism(self, obj, where: str) -> GraphMorphism:
        dom = self.graph_ref(_need(obj, "dom", where), where + ".dom")
        cod = self.graph_ref(_need(obj, "cod", where), where + ".cod")
        return self._maps(obj, where, dom, cod)

    def morphism_ref(self, ref, where):
        return self.resolve("morphisms", ref, self.morphism, where)

    def typed(self, obj, where: str) -> TypedGraph:
        g = self.graph_ref(_need(obj, "graph", where), where + ".graph")
        tg = self.graph_ref(_need(obj, "type_graph", where), where + ".type_graph")
        return TypedGraph(self._maps(obj, where, g, tg))

    def typed_ref(self, ref, where):
        return self.resolve("typed_graphs", ref, self.typed, where)

    def condition(self, obj, where: str, top: bool = True) -> Condition:
        op = _need(obj, "op", where)
        root = self.typed_ref(_need(obj, "root", where), where + ".root")
        if op == "true":
            c = TrueCondition(root)
        elif op == "exists":
            a = self.morphism_ref(_need(obj, "morphism", where), where + ".morphism")
            c = Exists(root, a, self.condition_ref(_need(obj, "sub", where), where + ".sub"))
        elif op == "not":
            c = Not(root, self.condition_ref(_need(obj, "sub", where), where + ".sub"))
        elif op in ("and", "or"):
            kids = _need(obj, "children", where)
            if not isinstance(kids, list):
                raise WorkspaceError(f"{where}.children: expected a list")
            cs = tuple(self.condition_ref(k, f"{where}.children[{i}]") for i, k in enumerate(kids))
            c = (And if op == "and" else Or)(root, cs)
        else:
            raise WorkspaceError(f"{where}: unknown condition op {op!r}")
        if top:
            rep = validate_condition(c)
            if not rep.ok:
                raise WorkspaceError(f"{where}: validator failure: " + "; ".join(rep.problems))
        return c

    def condition_ref(self, ref, where):
        return self.resolve("conditions", ref, lambda o, w: self.condition(o, w, top=False), where)

    def tree(self, obj, where: str) -> Solution:
        op = _need(obj, "op", where)
        if op == "empty":
            return EMPTY
        if op == "witness":
            q = self.morphism_ref(_need(obj, "morphism", where), where + ".morphism")
            return Witness(q, self.tree(_need(obj, "sub", where), where + ".sub"))
        if op == "tuple":
            kids = _need(obj, "children", where)
            if not isinstance(kids, list):
                raise WorkspaceError(f"{where}.children: expected a list")
            return Indexed(tuple(self.tree(k, f"{where}.children[{i}]") for i, k in enumerate(kids)))
        raise WorkspaceError(f"{where}: unknown solution op {op!r}")

    def certificate(self, obj, where: str) -> Certificate:
        cert = Certificate(
            self.condition_ref(_need(obj, "condition", where), where + ".condition"),
            self.typed_ref(_need(obj, "host", where), where + ".host"),
            self.morphism_ref(_need(obj, "match", where), where + ".match"),
            self.tree(_need(obj, "tree", where), where + ".tree"),
        )
        if not cert.verify():
            raise WorkspaceError(f"{where}: validator failure: not a solution")
        return cert

    def context(self, obj, where: str) -> AmalgamationContext:
        ctx = AmalgamationContext(*(
            self.morphism_ref(_need(obj, k, where), f"{where}.{k}") for k in ("tg_db", "tg_dc", "tg_ba", "tg_ca")
        ))
        probs = ctx.problems()
        if probs:
            raise WorkspaceError(f"{where}: validator failure: " + "; ".join(probs))
        return ctx


def from_document(doc: dict) -> Workspace:
    dec = _Decoder(doc)
    ws = Workspace()
    decoders = {
        "graphs": dec.graph,
        "typed_graphs": dec.typed,
        "morphisms": dec.morphism,
        "conditions": dec.condition,
        "solutions": dec.certificate,
        "contexts": dec.context,
    }
    for s in SECTIONS:
        sec = doc.get(s, {})
        if not isinstance(sec, dict):
            raise WorkspaceError(f"section {s!r} must be an object")
        for name in sorted(sec):
            getattr(ws, s)[name] = dec.named(s, name, decoders[s])
    # named sub-conditions are validated as they are reached from the top
    for name, c in ws.conditions.items():
        rep = validate_condition(c)
        if not rep.ok:
            raise WorkspaceError(f"conditions/{name}: validator failure: " + "; ".join(rep.problems))
    seed = doc.get("seed")
    if seed is not None:
        if not isinstance(seed, int) or isinstance(seed, bool) or not 0 <= seed < 2**64:
            raise WorkspaceError("seed must be an unsigned 64-bit integer")
        ws.seed = seed
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise WorkspaceError("meta must be an object")
    ws.meta = dict(meta)
    return ws


def loads(text: str) -> Workspace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def load(path) -> Workspace:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise WorkspaceError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
