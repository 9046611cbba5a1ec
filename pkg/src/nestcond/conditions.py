"""Nested conditions over typed graphs.

A condition is a tree of :class:`TrueCondition`, :class:`Exists`,
:class:`Not`, :class:`And` and :class:`Or` nodes.  Every node carries its
root object as a :class:`~nestcond.category.TypedGraph`, so a condition is
typed at every nesting level by construction and the type graph is shared
by all levels.

Restriction works on all conditions; amalgamation and decomposition are
defined for positive conditions only.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .category import (
    AgreementError,
    AmalgamationContext,
    CospanResult,
    TypedAmalgamation,
    TypedGraph,
    amalgamate_typed_graphs,
    induced_pushout_morphism,
    iter_typed_morphisms,
    restrict_morphism,
    restrict_typed_graph,
)
from .graph import Graph, GraphError, GraphMorphism, ValidationReport, compose, validate_morphism


class NotPositiveError(GraphError):
    """An operation defined only for positive conditions got a negation or an empty junction."""


@dataclass(frozen=True)
class Condition:
    root: TypedGraph

    @property
    def type_graph(self) -> Graph:
        return self.root.type_graph


@dataclass(frozen=True)
class TrueCondition(Condition):
    pass


@dataclass(frozen=True)
class Exists(Condition):
    morphism: GraphMorphism
    sub: Condition


@dataclass(frozen=True)
class Not(Condition):
    sub: Condition


@dataclass(frozen=True)
class And(Condition):
    children: tuple[Condition, ...] = ()


@dataclass(frozen=True)
class Or(Condition):
    children: tuple[Condition, ...] = ()


Junction = Union[And, Or]


def true(root: TypedGraph) -> TrueCondition:
    return TrueCondition(root)


def exists(a: GraphMorphism, sub: Optional[Condition] = None, root: Optional[TypedGraph] = None) -> Exists:
    """``exists(a, sub)``; the root typing is ``typing(C) . a`` unless given.

    ``sub`` may also be a :class:`TypedGraph` over ``a.cod``, meaning
    ``true`` over it.
    """
    if isinstance(sub, TypedGraph):
        sub = TrueCondition(sub)
    if sub is None:
        raise GraphError("exists needs a sub-condition (or the typed codomain)")
    if root is None:
        root = TypedGraph(compose(a, sub.root.typing))
    return Exists(root, a, sub)


def negate(c: Condition) -> Not:
    return Not(c.root, c)


def conj(*children: Condition, root: Optional[TypedGraph] = None) -> And:
    if root is None:
        if not children:
            raise GraphError("an empty conjunction needs an explicit root")
        root = children[0].root
    return And(root, tuple(children))


def disj(*children: Condition, root: Optional[TypedGraph] = None) -> Or:
    if root is None:
        if not children:
            raise GraphError("an empty disjunction needs an explicit root")
        root = children[0].root
    return Or(root, tuple(children))


def is_positive(c: Condition) -> bool:
    if isinstance(c, TrueCondition):
        return True
    if isinstance(c, Exists):
        return is_positive(c.sub)
    if isinstance(c, Not):
        return False
    if isinstance(c, (And, Or)):
        return bool(c.children) and all(is_positive(x) for x in c.children)
    raise TypeError(f"not a condition: {c!r}")


def require_positive(c: Condition):
    if not is_positive(c):
        raise NotPositiveError("condition is not positive")


def depth(c: Condition) -> int:
    """Number of nested ``Exists`` along the deepest branch."""
    if isinstance(c, Exists):
        return 1 + depth(c.sub)
    if isinstance(c, Not):
        return depth(c.sub)
    if isinstance(c, (And, Or)):
        return max((depth(x) for x in c.children), default=0)
    return 0


def validate_condition(c: Condition) -> ValidationReport:
    problems: list[str] = []
    tg = c.type_graph

    def walk(node: Condition, path: str):
        rep = validate_morphism(node.root.typing)
        problems.extend(f"{path}: {p}" for p in rep.problems)
        if node.type_graph != tg:
            problems.append(f"{path}: typed over a different type graph")
        if isinstance(node, TrueCondition):
            return
        if isinstance(node, Exists):
            a = node.morphism
            problems.extend(f"{path}: {p}" for p in validate_morphism(a).problems)
            if a.dom != node.root.graph:
                problems.append(f"{path}: morphism does not start at the root")
            if a.cod != node.sub.root.graph:
                problems.append(f"{path}: morphism does not end at the sub-condition's root")
            elif a.dom == node.root.graph and compose(a, node.sub.root.typing) != node.root.typing:
                problems.append(f"{path}: morphism does not commute with the typings")
            walk(node.sub, path + ".sub")
        elif isinstance(node, Not):
            if node.sub.root != node.root:
                problems.append(f"{path}: negated condition has a different root")
            walk(node.sub, path + ".sub")
        elif isinstance(node, (And, Or)):
            for i, ch in enumerate(node.children):
                if ch.root != node.root:
                    problems.append(f"{path}[{i}]: child has a different root")
                walk(ch, f"{path}[{i}]")
        else:
            problems.append(f"{path}: unknown condition node {type(node).__name__}")

    walk(c, "root")
    return ValidationReport(tuple(problems))


def shape(c: Condition) -> tuple:
    """The constructor tree without any graph data."""
    if isinstance(c, TrueCondition):
        return ("true",)
    if isinstance(c, Exists):
        return ("exists", shape(c.sub))
    if isinstance(c, Not):
        return ("not", shape(c.sub))
    kind = "and" if isinstance(c, And) else "or"
    return (kind, tuple(shape(x) for x in c.children))


# --------------------------------------------------------------------------
# restriction


def restrict_condition(c: Condition, t: GraphMorphism) -> Condition:
    """Restrict every level of ``c`` along the injective type morphism ``t``."""
    cache: dict[TypedGraph, object] = {}

    def r(tg: TypedGraph):
        if tg not in cache:
            cache[tg] = restrict_typed_graph(tg, t)
        return cache[tg]

    def go(node: Condition) -> Condition:
        root = r(node.root)
        if isinstance(node, TrueCondition):
            return TrueCondition(root.typed)
        if isinstance(node, Exists):
            b = restrict_morphism(node.morphism, t, r(node.sub.root), root)
            return Exists(root.typed, b, go(node.sub))
        if isinstance(node, Not):
            return Not(root.typed, go(node.sub))
        if isinstance(node, And):
            return And(root.typed, tuple(go(x) for x in node.children))
        if isinstance(node, Or):
            return Or(root.typed, tuple(go(x) for x in node.children))
        raise TypeError(f"not a condition: {node!r}")

    return go(c)


def _check_corners(ctx: AmalgamationContext, c_b: Condition, c_c: Condition, c_d: Condition):
    for c, tg, name in ((c_b, ctx.tg_b, "B"), (c_c, ctx.tg_c, "C"), (c_d, ctx.tg_d, "D")):
        if c.type_graph != tg:
            raise GraphError(f"condition {name} is not typed over the matching corner of the context")


def conditions_agree(c_b: Condition, c_c: Condition, c_d: Condition, ctx: AmalgamationContext) -> bool:
    """Whether ``c_d`` is the restriction of both ``c_b`` and ``c_c``."""
    _check_corners(ctx, c_b, c_c, c_d)
    if shape(c_b) != shape(c_d) or shape(c_c) != shape(c_d):
        return False
    return restrict_condition(c_b, ctx.tg_db) == c_d and restrict_condition(c_c, ctx.tg_dc) == c_d


# --------------------------------------------------------------------------
# amalgamation


@dataclass(frozen=True)
class ConditionAmalgamation:
    """An amalgamated condition with the object amalgamation at every level.

    ``parts`` mirrors the condition: one entry for the sub-condition of an
    ``Exists``, one per child of a junction, none for ``true``.
    """

    condition: Condition
    root: TypedAmalgamation
    parts: tuple["ConditionAmalgamation", ...] = ()


def _root_cospan(root: TypedAmalgamation) -> CospanResult:
    return CospanResult(root.typed.graph, root.from_b, root.from_c)


def amalgamate_conditions_traced(
    ctx: AmalgamationContext, c_b: Condition, c_c: Condition, c_d: Condition
) -> ConditionAmalgamation:
    for c in (c_b, c_c, c_d):
        require_positive(c)
    if not conditions_agree(c_b, c_c, c_d, ctx):
        raise AgreementError("conditions do not agree in the interface condition")

    def go(nb: Condition, nc: Condition, nd: Condition, root: TypedAmalgamation) -> ConditionAmalgamation:
        top = root.typed
        if isinstance(nd, TrueCondition):
            return ConditionAmalgamation(TrueCondition(top), root)
        if isinstance(nd, Exists):
            sub_root = amalgamate_typed_graphs(ctx, nb.sub.root, nc.sub.root, nd.sub.root)
            # a = b +_d c, induced by the pushout of the roots
            a = induced_pushout_morphism(
                _root_cospan(root),
                compose(nb.morphism, sub_root.from_b),
                compose(nc.morphism, sub_root.from_c),
            )
            sub = go(nb.sub, nc.sub, nd.sub, sub_root)
            return ConditionAmalgamation(Exists(top, a, sub.condition), root, (sub,))
        kids = tuple(go(x, y, z, root) for x, y, z in zip(nb.children, nc.children, nd.children))
        cls = And if isinstance(nd, And) else Or
        return ConditionAmalgamation(cls(top, tuple(k.condition for k in kids)), root, kids)

    root = amalgamate_typed_graphs(ctx, c_b.root, c_c.root, c_d.root)
    return go(c_b, c_c, c_d, root)


def amalgamate_conditions(ctx: AmalgamationContext, c_b: Condition, c_c: Condition, c_d: Condition) -> Condition:
    """The positive condition over ``TG_A`` whose restrictions are ``c_b`` and ``c_c``."""
    return amalgamate_conditions_traced(ctx, c_b, c_c, c_d).condition


def decompose_condition(ctx: AmalgamationContext, c_a: Condition) -> tuple[Condition, Condition, Condition]:
    require_positive(c_a)
    if c_a.type_graph != ctx.tg_a:
        raise GraphError("condition is not typed over the amalgamated type graph")
    c_b = restrict_condition(c_a, ctx.tg_ba)
    c_c = restrict_condition(c_a, ctx.tg_ca)
    c_d = restrict_condition(c_b, ctx.tg_db)
    return c_b, c_c, c_d


def levels(c: Condition) -> Iterator[tuple[str, Condition]]:
    """All nodes of ``c`` with their paths, depth first."""

    def go(node: Condition, path: str):
        yield path, node
        if isinstance(node, (Exists, Not)):
            yield from go(node.sub, path + ".sub")
        elif isinstance(node, (And, Or)):
            for i, ch in enumerate(node.children):
                yield from go(ch, f"{path}[{i}]")

    yield from go(c, "root")


# --------------------------------------------------------------------------
# isomorphism


def _fixed_through(a1: GraphMorphism, a2: GraphMorphism, phi: GraphMorphism):
    # psi must satisfy psi . a1 = a2 . phi
    nodes, edges = {}, {}
    for x in a1.dom.nodes:
        y = a2.node_map[phi.node_map[x]]
        if nodes.setdefault(a1.node_map[x], y) != y:
            return None
    for x in a1.dom.edge_ids:
        y = a2.edge_map[phi.edge_map[x]]
        if edges.setdefault(a1.edge_map[x], y) != y:
            return None
    return nodes, edges


def _match_under(c1: Condition, c2: Condition, phi: GraphMorphism) -> bool:
    if type(c1) is not type(c2):
        return False
    if isinstance(c1, TrueCondition):
        return True
    if isinstance(c1, Exists):
        fixed = _fixed_through(c1.morphism, c2.morphism, phi)
        if fixed is None:
            return False
        for psi in iter_typed_morphisms(
            c1.sub.root, c2.sub.root, fixed_nodes=fixed[0], fixed_edges=fixed[1], bijective=True
        ):
            if _match_under(c1.sub, c2.sub, psi):
                return True
        return False
    if isinstance(c1, Not):
        return _match_under(c1.sub, c2.sub, phi)
    if len(c1.children) != len(c2.children):
        return False
    return all(_match_under(x, y, phi) for x, y in zip(c1.children, c2.children))


def conditions_isomorphic(c1: Condition, c2: Condition) -> bool:
    """Same shape and level-wise typed isomorphisms commuting with every morphism."""
    if c1.type_graph != c2.type_graph or shape(c1) != shape(c2):
        return False
    for phi in iter_typed_morphisms(c1.root, c2.root, bijective=True):
        if _match_under(c1, c2, phi):
            return True
    return False
