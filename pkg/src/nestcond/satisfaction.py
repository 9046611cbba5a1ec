"""Satisfaction of nested conditions and solution trees.

Matches are plain graph morphisms ``p: P -> G``; because conditions are
typed, every query also takes the typed host graph ``G`` so that witnesses
can be required to respect the typing.

A solution mirrors its condition: :data:`EMPTY` for ``true`` and for the
unchosen branches of a disjunction, :class:`Witness` for ``exists`` and
:class:`Indexed` for conjunctions and disjunctions.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .category import (
    AgreementError,
    AmalgamationContext,
    CospanResult,
    Restriction,
    TypedAmalgamation,
    TypedGraph,
    amalgamate_typed_graphs,
    decompose_typed_graph,
    induced_pushout_morphism,
    initial_morphism,
    is_typed_morphism,
    iter_typed_morphisms,
    restrict_morphism,
    restrict_typed_graph,
    typed_graphs_agree,
)
from .conditions import (
    And,
    Condition,
    ConditionAmalgamation,
    Exists,
    Not,
    Or,
    TrueCondition,
    amalgamate_conditions_traced,
    conditions_agree,
    require_positive,
    restrict_condition,
)
from .graph import GraphError, GraphMorphism, compose, is_injective, validate_morphism


class Solution:
    """Base class of solution trees."""


@dataclass(frozen=True)
class Empty(Solution):
    def __repr__(self):
        return "EMPTY"


EMPTY = Empty()


@dataclass(frozen=True)
class Witness(Solution):
    morphism: GraphMorphism
    sub: Solution


@dataclass(frozen=True)
class Indexed(Solution):
    children: tuple[Solution, ...]


def solution_shape(q: Solution) -> tuple:
    if isinstance(q, Empty):
        return ("empty",)
    if isinstance(q, Witness):
        return ("witness", solution_shape(q.sub))
    return ("indexed", tuple(solution_shape(x) for x in q.children))


# --------------------------------------------------------------------------
# matching


def enumerate_injective_morphisms(p: TypedGraph, g: TypedGraph) -> list[GraphMorphism]:
    """All injective type-respecting morphisms ``P -> G`` in search order."""
    return list(iter_typed_morphisms(p, g))


def iter_extensions(a: GraphMorphism, p: GraphMorphism, c: TypedGraph, g: TypedGraph) -> Iterator[GraphMorphism]:
    if a.cod != c.graph or p.cod != g.graph or a.dom != p.dom:
        raise GraphError("extension problem is not well formed")
    fixed_n, fixed_e = {}, {}
    for x in a.dom.nodes:
        if fixed_n.setdefault(a.node_map[x], p.node_map[x]) != p.node_map[x]:
            return
    for x in a.dom.edge_ids:
        if fixed_e.setdefault(a.edge_map[x], p.edge_map[x]) != p.edge_map[x]:
            return
    yield from iter_typed_morphisms(c, g, fixed_nodes=fixed_n, fixed_edges=fixed_e)


def enumerate_extensions(a: GraphMorphism, p: GraphMorphism, c: TypedGraph, g: TypedGraph) -> list[GraphMorphism]:
    """All injective ``q: C -> G`` with ``q . a = p``, typed like ``c`` and ``g``."""
    return list(iter_extensions(a, p, c, g))


def _check_match(p: GraphMorphism, cond: Condition, host: TypedGraph):
    if p.dom != cond.root.graph:
        raise GraphError("match does not start at the root of the condition")
    if p.cod != host.graph:
        raise GraphError("match does not land in the host graph")
    if cond.type_graph != host.type_graph:
        raise GraphError("condition and host are typed over different type graphs")


# --------------------------------------------------------------------------
# semantics


def satisfies(p: GraphMorphism, cond: Condition, host: TypedGraph) -> bool:
    """Whether the match ``p: P -> G`` satisfies ``cond``; negation is supported."""
    _check_match(p, cond, host)
    return _sat(p, cond, host)


def _sat(p: GraphMorphism, cond: Condition, host: TypedGraph) -> bool:
    if isinstance(cond, TrueCondition):
        return True
    if isinstance(cond, Exists):
        return any(_sat(q, cond.sub, host) for q in iter_extensions(cond.morphism, p, cond.sub.root, host))
    if isinstance(cond, Not):
        return not _sat(p, cond.sub, host)
    if isinstance(cond, And):
        return all(_sat(p, x, host) for x in cond.children)
    if isinstance(cond, Or):
        return any(_sat(p, x, host) for x in cond.children)
    raise TypeError(f"not a condition: {cond!r}")


def find_solution(p: GraphMorphism, cond: Condition, host: TypedGraph) -> Optional[Solution]:
    """First solution in search order: first witness, leftmost satisfiable branch."""
    require_positive(cond)
    _check_match(p, cond, host)
    return _find(p, cond, host)


def _find(p: GraphMorphism, cond: Condition, host: TypedGraph) -> Optional[Solution]:
    if isinstance(cond, TrueCondition):
        return EMPTY
    if isinstance(cond, Exists):
        for q in iter_extensions(cond.morphism, p, cond.sub.root, host):
            sub = _find(q, cond.sub, host)
            if sub is not None:
                return Witness(q, sub)
        return None
    if isinstance(cond, And):
        kids = []
        for x in cond.children:
            s = _find(p, x, host)
            if s is None:
                return None
            kids.append(s)
        return Indexed(tuple(kids))
    if isinstance(cond, Or):
        n = len(cond.children)
        for j, x in enumerate(cond.children):
            s = _find(p, x, host)
            if s is not None:
                return Indexed(tuple(s if i == j else EMPTY for i in range(n)))
        return None
    raise TypeError(f"not a positive condition: {cond!r}")


def iter_solutions(p: GraphMorphism, cond: Condition, host: TypedGraph) -> Iterator[Solution]:
    """Every solution for ``p |= cond``, without repetition, in search order."""
    require_positive(cond)
    _check_match(p, cond, host)
    return _iter(p, cond, host)


def _iter(p, cond, host) -> Iterator[Solution]:
    if isinstance(cond, TrueCondition):
        yield EMPTY
    elif isinstance(cond, Exists):
        for q in iter_extensions(cond.morphism, p, cond.sub.root, host):
            for s in _iter(q, cond.sub, host):
                yield Witness(q, s)
    elif isinstance(cond, And):
        def prod(i):
            if i == len(cond.children):
                yield ()
                return
            for s in _iter(p, cond.children[i], host):
                for rest in prod(i + 1):
                    yield (s,) + rest
        for kids in prod(0):
            yield Indexed(kids)
    elif isinstance(cond, Or):
        n = len(cond.children)
        all_empty_done = False
        for j, x in enumerate(cond.children):
            for s in _iter(p, x, host):
                if s == EMPTY:
                    if all_empty_done:
                        continue
                    all_empty_done = True
                yield Indexed(tuple(s if i == j else EMPTY for i in range(n)))
    else:
        raise TypeError(f"not a positive condition: {cond!r}")


def verify_solution(p: GraphMorphism, cond: Condition, host: TypedGraph, q: Solution) -> bool:
    """Check ``q`` against every clause of the solution definition."""
    if p.dom != cond.root.graph or p.cod != host.graph:
        return False
    return _verify(p, cond, host, q)


def _verify(p: GraphMorphism, cond: Condition, host: TypedGraph, sol: Solution) -> bool:
    if isinstance(cond, TrueCondition):
        return isinstance(sol, Empty)
    if isinstance(cond, Exists):
        if not isinstance(sol, Witness):
            return False
        q = sol.morphism
        if q.dom != cond.sub.root.graph or q.cod != host.graph:
            return False
        if not validate_morphism(q).ok or not is_injective(q):
            return False
        if compose(cond.morphism, q) != p:
            return False
        if compose(q, host.typing) != cond.sub.root.typing:
            return False
        return _verify(q, cond.sub, host, sol.sub)
    if isinstance(cond, And):
        if not isinstance(sol, Indexed) or len(sol.children) != len(cond.children) or not cond.children:
            return False
        return all(_verify(p, c, host, s) for c, s in zip(cond.children, sol.children))
    if isinstance(cond, Or):
        if not isinstance(sol, Indexed) or len(sol.children) != len(cond.children):
            return False
        for j, (c, s) in enumerate(zip(cond.children, sol.children)):
            others_empty = all(isinstance(x, Empty) for i, x in enumerate(sol.children) if i != j)
            if others_empty and _verify(p, c, host, s):
                return True
        return False
    # negation has no solutions
    return False


def generally_satisfies(g: TypedGraph, cond: Condition) -> bool:
    """Every injective typed match of the root into ``g`` satisfies ``cond``."""
    if cond.type_graph != g.type_graph:
        raise GraphError("condition and graph are typed over different type graphs")
    return all(_sat(p, cond, g) for p in iter_typed_morphisms(cond.root, g))


def _check_initial(g: TypedGraph, cond: Condition):
    if not cond.root.graph.is_empty():
        raise GraphError("initial satisfaction needs a condition over the empty graph")
    if cond.type_graph != g.type_graph:
        raise GraphError("condition and graph are typed over different type graphs")


def is_initially_satisfied(g: TypedGraph, cond: Condition) -> bool:
    """Boolean initial satisfaction; negation is supported."""
    _check_initial(g, cond)
    return _sat(initial_morphism(g.graph), cond, g)


def initially_satisfies(g: TypedGraph, cond: Condition) -> Optional[Solution]:
    """A solution for ``g`` initially satisfying the positive ``cond``, if any."""
    _check_initial(g, cond)
    return find_solution(initial_morphism(g.graph), cond, g)


# --------------------------------------------------------------------------
# certificates: a solution together with what it solves


@dataclass(frozen=True)
class Certificate:
    """A solution for ``match |= condition`` inside ``host``."""

    condition: Condition
    host: TypedGraph
    match: GraphMorphism
    solution: Solution

    def verify(self) -> bool:
        return verify_solution(self.match, self.condition, self.host, self.solution)

    @classmethod
    def initial(cls, condition: Condition, host: TypedGraph, solution: Solution) -> "Certificate":
        return cls(condition, host, initial_morphism(host.graph), solution)


def _restrict_tree(sol: Solution, cond: Condition, r_host: Restriction, t: GraphMorphism) -> Solution:
    if isinstance(sol, Empty):
        return EMPTY
    if isinstance(sol, Witness):
        if not isinstance(cond, Exists):
            raise GraphError("solution shape does not fit the condition")
        r_c = restrict_typed_graph(cond.sub.root, t)
        q_b = restrict_morphism(sol.morphism, t, r_host, r_c)
        return Witness(q_b, _restrict_tree(sol.sub, cond.sub, r_host, t))
    if not isinstance(cond, (And, Or)) or len(cond.children) != len(sol.children):
        raise GraphError("solution shape does not fit the condition")
    return Indexed(tuple(_restrict_tree(s, c, r_host, t) for s, c in zip(sol.children, cond.children)))


def restrict_match(p: GraphMorphism, root: TypedGraph, host: TypedGraph, t: GraphMorphism) -> GraphMorphism:
    if not is_typed_morphism(p, root, host):
        raise GraphError("match does not respect the typings")
    return restrict_morphism(p, t, restrict_typed_graph(host, t), restrict_typed_graph(root, t))


def restrict_certificate(cert: Certificate, t: GraphMorphism) -> Certificate:
    """Restrict condition, host, match and solution along ``t`` together."""
    require_positive(cert.condition)
    r_host = restrict_typed_graph(cert.host, t)
    return Certificate(
        restrict_condition(cert.condition, t),
        r_host.typed,
        restrict_match(cert.match, cert.condition.root, cert.host, t),
        _restrict_tree(cert.solution, cert.condition, r_host, t),
    )


def restrict_solution(
    t: GraphMorphism, cond: Condition, p: GraphMorphism, sol: Solution, host: TypedGraph
) -> Solution:
    """Restriction of a verified solution for ``p |= cond`` along ``t``."""
    require_positive(cond)
    if not verify_solution(p, cond, host, sol):
        raise GraphError("input is not a solution")
    return _restrict_tree(sol, cond, restrict_typed_graph(host, t), t)


def _check_context_corners(ctx: AmalgamationContext, b: Certificate, c: Certificate, d: Certificate):
    for cert, tg, name in ((b, ctx.tg_b, "B"), (c, ctx.tg_c, "C"), (d, ctx.tg_d, "D")):
        if cert.host.type_graph != tg or cert.condition.type_graph != tg:
            raise GraphError(f"certificate {name} is not typed over the matching corner")


def solutions_agree(ctx: AmalgamationContext, b: Certificate, c: Certificate, d: Certificate) -> bool:
    """Whether ``d`` is the restriction of both ``b`` and ``c``, solution included."""
    _check_context_corners(ctx, b, c, d)
    return restrict_certificate(b, ctx.tg_db) == d and restrict_certificate(c, ctx.tg_dc) == d


def _agreement_problems(ctx, b, c, d) -> list[str]:
    out = []
    if not typed_graphs_agree(b.host, c.host, d.host, ctx):
        out.append("hosts do not agree")
    if not conditions_agree(b.condition, c.condition, d.condition, ctx):
        out.append("conditions do not agree")
    if not out and not solutions_agree(ctx, b, c, d):
        out.append("matches or solutions do not agree")
    return out


@dataclass(frozen=True)
class SolutionAmalgamation:
    certificate: Certificate
    host: TypedAmalgamation
    condition: ConditionAmalgamation


def amalgamate_solutions_traced(
    ctx: AmalgamationContext, b: Certificate, c: Certificate, d: Certificate
) -> SolutionAmalgamation:
    _check_context_corners(ctx, b, c, d)
    for cert, name in ((b, "B"), (c, "C"), (d, "D")):
        require_positive(cert.condition)
        if not cert.verify():
            raise GraphError(f"certificate {name} does not verify")
    probs = _agreement_problems(ctx, b, c, d)
    if probs:
        raise AgreementError("; ".join(probs))

    trace = amalgamate_conditions_traced(ctx, b.condition, c.condition, d.condition)
    g = amalgamate_typed_graphs(ctx, b.host, c.host, d.host)

    def induced(level: ConditionAmalgamation, m_b: GraphMorphism, m_c: GraphMorphism) -> GraphMorphism:
        root = level.root
        cospan = CospanResult(root.typed.graph, root.from_b, root.from_c)
        return induced_pushout_morphism(cospan, compose(m_b, g.from_b), compose(m_c, g.from_c))

    def go(level: ConditionAmalgamation, sb: Solution, sc: Solution, sd: Solution) -> Solution:
        if isinstance(sd, Empty):
            return EMPTY
        if isinstance(sd, Witness):
            sub_level = level.parts[0]
            q_a = induced(sub_level, sb.morphism, sc.morphism)
            return Witness(q_a, go(sub_level, sb.sub, sc.sub, sd.sub))
        return Indexed(tuple(
            go(lv, x, y, z) for lv, x, y, z in zip(level.parts, sb.children, sc.children, sd.children)
        ))

    p_a = induced(trace, b.match, c.match)
    q_a = go(trace, b.solution, c.solution, d.solution)
    return SolutionAmalgamation(Certificate(trace.condition, g.typed, p_a, q_a), g, trace)


def amalgamate_solutions(ctx: AmalgamationContext, b: Certificate, c: Certificate, d: Certificate) -> Certificate:
    """``Q_A = Q_B +_{Q_D} Q_C`` with the amalgamated condition, host and match."""
    return amalgamate_solutions_traced(ctx, b, c, d).certificate


def decompose_solution(ctx: AmalgamationContext, a: Certificate) -> tuple[Certificate, Certificate, Certificate]:
    """The restrictions of a verified certificate to the three context corners."""
    require_positive(a.condition)
    if a.host.type_graph != ctx.tg_a:
        raise GraphError("certificate is not typed over the amalgamated type graph")
    if not a.verify():
        raise GraphError("certificate does not verify")
    b = restrict_certificate(a, ctx.tg_ba)
    c = restrict_certificate(a, ctx.tg_ca)
    d = restrict_certificate(b, ctx.tg_db)
    return b, c, d


# --------------------------------------------------------------------------
# initial satisfaction under amalgamation


@dataclass
class InitialAmalgamationReport:
    """Both directions of compatibility of initial satisfaction with amalgamation.

    ``global_solution`` solves ``G_A`` against the amalgamated constraint.
    ``decomposed`` are its restrictions, ``local`` is an agreeing triple of
    local solutions found independently by search, and ``composed`` is the
    amalgamation of ``local``.  ``verdicts`` records ``verify`` for each.
    """

    global_solution: Optional[Certificate] = None
    decomposed: Optional[tuple[Certificate, Certificate, Certificate]] = None
    local: Optional[tuple[Certificate, Certificate, Certificate]] = None
    composed: Optional[Certificate] = None
    verdicts: dict = None

    @property
    def equivalent(self) -> bool:
        return (self.global_solution is None) == (self.local is None)

    @property
    def ok(self) -> bool:
        return self.equivalent and all(self.verdicts.values())


def find_agreeing_local_solutions(
    ctx: AmalgamationContext,
    constraints: tuple[Condition, Condition, Condition],
    hosts: tuple[TypedGraph, TypedGraph, TypedGraph],
) -> Optional[tuple[Certificate, Certificate, Certificate]]:
    """Search local solutions for initial satisfaction that agree in the interface."""
    ac_b, ac_c, ac_d = constraints
    h_b, h_c, h_d = hosts
    by_restriction: dict = {}
    for sol in iter_solutions(initial_morphism(h_c.graph), ac_c, h_c):
        cert = Certificate.initial(ac_c, h_c, sol)
        by_restriction.setdefault(restrict_certificate(cert, ctx.tg_dc), cert)
    if not by_restriction:
        return None
    for sol in iter_solutions(initial_morphism(h_b.graph), ac_b, h_b):
        cert = Certificate.initial(ac_b, h_b, sol)
        d = restrict_certificate(cert, ctx.tg_db)
        if d in by_restriction:
            return cert, by_restriction[d], d
    return None


def initial_amalgamation_check(
    ctx: AmalgamationContext,
    constraint_a: Condition,
    host_a: TypedGraph,
) -> InitialAmalgamationReport:
    """Run both directions for a positive constraint over the empty graph.

    The constraint and host are decomposed along the context, so the
    premises (amalgamated constraint and amalgamated host) hold by
    construction.
    """
    require_positive(constraint_a)
    _check_initial(host_a, constraint_a)
    from .conditions import decompose_condition

    constraints = decompose_condition(ctx, constraint_a)
    hosts = decompose_typed_graph(ctx, host_a)
    report = InitialAmalgamationReport(verdicts={})

    sol = initially_satisfies(host_a, constraint_a)
    if sol is not None:
        cert = Certificate.initial(constraint_a, host_a, sol)
        report.global_solution = cert
        report.decomposed = decompose_solution(ctx, cert)
        for name, part in zip("BCD", report.decomposed):
            report.verdicts[f"decomposed_{name}"] = part.verify()
        report.verdicts["decomposed_agree"] = solutions_agree(ctx, *report.decomposed)

    local = find_agreeing_local_solutions(ctx, constraints, hosts)
    if local is not None:
        report.local = local
        composed = amalgamate_solutions(ctx, *local)
        report.composed = composed
        report.verdicts["composed"] = composed.verify()
        report.verdicts["composed_host"] = composed.host == amalgamate_typed_graphs(ctx, *hosts).typed
        # B-side ids survive the pushout verbatim; C-only ids may be renamed
        back_b = restrict_certificate(composed, ctx.tg_ba)
        back_c = restrict_certificate(composed, ctx.tg_ca)
        report.verdicts["composed_restricts"] = (
            back_b == local[0] and restrict_certificate(back_c, ctx.tg_dc) == local[2]
        )
    return report
