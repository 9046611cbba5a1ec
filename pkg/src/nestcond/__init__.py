"""Nested graph conditions over finite typed graphs.

Restriction and amalgamation of typed graphs, conditions and solutions,
general and initial satisfaction, and instance checkers for the pushout
properties they rely on.
"""
from __future__ import annotations

from .graph import (
    Edge,
    Graph,
    GraphError,
    GraphMorphism,
    Morphism,
    ValidationReport,
    are_isomorphic,
    compose,
    empty_graph,
    find_isomorphism,
    identity,
    inverse,
    is_bijective,
    is_injective,
    is_jointly_epic,
    is_surjective,
    validate_graph,
    validate_morphism,
)
from .category import (
    AgreementError,
    AmalgamationContext,
    CommutativeSquare,
    CospanResult,
    NotInMError,
    SpanResult,
    TypedAmalgamation,
    TypedGraph,
    VKCube,
    VKReport,
    amalgamate_typed_graphs,
    check_vk_cube,
    decompose_typed_graph,
    find_typed_isomorphism,
    induced_pushout_morphism,
    initial_graph,
    initial_morphism,
    is_effective_pushout,
    is_square,
    is_typed_morphism,
    pullback,
    pushout,
    restrict_morphism,
    restrict_typed_graph,
    restrict_typed_morphism,
    typed_graphs_agree,
)
from .conditions import (
    And,
    Condition,
    Exists,
    Not,
    NotPositiveError,
    Or,
    TrueCondition,
    amalgamate_conditions,
    conditions_agree,
    conditions_isomorphic,
    conj,
    decompose_condition,
    disj,
    exists,
    is_positive,
    negate,
    restrict_condition,
    true,
    validate_condition,
)
from .satisfaction import (
    EMPTY,
    Certificate,
    Empty,
    Indexed,
    Solution,
    Witness,
    amalgamate_solutions,
    decompose_solution,
    enumerate_extensions,
    enumerate_injective_morphisms,
    find_solution,
    generally_satisfies,
    initial_amalgamation_check,
    initially_satisfies,
    is_initially_satisfied,
    iter_solutions,
    restrict_certificate,
    restrict_solution,
    satisfies,
    solutions_agree,
    verify_solution,
)
from .io import Workspace, WorkspaceError, dumps, load, loads, save

__version__ = "0.1.0"
