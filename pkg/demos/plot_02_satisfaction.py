"""
Nested conditions and their solutions
=====================================

Check the nested condition of the ``fig1`` fixture against its host graph in
the three satisfaction modes, and print the solution trees.
"""
from __future__ import annotations

from nestcond.fixtures import fixture
from nestcond.satisfaction import (
    enumerate_injective_morphisms,
    find_solution,
    generally_satisfies,
    initially_satisfies,
    solution_shape,
    verify_solution,
)

ws = fixture("fig1")
P, G = ws.typed_graphs["P"], ws.typed_graphs["G_A"]
ac_P, ac_I = ws.conditions["ac_P"], ws.conditions["ac_I"]

# every b-edge of G is a match of P
matches = enumerate_injective_morphisms(P, G)
print(len(matches), "matches of P in G")

# match mode: one solution per match, each checked independently
for p in matches:
    q = find_solution(p, ac_P, G)
    print(" ", p.node_map, "->", solution_shape(q), "verified:", verify_solution(p, ac_P, G, q))

# general mode asks every match, initial mode asks for one match of P
print("general:", generally_satisfies(G, ac_P))
q_init = initially_satisfies(G, ac_I)
print("initial:", solution_shape(q_init))
