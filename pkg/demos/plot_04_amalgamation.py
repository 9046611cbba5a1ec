"""
Amalgamation of views
=====================

Compose a graph, a condition and a solution from their ``b`` and ``c``
views over a common interface, and take them apart again.
"""
from __future__ import annotations

from nestcond.category import amalgamate_typed_graphs, decompose_typed_graph
from nestcond.conditions import amalgamate_conditions, conditions_agree
from nestcond.fixtures import bc_context, fixture
from nestcond.satisfaction import amalgamate_solutions, decompose_solution, initial_amalgamation_check

ctx = bc_context()

# graphs: the interface has the nodes and no edges
g = fixture("fig2").typed_graphs
am = amalgamate_typed_graphs(ctx, g["G_B"], g["G_C"], g["G_D"])
print("composed graph equals G_A:", am.typed == g["G_A"])
print("decomposes back:", decompose_typed_graph(ctx, am.typed) == (g["G_B"], g["G_C"], g["G_D"]))

# conditions: the three restrictions agree and glue back together
c = fixture("fig3").conditions
parts = c["ac_PB"], c["ac_PC"], c["ac_PD"]
print("conditions agree:", conditions_agree(*parts, ctx))
print("composed condition equals ac_PA:", amalgamate_conditions(ctx, *parts) == c["ac_PA"])

# solutions: restrict a global solution and glue the pieces back
ws = fixture("fig4")
b, c_, d = decompose_solution(ctx, ws.solutions["Q_A"])
print("local solutions verify:", b.verify(), c_.verify(), d.verify())
print("glued back:", amalgamate_solutions(ctx, b, c_, d) == ws.solutions["Q_A"])

# both directions at once for the initial constraint of the example
rep = initial_amalgamation_check(ctx, ws.conditions["ac_A"], g["G_A"])
print("global and local agree:", rep.equivalent, rep.verdicts)
