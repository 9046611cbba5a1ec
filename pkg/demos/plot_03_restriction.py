"""
Restriction along a type morphism
=================================

Forget the ``c`` edges of a graph, a condition and a solution, then see
why general satisfaction does not survive the same step.
"""
from __future__ import annotations

from nestcond.category import restrict_typed_graph
from nestcond.conditions import restrict_condition
from nestcond.fixtures import bc_context, fixture
from nestcond.satisfaction import generally_satisfies, restrict_certificate, satisfies

ctx = bc_context()
t = ctx.tg_ba  # TG_B (b loop only) into TG_A

# a graph keeps its nodes and loses its c edges
g_a = fixture("fig2").typed_graphs["G_A"]
print("b view:", restrict_typed_graph(g_a, t).typed.graph)

# a solution restricts level by level and still verifies
cert = fixture("fig4").solutions["Q_A"]
r = restrict_certificate(cert, t)
print("restricted solution verifies:", r.verify())

# general satisfaction is not preserved: the b view has a match that
# sends node 3 to an isolated node, and nothing extends it
ws = fixture("fig5")
ac_a, g_a = ws.conditions["ac_PA"], ws.typed_graphs["G_A"]
ac_b, g_b = restrict_condition(ac_a, t), ws.typed_graphs["G_B"]
print("G_A generally satisfies:", generally_satisfies(g_a, ac_a))
print("G_B generally satisfies:", generally_satisfies(g_b, ac_b))
print("bad match satisfies:", satisfies(ws.morphisms["p_B_bad"], ac_b, g_b))
