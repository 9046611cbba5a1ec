"""
Graphs, pushouts and pullbacks
==============================

Build two small graphs, glue them along a shared node with a pushout, then
recover the shared part as a pullback.
"""
from __future__ import annotations

from nestcond.category import check_vk_cube, is_effective_pushout, pullback, pushout
from nestcond.generators import make_rng, random_vk_cube
from nestcond.graph import Graph, GraphMorphism

# a shared node, a b-edge that starts there and a c-edge that ends there
D = Graph.of(["x"])
B = Graph.of(["x", "y"], [("eb", "x", "y", "b")])
C = Graph.of(["x", "z"], [("ec", "z", "x", "c")])
f = GraphMorphism.inclusion(D, B)
g = GraphMorphism.inclusion(D, C)

# glue: the apex has one copy of x and both edges
po = pushout(f, g)
print("pushout apex:", po.apex)

# the pullback of the two injections into the apex is the shared node again
pb = pullback(po.left, po.right)
print("pullback apex:", pb.apex)

# effective pushout: the union of two subgraphs embeds into the big graph
print("effective:", is_effective_pushout(po.left, po.right))

# a random van Kampen cube in each mode
rng = make_rng(7)
for mode in ("vertical", "horizontal"):
    rep = check_vk_cube(random_vk_cube(rng, mode))
    print(mode, "premises:", rep.premises_ok, "VK holds:", rep.vk_holds)
