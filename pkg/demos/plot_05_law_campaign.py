"""
Seeded law campaigns
====================

Run every law on a small seeded campaign and show how a failing case is
saved as a workspace that can be loaded again.
"""
from __future__ import annotations

from nestcond.io import from_document
from nestcond.laws import LAWS, Bounds, run_law

for law_id in LAWS:
    rep = run_law(law_id, cases=20, seed=42, bounds=Bounds(max_nodes=4, depth=3))
    s = rep.summary()
    print(f"{law_id:20s} cases={s['cases']:3d} failures={s['failures']} {s['wall_time']:.2f}s")

# failures carry a full workspace document with the seed and case index;
# the same campaign can be rerun from the command line with
#   nestcond laws thm-4.8 --cases 20 --seed 42 --out failures/
rep = run_law("thm-4.8", cases=5, seed=42)
for f in rep.failures:
    ws = from_document(f["instance"])
    print("failure", f["case"], ws.meta)
print("thm-4.8 failures:", len(rep.failures))
