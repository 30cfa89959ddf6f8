"""
Which restraints allow the most colourings?
===========================================

On complete graphs the best restraint forbids a different colour at every
vertex; on trees it alternates between the two sides.  The constant
restraint is always among the worst.
"""

# %%
from rcpoly.extremal import extremal_restraints, verify_theorem1, verify_theorem2
from rcpoly.graph import complete, cycle, path, tree_from_pruefer

for g in [complete(4), path(5), tree_from_pruefer([0, 0, 0]), cycle(5)]:
    best = extremal_restraints(g, "max")
    worst = extremal_restraints(g, "min")
    print(best.graph6, "max:", best.winner_rgs, "min:", worst.winner_rgs)

# %%
# Exhaustive checks over K_n and over every labelled tree.
for n in range(2, 6):
    print(n, verify_theorem1(n).holds, verify_theorem2(n).holds)

# %%
# A full report, as the CLI emits it.
import json

print(json.dumps(extremal_restraints(cycle(5)).to_json()["winners"][0], indent=2))
