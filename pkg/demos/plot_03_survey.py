"""
Graphs whose best restraint is not a colouring
==============================================

Search every connected graph on at most six vertices for graphs whose
maximising restraints all fail to be proper colourings with the fewest
colours.  Then look for six-vertex graphs where moving one restraint to a
fourth colour adds exactly (x - 3)^2 colourings.
"""

# %%
from rcpoly.catalog import load_connected_catalog
from rcpoly.extremal import figure_matches, survey_non_minimal_maximizers

catalog = load_connected_catalog(6)
print(len(catalog), "graphs")

# %%
for g6, rep in survey_non_minimal_maximizers(catalog):
    print(g6, "chi =", rep.chromatic_number, [w.restraint for w in rep.winners])

# %%
matches = figure_matches(catalog)
print(len(matches), "labellings of", sorted({m.graph6 for m in matches}))
