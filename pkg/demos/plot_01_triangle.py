"""
Restrained colourings of a triangle
===================================

Forbid one colour at each vertex of K3 and count the proper colourings that
remain.  Up to renaming colours there are five such restraints, and three
once the triangle's own symmetry is taken into account.
"""

# %%
from rcpoly import IntPoly, brute_count, rcp_delcon, rcp_interpolate
from rcpoly.graph import complete
from rcpoly.restraints import enumerate_canonical_simple, format_restraint, rgs_to_restraint

c3 = complete(3)

# %%
# Each restricted growth string is one class of restraints.
for a in enumerate_canonical_simple(3):
    r = rgs_to_restraint(a)
    print(a, format_restraint(r), rcp_delcon(c3, r).poly)

# %%
# The same polynomial, recovered only from colouring counts.
r = rgs_to_restraint((0, 1, 2))
print(rcp_interpolate(c3, r).poly)
print([brute_count(c3, r, x) for x in range(3, 9)])

# %%
# Expanding the factored forms gives the same three polynomials.
x = IntPoly.x()
for p in [(x - 1) * (x - 2) * (x - 3),
          (x - 2) * (x * x - 4 * x + 5),
          2 * (x - 2) ** 2 + (x - 2) * (x - 3) + (x - 3) ** 3]:
    print(p)
