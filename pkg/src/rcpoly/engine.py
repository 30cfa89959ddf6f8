"""Restrained chromatic polynomials.

Two independent routes to pi_r(G, x):

* ``rcp_delcon``: deletion/contraction down to edgeless graphs, where
  pi_r = prod_v (x - |r(v)|);
* ``rcp_interpolate``: Lagrange interpolation of exact colouring counts from
  ``brute_count``.

Both results are valid for every integer x >= threshold, the largest colour
named by r (0 when r names none).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .graph import Graph, connected_components, induced_subgraph, remove_vertices
from .poly import IntPoly, lagrange_interpolate
from .restraints import Restraint, canonical_form, empty_restraint, max_colour, restrict, with_vertex


@dataclass(frozen=True)
class RestrainedPoly:
    poly: IntPoly
    threshold: int

    def __call__(self, x: int) -> int:
        return self.poly(x)

    def to_json(self) -> dict:
        return {"coeffs": list(self.poly.coeffs), "threshold": self.threshold, "text": str(self.poly)}


def _check(g: Graph, r: Restraint) -> None:
    if len(r) != g.n:
        raise ValueError(f"restraint has {len(r)} entries for a graph on {g.n} vertices")


# --------------------------------------------------------------------------
# counting
# --------------------------------------------------------------------------

def search_order(g: Graph) -> list[int]:
    """Max-adjacency vertex order: each next vertex has the most placed neighbours."""
    if g.n == 0:
        return []
    placed: list[int] = []
    inside = [0] * g.n
    todo = set(range(g.n))
    while todo:
        v = max(todo, key=lambda w: (inside[w], g.degree(w), -w))
        todo.remove(v)
        placed.append(v)
        for w in g.adj[v]:
            inside[w] += 1
    return placed


def brute_count(g: Graph, r: Restraint, x: int) -> int:
    """Number of proper colourings V -> [x] with c(v) not in r(v).

    Vertices are coloured one at a time.  How a partial colouring can be
    completed depends only on which colours each uncoloured vertex already
    sees on its coloured neighbours, so partial colourings are grouped by
    that profile.  Colours that no restraint mentions are interchangeable and
    enter the profile as anonymous "fresh" colours; one that no uncoloured
    vertex can see any more is as good as unused and returns to the pool.
    """
    _check(g, r)
    if x < 0:
        raise ValueError("x must be nonnegative")
    n = g.n
    if n == 0:
        return 1
    named = sorted({c for s in r for c in s if c <= x})
    named_set = frozenset(named)
    pool = x - len(named)
    order = search_order(g)
    adj = g.adj
    # later_nbrs[i][j]: is order[i + 1 + j] adjacent to order[i]?
    later_nbrs = [tuple(order[j] in adj[order[i]] for j in range(i + 1, n)) for i in range(n)]
    allowed = [[c for c in named if c not in r[v]] for v in order]

    @lru_cache(maxsize=None)
    def rec(i: int, profile: tuple[frozenset[int], ...]) -> int:
        # profile[j] = colours seen by order[i + j]
        blocked = profile[0]
        fresh = set().union(*profile) - named_set
        choices = [(c, 1) for c in allowed[i] if c not in blocked]
        choices += [(c, 1) for c in fresh if c not in blocked]
        if pool > len(fresh):
            label = -1
            while label in fresh:
                label -= 1
            choices.append((label, pool - len(fresh)))
        if i == n - 1:
            return sum(weight for _, weight in choices)
        rest, hits = profile[1:], later_nbrs[i]
        total = 0
        for c, weight in choices:
            one = frozenset((c,))
            total += weight * rec(i + 1, tuple(seen | one if hit else seen for seen, hit in zip(rest, hits)))
        return total

    return rec(0, (frozenset(),) * n)


def is_colourable(g: Graph, r: Restraint, x: int) -> bool:
    """Whether at least one permitted x-colouring exists (stops at the first)."""
    _check(g, r)
    n = g.n
    order = search_order(g)
    colour = [0] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        blocked = {colour[w] for w in g.adj[v]}
        for c in range(1, x + 1):
            if c not in r[v] and c not in blocked:
                colour[v] = c
                if rec(i + 1):
                    return True
        colour[v] = 0
        return False

    return rec(0)


def brute_count_naive(g: Graph, r: Restraint, x: int) -> int:
    """Enumerate all x**n assignments; only for tiny cases."""
    _check(g, r)
    total = 0
    for c in product(range(1, x + 1), repeat=g.n):
        if any(c[v] in r[v] for v in range(g.n)):
            continue
        if any(c[u] == c[v] for u, v in g.edges):
            continue
        total += 1
    return total


def count_with_fixed_colour(g: Graph, r: Restraint, v: int, c: int, x: int) -> int:
    """Permitted x-colourings with vertex ``v`` coloured ``c``."""
    if c in r[v] or not 1 <= c <= x:
        return 0
    return brute_count(g, with_vertex(r, v, (k for k in range(1, x + 1) if k != c)), x)


# --------------------------------------------------------------------------
# deletion / contraction
# --------------------------------------------------------------------------

def _pick_edge(n: int, edges: frozenset[tuple[int, int]]) -> tuple[int, int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    hub = max(range(n), key=lambda w: (deg[w], -w))
    other = min(v if u == hub else u for u, v in edges if hub in (u, v))
    return (hub, other) if hub < other else (other, hub)


def _contract(n: int, edges: frozenset[tuple[int, int]], r: Restraint, u: int, v: int):
    # u < v; v merges into u, later vertices shift down by one
    def m(w: int) -> int:
        if w == v:
            w = u
        return w if w < v else w - 1

    new_edges = set()
    for a, b in edges:
        a2, b2 = m(a), m(b)
        if a2 != b2:
            new_edges.add((a2, b2) if a2 < b2 else (b2, a2))
    new_r = list(r[:v] + r[v + 1:])
    new_r[u] = r[u] | r[v]
    return n - 1, frozenset(new_edges), tuple(new_r)


@lru_cache(maxsize=1 << 18)
def _delcon(n: int, edges: frozenset[tuple[int, int]], r: Restraint) -> IntPoly:
    if not edges:
        out = IntPoly.const(1)
        for s in r:
            out = out * IntPoly.linear(len(s))
        return out
    u, v = _pick_edge(n, edges)
    deleted = _delcon(n, edges - {(u, v)}, r)
    cn, ce, cr = _contract(n, edges, r, u, v)
    contracted = _delcon(cn, ce, canonical_form(cr))
    return deleted - contracted


def rcp_delcon(g: Graph, r: Restraint) -> RestrainedPoly:
    """pi_r(G, x) by deletion/contraction.

    Memoised on the exact (n, edge set, restraint) triple, with colours
    renamed in order of first appearance (the polynomial does not depend on
    the colour names).
    """
    _check(g, r)
    return RestrainedPoly(_delcon(g.n, g.edges, canonical_form(r)), max_colour(r))


def rcp_interpolate(g: Graph, r: Restraint) -> RestrainedPoly:
    """pi_r(G, x) by interpolating brute_count at x0, ..., x0 + n."""
    _check(g, r)
    x0 = max_colour(r)
    xs = list(range(x0, x0 + g.n + 1))
    ys = [brute_count(g, r, x) for x in xs]
    return RestrainedPoly(lagrange_interpolate(xs, ys), x0)


def chromatic_polynomial(g: Graph) -> IntPoly:
    return rcp_delcon(g, empty_restraint(g.n)).poly


def has_alternating_signs(p: IntPoly, n: int) -> bool:
    return all((-1) ** (n - i) * p.coeff(i) >= 0 for i in range(n + 1))


# --------------------------------------------------------------------------
# pieces of the leaf recursion on trees
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LeafSplit:
    """Counts around a leaf ``u`` with stem ``v`` of a tree T at k colours."""
    total: int              # pi_r(T, k)
    rest: int               # pi_{r|T'}(T', k), T' = T - u
    fixed: int              # colourings of T' with v coloured by r(u)'s colour
    component_product: int  # prod_i pi_{r_i}(T^i, k) over components of T - {u, v}


def leaf_split(t: Graph, r: Restraint, u: int, k: int) -> LeafSplit:
    """Evaluate each side of the leaf identities for a simple restraint ``r``.

    If r(u) == r(v):  total == (k - 2) * rest.
    Otherwise:        total == (k - 2) * rest + fixed, and fixed == component_product,
    where r_i adds r(u) to r(v_i) at the neighbour v_i of v inside T^i.
    """
    if t.degree(u) != 1:
        raise ValueError(f"vertex {u} is not a leaf")
    (v,) = t.adj[u]
    (cu,) = r[u]
    t1, relabel1 = remove_vertices(t, [u])
    r1 = restrict(r, relabel1, relabel1)
    total = brute_count(t, r, k)
    rest = brute_count(t1, r1, k)
    fixed = count_with_fixed_colour(t1, r1, relabel1[v], cu, k)

    t2, relabel2 = remove_vertices(t, [u, v])
    r2 = restrict(r, relabel2, relabel2)
    inverse = {new: old for old, new in relabel2.items()}
    prod_ = 1
    for comp in connected_components(t2):
        sub, rel = induced_subgraph(t2, comp)
        ri = list(restrict(r2, comp, rel))
        for w in comp:
            if inverse[w] in t.adj[v]:
                ri[rel[w]] = ri[rel[w]] | {cu}
        prod_ *= brute_count(sub, tuple(ri), k)
    return LeafSplit(total, rest, fixed, prod_)

