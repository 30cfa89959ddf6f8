"""Restraints: per-vertex sets of forbidden colours.

A restraint on an n-vertex graph is stored as a tuple of n frozensets of
positive ints.  Standard simple restraints (one forbidden colour per vertex)
are enumerated up to colour permutation as restricted growth strings (RGS):
``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``, vertex ``v`` forbidding colour
``a[v] + 1``.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .graph import Graph, bipartition

Restraint = tuple[frozenset[int], ...]
RGS = tuple[int, ...]


class RestraintError(ValueError):
    pass


def make_restraint(sets: Iterable[Iterable[int] | int]) -> Restraint:
    """Build a restraint from per-vertex iterables (a bare int means a singleton)."""
    out = []
    for s in sets:
        fs = frozenset((s,)) if isinstance(s, int) else frozenset(s)
        for c in fs:
            if not isinstance(c, int) or c < 1:
                raise RestraintError(f"colours must be positive integers, got {c!r}")
        out.append(fs)
    return tuple(out)


def empty_restraint(n: int) -> Restraint:
    return (frozenset(),) * n


def constant_restraint(n: int, m: int = 1) -> Restraint:
    """Forbid colours 1..m at every vertex."""
    return (frozenset(range(1, m + 1)),) * n


def max_colour(r: Restraint) -> int:
    return max((max(s) for s in r if s), default=0)


def is_m_restraint(r: Restraint, m: int) -> bool:
    return all(len(s) <= m for s in r)


def is_standard(r: Restraint, m: int = 1) -> bool:
    return all(len(s) == m for s in r)


# --------------------------------------------------------------------------
# text syntax: "1,2;3;" == [{1,2},{3},{}]
# --------------------------------------------------------------------------

def parse_restraint(text: str) -> Restraint:
    sets = []
    for seg in text.split(";"):
        seg = seg.strip()
        if not seg:
            sets.append(())
            continue
        try:
            sets.append(tuple(int(tok) for tok in seg.split(",")))
        except ValueError:
            raise RestraintError(f"bad restraint segment {seg!r}") from None
    return make_restraint(sets)


def format_restraint(r: Restraint) -> str:
    return ";".join(",".join(str(c) for c in sorted(s)) for s in r)


# --------------------------------------------------------------------------
# canonical simple restraints
# --------------------------------------------------------------------------

def enumerate_canonical_simple(n: int, prefix: Sequence[int] = ()) -> Iterator[RGS]:
    """All restricted growth strings of length ``n`` in lexicographic order.

    ``prefix`` (itself a valid RGS) restricts the stream to one shard.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    prefix = tuple(prefix)
    if prefix and not is_rgs(prefix):
        raise ValueError(f"{prefix} is not a restricted growth string")
    if len(prefix) > n:
        return
    a = list(prefix) or [0]
    top = max(a)

    def rec(a: list[int], top: int) -> Iterator[RGS]:
        if len(a) == n:
            yield tuple(a)
            return
        for c in range(top + 2):
            a.append(c)
            yield from rec(a, max(top, c))
            a.pop()

    yield from rec(a, top)


def is_rgs(a: Sequence[int]) -> bool:
    top = -1
    for c in a:
        if c < 0 or c > top + 1:
            return False
        top = max(top, c)
    return len(a) > 0


def bell(n: int) -> int:
    """Bell numbers via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def rgs_to_restraint(a: Sequence[int]) -> Restraint:
    return tuple(frozenset((c + 1,)) for c in a)


def restraint_to_rgs(r: Restraint) -> RGS:
    """Colour-permutation canonical form of a standard simple restraint."""
    if not is_standard(r, 1):
        raise RestraintError("only standard simple restraints have an RGS form")
    seen: dict[int, int] = {}
    out = []
    for s in r:
        (c,) = s
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


def canonical_form(r: Restraint) -> Restraint:
    """Relabel colours in order of first appearance (sets read in sorted order).

    Two restraints with the same canonical form differ by a colour permutation.
    The converse holds for simple restraints; for larger sets it is a
    deterministic but not always minimal choice.
    """
    seen: dict[int, int] = {}
    out = []
    for s in r:
        for c in sorted(s):
            if c not in seen:
                seen[c] = len(seen) + 1
        out.append(frozenset(seen[c] for c in s))
    return tuple(out)


def permute_colours(r: Restraint, sigma: Mapping[int, int]) -> Restraint:
    """Apply a colour map; colours missing from ``sigma`` are left alone."""
    return tuple(frozenset(sigma.get(c, c) for c in s) for s in r)


# --------------------------------------------------------------------------
# operations used by the recursion and the proofs' decompositions
# --------------------------------------------------------------------------

def alternating_restraint(g: Graph) -> Restraint:
    """{1} on side A, {2} on side B of the deterministic bipartition."""
    parts = bipartition(g)
    if parts is None:
        raise RestraintError("alternating restraint needs a bipartite graph")
    a, _ = parts
    return tuple(frozenset((1,)) if v in a else frozenset((2,)) for v in range(g.n))


def restrict(r: Restraint, vertices: Iterable[int], relabel_map: Mapping[int, int] | None = None) -> Restraint:
    """Restriction of ``r`` to a vertex subset, renumbered like ``induced_subgraph``."""
    keep = sorted(set(vertices))
    if relabel_map is None:
        relabel_map = {v: i for i, v in enumerate(keep)}
    out: list[frozenset[int]] = [frozenset()] * len(keep)
    for v in keep:
        out[relabel_map[v]] = r[v]
    return tuple(out)


def merge_for_contraction(r: Restraint, u: int, v: int, merge_map: Mapping[int, int]) -> Restraint:
    """Restraint on G/uv: the merged vertex forbids r(u) | r(v)."""
    size = len(set(merge_map.values()))
    out: list[frozenset[int]] = [frozenset()] * size
    for w, s in enumerate(r):
        out[merge_map[w]] = out[merge_map[w]] | s
    return tuple(out)


def with_vertex(r: Restraint, v: int, s: Iterable[int]) -> Restraint:
    out = list(r)
    out[v] = frozenset(s)
    return tuple(out)


def lists_to_restraint(lists: Sequence[Iterable[int]], k: int) -> Restraint:
    """Complementary restraint r(v) = [k] - L(v) of a list assignment."""
    full = frozenset(range(1, k + 1))
    out = []
    for lst in lists:
        s = frozenset(lst)
        bad = s - full
        if bad:
            raise RestraintError(f"list colours {sorted(bad)} exceed k={k}")
        out.append(full - s)
    return tuple(out)


def as_colouring(r: Restraint) -> list[int]:
    """The map v -> the single colour of a standard simple restraint."""
    if not is_standard(r, 1):
        raise RestraintError("not a standard simple restraint")
    return [next(iter(s)) for s in r]
