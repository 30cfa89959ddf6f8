"""Small simple graphs on vertices 0..n-1.

Everything here is an immutable value: structural operations return new
graphs and, where vertices get renumbered, an explicit old -> new map so
that per-vertex data (restraints) can follow along.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------

def _upper_triangle(n: int) -> Iterator[Edge]:
    # graph6 bit order: column by column, (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield (i, j)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (n <= 62, optional ``>>graph6<<`` header)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6 character {ch!r} out of range 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise GraphError("graph6 records with n > 62 are not supported")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = s[1:]
    if len(body) != nchars:
        raise GraphError(
            f"graph6 record for n={n} needs {nchars} data characters, got {len(body)}"
        )
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * nchars - nbits
    if bits & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    bits >>= pad
    edges = []
    for k, e in enumerate(_upper_triangle(n)):
        if bits >> (nbits - 1 - k) & 1:
            edges.append(e)
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError("graph6 encoding only supports n <= 62")
    out = [chr(63 + g.n)]
    bits = [1 if e in g.edges else 0 for e in _upper_triangle(g.n)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    """Parse a graph6 file body: one record per line, ``#`` comments and blanks skipped."""
    graphs = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        graphs.append(parse_graph6(line))
    return graphs


def parse_edge_list(text: str) -> Graph:
    """Plain edge-list format: first line ``n``, then one ``u v`` pair per line."""
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n = int(rows[0])
        edges = []
        for r in rows[1:]:
            u, v = r.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# generators
# --------------------------------------------------------------------------

def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def edgeless(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def tree_from_pruefer(seq: Sequence[int], n: int | None = None) -> Graph:
    """Standard Prüfer decoding; ``n`` defaults to ``len(seq) + 2``."""
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise GraphError(f"Prüfer sequence of length {len(seq)} does not fit n={n}")
    if any(not 0 <= a < n for a in seq):
        raise GraphError(f"Prüfer entries must lie in [0, {n})")
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def generate(kind: str, n: int | None = None, seq: Sequence[int] | None = None) -> Graph:
    if kind == "tree_from_pruefer":
        if seq is None:
            raise GraphError("tree_from_pruefer needs a sequence")
        return tree_from_pruefer(seq, n)
    builders = {"complete": complete, "path": path, "cycle": cycle, "edgeless": edgeless}
    if kind not in builders or n is None:
        raise GraphError(f"unknown graph kind {kind!r} or missing n")
    return builders[kind](n)


# --------------------------------------------------------------------------
# structure
# --------------------------------------------------------------------------

def connected_components(g: Graph) -> list[frozenset[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], {s}
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Proper 2-colouring, or None for non-bipartite graphs.

    Within each component the side holding the smallest vertex goes to A.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        for u in queue:
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    a = frozenset(v for v in range(g.n) if side[v] == 0)
    b = frozenset(v for v in range(g.n) if side[v] == 1)
    return a, b


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise GraphError(f"{(u, v)} is not an edge")
    return Graph(g.n, g.edges - {(u, v)})


def contract_edge(g: Graph, e: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Merge the larger endpoint into the smaller one and renumber 0..n-2.

    Returns the contracted graph and the old-vertex -> new-vertex map.
    """
    u, v = _norm_edge(*e)
    if (u, v) not in g.edges:
        raise GraphError(f"{(u, v)} is not an edge")
    merge_map = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
    merge_map[v] = merge_map[u]
    edges = set()
    for a, b in g.edges:
        a2, b2 = merge_map[a], merge_map[b]
        if a2 != b2:
            edges.add(_norm_edge(a2, b2))
    return Graph(g.n - 1, frozenset(edges)), merge_map


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    relabel = {v: i for i, v in enumerate(keep)}
    edges = frozenset(
        (relabel[a], relabel[b]) for a, b in g.edges if a in relabel and b in relabel
    )
    return Graph(len(keep), edges), relabel


def remove_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def leaves(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 1]
