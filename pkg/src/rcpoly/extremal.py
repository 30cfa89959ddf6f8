"""Exhaustive extremal searches over standard simple restraints.

A standard simple restraint is handled through its RGS (see
``restraints``), so every search over an n-vertex graph visits Bell(n)
classes.  "Largest" and "smallest" refer to the eventual order of
polynomials; the claim-specific verifiers additionally check the integer
windows their statements give.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cmp_to_key
from itertools import permutations, product
from typing import Callable, Iterable, Sequence, TypeVar

from .engine import RestrainedPoly, brute_count, is_colourable, rcp_delcon
from .graph import (
    Graph,
    bipartition,
    complete,
    connected_components,
    encode_graph6,
    is_connected,
    tree_from_pruefer,
)
from .poly import IntPoly, Order, eventually_compare, witness_bound
from .restraints import (
    RGS,
    Restraint,
    alternating_restraint,
    canonical_form,
    empty_restraint,
    enumerate_canonical_simple,
    format_restraint,
    restraint_to_rgs,
    rgs_to_restraint,
)

DEFAULT_MAX_N = 8
WINDOW = 10

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """``map`` in input order, optionally across worker processes."""
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if jobs == 1 or len(items) < 2:
        return [fn(it) for it in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# --------------------------------------------------------------------------
# colourings
# --------------------------------------------------------------------------

def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    empty = empty_restraint(g.n)
    k = 1
    while brute_count(g, empty, k) == 0:
        k += 1
    return k


def is_proper(g: Graph, colours: Sequence[int]) -> bool:
    return all(colours[u] != colours[v] for u, v in g.edges)


def is_minimal_colouring(g: Graph, r: Restraint | RGS, chi: int | None = None) -> bool:
    """Whether a standard simple restraint is itself a proper chi(G)-colouring."""
    colours = list(r) if r and isinstance(r[0], int) else [next(iter(s)) for s in r]
    if len(colours) != g.n:
        raise ValueError("restraint does not match graph")
    if chi is None:
        chi = chromatic_number(g)
    return is_proper(g, colours) and len(set(colours)) == chi


def alternating_variants(g: Graph) -> list[RGS]:
    """RGS forms of the alternating restraints, one per choice of colour swap per component.

    A connected bipartite graph has exactly one.  Returns [] if g is not bipartite.
    """
    if bipartition(g) is None:
        return []
    base = alternating_restraint(g)
    comps = connected_components(g)
    out = set()
    for flips in product((False, True), repeat=max(len(comps) - 1, 0)):
        r = list(base)
        for comp, flip in zip(comps[1:], flips):
            if flip:
                for v in comp:
                    (c,) = r[v]
                    r[v] = frozenset((3 - c,))
        out.add(restraint_to_rgs(tuple(r)))
    return sorted(out)


# --------------------------------------------------------------------------
# extremal search
# --------------------------------------------------------------------------

@dataclass
class Winner:
    rgs: RGS
    restraint: str
    poly: RestrainedPoly
    is_alternating: bool
    is_proper_colouring: bool
    colours_used: int
    is_minimal_colouring: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["rgs"] = list(self.rgs)
        d["poly"] = self.poly.to_json()
        return d


@dataclass
class ExtremalReport:
    graph6: str
    n: int
    direction: str
    winners: list[Winner]
    chromatic_number: int
    search_space: int
    witness_bound: int
    polys: dict[RGS, IntPoly] = field(default_factory=dict, repr=False)

    @property
    def winner_rgs(self) -> list[RGS]:
        return [w.rgs for w in self.winners]

    def has_minimal_winner(self) -> bool:
        return any(w.is_minimal_colouring for w in self.winners)

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "direction": self.direction,
            "chromatic_number": self.chromatic_number,
            "search_space": self.search_space,
            "witness_bound": self.witness_bound,
            "winners": [w.to_json() for w in self.winners],
        }


def all_simple_polys(g: Graph) -> dict[RGS, IntPoly]:
    return {a: rcp_delcon(g, rgs_to_restraint(a)).poly for a in enumerate_canonical_simple(g.n)}


def extremal_restraints(g: Graph, direction: str = "max", max_n: int = DEFAULT_MAX_N) -> ExtremalReport:
    """Every canonical simple restraint that is eventually largest (or smallest)."""
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', not {direction!r}")
    if not 1 <= g.n <= max_n:
        raise ValueError(f"graph order {g.n} outside 1..{max_n}")
    polys = all_simple_polys(g)
    sign = 1 if direction == "max" else -1
    best = next(iter(polys.values()))
    for p in polys.values():
        if sign * eventually_compare(p, best) > 0:
            best = p
    chi = chromatic_number(g)
    alts = set(alternating_variants(g))
    winners = []
    for a, p in polys.items():
        if p != best:
            continue
        colours = [c + 1 for c in a]
        proper = is_proper(g, colours)
        used = len(set(a))
        winners.append(Winner(
            rgs=a,
            restraint=format_restraint(rgs_to_restraint(a)),
            poly=RestrainedPoly(p, max(colours)),
            is_alternating=a in alts,
            is_proper_colouring=proper,
            colours_used=used,
            is_minimal_colouring=proper and used == chi,
        ))
    bound = max((witness_bound(best, p) for p in set(polys.values()) if p != best), default=0)
    return ExtremalReport(
        graph6=encode_graph6(g), n=g.n, direction=direction, winners=winners,
        chromatic_number=chi, search_space=len(polys), witness_bound=bound, polys=polys,
    )


def eventual_ranking(polys: dict[RGS, IntPoly]) -> list[RGS]:
    """RGS keys sorted by eventual order of their polynomials (ties by RGS)."""
    def cmp(a: RGS, b: RGS) -> int:
        return int(eventually_compare(polys[a], polys[b])) or (a > b) - (a < b)
    return sorted(polys, key=cmp_to_key(cmp))


# --------------------------------------------------------------------------
# verdicts
# --------------------------------------------------------------------------

@dataclass
class Verdict:
    claim: str
    holds: bool
    checked: int
    counterexamples: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "verdict": "holds" if self.holds else "fails",
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }


def _window(lo: int) -> range:
    return range(lo, lo + WINDOW + 1)


def verify_theorem1(n: int, fail_fast: bool = False) -> Verdict:
    """Rainbow restraint vs every simple restraint on K_n: eventually and on x in [n, n+10]."""
    if not 1 <= n <= 7:
        raise ValueError("verify_theorem1 supports 1 <= n <= 7")
    g = complete(n)
    rainbow = tuple(range(n))
    best = rcp_delcon(g, rgs_to_restraint(rainbow)).poly
    bad, ties, checked = [], [], 0
    for a in enumerate_canonical_simple(n):
        p = rcp_delcon(g, rgs_to_restraint(a)).poly
        checked += 1
        order = eventually_compare(best, p)
        if order == Order.EQUAL and a != rainbow:
            ties.append(list(a))
        low = [x for x in _window(n) if p(x) > best(x)]
        if order == Order.LESS or low:
            bad.append({"rgs": list(a), "eventual": order.name, "x_violations": low})
            if fail_fast:
                break
    return Verdict("theorem1", not bad, checked, bad, {
        "n": n, "rainbow_poly": list(best.coeffs), "ties_with_rainbow": ties,
    })


def labelled_trees(n: int) -> Iterable[Graph]:
    """Every labelled tree on n vertices (n**(n-2) of them, via Prüfer codes)."""
    if n == 1:
        yield Graph(1)
        return
    for seq in product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq, n)


def _theorem2_tree(t: Graph) -> tuple[int, list[dict]]:
    n = t.n
    alt = restraint_to_rgs(alternating_restraint(t))
    best = rcp_delcon(t, rgs_to_restraint(alt)).poly
    bad = []
    count = 0
    for a in enumerate_canonical_simple(n):
        count += 1
        if a == alt:
            continue
        p = rcp_delcon(t, rgs_to_restraint(a)).poly
        order = eventually_compare(best, p)
        low = [x for x in _window(n) if not p(x) < best(x)]
        if order != Order.GREATER or low:
            bad.append({"tree": encode_graph6(t), "rgs": list(a), "eventual": order.name,
                        "x_violations": low})
    return count, bad


def verify_theorem2(n: int, jobs: int = 1, fail_fast: bool = False) -> Verdict:
    """Alternating restraint strictly beats every other simple restraint on every labelled tree."""
    if not 2 <= n <= 7:
        raise ValueError("verify_theorem2 supports 2 <= n <= 7")
    trees = list(labelled_trees(n))
    bad: list[dict] = []
    checked = 0
    if fail_fast:
        for t in trees:
            c, b = _theorem2_tree(t)
            checked += c
            if b:
                bad.extend(b)
                break
    else:
        for c, b in parallel_map(_theorem2_tree, trees, jobs):
            checked += c
            bad.extend(b)
    return Verdict("theorem2", not bad, checked, bad, {"n": n, "trees": len(trees)})


def lemma_restraints(n: int) -> list[Restraint]:
    """2-restraints on n vertices with colours in [n] and at most one doubleton, up to colour permutation."""
    singles = [frozenset()] + [frozenset((c,)) for c in range(1, n + 1)]
    doubles = [frozenset((a, b)) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    out = set()
    for r in product(singles, repeat=n):
        out.add(canonical_form(r))
    for w in range(n):
        for d in doubles:
            for rest in product(singles, repeat=n - 1):
                out.add(canonical_form(rest[:w] + (d,) + rest[w:]))
    return sorted(out, key=lambda r: [sorted(s) for s in r])


def verify_lemma_trees(n: int, fail_fast: bool = False) -> Verdict:
    """pi_r(T, max(3, n)) > 0 for every tree and every qualifying 2-restraint.

    Positivity is decided by an early-exit search; ``brute_count`` would give
    the same verdict, only slower.
    """
    if not 1 <= n <= 6:
        raise ValueError("verify_lemma_trees supports 1 <= n <= 6")
    k = max(3, n)
    restraints = lemma_restraints(n)
    bad, checked, trees = [], 0, 0
    for t in labelled_trees(n):
        trees += 1
        for r in restraints:
            checked += 1
            if not is_colourable(t, r, k):
                bad.append({"tree": encode_graph6(t), "restraint": format_restraint(r), "k": k})
                if fail_fast:
                    return Verdict("lemma", False, checked, bad, {"n": n, "k": k})
    return Verdict("lemma", not bad, checked, bad,
                   {"n": n, "k": k, "trees": trees, "restraint_classes": len(restraints)})


def _min_report(g: Graph) -> dict:
    rep = extremal_restraints(g, "min")
    return {"graph6": rep.graph6, "ok": (0,) * g.n in rep.winner_rgs,
            "winners": [list(a) for a in rep.winner_rgs]}


def verify_min_is_constant(catalog: Sequence[Graph], jobs: int = 1) -> Verdict:
    """The constant restraint is among the eventual minimisers on every graph."""
    rows = parallel_map(_min_report, list(catalog), jobs)
    bad = [row for row in rows if not row["ok"]]
    return Verdict("min-constant", not bad, len(rows), bad)


def _conjecture_report(g: Graph) -> dict:
    rep = extremal_restraints(g, "max")
    alts = alternating_variants(g)
    best_alt = max(alts, key=cmp_to_key(lambda a, b: int(eventually_compare(rep.polys[a], rep.polys[b]))))
    return {"graph6": rep.graph6, "ok": best_alt in rep.winner_rgs,
            "alternating": list(best_alt), "winners": [list(a) for a in rep.winner_rgs]}


def check_conjecture_bipartite(catalog: Sequence[Graph], jobs: int = 1) -> Verdict:
    """Alternating restraint is in the max winner class of every bipartite graph given.

    Disconnected graphs try every per-component colour swap and keep the best.
    """
    graphs = list(catalog)
    for g in graphs:
        if bipartition(g) is None:
            raise ValueError(f"graph {encode_graph6(g)} is not bipartite")
    rows = parallel_map(_conjecture_report, graphs, jobs)
    bad = [row for row in rows if not row["ok"]]
    return Verdict("conjecture", not bad, len(rows), bad)


def survey_non_minimal_maximizers(catalog: Sequence[Graph], jobs: int = 1) -> list[tuple[str, ExtremalReport]]:
    """Graphs none of whose eventual maximisers is a minimal colouring."""
    reports = parallel_map(_max_report, list(catalog), jobs)
    return [(rep.graph6, rep) for rep in reports if not rep.has_minimal_winner()]


def _max_report(g: Graph) -> ExtremalReport:
    rep = extremal_restraints(g, "max")
    rep.polys = {}
    return rep


# --------------------------------------------------------------------------
# the six-vertex example with difference (x - 3)^2
# --------------------------------------------------------------------------

FIGURE_R1 = rgs_to_restraint((0, 1, 2, 0, 1, 3))  # [1,2,3,1,2,4]
FIGURE_R2 = rgs_to_restraint((0, 1, 2, 0, 1, 2))  # [1,2,3,1,2,3]
FIGURE_DIFF = IntPoly.linear(3) ** 2


@dataclass(frozen=True)
class FigureMatch:
    graph6: str             # catalog graph
    labelling: tuple[int, ...]  # catalog vertex v becomes vertex labelling[v]
    labelled_graph6: str    # the relabelled graph the two restraints apply to


def _figure_candidates(g: Graph) -> list[FigureMatch]:
    out = []
    seen = set()
    for perm in permutations(range(6)):
        h = g.relabel(perm)
        if h.edges in seen:
            continue
        seen.add(h.edges)
        diff = rcp_delcon(h, FIGURE_R1).poly - rcp_delcon(h, FIGURE_R2).poly
        if diff == FIGURE_DIFF:
            out.append(FigureMatch(encode_graph6(g), perm, encode_graph6(h)))
    return out


def figure_matches(catalog: Sequence[Graph], jobs: int = 1) -> list[FigureMatch]:
    """Labelled 6-vertex graphs with chi = 3 where pi_{r1} - pi_{r2} = (x - 3)^2."""
    cands = [g for g in catalog if g.n == 6 and is_connected(g) and chromatic_number(g) == 3]
    return [m for ms in parallel_map(_figure_candidates, cands, jobs) for m in ms]


def reconstruct_figure_graph(catalog: Sequence[Graph], jobs: int = 1) -> list[str]:
    """graph6 strings of catalog graphs admitting at least one matching labelling."""
    return sorted({m.graph6 for m in figure_matches(catalog, jobs)})
