"""Loading and sanity-checking graph6 catalogs.

Bundled catalogs live in ``rcpoly/data``; set ``RCPOLY_CATALOG_DIR`` to read
them from somewhere else (e.g. the output of nauty's ``geng -c``).
"""
from __future__ import annotations

import os
from collections import Counter
from importlib import resources
from pathlib import Path

from .graph import Graph, encode_graph6, is_connected, read_graph6_lines

CATALOG_ENV = "RCPOLY_CATALOG_DIR"

CONNECTED = "connected_1_6.g6"
ALL = "all_1_6.g6"
CONNECTED_7 = "connected_7.g6"

# OEIS A001349: connected graphs on n unlabelled vertices
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
# OEIS A000088: all graphs on n unlabelled vertices
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


class CatalogError(ValueError):
    pass


def catalog_path(name: str) -> Path:
    """Resolve a catalog name or path.

    Existing paths win; otherwise ``name`` is looked up in the directory from
    ``RCPOLY_CATALOG_DIR`` and then among the bundled files.
    """
    p = Path(name)
    if p.exists():
        return p
    env = os.environ.get(CATALOG_ENV)
    if env and (Path(env) / name).exists():
        return Path(env) / name
    bundled = resources.files("rcpoly") / "data" / name
    if bundled.is_file():
        return Path(str(bundled))
    raise CatalogError(f"catalog {name!r} not found")


def read_catalog(name: str) -> list[Graph]:
    with open(catalog_path(name), encoding="ascii") as fh:
        return read_graph6_lines(fh)


def order_counts(graphs: list[Graph]) -> dict[int, int]:
    return dict(sorted(Counter(g.n for g in graphs).items()))


def check_catalog(graphs: list[Graph], *, connected: bool = True, orders: range | None = None) -> list[str]:
    """Problems found in a catalog that should hold every graph of the given orders once.

    Only exact duplicate records are detected here; isomorphic duplicates
    would show up as a wrong per-order count.
    """
    expected = CONNECTED_COUNTS if connected else ALL_COUNTS
    counts = order_counts(graphs)
    if orders is None:
        orders = range(min(counts, default=1), max(counts, default=0) + 1)
    problems = []
    for n in orders:
        if counts.get(n, 0) != expected.get(n):
            problems.append(f"order {n}: expected {expected.get(n)} graphs, found {counts.get(n, 0)}")
    extra = sorted(set(counts) - set(orders))
    if extra:
        problems.append(f"unexpected orders {extra}")
    if connected:
        bad = [encode_graph6(g) for g in graphs if not is_connected(g)]
        if bad:
            problems.append(f"{len(bad)} disconnected graphs, e.g. {bad[0]}")
    dup = [s for s, c in Counter(encode_graph6(g) for g in graphs).items() if c > 1]
    if dup:
        problems.append(f"{len(dup)} repeated records, e.g. {dup[0]}")
    return problems


def load_connected_catalog(max_n: int = 6, name: str = CONNECTED) -> list[Graph]:
    """All connected graphs of order 1..max_n, validated against the known counts."""
    graphs = read_catalog(name)
    problems = check_catalog(graphs, connected=True)
    if problems:
        raise CatalogError("; ".join(problems))
    return [g for g in graphs if g.n <= max_n]
