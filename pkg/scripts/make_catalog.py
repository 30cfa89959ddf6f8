"""Regenerate the bundled graph6 catalogs from the networkx graph atlas.

The atlas lists every graph on at most 7 vertices up to isomorphism, so the
catalogs are pairwise non-isomorphic without any isomorphism code here.

    python scripts/make_catalog.py
"""
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parents[1] / "src" / "rcpoly" / "data"


def write(name: str, graphs, header: str) -> None:
    lines = [f"# {header}", "# generated by scripts/make_catalog.py from networkx.graph_atlas_g()"]
    for g in graphs:
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    (OUT / name).write_text("\n".join(lines) + "\n")
    print(f"{name}: {len(lines) - 2} graphs")


def main() -> None:
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    write("connected_1_6.g6",
          [g for g in atlas if g.number_of_nodes() <= 6 and nx.is_connected(g)],
          "all connected graphs on 1..6 vertices, up to isomorphism")
    write("all_1_6.g6",
          [g for g in atlas if g.number_of_nodes() <= 6],
          "all graphs on 1..6 vertices, up to isomorphism")
    write("connected_7.g6",
          [g for g in atlas if g.number_of_nodes() == 7 and nx.is_connected(g)],
          "all connected graphs on 7 vertices, up to isomorphism")


if __name__ == "__main__":
    main()
