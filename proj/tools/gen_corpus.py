#!/usr/bin/env python3
"""Regenerate the graph6 corpus files under data/.

Uses the networkx Graph Atlas (all simple graphs on at most 7 vertices) so the
files come from an implementation independent of the C++ codec.  Outputs:

  data/graphs_le7.g6      all graphs with 1 <= n <= 7          (1252 lines)
  data/connected7.g6      all connected graphs with n == 7     (853 lines)
  data/connected_le4.g6   all connected graphs with 1 <= n <= 4 (10 lines)
  data/codec_fixtures.tsv  g6 <TAB> n <TAB> m <TAB> sorted degree sequence,
                           for a spread of graphs; used to cross-check the
                           C++ graph6 decoder against networkx.
"""

import os

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"{path}: {len(lines)} graphs")


def main() -> None:
    out_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")
    os.makedirs(out_dir, exist_ok=True)

    atlas = [g for g in graph_atlas_g() if g.number_of_nodes() >= 1]
    assert len(atlas) == 1252, len(atlas)

    write_lines(os.path.join(out_dir, "graphs_le7.g6"), [g6(g) for g in atlas])

    conn7 = [g for g in atlas if g.number_of_nodes() == 7 and nx.is_connected(g)]
    assert len(conn7) == 853, len(conn7)
    write_lines(os.path.join(out_dir, "connected7.g6"), [g6(g) for g in conn7])

    conn4 = [g for g in atlas if g.number_of_nodes() <= 4 and nx.is_connected(g)]
    assert len(conn4) == 10, len(conn4)
    write_lines(os.path.join(out_dir, "connected_le4.g6"), [g6(g) for g in conn4])

    # Codec fixtures: a spread of sizes, including the long (>= 63 vertices)
    # size encoding and a couple of named graphs.
    fixtures = [
        nx.empty_graph(0),
        nx.empty_graph(1),
        nx.complete_graph(2),
        nx.path_graph(3),
        nx.complete_graph(3),
        nx.cycle_graph(4),
        nx.star_graph(3),  # K_{1,3}, 4 vertices
        nx.path_graph(7),
        nx.petersen_graph(),
        nx.complete_bipartite_graph(3, 4),
        nx.cycle_graph(62),
        nx.cycle_graph(63),
        nx.path_graph(64),
        nx.gnp_random_graph(10, 0.4, seed=7),
        nx.gnp_random_graph(20, 0.25, seed=11),
        nx.gnp_random_graph(33, 0.5, seed=13),
        nx.gnp_random_graph(64, 0.1, seed=17),
    ]
    rows = []
    for g in fixtures:
        degs = ",".join(str(d) for _, d in sorted(g.degree()))
        rows.append(f"{g6(g)}\t{g.number_of_nodes()}\t{g.number_of_edges()}\t{degs}")
    path = os.path.join(out_dir, "codec_fixtures.tsv")
    with open(path, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    print(f"{path}: {len(rows)} fixtures")


if __name__ == "__main__":
    main()
