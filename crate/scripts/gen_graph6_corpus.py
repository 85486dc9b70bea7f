#!/usr/bin/env python3
"""Regenerates tests/data/graph6_corpus.txt from networkx.

Each line: <graph6> <n> <comma-separated u-v edges, or '-' when none>.
The corpus pins the encoder against an independent implementation.
"""

import random

import networkx as nx

OUT = "crates/core/tests/data/graph6_corpus.txt"


def line_for(g: nx.Graph) -> str:
    g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
    edges = ",".join(f"{u}-{v}" for u, v in sorted((min(u, v), max(u, v)) for u, v in g.edges()))
    return f"{g6} {g.number_of_nodes()} {edges or '-'}"


def main() -> None:
    rng = random.Random(20250810)
    lines = ["# graph6 reference corpus (generated by scripts/gen_graph6_corpus.py)"]
    # Tiny fixed cases.
    for g in [nx.empty_graph(1), nx.complete_graph(2), nx.path_graph(4),
              nx.cycle_graph(5), nx.petersen_graph(), nx.empty_graph(0)]:
        lines.append(line_for(nx.convert_node_labels_to_integers(g)))
    # Random graphs across the short-form range.
    for _ in range(1100):
        n = rng.randint(1, 62)
        p = rng.random()
        g = nx.gnp_random_graph(n, p, seed=rng.randint(0, 10**9))
        lines.append(line_for(g))
    with open(OUT, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 1} corpus entries to {OUT}")


if __name__ == "__main__":
    main()
