#!/usr/bin/env python3
"""Regenerate the bundled graph6 lists under crates/core/data/graphs.

  n2.g6 .. n7.g6       every graph (connected or not) on exactly n vertices,
                       one representative per isomorphism class, taken from the
                       networkx graph atlas
  trees_n8.g6          every tree on 8 vertices
  unicyclic_n8.g6      every connected unicyclic graph on 8 vertices

Usage: python3 scripts/gen_graphs.py [output-dir]
"""

import os
import sys

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(path, graphs):
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(g6(g) + "\n")
    print(f"{path}: {len(graphs)} graphs")


def unicyclic(n):
    seen = []
    for tree in nx.nonisomorphic_trees(n):
        nodes = list(tree.nodes())
        for i, u in enumerate(nodes):
            for v in nodes[i + 1:]:
                if tree.has_edge(u, v):
                    continue
                h = tree.copy()
                h.add_edge(u, v)
                if not any(nx.is_isomorphic(h, k) for k in seen):
                    seen.append(h)
    return seen


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "crates", "core", "data", "graphs")
    os.makedirs(out, exist_ok=True)
    atlas = nx.graph_atlas_g()
    for n in range(2, 8):
        write(os.path.join(out, f"n{n}.g6"), [g for g in atlas if g.number_of_nodes() == n])
    write(os.path.join(out, "trees_n8.g6"), list(nx.nonisomorphic_trees(8)))
    write(os.path.join(out, "unicyclic_n8.g6"), unicyclic(8))


if __name__ == "__main__":
    main()
