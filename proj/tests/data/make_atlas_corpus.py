"""Writes the networkx graph atlas (all graphs on 0..7 vertices) as graph6.

One file per order, atlas_n<N>.g6, one graph per line. The atlas is an
independently produced catalogue, so these files serve as an external
corpus for ingestion and enumeration cross-checks.
"""
import collections
import pathlib

import networkx as nx

here = pathlib.Path(__file__).resolve().parent
by_order = collections.defaultdict(list)
for g in nx.graph_atlas_g():
    if g.number_of_nodes() >= 1:
        by_order[g.number_of_nodes()].append(
            nx.to_graph6_bytes(g, header=False).decode().strip())
for n, lines in sorted(by_order.items()):
    if n >= 4:
        (here / f"atlas_n{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))
