"""
Chordal graphs, clique trees and centroid bags
==============================================

Maximum cardinality search gives a perfect elimination ordering when the
graph is chordal; otherwise we return a hole (an induced cycle of length at
least 4).  From the ordering we build a clique tree and pick a bag whose
removal leaves components of at most half the total weight.
"""

# %%
import numpy as np

from c5pair.chordal import centroid_bag, clique_tree, components_without, is_chordal, verify_clique_tree
from c5pair.gen import random_chordal_graph
from c5pair.graphs import UndirectedGraph

square = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("4-cycle:", is_chordal(square))

square_with_chord = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
print("with chord:", is_chordal(square_with_chord))

# %%
rng = np.random.default_rng(1)
adj, _ = random_chordal_graph(60, rng)
g = UndirectedGraph(adj)
td = clique_tree(g)
print(f"{len(td.bags)} maximal cliques, tree edges: {len(td.tree_edges)}")
print("clique tree problems:", verify_clique_tree(g, td) or "none")

# %%
# Weighted centroid: every component left after removing the bag weighs
# at most half the total.  The comparison is 2 * w <= W, in integers.
weights = rng.integers(1, 10, size=g.n).tolist()
bag = centroid_bag(g, td, weights)
parts = components_without(g, td.bags[bag])
total = sum(weights)
print("centroid bag:", td.bags[bag])
print("component weights:", sorted(sum(weights[v] for v in c) for c in parts), "of total", total)
