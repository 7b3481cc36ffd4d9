"""
Splitting an outsimplicial digraph
==================================

A digraph is outsimplicial when the out-neighbours of every vertex are
pairwise adjacent.  Such a digraph on n vertices always has disjoint sets
A and B, each of size at least n // 6, with either no edge between them
(case I) or a directed path from every vertex of A to every vertex of B
(case II).  The certificate records the case and verify_split re-checks
it from scratch.
"""

# %%
from c5pair.gen import gen_outsimplicial
from c5pair.graphs import OrientedDigraph, scc_condensation
from c5pair.outsimplicial import check_outsimplicial, split, verify_split

d = gen_outsimplicial(120, seed=4, blowup=True)
print("violating triple:", check_outsimplicial(d))
cond = scc_condensation(d)
print("strong components:", cond.m, " sizes seen:", sorted(set(cond.weights)))

# %%
cert = split(d)
print(f"case {cert.case} via {cert.branch}: |A| = {len(cert.A)}, |B| = {len(cert.B)}, n // 6 = {d.n // 6}")
print("verified:", verify_split(d, cert))

# %%
# A vertex with two non-adjacent out-neighbours breaks the precondition.
bad = OrientedDigraph.from_edges(3, [(0, 1), (0, 2)])
print("violating triple:", check_outsimplicial(bad))
