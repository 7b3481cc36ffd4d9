"""
Complete pairs from a smooth structure
======================================

Given a C5-free tournament with a smooth 5-set structure at lambda <= 1/5,
we look for sets A and B of linear size with every edge going from A to
B.  If the tournament does contain C5 the pipeline may instead return a
witness; both outcomes are certificates that can be checked independently.
"""

# %%
from fractions import Fraction

from c5pair.ehpair import CompletePair, build_common_in_digraph, find_complete_pair
from c5pair.gen import gen_planted_blocks
from c5pair.oracle import verify_c5_witness, verify_complete_pair
from c5pair.outsimplicial import check_outsimplicial

t, s = gen_planted_blocks(600, 5, Fraction(1, 5), 0, seed=11)

# %%
# The pipeline first joins vertices of V1 that share an in-neighbour in V5.
wd = build_common_in_digraph(t, s.sets[0], s.sets[4])
print("common in-neighbour digraph:", wd.d, " outsimplicial:", check_outsimplicial(wd.d) is None)

# %%
out = find_complete_pair(t, s)
print(f"{out.branch}: |A| = {len(out.A)}, |B| = {len(out.B)}  (n // 30 = {t.n // 30})")
print("verified:", verify_complete_pair(t, out.A, out.B))

# %%
# Noise at the boundary of the budget usually produces C5, and the
# pipeline reports one.
noisy, ns = gen_planted_blocks(300, 5, Fraction(1, 10), 1, seed=2)
res = find_complete_pair(noisy, ns)
if isinstance(res, CompletePair):
    print("pair", res.branch, verify_complete_pair(noisy, res.A, res.B))
else:
    print("C5 witness", tuple(res), verify_c5_witness(noisy, res))
