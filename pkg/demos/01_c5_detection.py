"""
Finding C5 in a tournament
==========================

The five-vertex tournament where each vertex beats the next two (mod 5) is
the pattern we forbid.  A 5-vertex tournament is this pattern exactly when
every out-degree is 2.  Larger tournaments are searched with matrix
products, and the result is checked against brute-force enumeration.
"""

# %%
import numpy as np

from c5pair.gen import c5_tournament, gen_c5free, random_tournament, substitute, transitive_tournament
from c5pair.oracle import brute_c5
from c5pair.patterns import find_c5, is_c5, max_transitive_exact, max_transitive_greedy

c5 = c5_tournament()
print(c5.adj.astype(int))
print("out-degrees:", c5.out_degrees(), "is_c5:", is_c5(c5))

# %%
# find_c5 returns a witness (v0, ..., v4): v_i beats v_{i+1} and v_{i+2}.
t = random_tournament(40, seed=3)
w = find_c5(t)
print("witness in a random 40-vertex tournament:", tuple(w))
print("edges inside the witness:", t.adj[np.ix_(w, w)].astype(int).tolist())

# %%
# Substituting C5-free tournaments into a small quotient keeps C5 out.
# gen_c5free does this recursively; the oracle confirms on a small case.
small = gen_c5free(12, seed=0)
print("find_c5:", find_c5(small), " brute_c5:", brute_c5(small))

blown = substitute(c5, [transitive_tournament(k) for k in (2, 1, 3, 1, 2)])
print("C5 blown up into 9 vertices still contains C5:", find_c5(blown) is not None)

# %%
# Transitive subtournaments: exact (bitmask recursion, n <= 24) vs greedy.
big = gen_c5free(24, seed=5)
print("exact:", len(max_transitive_exact(big)), " greedy:", len(max_transitive_greedy(big)))
