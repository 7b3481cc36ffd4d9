"""
Smooth structures
=================

A structure is a sequence of disjoint vertex sets V1, ..., Vk, each of
size at least c * n, in which edges mostly go forward: in smooth mode each
vertex may have at most lambda * |Vj| backward neighbours in any other set.
All thresholds are exact rationals.
"""

# %%
from fractions import Fraction

from c5pair.gen import gen_c5free, gen_planted_blocks
from c5pair.structures import StructureSpec, find_structure, forward_density, verify_structure

t, s = gen_planted_blocks(300, 5, Fraction(1, 10), Fraction(1, 2), seed=0)
print("spec:", s.spec.c, s.spec.lam, s.spec.w_string, " set sizes:", [len(x) for x in s.sets])
print("smooth:", verify_structure(t, s))
print("forward density V1 -> V2:", forward_density(t, s.sets[0], s.sets[1]))

# %%
# "2/10" and "1/5" are the same number, so the verdict cannot differ.
same = StructureSpec("1/10", "2/10", "00000")
print(same.lam == s.spec.lam)

# %%
# The finder orders vertices by a feedback-arc heuristic and trims
# windows until every vertex respects the budget.
c5free = gen_c5free(300, seed=1)
found = find_structure(c5free, StructureSpec(Fraction(1, 10), Fraction(1, 5), "00000"), attempts=8, seed=0)
if found is None:
    print("no structure found for this seed")
else:
    print("found sets of sizes", [len(x) for x in found.sets], "->", verify_structure(c5free, found).ok)
