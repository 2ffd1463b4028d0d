"""
A first look at the four invariants
===================================

Each invariant is the size of a smallest vertex set with some property,
and the solver hands back a set attaining it (the lexicographically
smallest one), so every number printed below can be checked by hand.
"""

from resdom import all_invariants, all_pairs_distances
from resdom.graph import complete_bipartite, cycle, path, star
from resdom.solvers import is_distance_k_dominating, is_resolving

# A cycle on nine vertices.  Two vertices are enough to tell every vertex
# apart by distances, three are needed to reach everyone within one step,
# and three still suffice for both jobs at once.
c9 = cycle(9)
for inv in all_invariants(c9, k=1):
    print(f"C9  {inv.name:9s} = {inv.value}   witness {inv.witness}")

# The witnesses are ordinary vertex lists, so we can re-check them directly.
dm = all_pairs_distances(c9)
dim, gk, grk, ld = all_invariants(c9, k=1)
print("resolving?", is_resolving(c9, dm, grk.witness),
      " 1-dominating?", is_distance_k_dominating(c9, dm, grk.witness, 1))

# Growing k lets a few vertices dominate more, but resolving does not get easier.
p10 = path(10)
for k in (1, 2, 3):
    values = {inv.name: inv.value for inv in all_invariants(p10, k)}
    print(f"P10 k={k}: {values}")

# Stars and complete bipartite graphs are full of twins, and every twin but
# one per class must be chosen.
for g, label in ((star(6), "K_{1,5}"), (complete_bipartite(2, 3), "K_{2,3}")):
    print(label, {inv.name: inv.value for inv in all_invariants(g, k=2)})
