"""
The largest graphs with a given value
=====================================

A set of r vertices that resolves and k-dominates assigns every other vertex
a distance vector, and only so many vectors are possible.  The extremal graph
realizes all of them; here we build it and let the solver confirm that r
vertices are needed and suffice.
"""

from resdom import all_pairs_distances, extremal_gr, find_set, minimum_set, predicted_max_order
from resdom.families import extremal_vectors

for k, r in ((1, 2), (2, 2), (1, 3)):
    g = extremal_gr(k, r)
    res = minimum_set(g, "GAMMA_RK", k, cap=256)
    smaller = find_set(g, "GAMMA_RK", k, r - 1, cap=256)
    print(f"k={k} r={r}: order {g.n} (bound {predicted_max_order(k, r)}), "
          f"value {res.value}, witness {res.witness}, size {r - 1} feasible: {smaller is not None}")

# The vertex vectors are exactly the distances to the base vertices.
g = extremal_gr(1, 2)
dm = all_pairs_distances(g)
for v, vec in enumerate(extremal_vectors(1, 2)):
    print(v, vec, tuple(int(dm[v, i]) for i in range(2)))
