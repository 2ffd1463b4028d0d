"""
Trees for every realizable triple
=================================

For k >= 2 a triple (dim, gamma_k, gamma_rk) = (beta, gamma, alpha) occurs
for some graph exactly when max(beta, gamma) <= alpha <= beta + gamma, except
for dim 1 with alpha = gamma + 1.  Each feasible triple is built as a tree
and then certified by the solver.
"""

import itertools

from resdom import TripleTarget, minimum_set, realize_triple
from resdom.errors import InfeasibleTripleError
from resdom.families import triple_family

k = 2
for beta, gamma in itertools.product(range(1, 4), repeat=2):
    for alpha in range(max(beta, gamma), beta + gamma + 1):
        target = TripleTarget(k, beta, gamma, alpha)
        try:
            tree = realize_triple(target)
        except InfeasibleTripleError:
            print(f"({beta},{gamma},{alpha})  impossible")
            continue
        got = tuple(minimum_set(tree, name, None if name == "DIM" else k).value
                    for name in ("DIM", "GAMMA_K", "GAMMA_RK"))
        family = triple_family(target).as_dict()
        print(f"({beta},{gamma},{alpha})  {family['family']:6s} n={tree.n:2d}  solver {got}")
