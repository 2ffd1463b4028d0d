"""
A graph and its complement
==========================

Sum and product bounds over a graph and its complement, checked on all
labeled graphs of order 5.  Complements may be disconnected; unreachable
pairs then count as infinitely far apart.

The run also turns up P5: at k = 3 it and its complement (the house) reach
the connected upper bound 2n - 6 without belonging to the list of graphs
said to attain it.
"""

from collections import Counter

from resdom import verify
from resdom.graph import complement, is_connected, path

oracle = verify.Oracle()
n, k = 5, 3
sums = Counter()
for g in verify.enumerate_graphs(n):
    a = oracle.value(g, "GAMMA_RK", k, allow_disconnected=True)
    b = oracle.value(complement(g), "GAMMA_RK", k, allow_disconnected=True)
    sums[a + b] += 1
print(f"n={n}, k={k}: sum -> number of labeled graphs", dict(sorted(sums.items())))

p5 = path(5)
house = complement(p5)
print("house connected:", is_connected(house),
      " values:", oracle.value(p5, "GAMMA_RK", k), oracle.value(house, "GAMMA_RK", k),
      " 2n-6 =", 2 * n - 6)
print("P5 in the listed family:", verify._member(p5, verify.ng_upper_family(n)))
