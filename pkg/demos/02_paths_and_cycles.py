"""
Paths and cycles against their closed forms
============================================

The number for paths and cycles has a closed form.  Here the solver and the
formula are set side by side, and the one odd cycle length per k shows up.
"""

from resdom import minimum_set, predicted_gamma_rk_cycle, predicted_gamma_rk_path
from resdom.graph import cycle, path

k = 2
print("n   path(solver, formula)   cycle(solver, formula)")
for n in range(3, 17):
    p = minimum_set(path(n), "GAMMA_RK", k).value
    c = minimum_set(cycle(n), "GAMMA_RK", k).value
    flag = "  <- n = 4k+2" if n == 4 * k + 2 else ""
    print(f"{n:2d}  {p:3d} {predicted_gamma_rk_path(k, n):3d}"
          f"                 {c:3d} {predicted_gamma_rk_cycle(k, n):3d}{flag}")

# On C_{4k+2} the natural pair {0, 2k+1} sits at antipodal-like positions and
# fails to resolve, which is why that one length needs a third vertex.
for k in (1, 2, 3):
    res = minimum_set(cycle(4 * k + 2), "GAMMA_RK", k)
    print(f"C_{4 * k + 2}, k={k}: value {res.value}, witness {res.witness}")
