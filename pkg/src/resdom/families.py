"""Graph families with known invariant values, and closed-form predictors.

Tree families are assembled from *gadgets* hung on a spine: the hubs of the
gadgets form a path (consecutive hubs adjacent) and every gadget adds legs,
i.e. pendant paths, at its hub.  With leg length ``k``:

====  ==============================================  ===  =======  ========
name  legs at the hub                                 dim  gamma_k  gamma_rk
====  ==============================================  ===  =======  ========
v     one of length k, one of length 1                1    1        1
w     two of length k                                 1    1        2
p     one of length k (hub must be interior)          0    1        1
u     ``r`` of length k                               r-1  1        r
c     one of length k, ``l`` of length 1              l    1        l
====  ==============================================  ===  =======  ========

Leaf ends of distinct gadgets are at least ``2k+1`` apart, so the three
counts add up over the gadgets.  Labels: hubs get ``0..h-1`` in spine order,
then the leg vertices follow gadget by gadget, each leg listed from the hub
outward.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, InfeasibleTripleError, ParameterError, SizeGuardError
from .graph import Graph, generate_basic, is_connected

FAMILIES = ("T_GAMMA", "T1", "T2", "T3", "T4", "T5", "SPIDER", "EXTREMAL_GR",
            "PATH", "CYCLE", "COMPLETE", "COMPLETE_BIPARTITE", "STAR", "BULL")
EXTREMAL_CAP = 256


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# ---------------------------------------------------------------------------
# Closed forms


def predicted_gamma_k_path(k: int, n: int) -> int:
    return _ceil_div(n, 2 * k + 1)


def predicted_gamma_rk_path(k: int, n: int) -> int:
    if k < 1 or n < 2:
        raise ParameterError(f"need k >= 1 and n >= 2, got k={k}, n={n}")
    if k >= n - 1:
        return 1
    if n // 2 <= k:
        return 2
    return _ceil_div(n, 2 * k + 1)


def predicted_gamma_rk_cycle(k: int, n: int) -> int:
    if k < 1 or n < 3:
        raise ParameterError(f"need k >= 1 and n >= 3, got k={k}, n={n}")
    if n <= 4 * k + 1:
        return 2
    if n == 4 * k + 2:
        return 3
    return _ceil_div(n, 2 * k + 1)


def predicted_max_order(k: int, grk: int) -> int:
    """Largest order of a connected graph whose distance k-resolving domination number is ``grk``."""
    if k < 1 or grk < 1:
        raise ParameterError(f"need k >= 1 and grk >= 1, got k={k}, grk={grk}")
    return grk + grk * sum((2 * p + 1) ** (grk - 1) for p in range(1, k + 1))


def tree_metric_dimension_formula(t: Graph) -> int:
    """Leaves minus exterior major vertices, for a tree that is not a path."""
    if t.n == 0 or t.m != t.n - 1 or not is_connected(t):
        raise DomainError("input is not a tree")
    deg = t.degrees
    if max(deg, default=0) <= 2:
        raise DomainError("input is a path")
    leaves = [v for v in range(t.n) if deg[v] == 1]
    exterior = set()
    for leaf in leaves:
        prev, cur = -1, leaf
        while deg[cur] < 3:
            prev, cur = cur, next(u for u in t.neighbors(cur) if u != prev)
        exterior.add(cur)
    return len(leaves) - len(exterior)


# ---------------------------------------------------------------------------
# Parameters


@dataclass(frozen=True)
class FamilyParams:
    family: str
    k: int = 1
    m: int | None = None
    l: int | None = None  # noqa: E741
    r: int | None = None
    s: int | None = None
    t: int | None = None
    n: int | None = None
    gamma: int | None = None
    beta: int | None = None
    legs: int | None = None

    def __post_init__(self) -> None:
        tag = self.family.upper().replace("-", "_")
        if tag not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", tag)

    def as_dict(self) -> dict:
        return {key: val for key, val in asdict(self).items() if val is not None}

    def validate(self) -> None:
        f = self.family

        def need(*names: str) -> list[int]:
            vals = [getattr(self, nm) for nm in names]
            missing = [nm for nm, v in zip(names, vals) if v is None]
            if missing:
                raise ParameterError(f"{f} requires {missing}")
            return vals

        def check(cond: bool, text: str) -> None:
            if not cond:
                raise ParameterError(f"{f}: {text} (got {self.as_dict()})")

        check(self.k >= 1, "k >= 1")
        if f == "T_GAMMA":
            (gamma,) = need("gamma")
            check(gamma >= 1, "gamma >= 1")
        elif f == "T1":
            m, l = need("m", "l")
            check(m >= 0 and l >= 1 and self.k >= 2, "m >= 0, l >= 1, k >= 2")
        elif f in ("T2", "T3"):
            m, l = need("m", "l")
            check(m >= 1 and l >= 1 and self.k >= 2, "m >= 1, l >= 1, k >= 2")
        elif f == "T4":
            m, l, r = need("m", "l", "r")
            check(m >= 0 and l >= 0 and r >= 3 and (m, l) != (0, 0) and self.k >= 2,
                  "m, l >= 0, r >= 3, (m, l) != (0, 0), k >= 2")
        elif f == "T5":
            m, l, r = need("m", "l", "r")
            check(m >= 0 and l >= 0 and r >= 2 and (m, l) != (0, 0) and self.k >= 2,
                  "m, l >= 0, r >= 2, (m, l) != (0, 0), k >= 2")
        elif f == "SPIDER":
            (legs,) = need("legs")
            check(legs >= 3, "legs >= 3")
        elif f == "EXTREMAL_GR":
            (r,) = need("r")
            check(r >= 2, "r >= 2")
        elif f in ("PATH", "COMPLETE"):
            (n,) = need("n")
            check(n >= 1, "n >= 1")
        elif f == "STAR":
            (n,) = need("n")
            check(n >= 2, "n >= 2")
        elif f == "CYCLE":
            (n,) = need("n")
            check(n >= 3, "n >= 3")
        elif f == "COMPLETE_BIPARTITE":
            s, t = need("s", "t")
            check(s >= 1 and t >= 1, "s, t >= 1")


# ---------------------------------------------------------------------------
# Tree construction


@dataclass
class _Tree:
    k: int
    gadgets: list[tuple[str, int]] = field(default_factory=list)

    def add(self, kind: str, count: int = 1, extra: int = 0) -> _Tree:
        self.gadgets.extend([(kind, extra)] * count)
        return self

    def leg_lengths(self, kind: str, extra: int) -> list[int]:
        k = self.k
        return {"v": [k, 1], "w": [k, k], "p": [k], "u": [k] * extra,
                "c": [k] + [1] * extra}[kind]

    def build(self) -> Graph:
        hubs = len(self.gadgets)
        edges = [(i, i + 1) for i in range(hubs - 1)]
        nxt = hubs
        for hub, (kind, extra) in enumerate(self.gadgets):
            for length in self.leg_lengths(kind, extra):
                prev = hub
                for _ in range(length):
                    edges.append((prev, nxt))
                    prev = nxt
                    nxt += 1
        return Graph.from_edges(nxt, edges)


def t_gamma(k: int, gamma: int) -> Graph:
    """Caterpillar: spine ``0..gamma-1`` with a leg of length ``k`` at every spine vertex."""
    return _Tree(k).add("p", gamma).build()


def spider(legs: int, k: int) -> Graph:
    """Center 0 with ``legs`` pendant paths of length ``k``."""
    return _Tree(k).add("u", 1, legs).build()


def tree_t1(k: int, m: int, l: int) -> Graph:  # noqa: E741
    return _Tree(k).add("v", m).add("w", l).build()


def tree_t2(k: int, m: int, l: int) -> Graph:  # noqa: E741
    return _Tree(k).add("v", m).add("c", 1, l).build()


def tree_t3(k: int, m: int, l: int) -> Graph:  # noqa: E741
    return _Tree(k).add("v", m).add("p", l).add("v").build()


def tree_t4(k: int, m: int, l: int, r: int) -> Graph:  # noqa: E741
    return _Tree(k).add("v", m).add("w", l).add("u", 1, r).build()


def tree_t5(k: int, m: int, l: int, r: int) -> Graph:  # noqa: E741
    return _Tree(k).add("v", m).add("w", l).add("p", r - 1).add("w").build()


def extremal_vectors(k: int, r: int) -> list[tuple[int, ...]]:
    """Vertex vectors of the maximum-order construction, in label order (the r base vectors first)."""
    big = 2 * k + 1
    q0 = sorted(tuple(0 if j == i else big for j in range(r)) for i in range(r))
    rest = []
    for i in range(r):
        for qi in range(1, k + 1):
            ranges = [range(qi, qi + 1) if j == i else range(2 * k - qi + 1, 2 * k + qi + 2)
                      for j in range(r)]
            rest.extend(itertools.product(*ranges))
    return q0 + sorted(rest)


def extremal_gr(k: int, r: int, cap: int = EXTREMAL_CAP) -> Graph:
    """Maximum-order graph with distance k-resolving domination number ``r``.

    Vertices are integer vectors; two are adjacent when every coordinate
    differs by at most one.  Vertices ``0..r-1`` are the base vectors with a
    single zero coordinate, ``(0, 2k+1, ...)`` first.
    """
    if k < 1 or r < 2:
        raise ParameterError(f"extremal graph needs k >= 1 and r >= 2, got k={k}, r={r}")
    order = predicted_max_order(k, r)
    if order > cap:
        raise SizeGuardError(f"extremal graph order {order} exceeds cap {cap}")
    vec = np.array(extremal_vectors(k, r), dtype=np.int64)
    cheb = np.abs(vec[:, None, :] - vec[None, :, :]).max(axis=2)
    us, vs = np.nonzero(np.triu(cheb <= 1, 1))
    return Graph.from_edges(len(vec), zip(us.tolist(), vs.tolist()))


def generate_family(p: FamilyParams) -> Graph:
    p.validate()
    f, k = p.family, p.k
    if f == "T_GAMMA":
        return t_gamma(k, p.gamma)
    if f == "T1":
        return tree_t1(k, p.m, p.l)
    if f == "T2":
        return tree_t2(k, p.m, p.l)
    if f == "T3":
        return tree_t3(k, p.m, p.l)
    if f == "T4":
        return tree_t4(k, p.m, p.l, p.r)
    if f == "T5":
        return tree_t5(k, p.m, p.l, p.r)
    if f == "SPIDER":
        return spider(p.legs, k)
    if f == "EXTREMAL_GR":
        return extremal_gr(k, p.r)
    return generate_basic(f.lower(), n=p.n, s=p.s, t=p.t)


def claimed_invariants(p: FamilyParams) -> dict[str, int]:
    """Invariant values the family is constructed to have (``{}`` when none is claimed)."""
    p.validate()
    f, k = p.family, p.k
    m, l, r = p.m, p.l, p.r
    if f == "T_GAMMA":
        return {"GAMMA_K": p.gamma, "GAMMA_RK": p.gamma * (k + 1) - k * p.gamma}
    if f == "T1":
        return {"DIM": m + l, "GAMMA_K": m + l, "GAMMA_RK": m + 2 * l}
    if f == "T2":
        return {"DIM": m + l, "GAMMA_K": m + 1, "GAMMA_RK": m + l}
    if f == "T3":
        return {"DIM": m + 1, "GAMMA_K": m + l + 1, "GAMMA_RK": m + l + 1}
    if f == "T4":
        return {"DIM": m + l + r - 1, "GAMMA_K": m + l + 1, "GAMMA_RK": m + 2 * l + r}
    if f == "T5":
        return {"DIM": m + l + 1, "GAMMA_K": m + l + r, "GAMMA_RK": m + 2 * l + r + 1}
    if f == "SPIDER":
        return {"DIM": p.legs - 1, "GAMMA_K": 1, "GAMMA_RK": p.legs}
    if f == "EXTREMAL_GR":
        return {"GAMMA_RK": r}
    if f == "PATH" and p.n >= 2:
        return {"DIM": 1, "GAMMA_K": predicted_gamma_k_path(k, p.n),
                "GAMMA_RK": predicted_gamma_rk_path(k, p.n)}
    if f == "CYCLE":
        return {"DIM": 2, "GAMMA_K": _ceil_div(p.n, 2 * k + 1),
                "GAMMA_RK": predicted_gamma_rk_cycle(k, p.n)}
    if f == "COMPLETE" and p.n >= 2:
        return {"DIM": p.n - 1, "GAMMA_K": 1, "GAMMA_RK": p.n - 1}
    if f == "STAR" and p.n >= 3:
        return {"DIM": p.n - 2, "GAMMA_K": 1, "GAMMA_RK": p.n - 2 if k >= 2 else p.n - 1}
    return {}


# ---------------------------------------------------------------------------
# Realizable triples


@dataclass(frozen=True)
class TripleTarget:
    k: int
    beta: int
    gamma: int
    alpha: int

    def validate(self) -> None:
        k, b, g, a = self.k, self.beta, self.gamma, self.alpha
        if k < 2:
            raise ParameterError(f"triples are realized for k >= 2, got k={k}")
        if min(b, g, a) < 1 or not max(b, g) <= a <= b + g:
            raise InfeasibleTripleError(
                f"(beta, gamma, alpha)=({b}, {g}, {a}) violates max(beta, gamma) <= alpha <= beta + gamma")
        if b == 1 and g >= 2 and a == g + 1:
            raise InfeasibleTripleError(f"no graph has dim 1, gamma_k {g} and gamma_rk {a}")


def triple_family(t: TripleTarget) -> FamilyParams:
    """Family parameters whose tree has ``(dim, gamma_k, gamma_rk) == (beta, gamma, alpha)``."""
    t.validate()
    k, b, g, a = t.k, t.beta, t.gamma, t.alpha
    if b == 1:
        if a == 1:
            return FamilyParams("PATH", k=k, n=2)
        if g == 1:
            return FamilyParams("PATH", k=k, n=k + 2)
        return FamilyParams("PATH", k=k, n=g * (2 * k + 1))
    if g == 1:
        if a == b:
            return FamilyParams("STAR", k=k, n=b + 2)
        return FamilyParams("SPIDER", k=k, legs=b + 1)
    if b == g:
        if a == b:
            return FamilyParams("T2", k=k, m=g - 1, l=1)
        return FamilyParams("T1", k=k, m=2 * b - a, l=a - b)
    if g < b:
        if a == b:
            return FamilyParams("T2", k=k, m=g - 1, l=b - g + 1)
        return FamilyParams("T4", k=k, m=g - a + b, l=a - b - 1, r=b - g + 2)
    if a == g:
        return FamilyParams("T3", k=k, m=b - 1, l=g - b)
    return FamilyParams("T5", k=k, m=b - a + g, l=a - g - 1, r=g - b + 1)


def realize_triple(t: TripleTarget) -> Graph:
    p = triple_family(t)
    claim = claimed_invariants(p)
    expected = {"DIM": t.beta, "GAMMA_K": t.gamma, "GAMMA_RK": t.alpha}
    if claim != expected:
        raise AssertionError(f"parameter inversion broken: {p} claims {claim}, wanted {expected}")
    return generate_family(p)


def certify(p: FamilyParams, cap: int = EXTREMAL_CAP) -> tuple[bool, dict[str, int], dict[str, int]]:
    """Solve the claimed invariants of a family instance; returns ``(ok, computed, claimed)``."""
    from .solvers import PREDICATE_OF, Solver

    claim = claimed_invariants(p)
    g = generate_family(p)
    solver = Solver(g, cap=cap)
    computed = {name: solver.minimum(PREDICATE_OF[name], None if name == "DIM" else p.k).value
                for name in claim}
    return computed == claim, computed, claim
