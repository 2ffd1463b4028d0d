"""Machine-checkable claims about the distance k-resolving domination number.

Each registered check evaluates one statement (a bound, a closed formula, a
characterization, a construction) over a corpus: every labeled connected
graph of a given order, a seeded random sample, or a family sweep.  Results
are grouped into :class:`CheckResult` rows, one per corpus slice and ``k``,
and a failing row carries the first counterexample found.
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import json
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from . import families as fam
from .errors import InfeasibleTripleError, ParameterError
from .graph import (
    Graph,
    all_pairs_distances,
    bull,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    is_connected,
    is_isomorphic,
    join,
    metrics,
    path,
    substitute,
    to_edge_list,
)
from .solvers import PREDICATE_OF, Predicate, Solver, is_distance_k_dominating, is_resolving

EXHAUSTIVE_MAX_ORDER = 7
DEFAULT_SEED = 2024
FAMILY_CHECKS = frozenset({"CHK_PATH_FORMULA", "CHK_CYCLE_FORMULA", "CHK_CYCLE_RESOLVING"})


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass
class CheckResult:
    check_id: str
    params: dict
    status: Status
    counterexample: dict | None = None
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        out = {"check_id": self.check_id, "params": self.params, "status": self.status.value,
               "elapsed_ms": self.elapsed_ms}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class CorpusSpec:
    """Which graphs a check runs over.

    ``EXHAUSTIVE``: all labeled graphs with ``n_min <= n <= n_max`` (connected
    ones unless ``include_disconnected``).  ``RANDOM``: ``count`` seeded
    connected graphs whose orders cycle through ``n_min..n_max`` and edge
    probabilities through ``probabilities``.  ``FAMILY``: the check's own
    parameter sweep, bounded by ``n_max`` / ``ranges``.
    """

    kind: str = "EXHAUSTIVE"
    n_max: int = 6
    n_min: int = 1
    count: int = 0
    probabilities: tuple[float, ...] = (0.2, 0.5)
    seed: int | None = None
    include_disconnected: bool = False
    ranges: dict = field(default_factory=dict, hash=False, compare=False)

    def validate(self) -> None:
        if self.kind not in ("EXHAUSTIVE", "RANDOM", "FAMILY"):
            raise ParameterError(f"unknown corpus kind {self.kind!r}")
        if self.kind == "RANDOM" and self.seed is None:
            raise ParameterError("a RANDOM corpus needs a seed")
        if self.kind == "EXHAUSTIVE" and self.n_max > EXHAUSTIVE_MAX_ORDER:
            raise ParameterError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_ORDER}")


# ---------------------------------------------------------------------------
# Corpora


def _enumerate(n: int, connected_only: bool) -> Iterator[Graph]:
    if not 1 <= n <= EXHAUSTIVE_MAX_ORDER:
        raise ParameterError(f"enumeration needs 1 <= n <= {EXHAUSTIVE_MAX_ORDER}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for i, p in enumerate(pairs) if bits >> i & 1))
        if not connected_only or is_connected(g):
            yield g


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices (no isomorphism reduction)."""
    return _enumerate(n, True)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices."""
    return _enumerate(n, False)


@lru_cache(maxsize=16)
def _graphs(n: int, connected_only: bool) -> tuple[Graph, ...]:
    return tuple(_enumerate(n, connected_only))


def random_connected_graph(n: int, p: float, seed: int) -> Graph:
    """Sample G(n, p) until connected; after 1000 failures, overlay a random spanning tree."""
    if n < 1 or not 0 < p <= 1:
        raise ParameterError(f"need n >= 1 and 0 < p <= 1, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    xs, ys = np.triu_indices(n, 1)
    for _ in range(1000):
        keep = rng.random(len(xs)) < p
        g = Graph.from_edges(n, zip(xs[keep].tolist(), ys[keep].tolist()))
        if is_connected(g):
            return g
    order = rng.permutation(n).tolist()
    tree = {(order[i], order[int(rng.integers(i))]) for i in range(1, n)}
    keep = rng.random(len(xs)) < p
    return Graph.from_edges(n, tree | set(zip(xs[keep].tolist(), ys[keep].tolist())))


def random_corpus(spec: CorpusSpec) -> list[Graph]:
    orders = range(max(spec.n_min, 1), spec.n_max + 1)
    return [random_connected_graph(orders[i % len(orders)],
                                   spec.probabilities[i % len(spec.probabilities)],
                                   spec.seed + i)
            for i in range(spec.count)]


def corpus_slices(spec: CorpusSpec) -> list[tuple[dict, Sequence[Graph]]]:
    spec.validate()
    if spec.kind == "EXHAUSTIVE":
        label = "exhaustive_all" if spec.include_disconnected else "exhaustive"
        return [({"corpus": label, "n": n}, _graphs(n, not spec.include_disconnected))
                for n in range(max(spec.n_min, 1), spec.n_max + 1)]
    if spec.kind == "RANDOM":
        return [({"corpus": "random", "seed": spec.seed, "count": spec.count,
                  "n_max": spec.n_max}, random_corpus(spec))]
    raise ParameterError("graph-corpus checks need an EXHAUSTIVE or RANDOM corpus")


# ---------------------------------------------------------------------------
# Invariant oracle


class Oracle:
    """Cached invariant values; the checks only ever see graphs through this object."""

    def __init__(self, cap: int = fam.EXTREMAL_CAP):
        self.cap = cap
        self._values: dict = {}
        self._metrics: dict = {}
        self._solver: Solver | None = None
        self._solver_key = None

    @staticmethod
    def _key(g: Graph) -> tuple:
        return (g.n, *g.adj)

    def _solver_for(self, g: Graph, key: tuple, allow_disconnected: bool) -> Solver:
        if self._solver_key != (key, allow_disconnected):
            self._solver = Solver(g, allow_disconnected=allow_disconnected, cap=self.cap)
            self._solver_key = (key, allow_disconnected)
        return self._solver

    def value(self, g: Graph, name: str, k: int | None = None, *,
              allow_disconnected: bool = False) -> int:
        k = None if name == "DIM" else k
        key = self._key(g)
        vkey = (key, name, k, allow_disconnected)
        if vkey not in self._values:
            solver = self._solver_for(g, key, allow_disconnected)
            self._values[vkey] = solver.minimum(PREDICATE_OF[name], k).value
        return self._values[vkey]

    def values(self, g: Graph, k: int, names: Iterable[str] = ("DIM", "GAMMA_K", "GAMMA_RK")
               ) -> dict[str, int]:
        return {name: self.value(g, name, k) for name in names}

    def metrics(self, g: Graph):
        key = self._key(g)
        if key not in self._metrics:
            self._metrics[key] = metrics(g)
        return self._metrics[key]

    def clear(self) -> None:
        self._values.clear()
        self._metrics.clear()
        self._solver = self._solver_key = None


DEFAULT_ORACLE = Oracle()


# ---------------------------------------------------------------------------
# Family membership by isomorphism


def _key_of(g: Graph) -> tuple:
    return (g.m, tuple(sorted(g.degrees)))


def _member(g: Graph, candidates: Sequence[Graph]) -> bool:
    key = _key_of(g)
    return any(_key_of(c) == key and is_isomorphic(g, c) for c in candidates)


@lru_cache(maxsize=None)
def dim_n2_family(n: int) -> tuple[Graph, ...]:
    """K_{s,t}, K_s + complement(K_t) (t >= 2) and K_s + (K_1 u K_t) on ``n`` vertices."""
    out = [complete_bipartite(s, n - s) for s in range(1, n // 2 + 1)]
    out += [join(complete(s), empty(n - s)) for s in range(1, n - 1)]
    out += [join(complete(s), disjoint_union(complete(1), complete(n - 1 - s)))
            for s in range(1, n - 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def gamma_rk_n2_family(n: int, k: int) -> tuple[Graph, ...]:
    extra = (path(4),) if k == 2 and n == 4 else ()
    return extra + dim_n2_family(n)


@lru_cache(maxsize=None)
def ng_upper_family(n: int) -> tuple[Graph, ...]:
    """Both-connected graphs attaining the k >= 3 upper sum bound 2n - 6.

    ``P4[H^i]`` substitutions use the 0-based path ``0-1-2-3``: vertex ``i``
    of the usual 1-based drawing is vertex ``i - 1`` here.
    """
    p4 = path(4)
    out = [p4] if n == 4 else []
    if n == 5:
        out += [cycle(5), bull()]
    if n >= 4:
        t = n - 3
        out += [substitute(p4, {0: complete(t)}), substitute(p4, {0: empty(t)}),
                substitute(p4, {1: complete(t)}), substitute(p4, {1: empty(t)})]
        for r in range(1, n - 2):
            out.append(substitute(p4, {0: complete(r), 1: complete(n - r - 2)}))
            out.append(substitute(p4, {0: empty(r), 2: empty(n - r - 2)}))
    return tuple(out)


# ---------------------------------------------------------------------------
# Claims over graph corpora

SKIP = object()
Claim = Callable[[Graph, int, Oracle], object]


def _violation(g: Graph, computed: dict, expected: str) -> dict:
    return {"graph": to_edge_list(g), "computed": computed, "expected": expected}


def _basic(g: Graph, k: int, oracle: Oracle) -> dict:
    vals = oracle.values(g, k)
    return {"n": g.n, "k": k, **vals}


def claim_sandwich(g, k, oracle):
    if g.n < 2:
        return SKIP
    v = _basic(g, k, oracle)
    lo = max(v["GAMMA_K"], v["DIM"])
    hi = min(v["GAMMA_K"] + v["DIM"], g.n - 1)
    if not lo <= v["GAMMA_RK"] <= hi:
        return _violation(g, v, f"{lo} <= GAMMA_RK <= {hi}")
    return None


def claim_diam_collapse(g, k, oracle):
    met = oracle.metrics(g)
    if g.n < 2 or k < met.diameter:
        return SKIP
    v = _basic(g, k, oracle)
    if v["GAMMA_RK"] != v["DIM"]:
        return _violation(g, {**v, "diameter": met.diameter}, "GAMMA_RK == DIM")
    return None


def claim_radius_plus1(g, k, oracle):
    met = oracle.metrics(g)
    if g.n < 2 or not (met.radius <= k or met.diameter == k + 1):
        return SKIP
    v = _basic(g, k, oracle)
    if not v["DIM"] <= v["GAMMA_RK"] <= v["DIM"] + 1:
        return _violation(g, {**v, "radius": met.radius, "diameter": met.diameter},
                          "DIM <= GAMMA_RK <= DIM + 1")
    return None


def claim_nk_upper(g, k, oracle):
    met = oracle.metrics(g)
    if g.n < k + 1 or g.n < 2 or met.diameter < k:
        return SKIP
    v = _basic(g, k, oracle)
    bound = g.n - k * v["GAMMA_K"]
    if v["GAMMA_RK"] > bound:
        return _violation(g, v, f"GAMMA_RK <= n - k*GAMMA_K = {bound}")
    return None


def diameter_upper_bound(n: int, d: int, k: int) -> int:
    if d <= k:
        return n - d
    if d <= 2 * k:
        return n - d + 1
    return n - d + d // (2 * k + 1)


def claim_diam_upper(g, k, oracle):
    if g.n < 2:
        return SKIP
    d = oracle.metrics(g).diameter
    grk = oracle.value(g, "GAMMA_RK", k)
    bound = diameter_upper_bound(g.n, d, k)
    if grk > bound:
        return _violation(g, {"n": g.n, "k": k, "diameter": d, "GAMMA_RK": grk},
                          f"GAMMA_RK <= {bound}")
    return None


def claim_lower_trio(g, k, oracle):
    if g.n < 2:
        return SKIP
    met = oracle.metrics(g)
    grk = oracle.value(g, "GAMMA_RK", k)
    scaled = (2 * k + 1) * grk
    failures = []
    if scaled < met.diameter + 1:
        failures.append("(2k+1)*GAMMA_RK >= diameter + 1")
    if scaled < 2 * met.radius:
        failures.append("(2k+1)*GAMMA_RK >= 2*radius")
    if met.girth != float("inf") and scaled < met.girth:
        failures.append("(2k+1)*GAMMA_RK >= girth")
    if failures:
        girth = None if met.girth == float("inf") else int(met.girth)
        return _violation(g, {"n": g.n, "k": k, "GAMMA_RK": grk, "diameter": met.diameter,
                              "radius": met.radius, "girth": girth}, "; ".join(failures))
    return None


def claim_ld_dominates(g, k, oracle):
    grk = oracle.value(g, "GAMMA_RK", k)
    ld = oracle.value(g, "LD_K", k)
    if grk > ld:
        return _violation(g, {"n": g.n, "k": k, "GAMMA_RK": grk, "LD_K": ld}, "GAMMA_RK <= LD_K")
    return None


def _is_path(g: Graph) -> bool:
    return g.m == g.n - 1 and max(g.degrees, default=0) <= 2 and is_connected(g)


def claim_n_minus_i(g, k, oracle):
    if k < 2 or g.n < 3 or _is_path(g):
        return SKIP
    v = _basic(g, k, oracle)
    for i in range(1, k + 1):
        if g.n >= i + 2 and (v["GAMMA_RK"] == g.n - i) != (v["DIM"] == g.n - i):
            return _violation(g, {**v, "i": i}, f"GAMMA_RK == n-{i} iff DIM == n-{i}")
    return None


def claim_char1(g, k, oracle):
    if g.n < 2:
        return SKIP
    grk = oracle.value(g, "GAMMA_RK", k)
    member = g.n <= k + 1 and _member(g, (path(g.n),))
    if (grk == 1) != member:
        return _violation(g, {"n": g.n, "k": k, "GAMMA_RK": grk, "is_short_path": member},
                          "GAMMA_RK == 1 iff G is a path on at most k+1 vertices")
    return None


def claim_char_n2(g, k, oracle):
    if k < 2 or g.n < 4:
        return SKIP
    grk = oracle.value(g, "GAMMA_RK", k)
    member = _member(g, gamma_rk_n2_family(g.n, k))
    if (grk == g.n - 2) != member:
        return _violation(g, {"n": g.n, "k": k, "GAMMA_RK": grk, "in_family": member},
                          "GAMMA_RK == n-2 iff G is in the characterized family")
    return None


def claim_char_n1(g, k, oracle):
    if k < 2 or g.n < 2:
        return SKIP
    grk = oracle.value(g, "GAMMA_RK", k)
    member = g.m == g.n * (g.n - 1) // 2
    if (grk == g.n - 1) != member:
        return _violation(g, {"n": g.n, "k": k, "GAMMA_RK": grk, "is_complete": member},
                          "GAMMA_RK == n-1 iff G is complete")
    return None


def claim_max_order(g, k, oracle):
    grk = oracle.value(g, "GAMMA_RK", k)
    bound = fam.predicted_max_order(k, grk)
    if g.n > bound:
        return _violation(g, {"n": g.n, "k": k, "GAMMA_RK": grk}, f"n <= {bound}")
    return None


def claim_no_dim1_triple(g, k, oracle):
    if k < 2:
        return SKIP
    v = _basic(g, k, oracle)
    if v["DIM"] == 1 and v["GAMMA_K"] >= 2 and v["GAMMA_RK"] == v["GAMMA_K"] + 1:
        return _violation(g, v, "no graph has DIM=1, GAMMA_K>=2, GAMMA_RK=GAMMA_K+1")
    return None


def _ng_values(g, k, oracle):
    gc = complement(g)
    a = oracle.value(g, "GAMMA_RK", k, allow_disconnected=True)
    b = oracle.value(gc, "GAMMA_RK", k, allow_disconnected=True)
    return gc, a, b


def claim_ng_any(g, k, oracle):
    """Sum/product bounds over all graphs of order n >= 2, disconnected ones included."""
    if g.n < 2 or k < 2:
        return SKIP
    n = g.n
    gc, a, b = _ng_values(g, k, oracle)
    s, p = a + b, a * b
    lo_s, lo_p = (3, 2) if k == 2 else (2, 1)
    problems = []
    if not lo_s <= s <= 2 * n - 1:
        problems.append(f"{lo_s} <= sum <= {2 * n - 1}")
    if not lo_p <= p <= n * (n - 1):
        problems.append(f"{lo_p} <= product <= {n * (n - 1)}")
    if k == 2:
        lower_family = [complete(2), empty(2), path(3), complement(path(3))]
    else:
        lower_family = [path(4)]
    in_lower = n <= 4 and _member(g, [h for h in lower_family if h.n == n])
    if (s == lo_s) != in_lower or (p == lo_p) != in_lower:
        problems.append("lower bounds attained iff G is in the lower equality list")
    in_upper = g.m in (0, n * (n - 1) // 2)
    if (s == 2 * n - 1) != in_upper or (p == n * (n - 1)) != in_upper:
        problems.append("upper bounds attained iff G is complete or edgeless")
    if problems:
        return _violation(g, {"n": n, "k": k, "GAMMA_RK": a, "GAMMA_RK_complement": b},
                          "; ".join(problems))
    return None


def claim_ng_connected(g, k, oracle):
    """Bounds when both G and its complement are connected (n >= 4)."""
    if g.n < 4 or k < 2 or not is_connected(g):
        return SKIP
    gc = complement(g)
    if not is_connected(gc):
        return SKIP
    n = g.n
    a = oracle.value(g, "GAMMA_RK", k)
    b = oracle.value(gc, "GAMMA_RK", k)
    s, p = a + b, a * b
    problems = []
    if k == 2:
        lo_s, hi_s, lo_p, hi_p = 4, 2 * n - 4, 4, (n - 2) ** 2
        upper_family: Sequence[Graph] = [path(4)] if n == 4 else []
    else:
        lo_s, hi_s, lo_p, hi_p = 2, 2 * n - 6, 1, (n - 3) ** 2
        upper_family = ng_upper_family(n)
    if not (lo_s <= s <= hi_s and lo_p <= p <= hi_p):
        problems.append(f"{lo_s} <= sum <= {hi_s} and {lo_p} <= product <= {hi_p}")
    in_upper = _member(g, upper_family)
    if (s == hi_s) != in_upper or (p == hi_p) != in_upper:
        problems.append("upper bounds attained iff G is in the upper equality list")
    if k >= 3:
        in_lower = n == 4 and _member(g, [path(4)])
        if (s == lo_s) != in_lower or (p == lo_p) != in_lower:
            problems.append("lower bounds attained iff G is P4")
    if problems:
        return _violation(g, {"n": n, "k": k, "GAMMA_RK": a, "GAMMA_RK_complement": b},
                          "; ".join(problems))
    return None


def _run_corpus(check_id: str, claims: Sequence[Claim], corpus: CorpusSpec, ks: Iterable[int],
                oracle: Oracle) -> list[CheckResult]:
    results = []
    for slice_params, graphs in corpus_slices(corpus):
        for k in ks:
            start = time.perf_counter()
            cases = skipped = 0
            cex = None
            for g in graphs:
                outcomes = [c(g, k, oracle) for c in claims]
                if all(o is SKIP for o in outcomes):
                    skipped += 1
                    continue
                cases += 1
                bad = [o for o in outcomes if o is not SKIP and o is not None]
                if bad:
                    cex = bad[0]
                    break
            status = Status.FAIL if cex else (Status.PASS if cases else Status.SKIPPED)
            params = {**slice_params, "k": k, "cases": cases, "skipped": skipped}
            results.append(CheckResult(check_id, params, status, cex, _ms(start)))
    return results


def _ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


def _row(check_id: str, params: dict, ok: bool, start: float, computed=None, expected=None,
         g: Graph | None = None) -> CheckResult:
    cex = None
    if not ok:
        cex = {"computed": computed, "expected": expected}
        if g is not None:
            cex["graph"] = to_edge_list(g)
    return CheckResult(check_id, params, Status.PASS if ok else Status.FAIL, cex, _ms(start))


# ---------------------------------------------------------------------------
# Family checks


def check_path_formula(corpus, ks, oracle, *, n_min=2):
    out = []
    for k in ks:
        for n in range(n_min, corpus.n_max + 1):
            start = time.perf_counter()
            g = path(n)
            got = oracle.value(g, "GAMMA_RK", k)
            want = fam.predicted_gamma_rk_path(k, n)
            out.append(_row("CHK_PATH_FORMULA", {"k": k, "n": n}, got == want, start,
                            {"GAMMA_RK": got}, {"GAMMA_RK": want}, g))
    return out


def check_cycle_formula(corpus, ks, oracle):
    out = []
    for k in ks:
        for n in range(3, corpus.n_max + 1):
            start = time.perf_counter()
            g = cycle(n)
            got = oracle.value(g, "GAMMA_RK", k)
            want = fam.predicted_gamma_rk_cycle(k, n)
            out.append(_row("CHK_CYCLE_FORMULA", {"k": k, "n": n}, got == want, start,
                            {"GAMMA_RK": got}, {"GAMMA_RK": want}, g))
        start = time.perf_counter()
        n = 4 * k + 2
        got = oracle.value(cycle(n), "GAMMA_RK", k)
        out.append(_row("CHK_CYCLE_FORMULA", {"k": k, "n": n, "case": "4k+2"}, got == 3, start,
                        {"GAMMA_RK": got}, {"GAMMA_RK": 3}, cycle(n)))
    return out


def check_cycle_resolving(corpus, ks, oracle):
    out = []
    for k in ks:
        for n in range(2 * k + 2, corpus.n_max + 1):
            start = time.perf_counter()
            g = cycle(n)
            got = is_resolving(g, all_pairs_distances(g), [0, 2 * k + 1])
            want = n != 4 * k + 2
            out.append(_row("CHK_CYCLE_RESOLVING", {"k": k, "n": n, "expect_resolving": want},
                            got == want, start, {"resolving": got}, {"resolving": want}, g))
    return out


def check_t_gamma(ks, gammas, oracle, pairs=None):
    out = []
    todo = pairs if pairs is not None else [(k, gm) for k in ks for gm in gammas]
    for k, gm in todo:
        start = time.perf_counter()
        g = fam.t_gamma(k, gm)
        got = oracle.values(g, k, ("GAMMA_K", "GAMMA_RK"))
        want = {"GAMMA_K": gm, "GAMMA_RK": g.n - k * gm}
        out.append(_row("CHK_NK_UPPER", {"corpus": "t_gamma", "k": k, "gamma": gm, "n": g.n},
                        got == want, start, got, want, g))
    return out


def check_triples(ks, max_bg, max_alpha, oracle, corpus=None):
    out = []
    for k in ks:
        for b, g_, a in itertools.product(range(1, max_bg + 1), range(1, max_bg + 1),
                                          range(1, max_alpha + 1)):
            start = time.perf_counter()
            target = fam.TripleTarget(k, b, g_, a)
            in_range = max(b, g_) <= a <= b + g_
            excluded = b == 1 and g_ >= 2 and a == g_ + 1
            params = {"k": k, "beta": b, "gamma": g_, "alpha": a}
            try:
                graph = fam.realize_triple(target)
            except InfeasibleTripleError:
                if in_range:
                    out.append(_row("CHK_TRIPLES", {**params, "expect": "infeasible"}, excluded,
                                    start, "infeasible", "realizable"))
                continue
            if not in_range or excluded:
                out.append(_row("CHK_TRIPLES", params, False, start, "realized", "infeasible", graph))
                continue
            got = oracle.values(graph, k)
            want = {"DIM": b, "GAMMA_K": g_, "GAMMA_RK": a}
            is_tree = graph.m == graph.n - 1 and is_connected(graph)
            out.append(_row("CHK_TRIPLES", {**params, "n": graph.n}, got == want and is_tree,
                            start, {**got, "tree": is_tree}, {**want, "tree": True}, graph))
    if corpus is not None:
        out += _run_corpus("CHK_TRIPLES", [claim_no_dim1_triple], corpus, ks, oracle)
    return out


def check_extremal(pairs, oracle):
    out = []
    for k, r in pairs:
        start = time.perf_counter()
        g = fam.extremal_gr(k, r)
        vectors = fam.extremal_vectors(k, r)
        dm = all_pairs_distances(g)
        base = list(range(r))
        solver = Solver(g, dm, cap=max(oracle.cap, g.n))
        value = solver.minimum(Predicate.K_RESOLVING_DOMINATING, k).value
        smaller = solver.find(Predicate.K_RESOLVING_DOMINATING, k, r - 1)
        # Base vertex i is the vector whose zero sits in coordinate i.
        dist_ok = all(dm[q, i] == vec[i]
                      for q, vec in enumerate(vectors) if q >= r for i in range(r))
        computed = {
            "order": g.n, "GAMMA_RK": value, "feasible_at_r_minus_1": smaller is not None,
            "connected": is_connected(g),
            "base_resolving": is_resolving(g, dm, base),
            "base_dominating": is_distance_k_dominating(g, dm, base, k),
            "base_distances_match_coordinates": bool(dist_ok),
        }
        expected = {"order": fam.predicted_max_order(k, r), "GAMMA_RK": r,
                    "feasible_at_r_minus_1": False, "connected": True, "base_resolving": True,
                    "base_dominating": True, "base_distances_match_coordinates": True}
        out.append(_row("CHK_MAXORDER", {"k": k, "r": r}, computed == expected, start,
                        computed, expected))
    return out


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class Check:
    check_id: str
    claim: str
    run: Callable[..., list[CheckResult]]


def _corpus_check(check_id: str, *claims: Claim):
    def run(corpus, ks, oracle, **_):
        return _run_corpus(check_id, claims, corpus, ks, oracle)
    return run


def _graph_corpora(level: str, n_max: int, random_count: int, seed: int):
    exhaustive = CorpusSpec("EXHAUSTIVE", n_max=n_max)
    rand = CorpusSpec("RANDOM", n_min=2, n_max=12 if level == "DESK" else 8,
                      count=random_count, seed=seed)
    return [exhaustive, rand]


def _multi(check_id: str, *claims: Claim):
    def run(corpus, ks, oracle, *, corpora=None, **_):
        out = []
        for c in ([corpus] if corpus is not None else corpora):
            out += _run_corpus(check_id, claims, c, ks, oracle)
        return out
    return run


def _nk_run(corpus, ks, oracle, *, corpora=None, t_gamma_pairs=None, **_):
    out = []
    for c in ([corpus] if corpus is not None else corpora):
        out += _run_corpus("CHK_NK_UPPER", [claim_nk_upper], c, ks, oracle)
    pairs = t_gamma_pairs or [(k, gm) for k in ks for gm in (1, 2, 3)]
    return out + check_t_gamma(ks, (), oracle, pairs=pairs)


def _triples_run(corpus, ks, oracle, *, max_bg=3, max_alpha=6, **_):
    return check_triples(ks, max_bg, max_alpha, oracle, corpus)


def _maxorder_run(corpus, ks, oracle, *, pairs=((1, 2), (2, 2), (1, 3)), **_):
    out = check_extremal(pairs, oracle)
    if corpus is not None:
        out += _run_corpus("CHK_MAXORDER", [claim_max_order], corpus, ks, oracle)
    return out


REGISTRY: dict[str, Check] = {c.check_id: c for c in [
    Check("CHK_SANDWICH", "max(gamma_k, dim) <= gamma_rk <= min(gamma_k + dim, n - 1)",
          _multi("CHK_SANDWICH", claim_sandwich)),
    Check("CHK_DIAM_COLLAPSE", "k >= diam(G) implies gamma_rk = dim",
          _multi("CHK_DIAM_COLLAPSE", claim_diam_collapse)),
    Check("CHK_PATH_FORMULA", "closed form of gamma_rk(P_n)",
          lambda corpus, ks, oracle, **_: check_path_formula(corpus, ks, oracle)),
    Check("CHK_CYCLE_FORMULA", "closed form of gamma_rk(C_n), including C_{4k+2}",
          lambda corpus, ks, oracle, **_: check_cycle_formula(corpus, ks, oracle)),
    Check("CHK_RADIUS_PLUS1", "rad <= k or diam = k+1 implies dim <= gamma_rk <= dim + 1",
          _multi("CHK_RADIUS_PLUS1", claim_radius_plus1)),
    Check("CHK_NK_UPPER", "gamma_rk <= n - k*gamma_k (n >= k+1, diam >= k); equality on T_gamma",
          _nk_run),
    Check("CHK_DIAM_UPPER", "gamma_rk <= n - d (+1, or + floor(d/(2k+1))) by diameter range",
          _multi("CHK_DIAM_UPPER", claim_diam_upper)),
    Check("CHK_LOWER_TRIO", "(2k+1)*gamma_rk >= d + 1, 2*rad and girth",
          _multi("CHK_LOWER_TRIO", claim_lower_trio)),
    Check("CHK_LEM22", "non-path G, k >= 2, 1 <= i <= k: gamma_rk = n - i iff dim = n - i",
          _corpus_check("CHK_LEM22", claim_n_minus_i)),
    Check("CHK_CHAR1", "gamma_rk = 1 iff G is P_i with 2 <= i <= k+1",
          _corpus_check("CHK_CHAR1", claim_char1)),
    Check("CHK_CHAR_N2", "gamma_rk = n - 2 iff G is in the K_{s,t} / join family (plus P_4 at k = 2)",
          _corpus_check("CHK_CHAR_N2", claim_char_n2)),
    Check("CHK_CHAR_N1", "k >= 2: gamma_rk = n - 1 iff G = K_n",
          _corpus_check("CHK_CHAR_N1", claim_char_n1)),
    Check("CHK_CYCLE_RESOLVING", "{0, 2k+1} resolves C_n for n >= 2k+2 exactly when n != 4k+2",
          lambda corpus, ks, oracle, **_: check_cycle_resolving(corpus, ks, oracle)),
    Check("CHK_TRIPLES", "realizable (dim, gamma_k, gamma_rk) triples by trees", _triples_run),
    Check("CHK_MAXORDER", "maximum order r + r*sum_p (2p+1)^(r-1) and its extremal graph",
          _maxorder_run),
    Check("CHK_NG2", "k = 2 Nordhaus-Gaddum bounds over all graphs",
          _corpus_check("CHK_NG2", claim_ng_any)),
    Check("CHK_NGK", "k >= 3 Nordhaus-Gaddum bounds over all graphs",
          _corpus_check("CHK_NGK", claim_ng_any)),
    Check("CHK_NG_CONNECTED", "Nordhaus-Gaddum bounds when G and its complement are connected",
          _corpus_check("CHK_NG_CONNECTED", claim_ng_connected)),
    Check("CHK_LD_DOMINATES", "gamma_rk <= LD_k", _corpus_check("CHK_LD_DOMINATES",
                                                               claim_ld_dominates)),
]}

CHECK_IDS = tuple(sorted(REGISTRY))
LEVELS = ("SMOKE", "DESK")


def level_plan(level: str, seed: int = DEFAULT_SEED) -> dict[str, dict]:
    """Corpus, k range and options for every check at a preset level."""
    level = level.upper()
    if level not in LEVELS:
        raise ParameterError(f"unknown level {level!r}; expected one of {LEVELS}")
    desk = level == "DESK"
    n_ex = 6 if desk else 5
    corpora = _graph_corpora(level, n_ex, 500 if desk else 20, seed)
    exhaustive = corpora[0]
    every = CorpusSpec("EXHAUSTIVE", n_min=4, n_max=n_ex, include_disconnected=True)
    ks13 = (1, 2, 3) if desk else (1, 2)
    return {
        "CHK_SANDWICH": {"corpus": None, "ks": ks13, "corpora": corpora},
        "CHK_DIAM_COLLAPSE": {"corpus": None, "ks": ks13, "corpora": corpora},
        "CHK_RADIUS_PLUS1": {"corpus": None, "ks": ks13, "corpora": corpora},
        "CHK_NK_UPPER": {"corpus": None, "ks": ks13, "corpora": corpora,
                         "t_gamma_pairs": [(1, 2), (2, 2), (2, 3), (3, 2)] if desk else [(1, 2), (2, 2)]},
        "CHK_DIAM_UPPER": {"corpus": None, "ks": ks13, "corpora": corpora},
        "CHK_LOWER_TRIO": {"corpus": None, "ks": ks13, "corpora": corpora},
        "CHK_PATH_FORMULA": {"corpus": CorpusSpec("FAMILY", n_max=16 if desk else 10),
                             "ks": (1, 2, 3, 4) if desk else (1, 2)},
        "CHK_CYCLE_FORMULA": {"corpus": CorpusSpec("FAMILY", n_max=16 if desk else 12),
                              "ks": (1, 2, 3) if desk else (1, 2)},
        "CHK_CYCLE_RESOLVING": {"corpus": CorpusSpec("FAMILY", n_max=20 if desk else 12),
                                "ks": (1, 2, 3, 4) if desk else (1, 2)},
        "CHK_LEM22": {"corpus": exhaustive, "ks": (2, 3)},
        "CHK_CHAR1": {"corpus": exhaustive, "ks": (1, 2, 3) if desk else (1, 2)},
        "CHK_CHAR_N2": {"corpus": exhaustive, "ks": (2, 3)},
        "CHK_CHAR_N1": {"corpus": exhaustive, "ks": (2, 3)},
        "CHK_TRIPLES": {"corpus": exhaustive, "ks": (2, 3) if desk else (2,),
                        "max_bg": 3 if desk else 2, "max_alpha": 6 if desk else 4},
        "CHK_MAXORDER": {"corpus": exhaustive, "ks": ks13,
                         "pairs": ((1, 2), (2, 2), (1, 3)) if desk else ((1, 2),)},
        "CHK_NG2": {"corpus": every, "ks": (2,)},
        "CHK_NGK": {"corpus": every, "ks": (3,)},
        "CHK_NG_CONNECTED": {"corpus": replace(every, include_disconnected=False),
                             "ks": (2, 3)},
        "CHK_LD_DOMINATES": {"corpus": exhaustive, "ks": (1, 2, 3) if desk else (1, 2)},
    }


def normalize_check_id(check_id: str) -> str:
    cid = check_id.upper()
    if cid not in REGISTRY:
        raise ParameterError(f"unknown check {check_id!r}")
    return cid


def run_check(check_id: str, corpus: CorpusSpec | None = None,
              k_range: Sequence[int] | None = None, *, level: str = "DESK",
              oracle: Oracle | None = None, n_max: int | None = None, seed: int | None = None,
              timing: bool = True, **options) -> list[CheckResult]:
    """Run one registered check.

    Unspecified corpus, ``k_range`` and options fall back to the preset of
    ``level``; passing ``corpus`` replaces the level's corpora entirely.
    ``n_max`` caps the order of the preset corpora (exhaustive ones, and the
    sweep length of family checks); ``seed`` reseeds the random corpus.
    """
    cid = normalize_check_id(check_id)
    plan = dict(level_plan(level, DEFAULT_SEED if seed is None else seed)[cid])
    if corpus is not None:
        plan["corpus"] = corpus
        plan.pop("corpora", None)
    elif n_max is not None:
        def cap(c: CorpusSpec) -> CorpusSpec:
            return replace(c, n_max=n_max) if c.kind != "RANDOM" else c
        if plan["corpus"] is not None:
            plan["corpus"] = cap(plan["corpus"])
        if "corpora" in plan:
            plan["corpora"] = [cap(c) for c in plan["corpora"]]
    if k_range is not None:
        plan["ks"] = tuple(k_range)
    plan.update(options)
    ks = plan.pop("ks")
    corpus_arg = plan.pop("corpus")
    for k in ks:
        if k < 1:
            raise ParameterError(f"k must be positive, got {k}")
    results = REGISTRY[cid].run(corpus_arg, ks, oracle or DEFAULT_ORACLE, **plan)
    if not timing:
        for r in results:
            r.elapsed_ms = 0
    return results


def _sort_key(r: CheckResult) -> tuple:
    return (r.check_id, json.dumps(r.params, sort_keys=True))


def build_report(level: str, results: Sequence[CheckResult], run_id: str | None = None) -> dict:
    rows = sorted(results, key=_sort_key)
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    for r in rows:
        summary[r.status.value.lower()] += 1
    if run_id is None:
        ids = ",".join(sorted({r.check_id for r in rows}))
        run_id = f"{level.lower()}-" + hashlib.sha1(ids.encode()).hexdigest()[:12]
    return {"run_id": run_id, "level": level.upper(), "checks": [r.to_dict() for r in rows],
            "summary": summary}


def _run_one(args: tuple) -> list[CheckResult]:
    cid, kwargs = args
    return run_check(cid, **kwargs)


def run_all(level: str = "SMOKE", *, check_ids: Sequence[str] | None = None,
            oracle: Oracle | None = None, parallel: int = 1, **kwargs) -> dict:
    """Run the registry at a preset level and assemble the JSON-ready report.

    Extra keyword arguments (``k_range``, ``n_max``, ``seed``, ``timing``) are
    forwarded to :func:`run_check`.  With ``parallel > 1`` checks run in worker
    processes, each with its own invariant cache.
    """
    level = level.upper()
    level_plan(level)
    ids = [normalize_check_id(c) for c in (check_ids or CHECK_IDS)]
    kwargs["level"] = level
    results: list[CheckResult] = []
    if parallel > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=parallel) as pool:
            for chunk in pool.map(_run_one, [(cid, kwargs) for cid in ids]):
                results.extend(chunk)
    else:
        for cid in ids:
            results.extend(run_check(cid, oracle=oracle, **kwargs))
    return build_report(level, results)


def failed(report: dict) -> bool:
    return report["summary"]["fail"] > 0


def reverify(counterexample: dict, k: int) -> dict[str, int]:
    """Recompute DIM, GAMMA_K, GAMMA_RK and LD_K of a counterexample graph from scratch."""
    from .graph import from_edge_list

    g = from_edge_list(counterexample["graph"])
    fresh = Oracle()
    if not is_connected(g):
        return {"GAMMA_RK": fresh.value(g, "GAMMA_RK", k, allow_disconnected=True)}
    return fresh.values(g, k, ("DIM", "GAMMA_K", "GAMMA_RK", "LD_K"))
