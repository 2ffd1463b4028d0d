"""Exact minimum resolving / k-dominating / k-resolving-dominating / k-locating sets.

Every predicate handled here is a hitting-set condition: a vertex set is
feasible iff it meets each mask of a fixed family of vertex bit masks.

* resolving:   for each pair ``x < y`` the mask of vertices ``w`` with
  ``d(w, x) != d(w, y)``, plus ``x`` and ``y`` themselves (a pair with an
  endpoint inside the set needs no distinguishing);
* k-dominating: the closed k-ball of every vertex;
* k-locating-dominating: closed k-balls, and for each pair the symmetric
  difference of the open k-neighborhoods plus the pair itself.

The search walks cardinalities upward from a lower bound and, for each
cardinality, visits subsets in lexicographic order; the first feasible one is
returned, so witnesses are the lexicographically smallest optimal sets.  Up to
:data:`DENSE_MAX_ORDER` vertices the enumeration is done for all subsets at
once with numpy; above that a depth-first walk prunes prefixes that can no
longer hit every mask.

The module also keeps the straightforward predicates (signature sorting for
resolvability, ball coverage for domination) and :func:`naive_minimum_set`,
which enumerates subsets against those predicates without any pruning.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import ConnectivityError, ParameterError, SizeGuardError
from .graph import UNREACHABLE, Graph, all_pairs_distances, iter_bits, mask_of, twin_classes

DEFAULT_CAP = 64
MAX_CAP = 256
DENSE_MAX_ORDER = 12


class Predicate(enum.Enum):
    RESOLVING = "resolving"
    K_DOMINATING = "k_dominating"
    K_RESOLVING_DOMINATING = "k_resolving_dominating"
    K_LOCATING_DOMINATING = "k_locating_dominating"

    @property
    def invariant(self) -> str:
        return _INVARIANT_NAMES[self]

    @property
    def needs_k(self) -> bool:
        return self is not Predicate.RESOLVING


_INVARIANT_NAMES = {
    Predicate.RESOLVING: "DIM",
    Predicate.K_DOMINATING: "GAMMA_K",
    Predicate.K_RESOLVING_DOMINATING: "GAMMA_RK",
    Predicate.K_LOCATING_DOMINATING: "LD_K",
}
PREDICATE_OF = {name: pred for pred, name in _INVARIANT_NAMES.items()}
INVARIANTS = tuple(_INVARIANT_NAMES.values())

_RESOLVING_TYPE = {Predicate.RESOLVING, Predicate.K_RESOLVING_DOMINATING,
                   Predicate.K_LOCATING_DOMINATING}
_FAMILIES = {
    Predicate.RESOLVING: ("pairs",),
    Predicate.K_DOMINATING: ("balls",),
    Predicate.K_RESOLVING_DOMINATING: ("pairs", "balls"),
    Predicate.K_LOCATING_DOMINATING: ("balls", "ld_pairs"),
}


@dataclass(frozen=True)
class WitnessedInvariant:
    """An exact invariant value together with a set attaining it."""

    name: str
    k: int | None
    value: int
    witness: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"name": self.name, "k": self.k, "value": self.value,
                "witness": list(self.witness)}


def as_predicate(p: Predicate | str) -> Predicate:
    if isinstance(p, Predicate):
        return p
    key = str(p).strip()
    if key.upper() in PREDICATE_OF:
        return PREDICATE_OF[key.upper()]
    try:
        return Predicate[key.upper()]
    except KeyError:
        raise ParameterError(f"unknown predicate {p!r}") from None


# ---------------------------------------------------------------------------
# Direct predicates


def _vertex_list(g: Graph, s: Iterable[int]) -> list[int]:
    members = sorted(set(int(v) for v in s))
    if members and (members[0] < 0 or members[-1] >= g.n):
        raise ParameterError(f"vertex set {members} not contained in [0, {g.n})")
    return members


def _require_connected(dm: np.ndarray) -> None:
    if (dm == UNREACHABLE).any():
        raise ConnectivityError("graph is disconnected")


def _check_k(k: int) -> int:
    if k is None or int(k) < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")
    return int(k)


def _all_distinct(rows: np.ndarray) -> bool:
    if len(rows) <= 1:
        return True
    if rows.shape[1] == 0:
        return False
    return len(np.unique(rows, axis=0)) == len(rows)


def is_distance_k_dominating(g: Graph, dm: np.ndarray, s: Iterable[int], k: int) -> bool:
    """True iff every vertex outside ``s`` lies within distance ``k`` of ``s``."""
    k = _check_k(k)
    members = _vertex_list(g, s)
    if g.n == 0:
        return True
    if not members:
        return False
    sub = dm[:, members]
    near = ((sub != UNREACHABLE) & (sub <= k)).any(axis=1)
    return bool(near.all())


def is_resolving(g: Graph, dm: np.ndarray, w: Iterable[int], *,
                 allow_disconnected: bool = False) -> bool:
    """True iff vertices outside ``w`` have pairwise distinct distance vectors to ``w``.

    With ``allow_disconnected`` an unreachable entry acts as an infinite
    distance: equal to itself and different from every finite value.
    """
    if not allow_disconnected:
        _require_connected(dm)
    members = _vertex_list(g, w)
    inside = set(members)
    outside = [v for v in range(g.n) if v not in inside]
    return _all_distinct(dm[np.ix_(outside, members)])


def is_k_locating_dominating(g: Graph, dm: np.ndarray, x: Iterable[int], k: int, *,
                             allow_disconnected: bool = False) -> bool:
    """True iff each outside vertex has a nonempty, distinct trace ``N_k(v) & x``.

    ``N_k(v)`` is the open k-neighborhood ``{u : 0 < d(v, u) <= k}``.
    """
    k = _check_k(k)
    if not allow_disconnected:
        _require_connected(dm)
    members = _vertex_list(g, x)
    inside = set(members)
    outside = [v for v in range(g.n) if v not in inside]
    if not outside:
        return True
    sub = dm[np.ix_(outside, members)]
    traces = (sub > 0) & (sub <= k)
    if not traces.any(axis=1).all():
        return False
    return _all_distinct(traces)


def satisfies(g: Graph, dm: np.ndarray, predicate: Predicate | str, s: Iterable[int],
              k: int | None = None, *, allow_disconnected: bool = False) -> bool:
    predicate = as_predicate(predicate)
    s = list(s)
    if predicate is Predicate.RESOLVING:
        return is_resolving(g, dm, s, allow_disconnected=allow_disconnected)
    if predicate is Predicate.K_DOMINATING:
        return is_distance_k_dominating(g, dm, s, k)
    if predicate is Predicate.K_RESOLVING_DOMINATING:
        return (is_distance_k_dominating(g, dm, s, k)
                and is_resolving(g, dm, s, allow_disconnected=allow_disconnected))
    return is_k_locating_dominating(g, dm, s, k, allow_disconnected=allow_disconnected)


# ---------------------------------------------------------------------------
# Hitting-set search


@lru_cache(maxsize=None)
def _dense_tables(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    subsets = np.arange(1 << n, dtype=np.int64)
    popcount = np.bitwise_count(subsets).astype(np.int64)
    # Bit i moved to position n-1-i: a larger reversed value means a lexicographically smaller set.
    rev = np.zeros_like(subsets)
    for i in range(n):
        rev |= ((subsets >> i) & 1) << (n - 1 - i)
    return subsets, popcount, rev


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Drop duplicates and supersets; the result is sorted by popcount."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (x.bit_count(), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _pair_masks(dm: np.ndarray, n: int, equal_rows: np.ndarray | None = None) -> list[int]:
    """One mask per unordered pair: bits where column x and column y of ``dm`` differ, plus x, y."""
    if n < 2:
        return []
    xs, ys = np.triu_indices(n, 1)
    differ = dm[:, xs] != dm[:, ys] if equal_rows is None else equal_rows
    if n <= 62:
        weights = (np.int64(1) << np.arange(n, dtype=np.int64))
        base = (differ * weights[:, None]).sum(axis=0)
        return [int(b) | (1 << int(x)) | (1 << int(y)) for b, x, y in zip(base, xs, ys)]
    out = []
    for col, x, y in zip(differ.T, xs, ys):
        out.append(mask_of(np.flatnonzero(col).tolist()) | (1 << int(x)) | (1 << int(y)))
    return out


@dataclass
class Solver:
    """Search state shared by all invariants of one graph.

    Holds the distance matrix and caches the constraint masks (and, for small
    orders, the per-subset feasibility arrays) so that several invariants and
    several values of ``k`` reuse the same work.  ``strategy`` selects the
    search: ``"dense"`` scores every subset at once (orders up to
    ``DENSE_MAX_ORDER``), ``"dfs"`` runs the pruned branch search, and
    ``"auto"`` picks by order.
    """

    g: Graph
    dm: np.ndarray | None = None
    allow_disconnected: bool = False
    cap: int = DEFAULT_CAP
    strategy: str = "auto"
    _masks: dict = field(default_factory=dict, repr=False)
    _ok: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.g.n == 0:
            raise ParameterError("solvers need a graph with at least one vertex")
        if self.cap > MAX_CAP:
            raise SizeGuardError(f"cap {self.cap} exceeds the supported maximum {MAX_CAP}")
        if self.g.n > self.cap:
            raise SizeGuardError(f"graph order {self.g.n} exceeds the size cap {self.cap}")
        if self.strategy not in ("auto", "dense", "dfs"):
            raise ParameterError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "dense" and self.g.n > DENSE_MAX_ORDER:
            raise SizeGuardError(f"dense search is limited to n <= {DENSE_MAX_ORDER}")
        if self.dm is None:
            self.dm = all_pairs_distances(self.g)
        if not self.allow_disconnected:
            _require_connected(self.dm)

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def dense(self) -> bool:
        return self.strategy == "dense" or (self.strategy == "auto" and self.n <= DENSE_MAX_ORDER)

    # -- constraint families ------------------------------------------------

    def masks(self, family: str, k: int | None) -> list[int]:
        key = (family, k)
        if key not in self._masks:
            self._masks[key] = self._build(family, k)
        return self._masks[key]

    def _build(self, family: str, k: int | None) -> list[int]:
        dm, n = self.dm, self.n
        if family == "pairs":
            return _pair_masks(dm, n)
        reach = (dm != UNREACHABLE) & (dm <= k)
        if family == "balls":
            return [mask_of(np.flatnonzero(row).tolist()) for row in reach]
        open_ball = reach & (dm > 0)
        xs, ys = np.triu_indices(n, 1)
        return _pair_masks(dm, n, equal_rows=open_ball[:, xs] != open_ball[:, ys])

    def constraints(self, predicate: Predicate, k: int | None) -> list[int]:
        masks: list[int] = []
        for family in _FAMILIES[predicate]:
            masks.extend(self.masks(family, k))
        return minimal_masks(masks)

    def _dense_ok(self, family: str, k: int | None) -> np.ndarray:
        key = (family, k)
        if key not in self._ok:
            subsets = _dense_tables(self.n)[0]
            ok = np.ones(len(subsets), dtype=bool)
            for m in minimal_masks(self.masks(family, k)):
                ok &= (subsets & m) != 0
            self._ok[key] = ok
        return self._ok[key]

    # -- search ---------------------------------------------------------------

    def lower_bound(self, predicate: Predicate) -> int:
        """Twin-class bound: a resolving-type set omits at most one vertex per twin class."""
        if predicate in _RESOLVING_TYPE:
            return sum(len(c) - 1 for c in twin_classes(self.g))
        return 1

    def _prepare(self, predicate, k, forced) -> tuple[Predicate, int | None, int]:
        predicate = as_predicate(predicate)
        k = _check_k(k) if predicate.needs_k else None
        forced_mask = mask_of(_vertex_list(self.g, forced))
        return predicate, k, forced_mask

    def find(self, predicate: Predicate | str, k: int | None, size: int,
             forced: Iterable[int] = ()) -> tuple[int, ...] | None:
        """Lexicographically smallest feasible set of exactly ``size`` vertices, or None."""
        predicate, k, forced_mask = self._prepare(predicate, k, forced)
        if size < forced_mask.bit_count() or size > self.n:
            return None
        if self.dense:
            return self._dense(predicate, k, forced_mask, size)
        return _dfs(self.n, self.constraints(predicate, k), forced_mask, size)

    def minimum(self, predicate: Predicate | str, k: int | None = None,
                forced: Iterable[int] = ()) -> WitnessedInvariant:
        predicate, k, forced_mask = self._prepare(predicate, k, forced)
        if self.dense:
            witness = self._dense(predicate, k, forced_mask, None)
            return WitnessedInvariant(predicate.invariant, k, len(witness), witness)
        constraints = self.constraints(predicate, k)
        lb = max(self.lower_bound(predicate), forced_mask.bit_count(),
                 _packing_bound([c for c in constraints if not c & forced_mask]))
        for size in range(lb, self.n + 1):
            witness = _dfs(self.n, constraints, forced_mask, size)
            if witness is not None:
                return WitnessedInvariant(predicate.invariant, k, size, witness)
        raise AssertionError("the full vertex set is always feasible")

    def _dense(self, predicate: Predicate, k: int | None, forced_mask: int,
               size: int | None) -> tuple[int, ...] | None:
        subsets, popcount, rev = _dense_tables(self.n)
        ok = np.ones(len(subsets), dtype=bool)
        for family in _FAMILIES[predicate]:
            ok &= self._dense_ok(family, k)
        if forced_mask:
            ok &= (subsets & forced_mask) == forced_mask
        if size is None:
            if not ok.any():
                raise AssertionError("the full vertex set is always feasible")
            size = int(popcount[ok].min())
        cand = np.flatnonzero(ok & (popcount == size))
        if len(cand) == 0:
            return None
        best = int(subsets[cand[np.argmax(rev[cand])]])
        return tuple(iter_bits(best))


def _packing_bound(masks: Sequence[int]) -> int:
    used = 0
    count = 0
    for m in masks:
        if not m & used:
            used |= m
            count += 1
    return count


def _dfs(n: int, constraints: list[int], forced: int, size: int) -> tuple[int, ...] | None:
    """Lexicographically first ``size``-set containing ``forced`` that hits every constraint."""
    need0 = size - forced.bit_count()
    if need0 < 0:
        return None
    available = ((1 << n) - 1) & ~forced

    def walk(unhit: list[int], start: int, need: int, chosen: int) -> int | None:
        allowed = available & ~((1 << start) - 1)
        if allowed.bit_count() < need:
            return None
        if not unhit:
            # Already feasible: complete with the smallest remaining vertices.
            for v in iter_bits(allowed):
                if need == 0:
                    break
                chosen |= 1 << v
                need -= 1
            return chosen
        if need == 0:
            return None
        limit = n
        used = 0
        packed = 0
        for c in unhit:
            r = c & allowed
            if not r:
                return None
            top = r.bit_length() - 1
            if top < limit:
                limit = top
            if not r & used:
                used |= r
                packed += 1
        if packed > need:
            return None
        for v in iter_bits(allowed):
            if v > limit:
                break
            bit = 1 << v
            found = walk([c for c in unhit if not c & bit], v + 1, need - 1, chosen | bit)
            if found is not None:
                return found
        return None

    found = walk([c for c in constraints if not c & forced], 0, need0, forced)
    return None if found is None else tuple(iter_bits(found))


# ---------------------------------------------------------------------------
# Public entry points


def minimum_set(g: Graph, predicate: Predicate | str, k: int | None = None, *,
                forced: Iterable[int] = (), dm: np.ndarray | None = None,
                cap: int = DEFAULT_CAP, allow_disconnected: bool = False,
                strategy: str = "auto") -> WitnessedInvariant:
    """Exact minimum feasible set for ``predicate`` with its lexicographically smallest witness.

    ``forced`` vertices are required members and count toward the value.
    Raises :class:`ConnectivityError` for disconnected graphs unless
    ``allow_disconnected`` is set (unreachable pairs then count as infinitely
    far apart), and :class:`SizeGuardError` when ``g.n`` exceeds ``cap``.
    """
    solver = Solver(g, dm, allow_disconnected=allow_disconnected, cap=cap, strategy=strategy)
    return solver.minimum(predicate, k, forced)


def find_set(g: Graph, predicate: Predicate | str, k: int | None, size: int, *,
             forced: Iterable[int] = (), dm: np.ndarray | None = None,
             cap: int = DEFAULT_CAP, allow_disconnected: bool = False,
             strategy: str = "auto") -> tuple[int, ...] | None:
    solver = Solver(g, dm, allow_disconnected=allow_disconnected, cap=cap, strategy=strategy)
    return solver.find(predicate, k, size, forced)


def all_invariants(g: Graph, k: int, *, dm: np.ndarray | None = None,
                   cap: int = DEFAULT_CAP) -> list[WitnessedInvariant]:
    """DIM, GAMMA_K, GAMMA_RK and LD_K of a connected graph, sharing one distance matrix."""
    solver = Solver(g, dm, cap=cap)
    return [solver.minimum(p, None if p is Predicate.RESOLVING else k) for p in Predicate]


def naive_minimum_set(g: Graph, predicate: Predicate | str, k: int | None = None, *,
                      forced: Iterable[int] = (), dm: np.ndarray | None = None,
                      allow_disconnected: bool = False) -> WitnessedInvariant:
    """Reference search: every subset in (size, lexicographic) order against the direct predicates."""
    predicate = as_predicate(predicate)
    k = _check_k(k) if predicate.needs_k else None
    if dm is None:
        dm = all_pairs_distances(g)
    if not allow_disconnected:
        _require_connected(dm)
    required = set(forced)
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            if required.issubset(combo) and satisfies(g, dm, predicate, combo, k,
                                                      allow_disconnected=allow_disconnected):
                return WitnessedInvariant(predicate.invariant, k, size, combo)
    raise AssertionError("the full vertex set is always feasible")
