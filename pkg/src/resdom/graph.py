"""Immutable simple graphs, hop metrics and graph operations.

Vertices are the integers ``0..n-1``.  Adjacency is kept as one Python int
bit mask per vertex, which is what the solvers consume directly.  Distances
are returned as ``numpy`` integer matrices in which :data:`UNREACHABLE`
marks pairs lying in different components.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ParameterError, ParseError, SizeGuardError

UNREACHABLE = -1
ISOMORPHISM_MAX_ORDER = 8


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``; any iterable of
    2-element pairs is accepted and normalized at construction.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ParameterError(f"edge {(u, v)} has an endpoint outside [0, {self.n})")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighborhood bit mask of every vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_edge_list(self) -> str:
        return to_edge_list(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# ---------------------------------------------------------------------------
# Edge-list format


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def _parse_ints(line: str, lineno: int, count: int) -> list[int]:
    tokens = line.split(" ")
    if len(tokens) != count or any(t == "" for t in tokens):
        raise ParseError(f"expected {count} space-separated integers, got {line!r}", lineno)
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer token in {line!r}", lineno) from None
    if any(not t.isdigit() for t in tokens):
        raise ParseError(f"tokens must be nonnegative integers, got {line!r}", lineno)
    return values


def from_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    Format: a header line ``"<n> <m>"`` followed by exactly ``m`` lines
    ``"<u> <v>"``.  Lines starting with ``#`` are ignored.  Duplicate edges,
    self-loops, out-of-range endpoints and a wrong edge count are rejected
    with a :class:`ParseError` naming the offending line.
    """
    raw_lines = text.split("\n")
    if raw_lines and raw_lines[-1] == "":
        raw_lines.pop()
    content = [(i + 1, line.rstrip("\r")) for i, line in enumerate(raw_lines)
               if not line.startswith("#")]
    if not content:
        raise ParseError("missing header line", 1)

    header_no, header = content[0]
    n, m = _parse_ints(header, header_no, 2)
    body = content[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else header_no + 1)
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow", where)

    edges: set[tuple[int, int]] = set()
    for lineno, line in body:
        u, v = _parse_ints(line, lineno, 2)
        if u >= n or v >= n:
            raise ParseError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise ParseError(f"duplicate edge {e}", lineno)
        edges.add(e)
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Metrics


def bfs_row(g: Graph, source: int) -> list[int]:
    row = [UNREACHABLE] * g.n
    adj = g.adj
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            row[v] = d
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return row


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Hop-distance matrix; entries for disconnected pairs equal :data:`UNREACHABLE`."""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array([bfs_row(g, s) for s in range(g.n)], dtype=np.int64)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    adj = g.adj
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


@dataclass(frozen=True)
class GraphMetrics:
    """Connectivity, diameter, radius and girth.

    ``diameter`` and ``radius`` are ``None`` when undefined (disconnected or
    empty graph); ``girth`` is ``math.inf`` for forests.
    """

    connected: bool
    diameter: int | None
    radius: int | None
    girth: float | int


def girth(g: Graph) -> float | int:
    best = math.inf
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if 2 * dist[u] >= best:
                break
            for w in iter_bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def metrics(g: Graph, dm: np.ndarray | None = None) -> GraphMetrics:
    if dm is None:
        dm = all_pairs_distances(g)
    connected = g.n > 0 and not bool((dm == UNREACHABLE).any())
    if connected:
        ecc = dm.max(axis=1)
        diameter, radius = int(ecc.max()), int(ecc.min())
    else:
        diameter = radius = None
    return GraphMetrics(connected, diameter, radius, girth(g))


# ---------------------------------------------------------------------------
# Operations


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset((u, v) for u in range(g.n) for v in range(u + 1, g.n)
                                if not g.has_edge(u, v)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union of ``g1`` and ``g2``; vertices of ``g2`` are shifted by ``g1.n``."""
    off = g1.n
    return Graph(g1.n + g2.n, g1.edges | {(u + off, v + off) for u, v in g2.edges})


def join(g1: Graph, g2: Graph) -> Graph:
    union = disjoint_union(g1, g2)
    cross = {(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)}
    return Graph(union.n, union.edges | cross)


def substitute(g: Graph, assignment: Mapping[int, Graph]) -> Graph:
    """Replace vertices of ``g`` by graphs.

    Each vertex ``i`` in ``assignment`` becomes a copy of ``assignment[i]``;
    every vertex of that copy is adjacent to every vertex standing in for a
    neighbor of ``i``.  Blocks are laid out in the order of the vertices of
    ``g``, so unassigned vertices keep their relative order.
    """
    for i in assignment:
        if not 0 <= i < g.n:
            raise ParameterError(f"vertex {i} is not in the graph")
    blocks: list[range] = []
    start = 0
    edges: set[tuple[int, int]] = set()
    for i in range(g.n):
        h = assignment.get(i)
        size = 1 if h is None else h.n
        blocks.append(range(start, start + size))
        if h is not None:
            edges.update((u + start, v + start) for u, v in h.edges)
        start += size
    for i, j in g.edges:
        edges.update((a, b) for a in blocks[i] for b in blocks[j])
    return Graph(start, frozenset(edges))


# ---------------------------------------------------------------------------
# Named graphs (0-based labels)


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise ParameterError(f"complete bipartite graph needs s, t >= 1, got {s}, {t}")
    return Graph(s + t, frozenset((u, s + v) for u in range(s) for v in range(t)))


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise ParameterError(f"star needs n >= 2, got {n}")
    return Graph(n, frozenset((0, v) for v in range(1, n)))


def bull() -> Graph:
    # Triangle 0-1-2 with horns 3 (on 0) and 4 (on 1); the 1-based labels 1..5 shifted down.
    return Graph(5, frozenset({(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)}))


_BASIC = {
    "path": (path, ("n",)),
    "cycle": (cycle, ("n",)),
    "complete": (complete, ("n",)),
    "empty": (empty, ("n",)),
    "complete_bipartite": (complete_bipartite, ("s", "t")),
    "star": (star, ("n",)),
    "bull": (bull, ()),
}


def generate_basic(kind: str, **params: int) -> Graph:
    """Build a named graph: path, cycle, complete, empty, complete_bipartite, star, bull."""
    key = kind.lower().replace("-", "_")
    if key not in _BASIC:
        raise ParameterError(f"unknown basic graph kind {kind!r}")
    fn, names = _BASIC[key]
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ParameterError(f"{kind} requires parameters {missing}")
    return fn(*(int(params[p]) for p in names))


# ---------------------------------------------------------------------------
# Isomorphism and twins


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking over degree-preserving bijections.

    Only orders up to :data:`ISOMORPHISM_MAX_ORDER` are accepted.
    """
    if g1.n != g2.n:
        return False
    n = g1.n
    if n > ISOMORPHISM_MAX_ORDER:
        raise SizeGuardError(f"isomorphism test limited to n <= {ISOMORPHISM_MAX_ORDER}, got {n}")
    if g1.m != g2.m or sorted(g1.degrees) != sorted(g2.degrees):
        return False

    order = sorted(range(n), key=lambda v: -g1.degrees[v])
    adj1, adj2 = g1.adj, g2.adj
    deg1, deg2 = g1.degrees, g2.degrees
    image = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or deg2[w] != deg1[v]:
                continue
            if any((adj1[v] >> u & 1) != (adj2[w] >> image[u] & 1) for u in order[:pos]):
                continue
            image[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
        image[v] = -1
        return False

    return extend(0)


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Partition the vertices into twin classes.

    ``u`` and ``v`` are twins when ``N(u) - {v} == N(v) - {u}``.  Classes are
    returned sorted by their smallest member.
    """
    adj = g.adj
    classes: list[list[int]] = []
    for v in range(g.n):
        for cls in classes:
            u = cls[0]
            if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                cls.append(v)
                break
        else:
            classes.append([v])
    return [tuple(c) for c in classes]
