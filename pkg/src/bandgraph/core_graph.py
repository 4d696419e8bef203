"""Span-bounded k-subset graphs.

The graph G(n, k, b) has one vertex for every k-element subset X of
{0, 1, ..., n} whose span max(X) - min(X) is at most b.  Two distinct
vertices X, Y are adjacent exactly when their union still has span at
most b, i.e. when

    max(X) - min(Y) <= b   and   max(Y) - min(X) <= b.

Everything about adjacency only depends on the pair (min, max), which is
why most operations here work on "span classes": the set of vertices
sharing a (min, max) pair.  A class (i, j) holds C(j-i-1, k-2) vertices,
any two vertices in adjacent classes are adjacent, and classes
(i1, j1), (i2, j2) are adjacent iff max(j1, j2) - min(i1, i2) <= b.
That quotient structure keeps distance and bandwidth computations
polynomial in n instead of in the (huge) vertex count.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

Vertex = tuple[int, ...]  # strictly increasing elements of [0, n]

__all__ = [
    "Params",
    "Vertex",
    "SpanClass",
    "comb0",
    "enumerate_vertices",
    "vertex_count_formula",
    "is_vertex",
    "are_adjacent",
    "central_count",
    "is_central",
    "interval_distance",
    "distance_upper_bound",
    "graph_distance_bfs",
    "diameter",
    "span_classes",
    "class_size",
]


def comb0(a: int, c: int) -> int:
    """Binomial coefficient with out-of-range indices evaluating to 0."""
    if c < 0 or a < c:
        return 0
    return math.comb(a, c)


@dataclass(frozen=True)
class Params:
    """Parameters (n, k, b) of the graph G(n, k, b).

    Requires 1 <= k <= b + 1 and 1 <= b <= n.  k = 1 is allowed (every
    singleton has span 0); the class-based fast paths need k >= 2 and
    the corresponding functions say so.
    """

    n: int
    k: int
    b: int

    def __post_init__(self) -> None:
        n, k, b = self.n, self.k, self.b
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        if b < max(1, k - 1):
            raise ValueError(f"b must be >= max(1, k-1) = {max(1, k - 1)}, got {b}")
        if n < b:
            raise ValueError(f"n must be >= b, got n={n}, b={b}")


class SpanClass(NamedTuple):
    """All vertices sharing (min, max) = (lo, hi)."""

    lo: int
    hi: int


def class_size(lo: int, hi: int, k: int) -> int:
    """Number of vertices with min=lo, max=hi: choose the k-2 middle elements."""
    if k == 1:
        return 1 if lo == hi else 0
    if lo == hi:
        return 0
    return comb0(hi - lo - 1, k - 2)


# ── construction ──────────────────────────────────────────────────────


def enumerate_vertices(p: Params) -> Iterator[Vertex]:
    """Yield all vertices in ascending lexicographic order.

    Grouped by minimum element lo, the remaining k-1 elements range over
    (lo, min(lo + b, n)], which bounds the span by b automatically.
    """
    n, k, b = p.n, p.k, p.b
    if k == 1:
        for lo in range(n + 1):
            yield (lo,)
        return
    for lo in range(n - k + 2):
        window = range(lo + 1, min(lo + b, n) + 1)
        for rest in itertools.combinations(window, k - 1):
            yield (lo, *rest)


def vertex_count_formula(p: Params) -> int:
    """Closed-form vertex count (n-b+1)·C(b,k-1) + C(b,k)."""
    n, k, b = p.n, p.k, p.b
    return (n - b + 1) * comb0(b, k - 1) + comb0(b, k)


def is_vertex(t: tuple[int, ...], p: Params) -> bool:
    if len(t) != p.k:
        return False
    if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
        return False
    return 0 <= t[0] and t[-1] <= p.n and t[-1] - t[0] <= p.b


# ── adjacency ─────────────────────────────────────────────────────────


def are_adjacent(x: Vertex, y: Vertex, p: Params) -> bool:
    """Adjacency of two distinct vertices.

    Primary test: both one-sided reaches max(X)-min(Y) and max(Y)-min(X)
    stay within b.  The assert cross-checks the defining condition
    span(X ∪ Y) <= b; the two are equivalent because each vertex already
    has span <= b.
    """
    if x == y:
        raise ValueError("adjacency is only defined for distinct vertices")
    b = p.b
    adjacent = x[-1] - y[0] <= b and y[-1] - x[0] <= b
    assert adjacent == (max(x[-1], y[-1]) - min(x[0], y[0]) <= b)
    return adjacent


def central_count(p: Params) -> int:
    """Size of the central set {X : n-b <= min(X) <= max(X) <= b}.

    Central vertices are adjacent to every other vertex.  C(2b-n+1, k)
    is 0 exactly when the set is empty (2b < n + k - 1).
    """
    return comb0(2 * p.b - p.n + 1, p.k)


def is_central(x: Vertex, p: Params) -> bool:
    return p.n - p.b <= x[0] and x[-1] <= p.b


# ── distances ─────────────────────────────────────────────────────────


def _require_connected_regime(p: Params) -> None:
    if p.b == p.k - 1:
        raise ValueError(
            f"b = k-1 = {p.b}: every edge needs union span <= b < k, "
            "so the graph is edgeless and distances are undefined"
        )


def interval_distance(i: int, j: int, p: Params) -> int:
    """Distance between the interval vertices [i, i+k-1] and [j, j+k-1].

    Each hop moves the window by at most b-k+1 positions, and a greedy
    walk achieves exactly that, giving ceil((j-i)/(b-k+1)).
    """
    _require_connected_regime(p)
    if i > j:
        raise ValueError(f"expected i <= j, got i={i}, j={j}")
    if i < 0 or j > p.n - p.k + 1:
        raise ValueError("interval start out of range")
    if i == j:
        return 0
    return -((j - i) // -(p.b - p.k + 1))


def distance_upper_bound(x: Vertex, y: Vertex, p: Params) -> int:
    """Upper bound ceil((max(Y)-min(X)-b)/(b-k+1)) + 1 on the distance.

    Requires the ordering hypothesis min(X) < min(Y), or min(X) = min(Y)
    and max(X) < max(Y); callers swap arguments to satisfy it.
    """
    _require_connected_regime(p)
    if not (x[0] < y[0] or (x[0] == y[0] and x[-1] < y[-1])):
        raise ValueError(
            "arguments must satisfy min(X) < min(Y), or equal minima with "
            "max(X) < max(Y); swap them"
        )
    step = p.b - p.k + 1
    gap = y[-1] - x[0] - p.b
    return -(gap // -step) + 1


def span_classes(p: Params) -> list[SpanClass]:
    """All nonempty (lo, hi) classes, ascending.  Requires k >= 2."""
    if p.k < 2:
        raise ValueError("span classes need k >= 2; k = 1 uses enumeration paths")
    n, k, b = p.n, p.k, p.b
    out = []
    for lo in range(n - k + 2):
        for hi in range(lo + k - 1, min(lo + b, n) + 1):
            out.append(SpanClass(lo, hi))
    return out


def _class_of(x: Vertex) -> SpanClass:
    return SpanClass(x[0], x[-1])


def _classes_adjacent(c1: SpanClass, c2: SpanClass, b: int) -> bool:
    return max(c1.hi, c2.hi) - min(c1.lo, c2.lo) <= b


def graph_distance_bfs(x: Vertex, y: Vertex, p: Params) -> int:
    """Exact shortest-path distance between two vertices.

    Runs BFS on the span-class quotient: adjacency only depends on the
    classes, and repeating a class on a shortest path never helps (any
    neighbour of a class member is a neighbour of every member), so the
    quotient BFS distance equals the vertex distance.  k = 1 vertices
    are singleton classes, so the same walk applies with k-1 = 0.
    """
    if not (is_vertex(x, p) and is_vertex(y, p)):
        raise ValueError("both arguments must be vertices of G(n,k,b)")
    if x == y:
        return 0
    b = p.b
    cx, cy = _class_of(x), _class_of(y)
    if _classes_adjacent(cx, cy, b):
        return 1
    if b == p.k - 1:
        raise ValueError("graph is edgeless (b = k-1); vertices unreachable")
    # BFS over classes; neighbours of (lo, hi) are the classes inside the
    # dominance rectangle lo2 >= hi - b, hi2 <= lo + b.
    n, k = p.n, p.k
    dist = {cx: 0}
    queue = deque([cx])
    while queue:
        c = queue.popleft()
        d = dist[c]
        for lo2 in range(max(0, c.hi - b), min(c.lo + b, n) + 1):
            if k == 1:
                hi2_range = range(lo2, lo2 + 1)
            else:
                hi2_range = range(lo2 + k - 1, min(c.lo + b, lo2 + b, n) + 1)
            for hi2 in hi2_range:
                c2 = SpanClass(lo2, hi2)
                if c2 in dist:
                    continue
                dist[c2] = d + 1
                if c2 == cy:
                    return d + 1
                queue.append(c2)
    raise ValueError(f"vertices {x} and {y} are not connected")


def diameter(p: Params) -> int:
    """Graph diameter ceil((n-k+1)/(b-k+1)).

    The two extreme interval vertices realize it, and no pair exceeds it.
    """
    _require_connected_regime(p)
    return -((p.n - p.k + 1) // -(p.b - p.k + 1))
