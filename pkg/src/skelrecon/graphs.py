"""Undirected graphs, acyclic orientations, frames, and orientation objectives.

Everything here is a pure function over immutable values; graphs and
orientations never mutate after construction.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .errors import EmptyFamily, TooLarge

#: Default cap for exhaustive orientation sweeps (override with force=True
#: or the SKELRECON_MAX_N environment variable).
DEFAULT_ENUMERATION_BOUND = 12

_BOUND_ENV = "SKELRECON_MAX_N"


def enumeration_bound() -> int:
    raw = os.environ.get(_BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_BOUND
    return int(raw)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency lists are sorted tuples; the edge list is sorted with u < v.
    """

    __slots__ = ("n", "adj", "edges", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        canon = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._masks: Optional[tuple[int, ...]] = None

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitmasks, one int per vertex (built lazily)."""
        if self._masks is None:
            out = []
            for v in range(self.n):
                m = 0
                for w in self.adj[v]:
                    m |= 1 << w
                out.append(m)
            self._masks = tuple(out)
        return self._masks

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on the given vertices.

        Returns the relabeled graph together with the tuple mapping new
        vertex ids back to original ids.
        """
        order = tuple(sorted(set(vertices)))
        back = {w: i for i, w in enumerate(order)}
        edges = [
            (back[u], back[v])
            for u, v in self.edges
            if u in back and v in back
        ]
        return Graph(len(order), edges), order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Frame:
    """A k-frame: a root vertex together with k of its neighbors."""

    root: int
    leaves: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(sorted(self.leaves)))

    @property
    def k(self) -> int:
        return len(self.leaves)


class Orientation:
    """Acyclic orientation of a graph induced by a total vertex order.

    Every edge is directed from the earlier vertex to the later one, so the
    result is acyclic by construction.  ``signature`` packs one direction
    bit per edge (in ``graph.edges`` order, set when the edge runs from the
    smaller to the larger endpoint) and identifies the orientation.
    """

    __slots__ = ("graph", "order", "pos", "indegree", "signature")

    def __init__(self, graph: Graph, order: tuple[int, ...]):
        if sorted(order) != list(range(graph.n)):
            raise ValueError("order must be a permutation of the vertices")
        pos = [0] * graph.n
        for i, v in enumerate(order):
            pos[v] = i
        indeg = [0] * graph.n
        sig = 0
        for i, (u, v) in enumerate(graph.edges):
            if pos[u] < pos[v]:
                sig |= 1 << i
                indeg[v] += 1
            else:
                indeg[u] += 1
        self.graph = graph
        self.order = tuple(order)
        self.pos = tuple(pos)
        self.indegree = tuple(indeg)
        self.signature = sig

    def head(self, u: int, v: int) -> int:
        """The endpoint the edge uv points at."""
        if v not in self.graph.adj[u]:
            raise ValueError(f"({u},{v}) is not an edge")
        return v if self.pos[u] < self.pos[v] else u

    def in_neighbors(self, v: int) -> list[int]:
        pv = self.pos[v]
        return [w for w in self.graph.adj[v] if self.pos[w] < pv]

    def out_neighbors(self, v: int) -> list[int]:
        pv = self.pos[v]
        return [w for w in self.graph.adj[v] if self.pos[w] > pv]

    def indegree_histogram(self, vertices: Optional[Iterable[int]] = None) -> tuple[int, ...]:
        """h[k] = number of (selected) vertices with indegree k."""
        vs = range(self.graph.n) if vertices is None else vertices
        degs = [self.indegree[v] for v in vs]
        top = max(degs, default=0)
        h = [0] * (top + 1)
        for k in degs:
            h[k] += 1
        return tuple(h)

    def sinks_in(self, vertices: Iterable[int]) -> list[int]:
        """Sinks of the subgraph induced by the given vertex set."""
        vset = set(vertices)
        out = []
        for v in vset:
            pv = self.pos[v]
            if not any(self.pos[w] > pv for w in self.graph.adj[v] if w in vset):
                out.append(v)
        return sorted(out)

    def __repr__(self) -> str:
        return f"Orientation(order={self.order})"


def enumerate_acyclic_orientations(
    g: Graph,
    predicate: Optional[Callable[[Orientation], bool]] = None,
    *,
    first: tuple[int, ...] = (),
    last: tuple[int, ...] = (),
    bound: Optional[int] = None,
    force: bool = False,
) -> Iterator[Orientation]:
    """Yield every acyclic orientation of g exactly once.

    Orientations are generated from vertex total orders and deduplicated by
    edge-direction signature.  ``first``/``last`` pin vertices to the two
    ends of every order, which restricts the stream to orientations where
    those vertices have indegree 0 (resp. outdegree 0); any orientation with
    such a source (sink) arises from a topological order that starts (ends)
    with it, so the restricted stream is still complete for that family.
    Raises TooLarge when the graph exceeds the enumeration bound and force
    is not set.
    """
    limit = bound if bound is not None else enumeration_bound()
    if g.n > limit and not force:
        raise TooLarge(
            f"{g.n} vertices exceed the enumeration bound {limit}; "
            f"pass force=True or set {_BOUND_ENV}"
        )
    pinned = set(first) | set(last)
    if len(pinned) != len(first) + len(last):
        raise ValueError("first/last vertices must be distinct")
    middle = [v for v in range(g.n) if v not in pinned]
    seen: set[int] = set()
    edges = g.edges
    pos = [0] * g.n
    for perm in itertools.permutations(middle):
        order = first + perm + last
        for i, v in enumerate(order):
            pos[v] = i
        sig = 0
        for i, (u, v) in enumerate(edges):
            if pos[u] < pos[v]:
                sig |= 1 << i
        if sig in seen:
            continue
        seen.add(sig)
        o = Orientation(g, order)
        if predicate is None or predicate(o):
            yield o


@dataclass(frozen=True)
class OrientationScores:
    """The three orientation objectives used by the reconstruction sweeps.

    two_face_score   sum over all vertices of C(indegree, 2); bounds the
                     number of 2-faces from above.
    kalai_score      sum over all vertices of 2**indegree; counts pairs
                     (face, sink) and is minimised exactly by the good
                     orientations of a polytope graph.
    simple_sink_score  h[d-1] + d*h[d] over simple vertices only; counts
                     pairs (facet, simple sink).
    """

    two_face_score: int
    kalai_score: int
    simple_sink_score: int


def objectives(o: Orientation, d: int, simple: Iterable[int]) -> OrientationScores:
    """Evaluate the sweep objectives for one orientation."""
    two_face = sum(k * (k - 1) // 2 for k in o.indegree)
    kalai = sum(1 << k for k in o.indegree)
    sink = 0
    for v in simple:
        k = o.indegree[v]
        if k == d - 1:
            sink += 1
        elif k == d:
            sink += d
    return OrientationScores(two_face, kalai, sink)


def is_good(o: Orientation, facets: Iterable[Iterable[int]]) -> bool:
    """True iff every facet-induced subgraph has exactly one sink."""
    for f in facets:
        if len(o.sinks_in(f)) != 1:
            return False
    return True


def ancestors(o: Orientation, x: int) -> frozenset[int]:
    """All vertices with a directed path to x, including x.

    The result is an initial set of the orientation, and x is its unique
    sink.
    """
    seen = {x}
    stack = [x]
    while stack:
        v = stack.pop()
        pv = o.pos[v]
        for w in o.graph.adj[v]:
            if o.pos[w] < pv and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _connected_after_removal(g: Graph, removed: Iterable[int]) -> bool:
    gone = set(removed)
    left = [v for v in range(g.n) if v not in gone]
    if len(left) <= 1:
        return True
    start = left[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in gone and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(left)


def k_connected(g: Graph, k: int) -> bool:
    """True iff no vertex cut of size < k exists.

    Brute force over all candidate cuts of size up to k-1; intended for the
    small graphs this library works with.
    """
    if k <= 0:
        return True
    if g.n == 0:
        return False
    if not _connected_after_removal(g, ()):
        return False
    for size in range(1, k):
        if size >= g.n:
            break
        for cut in itertools.combinations(range(g.n), size):
            if not _connected_after_removal(g, cut):
                return False
    return True


def is_feasible(g: Graph, vertices: Iterable[int], d: int, simple: Iterable[int]) -> bool:
    """Whether a vertex set induces a candidate facet graph.

    The induced subgraph must be (d-1)-connected, simple vertices of the
    ambient polytope must have induced degree exactly d-1, and nonsimple
    ones at least d-1.
    """
    vset = set(vertices)
    if not vset:
        return False
    simple_set = set(simple)
    for v in vset:
        dv = sum(1 for w in g.adj[v] if w in vset)
        if v in simple_set:
            if dv != d - 1:
                return False
        elif dv < d - 1:
            return False
    sub, _ = g.induced(vset)
    return k_connected(sub, d - 1)


def induced_cycles(g: Graph) -> list[frozenset[int]]:
    """All vertex sets inducing a single chordless cycle of length >= 3.

    Sorted by (length, sorted vertex tuple) so downstream searches are
    deterministic.
    """
    adjsets = [set(a) for a in g.adj]
    found: set[frozenset[int]] = set()
    for s in range(g.n):
        # DFS over induced paths starting at s using vertices > s only;
        # a path closes into a chordless cycle when the tip meets s again.
        stack: list[tuple[tuple[int, ...], set[int]]] = [
            ((s, p1), {s, p1}) for p1 in g.adj[s] if p1 > s
        ]
        while stack:
            path, pset = stack.pop()
            tip = path[-1]
            interior = pset - {s, tip}
            for x in g.adj[tip]:
                if x <= s or x in pset:
                    continue
                if adjsets[x] & interior:
                    continue  # chord into the path interior
                if s in adjsets[x]:
                    if path[1] < x:
                        found.add(frozenset(path + (x,)))
                    continue  # extending past x would leave a chord to s
                stack.append((path + (x,), pset | {x}))
    return sorted(found, key=lambda c: (len(c), tuple(sorted(c))))


#: Hard cap for the subset DP below; 2**22 table entries is the most we
#: are willing to allocate.
_DP_BOUND = 22


def min_two_face_score(g: Graph, sources: tuple[int, ...] = ()) -> int:
    """Minimum of the two-face score over acyclic orientations.

    Restricted to orientations where every vertex in ``sources`` has
    indegree 0.  Computed by a subset DP over vertex-addition orders: when a
    vertex joins after the set S it acquires indegree |N(v) & S|, and every
    acyclic orientation is induced by some such order, so the DP minimum
    equals the sweep minimum without enumerating orientations.
    """
    n = g.n
    if n > _DP_BOUND:
        raise TooLarge(f"{n} vertices exceed the subset-DP bound {_DP_BOUND}")
    masks = g.masks
    source_bits = 0
    for u in sources:
        source_bits |= 1 << u
    c2 = [k * (k - 1) // 2 for k in range(n + 1)]
    full = (1 << n) - 1
    inf = float("inf")
    dp: list[float] = [inf] * (full + 1)
    dp[0] = 0
    bits = [1 << v for v in range(n)]
    for s in range(full + 1):
        base = dp[s]
        if base is inf:
            continue
        for v in range(n):
            b = bits[v]
            if s & b:
                continue
            overlap = s & masks[v]
            if b & source_bits and overlap:
                continue
            t = s | b
            cost = base + c2[overlap.bit_count()]
            if cost < dp[t]:
                dp[t] = cost
    result = dp[full]
    if result == inf:
        raise EmptyFamily("no acyclic orientation satisfies the source constraints")
    return int(result)
