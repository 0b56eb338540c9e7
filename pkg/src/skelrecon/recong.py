"""Facet reconstruction from graphs alone.

One nonsimple vertex: recover the 2-faces as the unique maximum exact
cover of the simple-rooted 2-frames by induced chordless cycles, certify
its size against an independent orientation-objective minimum, then hand
graph + 2-faces to the 2-skeleton engine.

Two nonsimple vertices u, v: partition the facets into the four families
(containing u only, v only, neither, both) and recover them in that order
by sweeping constrained acyclic-orientation families and harvesting, from
each objective minimiser, the ancestor sets of simple vertices that form
feasible subgraphs.  A second, independent route truncates the polytope at
uv (or at u when uv is not an edge), reconstructs the simpler truncated
polytope, and pulls its facets back.

Everything орientation-swept here is exponential by nature; the guard in
:mod:`skelrecon.graphs` refuses graphs beyond the enumeration bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .constructions import TruncationMap, pullback_facets
from .errors import (
    CertificateMismatch,
    EmptyFamily,
    InconsistentCounts,
    NoCoverFound,
    RepairAmbiguous,
)
from .graphs import (
    Graph,
    Orientation,
    ancestors,
    enumerate_acyclic_orientations,
    induced_cycles,
    is_feasible,
    min_two_face_score,
    objectives,
)
from .lattice import KSkeleton, classify_vertices
from . import recon2


# ---------------------------------------------------------------------------
# 2-systems by exact cover


@dataclass(frozen=True)
class TwoSystem:
    """An exact cover of the simple-rooted 2-frames by induced cycles.

    ``coverage`` maps each frame, keyed as (root, leaf pair), to the set
    covering it.
    """

    sets: tuple[frozenset[int], ...]
    coverage: dict[tuple[int, frozenset[int]], frozenset[int]]

    @property
    def size(self) -> int:
        return len(self.sets)


def _simple_two_frames(g: Graph, simple: Iterable[int]) -> list[tuple[int, frozenset[int]]]:
    frames = []
    for w in sorted(simple):
        for a, b in itertools.combinations(g.adj[w], 2):
            frames.append((w, frozenset((a, b))))
    return frames


def _max_exact_cover(columns: list, rows: list[list[int]]) -> Optional[list[int]]:
    """Maximum-cardinality exact cover; rows index into columns.

    Backtracking with branch on the uncovered column with the fewest
    still-usable rows (lowest index on ties), rows tried in input order;
    prunes dead branches and branches that cannot beat the best cover
    found so far.  Returns chosen row indices, or None when no exact cover
    exists.
    """
    ncols = len(columns)
    full = (1 << ncols) - 1
    row_masks = []
    for r in rows:
        m = 0
        for c in r:
            m |= 1 << c
        row_masks.append(m)
    rows_of_col: list[tuple[tuple[int, int], ...]] = [() for _ in range(ncols)]
    acc: list[list[tuple[int, int]]] = [[] for _ in range(ncols)]
    for ri, r in enumerate(rows):
        for c in r:
            acc[c].append((ri, row_masks[ri]))
    for c in range(ncols):
        rows_of_col[c] = tuple(acc[c])
    # An exact cover of R columns spends exactly R column-slots, so the
    # number of additional rows is at most the largest k whose k globally
    # smallest row sizes sum to at most R.
    sizes = sorted(len(r) for r in rows)
    reachable = [0] * (ncols + 1)
    k = total = 0
    for budget in range(ncols + 1):
        while k < len(sizes) and total + sizes[k] <= budget:
            total += sizes[k]
            k += 1
        reachable[budget] = k

    best: list[Optional[tuple[int, ...]]] = [None]
    best_count = [-1]

    def search(uncovered: int, chosen: list[int]):
        if uncovered == 0:
            if len(chosen) > best_count[0]:
                best_count[0] = len(chosen)
                best[0] = tuple(chosen)
            return
        if len(chosen) + reachable[uncovered.bit_count()] <= best_count[0]:
            return
        # Most-constrained uncovered column; forced columns cascade first.
        branch_col = -1
        branch_rows = None
        fewest = None
        scan = uncovered
        while scan:
            bit = scan & -scan
            scan ^= bit
            col = bit.bit_length() - 1
            usable = [
                (ri, m) for ri, m in rows_of_col[col] if m & uncovered == m
            ]
            if not usable:
                return
            if fewest is None or len(usable) < fewest:
                fewest = len(usable)
                branch_col = col
                branch_rows = usable
                if fewest == 1:
                    break
        for ri, m in branch_rows:
            chosen.append(ri)
            search(uncovered & ~m, chosen)
            chosen.pop()

    search(full, [])
    return list(best[0]) if best[0] is not None else None


def max_two_system(
    g: Graph,
    d: int,
    nonsimple: Optional[Iterable[int]] = None,
    *,
    certify: bool = True,
) -> TwoSystem:
    """The maximum family of induced cycles covering each simple-rooted
    2-frame exactly once; for a polytope graph with at most one nonsimple
    vertex these are precisely the 2-face vertex sets.

    With ``certify`` the cover size is checked against the independent
    minimum of the two-face orientation score (taken over orientations
    where the nonsimple vertex is a source); a mismatch means the input is
    not such a polytope graph.
    """
    if nonsimple is None:
        nonsimple = classify_vertices(g, d).nonsimple
    nonsimple = tuple(sorted(nonsimple))
    if len(nonsimple) > 1:
        raise ValueError("max_two_system handles at most one nonsimple vertex")
    simple = [v for v in range(g.n) if v not in nonsimple]
    frames = _simple_two_frames(g, simple)
    frame_id = {f: i for i, f in enumerate(frames)}
    cycles = induced_cycles(g)
    simple_set = set(simple)
    rows: list[list[int]] = []
    for cyc in cycles:
        covered = []
        ok = True
        for w in cyc:
            if w not in simple_set:
                continue
            pair = frozenset(x for x in g.adj[w] if x in cyc)
            fid = frame_id.get((w, pair))
            if fid is None:
                ok = False
                break
            covered.append(fid)
        if ok and covered:
            rows.append(covered)
        else:
            rows.append([])
    kept = [(cyc, r) for cyc, r in zip(cycles, rows) if r]
    chosen = _max_exact_cover(frames, [r for _, r in kept])
    if chosen is None:
        raise NoCoverFound("the simple-rooted 2-frames admit no exact cover")
    sets = tuple(sorted((kept[i][0] for i in chosen), key=lambda s: (len(s), tuple(sorted(s)))))
    coverage = {}
    for i in chosen:
        cyc, covered = kept[i]
        for fid in covered:
            coverage[frames[fid]] = cyc
    if certify:
        target = min_two_face_score(g, sources=nonsimple)
        if len(sets) != target:
            raise CertificateMismatch(
                f"cover size {len(sets)} != orientation minimum {target}"
            )
    return TwoSystem(sets=sets, coverage=coverage)


def reconstruct_one_nonsimple(
    g: Graph, d: int, *, certify: bool = True
) -> tuple[tuple[int, ...], ...]:
    """Facet list of a d-polytope graph with at most one nonsimple vertex."""
    classes = classify_vertices(g, d)
    if len(classes.nonsimple) > 1:
        raise ValueError(
            f"expected at most one nonsimple vertex, found {sorted(classes.nonsimple)}"
        )
    system = max_two_system(g, d, classes.nonsimple, certify=certify)
    sk = KSkeleton(k=2, graph=g, faces_by_dim={2: system.sets})
    outcome = recon2.reconstruct(sk, d)
    return outcome.facets


# ---------------------------------------------------------------------------
# Orientation sweeps for the four facet families


def _feasibility_cache(g: Graph, d: int, simple: frozenset[int]) -> Callable[[frozenset[int]], bool]:
    cache: dict[frozenset[int], bool] = {}

    def check(vertices: frozenset[int]) -> bool:
        hit = cache.get(vertices)
        if hit is None:
            hit = cache[vertices] = is_feasible(g, vertices, d, simple)
        return hit

    return check


def _sweep(
    g: Graph,
    *,
    first: tuple[int, ...] = (),
    last: tuple[int, ...] = (),
    family: Optional[Callable[[Orientation], bool]] = None,
    objective: Callable[[Orientation], int],
    collect: Callable[[Orientation], Iterable[frozenset[int]]],
    force: bool = False,
) -> tuple[int, tuple[frozenset[int], ...]]:
    """Two passes over an orientation family: minimum, then minimisers.

    Keeps nothing in memory between passes except the minimum itself.
    """
    best: Optional[int] = None
    for o in enumerate_acyclic_orientations(g, family, first=first, last=last, force=force):
        val = objective(o)
        if best is None or val < best:
            best = val
    if best is None:
        raise EmptyFamily("no acyclic orientation satisfies the family constraints")
    found: set[frozenset[int]] = set()
    for o in enumerate_acyclic_orientations(g, family, first=first, last=last, force=force):
        if objective(o) == best:
            found.update(collect(o))
    return best, tuple(sorted(found, key=lambda s: tuple(sorted(s))))


def find_facets_avoiding(
    g: Graph,
    d: int,
    u: int,
    v: int,
    mode: str,
    *,
    force: bool = False,
) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Facets containing exactly one of u, v, or both, plus the minimum.

    mode "u_minus_v": sweep orientations with u a source and v a sink; the
    minimum of the simple-sink score is the number of facets avoiding v,
    and the ancestor sets of simple vertices under the minimisers that are
    feasible, contain u and avoid v are exactly the facets containing u
    but not v.  mode "v_minus_u" swaps the two.  mode "uv" sweeps the
    orientations in which some feasible set containing both u and v is
    initial; the minimum is the total facet count and the harvested
    feasible ancestor sets containing both are the shared facets.
    """
    classes = classify_vertices(g, d)
    simple = classes.simple
    feasible = _feasibility_cache(g, d, simple)
    simple_sorted = sorted(simple)

    if mode == "v_minus_u":
        u, v = v, u
        mode = "u_minus_v"

    def harvested(o: Orientation, need: frozenset[int], avoid: frozenset[int]):
        out = []
        for x in simple_sorted:
            anc = ancestors(o, x)
            if need <= anc and not (avoid & anc) and feasible(anc):
                out.append(anc)
        return out

    if mode == "u_minus_v":
        need, avoid = frozenset((u,)), frozenset((v,))
        minimum, found = _sweep(
            g,
            first=(u,),
            last=(v,),
            objective=lambda o: objectives(o, d, simple).simple_sink_score,
            collect=lambda o: harvested(o, need, avoid),
            force=force,
        )
    elif mode == "uv":
        need, avoid = frozenset((u, v)), frozenset()

        def in_family(o: Orientation) -> bool:
            return any(
                need <= anc and feasible(anc)
                for anc in (ancestors(o, x) for x in simple_sorted)
            )

        minimum, found = _sweep(
            g,
            family=in_family,
            objective=lambda o: objectives(o, d, simple).simple_sink_score,
            collect=lambda o: harvested(o, need, avoid),
            force=force,
        )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return tuple(tuple(sorted(f)) for f in found), minimum


def count_sink_frames(
    g: Graph, d: int, u: int, facets: Iterable[Iterable[int]], o: Orientation
) -> int:
    """Number of valid (d-1)-frames of u, among the given facets, with u a sink.

    A facet contributes a valid frame at u when u has exactly d-1 neighbors
    inside it; it is counted when all of those edges point at u.
    """
    pos = o.pos
    pu = pos[u]
    count = 0
    for f in facets:
        fset = set(f)
        inside = [w for w in g.adj[u] if w in fset]
        if len(inside) != d - 1:
            continue
        if all(pos[w] < pu for w in inside):
            count += 1
    return count


def find_facets_empty(
    g: Graph,
    d: int,
    u: int,
    v: int,
    known,
    expected: int,
    *,
    force: bool = False,
) -> tuple[tuple[int, ...], ...]:
    """Facets containing neither u nor v.

    ``known`` must already hold the facets containing exactly one of u, v;
    ``expected`` is the count implied by the family minima, and 0 returns
    immediately.  The sweep runs over orientations with v a sink in which
    some feasible set avoiding both u and v is initial; the objective adds,
    to the simple-sink score, the number of known u-facets whose frame at
    u points entirely at u (so u momentarily acts as an extra facet sink).
    """
    if expected == 0:
        return ()
    classes = classify_vertices(g, d)
    simple = classes.simple
    feasible = _feasibility_cache(g, d, simple)
    simple_sorted = sorted(simple)
    u_facets = [f for f in known if u in f and v not in f]
    both = frozenset((u, v))

    def in_family(o: Orientation) -> bool:
        return any(
            not (both & anc) and feasible(anc)
            for anc in (ancestors(o, x) for x in simple_sorted)
        )

    def objective(o: Orientation) -> int:
        score = objectives(o, d, simple).simple_sink_score
        return score + count_sink_frames(g, d, u, u_facets, o)

    def collect(o: Orientation):
        out = []
        for x in simple_sorted:
            anc = ancestors(o, x)
            if not (both & anc) and feasible(anc):
                out.append(anc)
        return out

    _, found = _sweep(
        g, last=(v,), family=in_family, objective=objective, collect=collect, force=force
    )
    out = tuple(tuple(sorted(f)) for f in found)
    if len(out) != expected:
        raise InconsistentCounts(
            f"found {len(out)} facets avoiding both, expected {expected}"
        )
    return out


def detect_uv_facets(g: Graph, d: int, known) -> bool:
    """Whether any facet contains both nonsimple vertices.

    True iff some simple (d-1)-frame is not covered by the known facets:
    every facet contains a simple frame and every simple frame lies in
    exactly one facet.
    """
    classes = classify_vertices(g, d)
    footprints: dict[int, set[frozenset[int]]] = {w: set() for w in classes.simple}
    for f in known:
        fset = frozenset(f)
        for w in fset:
            if w in footprints:
                footprints[w].add(frozenset(x for x in g.adj[w] if x in fset))
    for w in sorted(classes.simple):
        nbrs = g.adj[w]
        for out in nbrs:
            frame = frozenset(x for x in nbrs if x != out)
            if frame not in footprints[w]:
                return True
    return False


@dataclass(frozen=True)
class FacetFamilies:
    """The four facet families of a graph with nonsimple vertices u < v."""

    u: int
    v: int
    u_only: tuple[tuple[int, ...], ...]
    v_only: tuple[tuple[int, ...], ...]
    neither: tuple[tuple[int, ...], ...]
    both: tuple[tuple[int, ...], ...]
    min_u: int
    min_v: int
    min_both: Optional[int]

    @property
    def all_facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.u_only + self.v_only + self.neither + self.both))

    @property
    def counts(self) -> tuple[int, int, int, int]:
        return (len(self.u_only), len(self.v_only), len(self.neither), len(self.both))


def _two_nonsimple(g: Graph, d: int) -> tuple[int, int, frozenset[int]]:
    classes = classify_vertices(g, d)
    if len(classes.nonsimple) != 2:
        raise ValueError(
            f"expected exactly two nonsimple vertices, found {sorted(classes.nonsimple)}"
        )
    u, v = sorted(classes.nonsimple)
    return u, v, classes.simple


def facet_families(g: Graph, d: int, *, force: bool = False) -> FacetFamilies:
    """Recover the four facet families in order: u-only, v-only, neither, both.

    Requires d >= 4: at d = 3 an orientation of the shared family can leave
    a facet whose unique sink is nonsimple, breaking the family minimum
    (the truncation route has no such restriction).
    """
    if d < 4:
        raise ValueError("the family sweeps need d >= 4; use the truncation route")
    u, v, _ = _two_nonsimple(g, d)
    u_only, min_u = find_facets_avoiding(g, d, u, v, "u_minus_v", force=force)
    v_only, min_v = find_facets_avoiding(g, d, u, v, "v_minus_u", force=force)
    # min_u counts the facets avoiding v, so the families must close up.
    expected_empty = min_u - len(u_only)
    if expected_empty != min_v - len(v_only):
        raise InconsistentCounts(
            f"facets avoiding both: {expected_empty} via u, {min_v - len(v_only)} via v"
        )
    if expected_empty < 0:
        raise InconsistentCounts("family minima below family sizes")
    neither = find_facets_empty(
        g, d, u, v, u_only + v_only, expected_empty, force=force
    )
    both: tuple[tuple[int, ...], ...] = ()
    min_both: Optional[int] = None
    if detect_uv_facets(g, d, u_only + v_only + neither):
        both, min_both = find_facets_avoiding(g, d, u, v, "uv", force=force)
        total = len(u_only) + len(v_only) + len(neither) + len(both)
        if min_both != total:
            raise InconsistentCounts(
                f"total facet count {total} != shared-family minimum {min_both}"
            )
    return FacetFamilies(
        u=u,
        v=v,
        u_only=u_only,
        v_only=v_only,
        neither=neither,
        both=both,
        min_u=min_u,
        min_v=min_v,
        min_both=min_both,
    )


def reconstruct_two_nonsimple(
    g: Graph, d: int, *, force: bool = False
) -> tuple[tuple[int, ...], ...]:
    """Facet list of a d-polytope graph with exactly two nonsimple vertices."""
    return facet_families(g, d, force=force).all_facets


# ---------------------------------------------------------------------------
# The truncation route


def _two_faces_within(g: Graph, d: int, facet, *, certify: bool = True):
    """2-faces inside one facet, via its induced subgraph.

    The induced subgraph is the graph of a (d-1)-polytope with at most one
    vertex of degree above d-1, so its 2-faces come from the exact-cover
    pipeline; for d == 3 the facet itself is its only 2-face.
    """
    fset = frozenset(facet)
    if d == 3:
        return [fset]
    sub, back = g.induced(fset)
    system = max_two_system(sub, d - 1, certify=certify)
    return [frozenset(back[i] for i in s) for s in system.sets]


def _uv_two_faces(g: Graph, d: int, u: int, v: int, *, force: bool = False):
    """2-faces containing both u and v when uv is an edge.

    These are the induced cycles through u and v that are initial with
    respect to some orientation minimising the kalai score in which u is a
    source and v has indegree 1 (its one in-edge coming along the cycle).
    """
    cycles = [c for c in induced_cycles(g) if u in c and v in c]
    if not cycles:
        return []

    def initial_cycles(o: Orientation):
        if o.indegree[v] != 1:
            return []
        out = []
        for c in cycles:
            if all(o.pos[w] > o.pos[x] for x in c for w in g.adj[x] if w not in c):
                out.append(c)
        return out

    _, found = _sweep(
        g,
        first=(u,),
        objective=lambda o: objectives(o, d, ()).kalai_score,
        collect=initial_cycles,
        force=force,
    )
    return list(found)


def _truncated_graph(g: Graph, face: tuple[int, ...], two_faces) -> tuple[Graph, TruncationMap]:
    """Graph of the polytope truncated at ``face`` (a vertex or an edge).

    Uses only the graph and the 2-faces meeting the face: surviving
    vertices keep their mutual edges, every cut edge (x in face, y outside)
    becomes a vertex joined to y, and each 2-face contributes the edge
    between the new vertices of its two crossing edges.
    """
    fset = frozenset(face)
    cut_edges = sorted(
        (x, y) for x in fset for y in g.adj[x] if y not in fset
    )
    survivors = sorted(set(range(g.n)) - fset)
    old_to_new = {w: i for i, w in enumerate(survivors)}
    new_from_edge = {}
    origin = {}
    for i, (x, y) in enumerate(cut_edges):
        w = len(survivors) + i
        new_from_edge[(x, y)] = w
        origin[w] = x
    edges = [
        (old_to_new[a], old_to_new[b])
        for a, b in g.edges
        if a not in fset and b not in fset
    ]
    for (x, y), w in new_from_edge.items():
        edges.append((w, old_to_new[y]))
    for s in two_faces:
        crossing = sorted((x, y) for x, y in new_from_edge if x in s and y in s)
        if len(crossing) == 2:
            edges.append((new_from_edge[crossing[0]], new_from_edge[crossing[1]]))
        elif len(crossing) > 2:
            raise ValueError(f"2-face {tuple(sorted(s))} crosses the cut thrice")
    tmap = TruncationMap(
        face=tuple(sorted(fset)),
        old_to_new=old_to_new,
        new_from_edge=new_from_edge,
        origin=origin,
        cut_facet=frozenset(new_from_edge.values()),
    )
    return Graph(len(survivors) + len(cut_edges), edges), tmap


def reconstruct_two_nonsimple_via_truncation(
    g: Graph, d: int, *, force: bool = False
) -> tuple[tuple[int, ...], ...]:
    """Same contract as reconstruct_two_nonsimple, via truncation.

    Truncating at the edge uv yields a simple polytope; truncating at u,
    when uv is not an edge, yields a polytope with one nonsimple vertex.
    Either way the truncated graph follows from the 2-faces meeting
    {u, v}, the truncated polytope reconstructs with the simpler pipeline,
    and its facet list pulls back.  When uv is not an edge the possibly
    unknown 2-face through both u and v costs at most one edge of the
    truncated graph, recovered by joining the unique two degree-deficient
    vertices.
    """
    u, v, _ = _two_nonsimple(g, d)
    u_only, _ = find_facets_avoiding(g, d, u, v, "u_minus_v", force=force)
    v_only, _ = find_facets_avoiding(g, d, u, v, "v_minus_u", force=force)
    two_faces_u: set[frozenset[int]] = set()
    for t in u_only:
        two_faces_u.update(s for s in _two_faces_within(g, d, t) if u in s)
    two_faces_v: set[frozenset[int]] = set()
    for t in v_only:
        two_faces_v.update(s for s in _two_faces_within(g, d, t) if v in s)

    if g.has_edge(u, v):
        shared = _uv_two_faces(g, d, u, v, force=force)
        relevant = two_faces_u | two_faces_v | set(shared)
        truncated, tmap = _truncated_graph(g, (u, v), relevant)
    else:
        truncated, tmap = _truncated_graph(g, (u,), two_faces_u)
        deficient = [
            w for w in range(truncated.n) if truncated.degree(w) == d - 1
        ]
        if len(deficient) not in (0, 2):
            raise RepairAmbiguous(
                f"{len(deficient)} vertices of degree d-1 after truncation"
            )
        if deficient:
            truncated = Graph(
                truncated.n, list(truncated.edges) + [tuple(deficient)]
            )
    prime_facets = reconstruct_one_nonsimple(truncated, d)
    pulled = pullback_facets(prime_facets, tmap)
    return tuple(sorted(pulled))
