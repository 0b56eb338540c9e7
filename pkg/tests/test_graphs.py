import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skelrecon import (
    Graph,
    Orientation,
    ancestors,
    build_face_lattice,
    classify_vertices,
    cube,
    enumerate_acyclic_orientations,
    induced_cycles,
    is_feasible,
    is_good,
    k_connected,
    k_skeleton,
    min_two_face_score,
    objectives,
    q1,
    simplex,
)
from skelrecon.errors import TooLarge

from conftest import lattice_of
from oracles import (
    acyclic_orientation_count,
    brute_force_chordless_cycles,
    brute_force_orientations,
    nx_k_connected,
)


def complete_graph(m):
    return Graph(m, itertools.combinations(range(m), 2))


def path_graph(m):
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m):
    return Graph(m, [(i, (i + 1) % m) for i in range(m)])


def count_orientations(g, predicate=None):
    return sum(1 for _ in enumerate_acyclic_orientations(g, predicate))


def test_triangle_has_six_orientations():
    assert count_orientations(complete_graph(3)) == 6


def test_path3_orientation_count_matches_chromatic_oracle():
    g = path_graph(3)
    assert acyclic_orientation_count(g) == 4
    assert count_orientations(g) == 4


def test_c4_source_filter_count():
    g = cycle_graph(4)
    brute = brute_force_orientations(g)
    assert len(brute) == 14
    assert count_orientations(g) == 14
    # all four edge-direction choices with both 0-edges leaving 0 are acyclic
    def source_at_0(dirs):
        return all(
            low_to_high == (u == 0)
            for (u, v), low_to_high in zip(g.edges, dirs)
            if 0 in (u, v)
        )
    want = sum(1 for dirs in brute if source_at_0(dirs))
    assert want == 4
    assert count_orientations(g, lambda o: o.indegree[0] == 0) == 4


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_complete_graph_orientation_count_is_factorial(m):
    assert count_orientations(complete_graph(m)) == math.factorial(m)


def test_no_duplicate_signatures():
    g = cycle_graph(5)
    sigs = [o.signature for o in enumerate_acyclic_orientations(g)]
    assert len(sigs) == len(set(sigs)) == acyclic_orientation_count(g)


def test_pinned_enumeration_matches_filter():
    g = cycle_graph(5)
    pinned = {
        o.signature
        for o in enumerate_acyclic_orientations(g, first=(0,), last=(3,))
    }
    filtered = {
        o.signature
        for o in enumerate_acyclic_orientations(
            g, lambda o: o.indegree[0] == 0 and not o.out_neighbors(3)
        )
    }
    assert pinned == filtered


def test_enumeration_guard():
    g = path_graph(15)
    with pytest.raises(TooLarge):
        list(enumerate_acyclic_orientations(g))
    assert count_orientations(path_graph(4)) == 8  # within default bound


def test_objectives_on_k4():
    g = complete_graph(4)
    o = Orientation(g, (0, 1, 2, 3))
    scores = objectives(o, 3, range(4))
    assert scores.two_face_score == 4      # two-faces of the tetrahedron
    assert scores.kalai_score == 15        # nonempty faces of the 3-simplex
    assert scores.simple_sink_score == 1 + 3


def test_is_good_k4_linear_order():
    g = complete_graph(4)
    o = Orientation(g, (0, 1, 2, 3))
    assert is_good(o, simplex(3).facets)


def test_is_good_square_two_sinks():
    g = cycle_graph(4)
    o = Orientation(g, (0, 2, 1, 3))  # 1 and 3 are both sinks of the square
    assert not is_good(o, [(0, 1, 2, 3)])


def test_kalai_minimisers_of_cube_graph_are_good():
    lat = lattice_of(cube(3))
    g = lat.graph()
    facets = lat.facets
    best = None
    for o in enumerate_acyclic_orientations(g):
        k = objectives(o, 3, range(8)).kalai_score
        best = k if best is None else min(best, k)
    total_faces = sum(lat.f_vector) + 1  # proper faces plus the cube itself
    assert best == total_faces
    for o in enumerate_acyclic_orientations(g):
        if objectives(o, 3, range(8)).kalai_score == best:
            assert is_good(o, facets)


def test_ancestors_of_source_and_sink():
    g = complete_graph(4)
    o = Orientation(g, (2, 0, 3, 1))
    assert ancestors(o, 2) == {2}
    assert ancestors(o, 1) == {0, 1, 2, 3}


def test_ancestors_form_initial_sets():
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(3, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        g = Graph(n, edges)
        order = list(range(n))
        rng.shuffle(order)
        o = Orientation(g, tuple(order))
        for x in range(n):
            anc = ancestors(o, x)
            for v in anc:
                for w in o.in_neighbors(v):
                    assert w in anc  # no edge enters an ancestor set
            assert o.sinks_in(anc) == [x]


def test_feasible_cube4_facets():
    lat = lattice_of(cube(4))
    g = lat.graph()
    simple = classify_vertices(lat).simple
    for f in lat.facets:
        assert is_feasible(g, f, 4, simple)
    u, v = g.edges[0]
    assert not is_feasible(g, {u, v}, 4, simple)


def test_feasible_q1_type_a_facet():
    lat = lattice_of(q1(4).spec)
    g = lat.graph()
    simple = classify_vertices(lat).simple
    assert is_feasible(g, {0, 2, 4, 6}, 4, simple)


@settings(max_examples=30, deadline=None)
@given(st.permutations(list(range(8))))
def test_feasibility_is_relabeling_invariant(perm):
    lat = lattice_of(cube(3))
    g = lat.graph()
    simple = classify_vertices(lat).simple
    relabeled = Graph(8, [(perm[u], perm[v]) for u, v in g.edges])
    new_simple = {perm[v] for v in simple}
    for f in lat.facets:
        image = {perm[v] for v in f}
        assert is_feasible(g, f, 3, simple) == is_feasible(
            relabeled, image, 3, new_simple
        )


def test_k_connected_examples():
    assert k_connected(complete_graph(5), 4)
    assert not k_connected(path_graph(4), 2)
    g6 = lattice_of(q1(6).spec).graph()
    assert k_connected(g6, 6)


def test_k_connected_matches_networkx():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(4, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.55]
        g = Graph(n, edges)
        for k in range(1, 5):
            assert k_connected(g, k) == nx_k_connected(g, k), (edges, k)


def test_induced_cycles_k4():
    got = induced_cycles(complete_graph(4))
    assert sorted(got, key=sorted) == [
        frozenset(c) for c in itertools.combinations(range(4), 3)
    ]


def test_induced_cycles_c6():
    assert induced_cycles(cycle_graph(6)) == [frozenset(range(6))]


def test_induced_cycles_cube_matches_subset_oracle():
    g = lattice_of(cube(3)).graph()
    got = set(induced_cycles(g))
    assert got == brute_force_chordless_cycles(g)
    lengths = sorted(len(c) for c in got)
    assert lengths == [4] * 6 + [6] * 4  # six squares, four skew hexagons


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_induced_cycles_random_graphs(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 7)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
    g = Graph(n, edges)
    assert set(induced_cycles(g)) == brute_force_chordless_cycles(g)


def brute_min_two_face_score(g, sources=()):
    best = None
    for o in enumerate_acyclic_orientations(g, force=True):
        if any(o.indegree[u] != 0 for u in sources):
            continue
        val = objectives(o, 3, ()).two_face_score
        best = val if best is None else min(best, val)
    return best


def test_min_two_face_score_matches_enumeration():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(3, 6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        g = Graph(n, edges)
        assert min_two_face_score(g) == brute_min_two_face_score(g)
        assert min_two_face_score(g, (0,)) == brute_min_two_face_score(g, (0,))


def test_min_two_face_score_simplex():
    # unique orientation class: indegrees 0..d over the complete graph
    for d in (3, 4, 5):
        g = complete_graph(d + 1)
        assert min_two_face_score(g) == math.comb(d + 1, 3)
