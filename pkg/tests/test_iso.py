import random

import pytest

from skelrecon import (
    PolytopeSpec,
    build_face_lattice,
    isomorphic,
    k_skeleton,
    q1,
    q2,
)
from skelrecon.errors import KindMismatch

from conftest import fixture_corpus, lattice_of


def relabeled(spec, perm):
    return PolytopeSpec(spec.d, spec.n, [[perm[v] for v in f] for f in spec.facets])


def test_twin_graphs_identical_labels():
    l1, l2 = lattice_of(q1(4).spec), lattice_of(q2(4).spec)
    r = isomorphic(k_skeleton(l1, 1), k_skeleton(l2, 1))
    assert r.isomorphic
    assert r.witness == tuple(range(8))


def test_twin_2_skeleta_isomorphic_at_d5():
    l1, l2 = lattice_of(q1(5).spec), lattice_of(q2(5).spec)
    r = isomorphic(k_skeleton(l1, 2), k_skeleton(l2, 2))
    assert r.isomorphic


def test_twin_lattices_not_isomorphic():
    r = isomorphic(lattice_of(q1(4).spec), lattice_of(q2(4).spec))
    assert not r.isomorphic
    # first distinguishing invariant is a face-count mismatch (the merged
    # facet costs one 2-face and one facet)
    assert "face counts" in r.obstruction and "19 != 18" in r.obstruction


def test_twin_rank_threshold():
    # isomorphic up to rank d-3, distinguished from rank d-2 on
    for d in (4, 5, 6):
        l1 = build_face_lattice(q1(d).spec)
        l2 = build_face_lattice(q2(d).spec)
        assert isomorphic(k_skeleton(l1, d - 3), k_skeleton(l2, d - 3)).isomorphic
        assert not isomorphic(k_skeleton(l1, d - 2), k_skeleton(l2, d - 2)).isomorphic


def test_self_isomorphism_has_witness():
    for spec in fixture_corpus().values():
        lat = lattice_of(spec)
        r = isomorphic(lat, lat)
        assert r.isomorphic and r.witness == tuple(range(spec.n))


def test_witness_maps_layers():
    rng = random.Random(5)
    for name in ("cube3", "pyr_cube3", "q1_4", "skew_solid"):
        spec = fixture_corpus()[name]
        perm = list(range(spec.n))
        rng.shuffle(perm)
        other = relabeled(spec, perm)
        r = isomorphic(lattice_of(spec), build_face_lattice(other))
        assert r.isomorphic
        for f in lattice_of(spec).facets:
            image = tuple(sorted(r.witness[v] for v in f))
            assert image in build_face_lattice(other).facets


def test_verdict_invariant_under_relabeling():
    rng = random.Random(9)
    l1, l2 = lattice_of(q1(4).spec), lattice_of(q2(4).spec)
    for _ in range(5):
        perm = list(range(8))
        rng.shuffle(perm)
        shuffled = build_face_lattice(relabeled(q2(4).spec, perm))
        assert not isomorphic(l1, shuffled).isomorphic
        assert isomorphic(
            k_skeleton(l1, 1), k_skeleton(shuffled, 1)
        ).isomorphic


def test_graph_vs_face_sensitive():
    # same graph, different 2-face layer: the skeleton comparison must
    # consult the faces, not just the edges
    l1 = lattice_of(q1(4).spec)
    l2 = lattice_of(q2(4).spec)
    s1, s2 = k_skeleton(l1, 2), k_skeleton(l2, 2)
    assert isomorphic(k_skeleton(l1, 1), k_skeleton(l2, 1)).isomorphic
    assert not isomorphic(s1, s2).isomorphic


def test_kind_mismatch():
    lat = lattice_of(fixture_corpus()["cube3"])
    with pytest.raises(KindMismatch):
        isomorphic(lat, k_skeleton(lat, 1))
    with pytest.raises(KindMismatch):
        isomorphic(k_skeleton(lat, 1), k_skeleton(lat, 2))
