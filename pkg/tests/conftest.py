"""Shared fixtures: generated polytopes and their lattice oracles.

The lattice built by intersection closure is the oracle every
reconstruction result is compared against; it never goes through the
reconstruction code paths.
"""

from functools import lru_cache

import pytest

from skelrecon import (
    PolytopeSpec,
    bipyramid,
    build_face_lattice,
    classify_vertices,
    cube,
    multifold_pyramid,
    polygon_prism,
    pyramid,
    q1,
    q2,
    simplex,
    truncate,
    validate,
)

# A cube with one facet split along a diagonal: the diagonal's endpoints 0
# and 2 are the only nonsimple vertices (degree 4, adjacent), and the
# opposite facet avoids both.
SPLIT_CUBE = PolytopeSpec(
    3,
    8,
    [
        (0, 1, 2),
        (0, 2, 3),
        (4, 5, 6, 7),
        (0, 1, 4, 5),
        (1, 2, 5, 6),
        (2, 3, 6, 7),
        (0, 3, 4, 7),
    ],
)

# An 8-vertex 3-polytope (three triangles, two quads, one more quad and a
# pentagon) whose two degree-4 vertices 0 and 1 are not adjacent; kept in
# the corpus as the nonadjacent nonsimple pair.
SKEW_SOLID = PolytopeSpec(
    3,
    8,
    [
        (0, 2, 3),
        (1, 4, 6),
        (1, 5, 7),
        (0, 2, 4, 6),
        (0, 3, 5, 7),
        (0, 1, 4, 5),
        (1, 2, 3, 6, 7),
    ],
)

# Prism over the square pyramid (apexes 4 and 9): the smallest d=4 fixture
# whose facet families relative to its two nonsimple vertices are all
# nonempty (one facet per apex, one cube avoiding both, four shared).
PRISM_OVER_PYRAMID = PolytopeSpec(
    4,
    10,
    [
        (0, 1, 2, 3, 4),
        (5, 6, 7, 8, 9),
        (0, 1, 2, 3, 5, 6, 7, 8),
        (0, 1, 4, 5, 6, 9),
        (1, 2, 4, 6, 7, 9),
        (2, 3, 4, 7, 8, 9),
        (0, 3, 4, 5, 8, 9),
    ],
)


@lru_cache(maxsize=None)
def lattice_of(spec):
    return build_face_lattice(spec)


@lru_cache(maxsize=None)
def fixture_corpus():
    """Small named polytopes used across the suite."""
    return {
        "simplex3": simplex(3),
        "simplex4": simplex(4),
        "cube3": cube(3),
        "cube4": cube(4),
        "prism5": polygon_prism(5),
        "pyr_cube3": pyramid(cube(3)),
        "pyr_prism4": pyramid(polygon_prism(4)),
        "twofold_square": multifold_pyramid(cube(2), 2),
        "twofold_triprism": multifold_pyramid(polygon_prism(3), 2),
        "bipyr_simplex3": bipyramid(simplex(3)),
        "pyr_bipyr_triangle": pyramid(bipyramid(simplex(2))),
        "q1_4": q1(4).spec,
        "q2_4": q2(4).spec,
        "split_cube": SPLIT_CUBE,
        "skew_solid": SKEW_SOLID,
        "prism_over_pyramid": PRISM_OVER_PYRAMID,
    }


def truncation_pairs():
    """(base spec, face) pairs exercising the truncation lemma."""
    pairs = []
    for spec, faces in [
        (cube(3), [(0,), (0, 1), (0, 1, 2, 3)]),
        (simplex(4), [(0,), (0, 1), (0, 1, 2)]),
        (cube(4), [(0,), (0, 1)]),
        (pyramid(cube(3)), [(8,), (0,), (0, 8)]),
        (polygon_prism(5), [(0,), (0, 5)]),
        (simplex(5), [(0, 1)]),
        (multifold_pyramid(cube(2), 2), [(4, 5)]),
        (pyramid(polygon_prism(4)), [(8,), (0, 8)]),
        (q1(4).spec, [(7,)]),
        (polygon_prism(4), [(0, 1, 4, 5)]),
        (polygon_prism(6), [(0,)]),
    ]:
        for f in faces:
            pairs.append((spec, f))
    return pairs


@pytest.fixture(scope="session")
def corpus():
    return fixture_corpus()


def assert_valid(spec):
    report = validate(lattice_of(spec))
    assert report.ok, report.summary()
