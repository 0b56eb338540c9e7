"""Text formats for incidences, skeleta, and edge lists.

All writers emit UTF-8 text with LF line endings and canonical ordering,
so identical inputs always serialise byte-identically.  Lines starting
with ``#`` are comments.

incidence   ``d <dim>`` / ``vertices <n>`` / one ``facet v1 v2 ...`` per facet
skeleton    ``d`` / ``vertices`` / ``edge u v`` lines / ``face<r> v1 ...`` lines
edge list   optional ``vertices <n>`` / ``edge u v`` lines
"""

from __future__ import annotations

from .graphs import Graph
from .lattice import KSkeleton, PolytopeSpec


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line.split())
    return out


def format_spec(spec: PolytopeSpec) -> str:
    lines = [f"d {spec.d}", f"vertices {spec.n}"]
    for f in spec.facets:
        lines.append("facet " + " ".join(str(v) for v in f))
    return "\n".join(lines) + "\n"


def parse_spec(text: str) -> PolytopeSpec:
    d = n = None
    facets = []
    for parts in _content_lines(text):
        key = parts[0]
        if key == "d":
            d = int(parts[1])
        elif key == "vertices":
            n = int(parts[1])
        elif key == "facet":
            facets.append([int(v) for v in parts[1:]])
        else:
            raise ValueError(f"unexpected line: {' '.join(parts)}")
    if d is None or n is None:
        raise ValueError("missing d or vertices header")
    return PolytopeSpec(d, n, facets)


def format_skeleton(sk: KSkeleton, d: int) -> str:
    lines = [f"d {d}", f"vertices {sk.graph.n}"]
    for u, v in sk.graph.edges:
        lines.append(f"edge {u} {v}")
    for r in sorted(sk.faces_by_dim):
        for f in sk.faces_by_dim[r]:
            lines.append(f"face{r} " + " ".join(str(v) for v in sorted(f)))
    return "\n".join(lines) + "\n"


def parse_skeleton(text: str) -> tuple[KSkeleton, int]:
    """Parse a skeleton file; returns (skeleton, polytope dimension)."""
    d = n = None
    edges = []
    faces: dict[int, list[frozenset[int]]] = {}
    for parts in _content_lines(text):
        key = parts[0]
        if key == "d":
            d = int(parts[1])
        elif key == "vertices":
            n = int(parts[1])
        elif key == "edge":
            edges.append((int(parts[1]), int(parts[2])))
        elif key.startswith("face"):
            r = int(key[4:])
            faces.setdefault(r, []).append(frozenset(int(v) for v in parts[1:]))
        else:
            raise ValueError(f"unexpected line: {' '.join(parts)}")
    if d is None or n is None:
        raise ValueError("missing d or vertices header")
    k = max(faces, default=1)
    faces_by_dim = {
        r: tuple(sorted(fs, key=lambda s: tuple(sorted(s)))) for r, fs in faces.items()
    }
    return KSkeleton(k=k, graph=Graph(n, edges), faces_by_dim=faces_by_dim), d


def format_edge_list(g: Graph) -> str:
    lines = [f"vertices {g.n}"]
    for u, v in g.edges:
        lines.append(f"edge {u} {v}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for parts in _content_lines(text):
        key = parts[0]
        if key == "vertices":
            n = int(parts[1])
        elif key == "edge":
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"unexpected line: {' '.join(parts)}")
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    return Graph(n, edges)
