"""Finite and affine ADE Dynkin diagrams with highest-root vertex labels.

A diagram vertex labelled by the coefficient of the corresponding simple root in
the highest root is the combinatorial source of the "length" invariant: a flop of
length l is marked by a vertex whose label is l, and l ranges over 1..6.

Labels are never hard-coded here.  They are computed by an independent oracle:
the positive roots of the (simply laced) root system are saturated by repeated
simple-root addition, using the norm criterion v^T C v = 2 with C the Cartan
matrix, and the highest root is the coordinate-wise maximum.  Affine labels are
the finite labels extended by 1 at the extending vertex; the construction then
checks the kernel identity 2*label(v) = sum of neighbour labels at every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

__all__ = [
    "DynkinType",
    "MarkedDiagram",
    "build_diagram",
    "highest_root_labels",
    "vertices_with_label",
    "automorphism_orbits",
    "A",
    "D",
    "E6",
    "E7",
    "E8",
]

D_FAMILY_BOUND = 12  # default cap for D(n) enumeration; only l <= 2 lives in D-types


@dataclass(frozen=True, order=True)
class DynkinType:
    """One of A(n), D(n), E6, E7, E8."""

    family: str  # "A", "D" or "E"
    n: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "A" and self.n < 1:
            raise ValueError("A requires n >= 1")
        if self.family == "D" and self.n < 4:
            raise ValueError("D requires n >= 4")
        if self.family == "E" and self.n not in (6, 7, 8):
            raise ValueError("E requires n in {6, 7, 8}")

    def __str__(self):
        return f"{self.family}{self.n}"

    @classmethod
    def parse(cls, s: str) -> "DynkinType":
        s = s.strip().upper()
        if len(s) < 2 or s[0] not in "ADE":
            raise ValueError(f"cannot parse Dynkin type {s!r}")
        return cls(s[0], int(s[1:]))


def A(n):
    return DynkinType("A", n)


def D(n):
    return DynkinType("D", n)


E6 = DynkinType("E", 6)
E7 = DynkinType("E", 7)
E8 = DynkinType("E", 8)


@dataclass(frozen=True)
class MarkedDiagram:
    """An ADE diagram with labels; vertex ids are "v1".."vn" (Bourbaki numbering)
    plus "v0" for the extending vertex when affine."""

    dtype: DynkinType
    affine: bool
    vertices: tuple  # canonical order
    edges: tuple  # (u, v, multiplicity); multiplicity 2 only for affine A(1)
    labels: dict = field(compare=False)
    extending: str | None = None
    marked: str | None = None

    def neighbours(self, v):
        out = []
        for a, b, m in self.edges:
            if a == v:
                out.append((b, m))
            elif b == v:
                out.append((a, m))
        return out

    def with_marked(self, v) -> "MarkedDiagram":
        if v not in self.vertices:
            raise ValueError(f"no vertex {v!r} in {self.dtype}")
        return MarkedDiagram(self.dtype, self.affine, self.vertices, self.edges,
                             self.labels, self.extending, v)

    def to_json(self) -> dict:
        return {
            "family": self.dtype.family,
            "n": self.dtype.n,
            "affine": self.affine,
            "vertices": list(self.vertices),
            "edges": [[a, b, m] for a, b, m in self.edges],
            "labels": {v: self.labels[v] for v in self.vertices},
            "extending": self.extending,
        }


def _finite_edges(t: DynkinType):
    """Edges of the finite diagram in Bourbaki numbering."""
    n = t.n
    if t.family == "A":
        return [(f"v{i}", f"v{i+1}", 1) for i in range(1, n)]
    if t.family == "D":
        es = [(f"v{i}", f"v{i+1}", 1) for i in range(1, n - 2)]
        es += [(f"v{n-2}", f"v{n-1}", 1), (f"v{n-2}", f"v{n}", 1)]
        return es
    # E-types: chain v1-v3-v4-...-vn with v2 attached to v4
    es = [("v1", "v3", 1), ("v2", "v4", 1)]
    es += [(f"v{i}", f"v{i+1}", 1) for i in range(3, n)]
    return es


def _extending_attachment(t: DynkinType):
    """Vertex the extending vertex attaches to (standard affine diagrams)."""
    if t.family == "A":
        return None  # special-cased: attaches to both ends (or doubles for A1)
    if t.family == "D":
        return "v2" if t.n > 4 else "v2"  # D4 centre is v2 as well
    return {6: "v2", 7: "v1", 8: "v8"}[t.n]


def _cartan(vertices, edges):
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    for a, b, m in edges:
        C[idx[a]][idx[b]] -= m
        C[idx[b]][idx[a]] -= m
    return C


def _positive_roots(vertices, edges):
    """Saturate the positive roots by repeated simple-root addition.

    A nonnegative integer vector v is a root iff v^T C v = 2 (simply laced), and
    every positive root arises from a simple root by adding simple roots one at
    a time staying inside the root system.
    """
    C = _cartan(vertices, edges)
    n = len(vertices)

    def norm(v):
        return sum(v[i] * C[i][j] * v[j] for i in range(n) for j in range(n))

    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        r = frontier.pop()
        for i in range(n):
            cand = tuple(r[j] + (1 if j == i else 0) for j in range(n))
            if cand not in roots and norm(cand) == 2:
                roots.add(cand)
                frontier.append(cand)
    return roots


@lru_cache(maxsize=None)
def _finite_labels(t: DynkinType) -> tuple:
    vertices = tuple(f"v{i}" for i in range(1, t.n + 1))
    edges = tuple(_finite_edges(t))
    roots = _positive_roots(vertices, edges)
    high = tuple(max(r[i] for r in roots) for i in range(len(vertices)))
    if high not in roots:
        raise AssertionError(f"coordinate-wise maximum is not a root for {t}")
    return tuple(zip(vertices, high))


def highest_root_labels(d: MarkedDiagram) -> dict:
    """Labels from the positive-root saturation oracle.

    For affine input the finite sub-diagram is used and the extending vertex
    gets label 1.
    """
    labels = dict(_finite_labels(d.dtype))
    if d.affine:
        labels[d.extending] = 1
    return labels


def build_diagram(t: DynkinType, affine: bool) -> MarkedDiagram:
    vertices = [f"v{i}" for i in range(1, t.n + 1)]
    edges = _finite_edges(t)
    extending = None
    if affine:
        extending = "v0"
        vertices = ["v0"] + vertices
        if t.family == "A":
            if t.n == 1:
                edges = edges + [("v0", "v1", 2)]
            else:
                edges = edges + [("v0", "v1", 1), ("v0", f"v{t.n}", 1)]
        else:
            edges = edges + [("v0", _extending_attachment(t), 1)]
    d = MarkedDiagram(t, affine, tuple(vertices), tuple(edges), {}, extending)
    labels = highest_root_labels(d)
    object.__setattr__(d, "labels", labels)
    if affine:
        _check_kernel_identity(d)
    return d


def _check_kernel_identity(d: MarkedDiagram):
    """2*label(v) = sum of multiplicity*label(w) over edges at v, for affine d."""
    for v in d.vertices:
        s = sum(m * d.labels[w] for w, m in d.neighbours(v))
        if 2 * d.labels[v] != s:
            raise AssertionError(f"kernel identity fails at {v} in affine {d.dtype}")


def _nx_graph(d: MarkedDiagram):
    g = nx.Graph()
    for v in d.vertices:
        g.add_node(v, label=d.labels[v], ext=(v == d.extending))
    for a, b, m in d.edges:
        g.add_edge(a, b, mult=m)
    return g


def automorphism_orbits(d: MarkedDiagram) -> list:
    """Vertex orbits under label-preserving diagram automorphisms."""
    g = _nx_graph(d)
    matcher = nx.algorithms.isomorphism.GraphMatcher(
        g, g,
        node_match=lambda a, b: a["label"] == b["label"] and a["ext"] == b["ext"],
        edge_match=lambda a, b: a["mult"] == b["mult"])
    parent = {v: v for v in d.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for mapping in matcher.isomorphisms_iter():
        for a, b in mapping.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
    orbits = {}
    for v in d.vertices:
        orbits.setdefault(find(v), []).append(v)
    return [sorted(o, key=_vkey) for o in orbits.values()]


def _vkey(v):
    return int(v[1:])


def vertices_with_label(ell: int, types, up_to_auto: bool = False) -> list:
    """All (type, vertex) placements whose label is ell, in canonical order.

    With up_to_auto, one representative per automorphism orbit (the placements in
    an orbit produce identical diagrams and hence identical knitting).
    """
    out = []
    for t in sorted(set(types)):
        d = build_diagram(t, affine=False)
        if up_to_auto:
            candidates = [o[0] for o in automorphism_orbits(d)]
        else:
            candidates = d.vertices
        for v in sorted(candidates, key=_vkey):
            if d.labels[v] == ell:
                out.append((t, v))
    return out
