"""Combinatorial models of the two polytope families.

Both families are encoded purely combinatorially: a polytope is a list of
faces, each face a cyclic sequence of vertex labels.  Edges and adjacencies
are derived from consecutive pairs in those cycles.

Lobell family R(n), n >= 5.  A right-angled "drum": two n-gonal bases and a
belt of 2n pentagons arranged in two interleaved rings.  R(5) is the regular
right-angled dodecahedron.  The vertex set splits into four rings of n:

    a1..an   upper basis ring
    b1..bn   upper middle ring (bi below ai)
    c1..cn   lower middle ring (ci between bi and b(i+1))
    d1..dn   lower basis ring (di below ci)

Faces carry the numbering used by the reflection-group presentation:
upper pentagons 1..n (pentagon i sits on the basis edge ai-a(i+1)), lower
pentagons n+1..2n cyclically in the same verse with pentagon n+1 adjacent to
pentagons 1 and n, upper basis 2n+1, lower basis 2n+2.  Counts: 4n vertices,
6n edges, 2n+2 faces, every vertex trivalent.

Fibonacci family Y(n), n >= 4.  An antiprism over a 2n-gon capped by two
pyramids: apexes Q (joined to the even-indexed rim vertices) and R (joined to
the odd-indexed ones), rim P1..P2n.  All 4n faces are triangles:

    Fi  = (Q, P(i+1), P(i+3))   for odd i
    Fi  = (R, P(i+1), P(i+3))   for even i
    Fi* = (P(i+2), P(i+3), P(i+4))

with rim subscripts taken mod 2n into 1..2n.  Counts: 2n+2 vertices, 6n
edges, 4n faces; every rim vertex has degree 5, the apexes have degree n.
Y(5) is the regular icosahedron.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

LOBELL = "lobell"
FIBONACCI = "fibonacci"


# ---------------------------------------------------------------------------
# core type
# ---------------------------------------------------------------------------

@dataclass
class CombinatorialPolytope:
    """A 3-polytope given by its faces as cyclic vertex sequences.

    ``face_labels`` maps the external face label (the numbering used in
    presentations and colorings) to the index into ``faces``.  Construction
    performs no validation beyond basic shape, so deliberately broken
    instances can be built and fed to :func:`validate_polytope`.
    """

    family: Optional[str]
    n: Optional[int]
    vertices: list[str]
    faces: list[tuple[str, ...]]
    face_labels: dict[str, int]
    _vertex_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.faces = [tuple(f) for f in self.faces]
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}

    # -- derived structure --------------------------------------------------

    def vertex_index(self, v: str) -> int:
        return self._vertex_index[v]

    def face_cycle_edges(self, face_index: int) -> list[frozenset[str]]:
        """Edges of one face, as unordered vertex pairs, in cycle order."""
        cyc = self.faces[face_index]
        return [frozenset((cyc[k], cyc[(k + 1) % len(cyc)])) for k in range(len(cyc))]

    def edge_faces(self) -> dict[frozenset[str], list[int]]:
        """Map each edge to the (multi)set of faces whose boundary uses it."""
        out: dict[frozenset[str], list[int]] = {}
        for fi in range(len(self.faces)):
            for e in self.face_cycle_edges(fi):
                out.setdefault(e, []).append(fi)
        return out

    def edges(self) -> list[frozenset[str]]:
        return list(self.edge_faces().keys())

    def vertex_degree(self, v: str) -> int:
        return sum(1 for e in self.edge_faces() if v in e)

    def faces_at_vertex(self, v: str) -> list[int]:
        return [fi for fi, f in enumerate(self.faces) if v in f]

    def adjacent_face_pairs(self) -> set[frozenset[int]]:
        """Unordered pairs of face indices sharing an edge."""
        pairs: set[frozenset[int]] = set()
        for incident in self.edge_faces().values():
            if len(incident) == 2 and incident[0] != incident[1]:
                pairs.add(frozenset(incident))
        return pairs

    def label_of_face(self, face_index: int) -> str:
        for lab, fi in self.face_labels.items():
            if fi == face_index:
                return lab
        raise KeyError(face_index)

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "faces": [list(f) for f in self.faces],
            "faceLabels": dict(self.face_labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_lobell_polytope(n: int) -> CombinatorialPolytope:
    """The drum R(n): two n-gonal bases and 2n pentagons, right-angled
    combinatorics (trivalent vertices, all faces with >= 5 sides)."""
    if n < 5:
        raise ValueError("Andreev condition fails below n=5")

    def a(i: int) -> str:
        return f"a{(i - 1) % n + 1}"

    def b(i: int) -> str:
        return f"b{(i - 1) % n + 1}"

    def c(i: int) -> str:
        return f"c{(i - 1) % n + 1}"

    def d(i: int) -> str:
        return f"d{(i - 1) % n + 1}"

    vertices = (
        [a(i) for i in range(1, n + 1)]
        + [b(i) for i in range(1, n + 1)]
        + [c(i) for i in range(1, n + 1)]
        + [d(i) for i in range(1, n + 1)]
    )

    faces: list[tuple[str, ...]] = []
    labels: dict[str, int] = {}

    # upper pentagons 1..n: pentagon i hangs from basis edge ai-a(i+1)
    for i in range(1, n + 1):
        faces.append((a(i), a(i + 1), b(i + 1), c(i), b(i)))
        labels[str(i)] = len(faces) - 1
    # lower pentagons n+1..2n: pentagon n+1+j hangs from basis edge dj-d(j+1),
    # so that pentagon n+1 is the one adjacent to upper pentagons 1 and n
    for j in range(0, n):
        faces.append((d(j if j else n), d(j + 1), c(j + 1), b(j + 1), c(j if j else n)))
        labels[str(n + 1 + j)] = len(faces) - 1
    # the two bases
    faces.append(tuple(a(i) for i in range(1, n + 1)))
    labels[str(2 * n + 1)] = len(faces) - 1
    faces.append(tuple(d(i) for i in range(1, n + 1)))
    labels[str(2 * n + 2)] = len(faces) - 1

    return CombinatorialPolytope(LOBELL, n, vertices, faces, labels)


def build_fibonacci_polytope(n: int) -> CombinatorialPolytope:
    """The capped antiprism Y(n): 4n triangles over rim P1..P2n with apexes
    Q (even rim) and R (odd rim)."""
    if n < 4:
        raise ValueError("capped antiprism needs n >= 4")

    def p(i: int) -> str:
        return f"P{(i - 1) % (2 * n) + 1}"

    vertices = ["Q", "R"] + [p(i) for i in range(1, 2 * n + 1)]

    faces: list[tuple[str, ...]] = []
    labels: dict[str, int] = {}
    for i in range(1, 2 * n + 1):
        apex = "Q" if i % 2 == 1 else "R"
        faces.append((apex, p(i + 1), p(i + 3)))
        labels[f"F{i}"] = len(faces) - 1
    for i in range(1, 2 * n + 1):
        faces.append((p(i + 2), p(i + 3), p(i + 4)))
        labels[f"F{i}*"] = len(faces) - 1

    return CombinatorialPolytope(FIBONACCI, n, vertices, faces, labels)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class PolytopeReport:
    """Outcome of validate_polytope: one (name, passed, detail) row per check."""

    checks: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failed(self) -> list[str]:
        return [name for name, passed, _ in self.checks if not passed]

    def __repr__(self) -> str:
        rows = ", ".join(f"{name}={'ok' if passed else 'FAIL'}" for name, passed, _ in self.checks)
        return f"<PolytopeReport {rows}>"


def _connected(count: int, neighbor_pairs: Iterable[frozenset[int]]) -> bool:
    if count == 0:
        return True
    adj: dict[int, set[int]] = {i: set() for i in range(count)}
    for pair in neighbor_pairs:
        x, y = tuple(pair)
        adj[x].add(y)
        adj[y].add(x)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == count


def validate_polytope(p: CombinatorialPolytope, family: Optional[str] = None) -> PolytopeReport:
    """Check the structural invariants of a polytope boundary.

    Generic checks: every face is a simple cycle, every edge lies in exactly
    two faces, Euler characteristic V - E + F = 2, and the face-adjacency
    graph is connected.  In Lobell mode the combinatorial Andreev conditions
    used downstream are added (all vertices trivalent, all faces with at
    least 5 sides); in Fibonacci mode all faces must be triangles.
    """
    fam = family if family is not None else p.family
    checks: list[tuple[str, bool, str]] = []

    bad_faces = [fi for fi, f in enumerate(p.faces) if len(set(f)) != len(f) or len(f) < 3]
    checks.append(("faces_simple", not bad_faces, f"degenerate faces: {bad_faces}"))

    ef = p.edge_faces()
    bad_edges = {tuple(sorted(e)): len(fs) for e, fs in ef.items() if len(fs) != 2}
    checks.append(("edge_two_faces", not bad_edges, f"edges with face count != 2: {bad_edges}"))

    v, e, f = len(p.vertices), len(ef), len(p.faces)
    checks.append(("euler", v - e + f == 2, f"V-E+F = {v}-{e}+{f} = {v - e + f}"))

    checks.append(
        ("face_graph_connected", _connected(len(p.faces), p.adjacent_face_pairs()), "")
    )

    if fam == LOBELL:
        degs = {w: 0 for w in p.vertices}
        for edge in ef:
            for w in edge:
                if w in degs:
                    degs[w] += 1
        nontriv = {w: k for w, k in degs.items() if k != 3}
        checks.append(("trivalent", not nontriv, f"non-trivalent: {nontriv}"))
        small = [fi for fi, fc in enumerate(p.faces) if len(fc) < 5]
        checks.append(("faces_at_least_pentagons", not small, f"faces with < 5 sides: {small}"))
    elif fam == FIBONACCI:
        nontri = [fi for fi, fc in enumerate(p.faces) if len(fc) != 3]
        checks.append(("faces_triangles", not nontri, f"non-triangles: {nontri}"))

    return PolytopeReport(checks)


def boundary_orientation(p: CombinatorialPolytope) -> list[int]:
    """Coherent orientation of the boundary sphere.

    Returns one sign per face: +1 keeps the stored cycle, -1 reverses it,
    such that every edge is traversed once in each direction by its two
    incident faces.  Raises ValueError if no coherent choice exists.
    """
    directed: list[dict[frozenset[str], tuple[str, str]]] = []
    for fi, cyc in enumerate(p.faces):
        d = {}
        for k in range(len(cyc)):
            u, w = cyc[k], cyc[(k + 1) % len(cyc)]
            d[frozenset((u, w))] = (u, w)
        directed.append(d)

    ef = p.edge_faces()
    signs: list[int] = [0] * len(p.faces)
    for start in range(len(p.faces)):
        if signs[start]:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            fi = stack.pop()
            for e, (u, w) in directed[fi].items():
                incident = ef.get(e, [])
                if len(incident) != 2:
                    raise ValueError(f"edge {tuple(sorted(e))} not shared by two faces")
                gi = incident[0] if incident[1] == fi else incident[1]
                # face fi traverses e as (u, w) under sign +1; the neighbor
                # must traverse it as (w, u)
                gu, gw = directed[gi][e]
                need = 1 if (gu, gw) == ((w, u) if signs[fi] == 1 else (u, w)) else -1
                if signs[gi] == 0:
                    signs[gi] = need
                    stack.append(gi)
                elif signs[gi] != need:
                    raise ValueError("boundary surface is not orientable")
    return signs
