"""Singular triangulations of the glued manifolds, and their verification.

A triangulation is a list of tetrahedra, each with its four faces glued to
faces of other tetrahedra.  Face f of a tetrahedron is the one opposite
vertex f.  A gluing entry (t', f', perm) at face f of tetrahedron t says
that face is identified with face f' of t'; perm is a permutation of
(0, 1, 2, 3) sending each vertex of t to a vertex of t', with perm[f] = f'.
Gluings must be mutually inverse.  The JSON serialization is

    {"tetCount": N, "gluings": [[[t', f', [p0, p1, p2, p3]], ...x4], ...xN]}

with an entry of null for an unglued face.

triangulate_fibonacci cones Y(n) from its apex vertex Q: one tetrahedron per
face not containing Q (3n in all), lateral walls either glued to the matching
wall of the neighbouring cone tetrahedron or realizing a face F_i (odd i)
of the polytope.  The face pairing s_i then glues the realized boundary
faces in pairs.

triangulate_lobell takes the 8-copy assembly determined by a coloring:
inside each copy every face is fanned into triangles from its least-index
vertex and each triangle is coned from a fresh apex at the copy's centre
(8n - 4 tetrahedra per copy, 32(2n - 1) in all); fan triangles of face F in
copy g are glued by the identity to the same triangles in copy g + color(F).

verify_triangulation checks the gluing axioms, the quotient cell counts and
Euler characteristic, that every vertex link is a sphere, and orientability
(tetrahedra admit signs such that same-sign gluings are odd permutations),
returning the same ManifoldReport as the polytope-level verifier.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .coloring import GROUP8, FaceColoring, group_index, validate_coloring
from .gluing import (
    ManifoldReport,
    UnionFind,
    VertexLinkReport,
    fibonacci_pairing,
)
from .polytope import (
    CombinatorialPolytope,
    build_fibonacci_polytope,
    build_lobell_polytope,
)

Gluing = tuple[int, int, tuple[int, int, int, int]]


class TriangulationFormatError(ValueError):
    """A serialized triangulation does not fit the expected shape."""


@dataclass
class Triangulation:
    """Face-gluing table: gluings[t][f] describes face f of tetrahedron t."""

    gluings: list[list[Optional[Gluing]]]
    labels: Optional[list[dict]] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        for t, row in enumerate(self.gluings):
            if len(row) != 4:
                raise TriangulationFormatError(
                    f"tetrahedron {t} has {len(row)} face entries instead of 4"
                )
            self.gluings[t] = [
                None if entry is None else (entry[0], entry[1], tuple(entry[2]))
                for entry in row
            ]

    @property
    def tet_count(self) -> int:
        return len(self.gluings)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def export_triangulation(tri: Triangulation) -> str:
    data = {
        "tetCount": tri.tet_count,
        "gluings": [
            [
                None if entry is None else [entry[0], entry[1], list(entry[2])]
                for entry in row
            ]
            for row in tri.gluings
        ],
    }
    return json.dumps(data, indent=2) + "\n"


def import_triangulation(text: str) -> Triangulation:
    """Parse and shape-check the JSON form; raises TriangulationFormatError
    with the offending location on any malformed entry."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TriangulationFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise TriangulationFormatError("top level must be an object")
    for key in ("tetCount", "gluings"):
        if key not in data:
            raise TriangulationFormatError(f"missing key {key!r}")
    count = data["tetCount"]
    if not isinstance(count, int) or isinstance(count, bool) or count < 0:
        raise TriangulationFormatError(f"tetCount must be a non-negative integer, got {count!r}")
    rows = data["gluings"]
    if not isinstance(rows, list):
        raise TriangulationFormatError("gluings must be a list")
    if len(rows) != count:
        raise TriangulationFormatError(
            f"tetCount is {count} but gluings lists {len(rows)} tetrahedra"
        )

    def is_index(x, bound) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < bound

    gluings: list[list[Optional[Gluing]]] = []
    for t, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 4:
            raise TriangulationFormatError(f"gluings[{t}] must list 4 face gluings")
        out_row: list[Optional[Gluing]] = []
        for f, entry in enumerate(row):
            where = f"gluings[{t}][{f}]"
            if entry is None:
                out_row.append(None)
                continue
            if not isinstance(entry, list) or len(entry) != 3:
                raise TriangulationFormatError(f"{where} must be [tet, face, perm] or null")
            t2, f2, perm = entry
            if not is_index(t2, count):
                raise TriangulationFormatError(
                    f"{where} references tetrahedron {t2!r} of {count}"
                )
            if not is_index(f2, 4):
                raise TriangulationFormatError(f"{where} references face {f2!r} of 4")
            if (
                not isinstance(perm, list)
                or len(perm) != 4
                or not all(is_index(x, 4) for x in perm)
                or sorted(perm) != [0, 1, 2, 3]
            ):
                raise TriangulationFormatError(
                    f"{where} permutation {perm!r} is not a permutation of 0..3"
                )
            out_row.append((t2, f2, tuple(perm)))
        gluings.append(out_row)
    return Triangulation(gluings)


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------

def _set_glue(
    tets: list[list[str]],
    gluings: list[list[Optional[Gluing]]],
    slot_a: tuple[int, int],
    slot_b: tuple[int, int],
    face_map: dict[str, str],
) -> None:
    """Record the gluing of slot_a onto slot_b given the bijection between
    the two triangles' vertices; also records the inverse gluing."""
    inverse = {w: v for v, w in face_map.items()}
    for (ta, fa), (tb, fb), vmap in (
        (slot_a, slot_b, face_map),
        (slot_b, slot_a, inverse),
    ):
        perm = [0, 0, 0, 0]
        for k, v in enumerate(tets[ta]):
            perm[k] = fb if k == fa else tets[tb].index(vmap[v])
        gluings[ta][fa] = (tb, fb, tuple(perm))


def _identity_on(vertices) -> dict[str, str]:
    return {v: v for v in vertices}


def triangulate_fibonacci(n: int) -> Triangulation:
    """Cone Y(n) from Q and glue along the pairing s_1..s_2n (3n tetrahedra)."""
    p = build_fibonacci_polytope(n)
    pairing = fibonacci_pairing(p)
    edge_to_faces = p.edge_faces()
    has_apex = ["Q" in face for face in p.faces]
    name_of = {fi: name for name, fi in p.face_labels.items()}

    tets: list[list[str]] = []
    labels: list[dict] = []
    tet_of_base: dict[int, int] = {}
    for fi, face in enumerate(p.faces):
        if has_apex[fi]:
            continue
        k = min(range(3), key=lambda j: p.vertex_index(face[j]))
        base = face[k:] + face[:k]
        tet_of_base[fi] = len(tets)
        labels.append({"base": name_of[fi], "vertices": ["Q", *base]})
        tets.append(["Q", *base])

    # where each tetrahedron face sits: its own base triangle, a polytope
    # face containing Q, or an internal cone wall over a base edge
    face_slot: dict[int, tuple[int, int]] = {}
    walls: dict[frozenset, list[tuple[int, int]]] = {}
    for fi, t in tet_of_base.items():
        face_slot[fi] = (t, 0)
        base = tets[t][1:]
        for f in (1, 2, 3):
            e = frozenset(base[j] for j in range(3) if j != f - 1)
            other = next(g for g in edge_to_faces[e] if g != fi)
            if has_apex[other]:
                face_slot[other] = (t, f)
            else:
                walls.setdefault(e, []).append((t, f))

    gluings: list[list[Optional[Gluing]]] = [[None] * 4 for _ in tets]
    for e, slots in walls.items():
        a, b = slots
        _set_glue(tets, gluings, a, b, _identity_on({"Q", *e}))
    for m in pairing.matches:
        (_, fi), (_, fj) = m.source, m.target
        _set_glue(tets, gluings, face_slot[fi], face_slot[fj], m.vertex_map)
    return Triangulation(gluings, labels=labels)


def triangulate_lobell(c: FaceColoring) -> Triangulation:
    """Fan-and-cone subdivision of the 8-copy assembly of R(n), glued across
    copies by the coloring (32(2n - 1) tetrahedra)."""
    p = build_lobell_polytope(c.n)
    report = validate_coloring(p, c)
    if not report.ok:
        bad = [name for name, passed, _ in report.checks if not passed]
        raise ValueError(f"coloring of R({c.n}) is not valid: fails {bad}")
    label_of = {fi: int(lab) for lab, fi in p.face_labels.items()}

    fans: list[list[tuple[str, str, str]]] = []
    for face in p.faces:
        k = min(range(len(face)), key=lambda j: p.vertex_index(face[j]))
        cyc = face[k:] + face[:k]
        fans.append([(cyc[0], cyc[j], cyc[j + 1]) for j in range(1, len(cyc) - 1)])

    tets: list[list[str]] = []
    labels: list[dict] = []
    tet_index: dict[tuple[int, int, int], int] = {}
    for cid in range(8):
        apex = f"apex{cid}"
        for fi, fan in enumerate(fans):
            for k, tri in enumerate(fan):
                tet_index[(cid, fi, k)] = len(tets)
                labels.append(
                    {"copy": cid, "face": fi, "fan": k, "vertices": [apex, *tri]}
                )
                tets.append([apex, *tri])

    gluings: list[list[Optional[Gluing]]] = [[None] * 4 for _ in tets]

    # cone walls inside each copy, over polytope edges and fan diagonals
    walls: dict[tuple[int, frozenset], list[tuple[int, int]]] = {}
    for (cid, fi, k), t in tet_index.items():
        tri = tets[t][1:]
        for f in (1, 2, 3):
            e = frozenset(tri[j] for j in range(3) if j != f - 1)
            walls.setdefault((cid, e), []).append((t, f))
    for (cid, e), slots in walls.items():
        a, b = slots
        _set_glue(tets, gluings, a, b, _identity_on({f"apex{cid}", *e}))

    # boundary triangles glued across copies by the coloring
    for fi, fan in enumerate(fans):
        color = c.colors[label_of[fi]]
        for g in GROUP8:
            gi, hi = group_index(g), group_index(g + color)
            if gi < hi:
                for k in range(len(fan)):
                    ta, tb = tet_index[(gi, fi, k)], tet_index[(hi, fi, k)]
                    gluings[ta][0] = (tb, 0, (0, 1, 2, 3))
                    gluings[tb][0] = (ta, 0, (0, 1, 2, 3))
    return Triangulation(gluings, labels=labels)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _perm_is_odd(perm: tuple[int, int, int, int]) -> bool:
    swaps = sum(
        1
        for i in range(4)
        for j in range(i + 1, 4)
        if perm[i] > perm[j]
    )
    return swaps % 2 == 1


class _ParityUnionFind:
    """Union-find with a Z/2 weight; union(x, y, d) asserts
    weight(x) - weight(y) = d and reports whether that is consistent."""

    def __init__(self) -> None:
        self.parent: dict = {}
        self.offset: dict = {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.offset[x] = 0
            return x, 0
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        parity = 0
        for y in reversed(path):
            parity ^= self.offset[y]
            self.parent[y] = x
            self.offset[y] = parity
        return x, self.offset[path[0]] if path else 0

    def union(self, x, y, d: int) -> bool:
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return (px ^ py) == d
        self.parent[ry] = rx
        self.offset[ry] = px ^ py ^ d
        return True


def verify_triangulation(tri: Triangulation) -> ManifoldReport:
    """Check the gluing axioms and that the quotient is a closed orientable
    3-manifold; every failed condition is reported, nothing is raised."""
    problems: list[str] = []
    count = tri.tet_count

    unglued = [(t, f) for t in range(count) for f in range(4) if tri.gluings[t][f] is None]
    closed = not unglued
    if unglued:
        shown = ", ".join(map(str, unglued[:8])) + ("..." if len(unglued) > 8 else "")
        problems.append(f"unglued faces: {shown}")

    usable: dict[tuple[int, int], Gluing] = {}
    for t in range(count):
        for f in range(4):
            entry = tri.gluings[t][f]
            if entry is None:
                continue
            t2, f2, perm = entry
            if not (0 <= t2 < count):
                problems.append(f"gluing of tet {t} face {f} references tetrahedron {t2}")
                continue
            if sorted(perm) != [0, 1, 2, 3]:
                problems.append(
                    f"gluing of tet {t} face {f}: {perm} is not a permutation of 0..3"
                )
                continue
            if perm[f] != f2:
                problems.append(
                    f"gluing of tet {t} face {f}: perm {perm} sends face {f} "
                    f"to {perm[f]}, not to face {f2}"
                )
                continue
            back = tri.gluings[t2][f2]
            if (
                back is None
                or back[0] != t
                or back[1] != f
                or any(back[2][perm[i]] != i for i in range(4))
            ):
                problems.append(
                    f"gluing of tet {t} face {f} is not mirrored by tet {t2} face {f2}"
                )
                continue
            usable[(t, f)] = entry

    vertex_uf = UnionFind()
    edge_uf = UnionFind()
    side_uf = UnionFind()
    corner_uf = UnionFind()
    parity = _ParityUnionFind()

    all_vertices = [(t, i) for t in range(count) for i in range(4)]
    all_edges = [
        (t, frozenset((i, j))) for t in range(count) for i in range(4) for j in range(i + 1, 4)
    ]
    for tv in all_vertices:
        vertex_uf.find(tv)
    for te in all_edges:
        edge_uf.find(te)
    for t in range(count):
        for i in range(4):
            for f in range(4):
                if f != i:
                    side_uf.find((t, i, f))
            for j in range(4):
                if j != i:
                    corner_uf.find((t, i, j))

    orientable = True
    for (t, f), (t2, f2, perm) in usable.items():
        on_face = [i for i in range(4) if i != f]
        for i in on_face:
            vertex_uf.union((t, i), (t2, perm[i]))
            side_uf.union((t, i, f), (t2, perm[i], f2))
        for a in range(3):
            for b in range(a + 1, 3):
                i, j = on_face[a], on_face[b]
                edge_uf.union((t, frozenset((i, j))), (t2, frozenset((perm[i], perm[j]))))
        for i in on_face:
            for j in on_face:
                if i != j:
                    corner_uf.union((t, i, j), (t2, perm[i], perm[j]))
        if not parity.union(t, t2, 0 if _perm_is_odd(perm) else 1):
            orientable = False
    if not orientable:
        problems.append(
            "no assignment of tetrahedron orientations makes every gluing compatible"
        )

    quotient_vertices = vertex_uf.class_count(all_vertices)
    quotient_edges = edge_uf.class_count(all_edges)
    face_orbits = {frozenset(((t, f), entry[:2])) for (t, f), entry in usable.items()}
    quotient_faces = len(face_orbits) + len(unglued)
    euler = quotient_vertices - quotient_edges + quotient_faces - count

    classes: dict = {}
    for tv in all_vertices:
        classes.setdefault(vertex_uf.find(tv), []).append(tv)
    links: list[VertexLinkReport] = []
    for root in sorted(classes):
        members = classes[root]
        disks = len(members)
        link_edges = len(
            {side_uf.find((t, i, f)) for t, i in members for f in range(4) if f != i}
        )
        link_vertices = len(
            {corner_uf.find((t, i, j)) for t, i in members for j in range(4) if j != i}
        )
        link_closed = all(
            (t, f) in usable for t, i in members for f in range(4) if f != i
        )
        connected = vertex_uf.class_count(members) == 1
        euler_link = disks - link_edges + link_vertices
        links.append(
            VertexLinkReport(min(members), disks, euler_link, connected, link_closed)
        )

    return ManifoldReport(
        cells=count,
        quotient_vertices=quotient_vertices,
        quotient_edges=quotient_edges,
        quotient_faces=quotient_faces,
        euler_characteristic=euler,
        closed=closed,
        orientable=orientable,
        vertex_links=links,
        problems=problems,
    )
