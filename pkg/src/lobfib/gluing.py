"""Face pairings, glued complexes, edge cycles, and manifold verification.

A GluedComplex is a finite list of polytope copies plus a face pairing: a
fixed-point-free involution on the boundary faces of the copies, each match
carrying a vertex bijection between the two faces.  The quotient space is a
closed 3-manifold exactly when every face is matched, the Euler
characteristic of the quotient cell structure vanishes, and the link of
every quotient vertex is a 2-sphere; it is orientable when the copies can be
oriented so that every match reverses the induced boundary orientation.
verify_closed_manifold checks all of that and reports per-item results.

Two assemblies are provided.

assemble_lobell takes a valid coloring of R(n) and glues 8 copies of R(n)
indexed by the elements of (Z/2)^3: the face F of copy g is matched with the
same face of copy g + color(F) by the identity on vertices.  Every edge of
R(n) then closes up in a cycle of length 4 (the four right angles around the
edge make a full turn), and copy g gets orientation sign (-1)^(g1+g2+g3).

assemble_fibonacci glues the 4n triangles of a single copy of Y(n) in pairs

    s_i : F_i -> F_i*,  (Q or R, P(i+1), P(i+3)) |-> (P(i+2), P(i+3), P(i+4)),

which identifies the edges in cycles of length 3, for example

    Q P(i+1) --s_i--> P(i+2) P(i+3) --s_(i-1)^-1--> P_i P(i+2)
             --s_(i-2)^-1--> Q P(i+1)          (i odd; R for even i).

Edge-cycle traversal is deterministic: it starts at the lexicographically
least (copy, edge) of each class and leaves the starting edge through its
smaller-indexed incident face.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .coloring import (
    GROUP8,
    FaceColoring,
    Z2Vector3,
    group_index,
    validate_coloring,
)
from .polytope import (
    CombinatorialPolytope,
    boundary_orientation,
    build_fibonacci_polytope,
    build_lobell_polytope,
)


class StructureError(ValueError):
    """A gluing structure is internally inconsistent (a vertex bijection does
    not carry edges to edges, or an edge cycle fails to close)."""


# ---------------------------------------------------------------------------
# pairings and complexes
# ---------------------------------------------------------------------------

Slot = tuple[int, int]  # (copy index, face index)


@dataclass
class FaceMatch:
    """One identification between two boundary faces."""

    name: str
    source: Slot
    target: Slot
    vertex_map: dict[str, str]

    def inverse_map(self) -> dict[str, str]:
        return {w: v for v, w in self.vertex_map.items()}


@dataclass
class FacePairing:
    """A set of face matches, at most one per face slot."""

    matches: list[FaceMatch]
    _by_slot: dict[Slot, tuple[FaceMatch, bool]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        self._by_slot = {}
        for m in self.matches:
            for slot, forward in ((m.source, True), (m.target, False)):
                if slot in self._by_slot:
                    raise StructureError(f"face slot {slot} matched more than once")
                self._by_slot[slot] = (m, forward)

    def has(self, slot: Slot) -> bool:
        return slot in self._by_slot

    def opposite(self, slot: Slot) -> Slot:
        m, forward = self._by_slot[slot]
        return m.target if forward else m.source

    def transport(self, slot: Slot) -> tuple[Slot, dict[str, str], str, int]:
        """(partner slot, vertex map in traversal direction, match name, +-1)."""
        m, forward = self._by_slot[slot]
        if forward:
            return m.target, dict(m.vertex_map), m.name, 1
        return m.source, m.inverse_map(), m.name, -1

    def slots(self) -> list[Slot]:
        return list(self._by_slot.keys())


@dataclass
class GluedComplex:
    """Polytope copies (with orientation signs) plus a face pairing."""

    polytopes: list[CombinatorialPolytope]
    signs: list[int]
    pairing: FacePairing

    @property
    def copies(self) -> int:
        return len(self.polytopes)

    def all_slots(self) -> list[Slot]:
        return [
            (ci, fi)
            for ci, p in enumerate(self.polytopes)
            for fi in range(len(p.faces))
        ]

    def to_json_dict(self) -> dict:
        return {
            "copies": self.copies,
            "pairing": [
                {
                    "from": list(m.source),
                    "to": list(m.target),
                    "vertexMap": [[v, w] for v, w in sorted(m.vertex_map.items())],
                }
                for m in self.pairing.matches
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


# ---------------------------------------------------------------------------
# the two assemblies
# ---------------------------------------------------------------------------

def lobell_copy_sign(g: Z2Vector3) -> int:
    return -1 if sum(g.bits) % 2 else 1


def assemble_lobell(c: FaceColoring) -> GluedComplex:
    """Glue 8 copies of R(n) along the coloring c.

    Copies are indexed by (Z/2)^3 in the fixed order of GROUP8; face F of
    copy g is identified with face F of copy g + color(F) by the identity
    vertex map.  Raises ValueError when c is not a valid coloring.
    """
    p = build_lobell_polytope(c.n)
    report = validate_coloring(p, c)
    if not report.ok:
        bad = [name for name, passed, _ in report.checks if not passed]
        raise ValueError(f"coloring of R({c.n}) is not valid: fails {bad}")

    label_of = {fi: int(lab) for lab, fi in p.face_labels.items()}
    matches: list[FaceMatch] = []
    for fi, face in enumerate(p.faces):
        color = c.colors[label_of[fi]]
        identity = {v: v for v in face}
        for g in GROUP8:
            h = g + color
            gi, hi = group_index(g), group_index(h)
            if gi < hi:
                matches.append(
                    FaceMatch(f"f{label_of[fi]}:{gi}<->{hi}", (gi, fi), (hi, fi), identity)
                )
    return GluedComplex(
        polytopes=[p] * 8,
        signs=[lobell_copy_sign(g) for g in GROUP8],
        pairing=FacePairing(matches),
    )


def fibonacci_pairing(p: CombinatorialPolytope) -> FacePairing:
    """The pairing s_1..s_2n on the faces of Y(n)."""
    n = p.n
    assert n is not None

    def pv(i: int) -> str:
        return f"P{(i - 1) % (2 * n) + 1}"

    matches = []
    for i in range(1, 2 * n + 1):
        apex = "Q" if i % 2 == 1 else "R"
        vmap = {apex: pv(i + 2), pv(i + 1): pv(i + 3), pv(i + 3): pv(i + 4)}
        matches.append(
            FaceMatch(f"s{i}", (0, p.face_labels[f"F{i}"]), (0, p.face_labels[f"F{i}*"]), vmap)
        )
    return FacePairing(matches)


def assemble_fibonacci(n: int) -> GluedComplex:
    """Close up a single copy of Y(n) along the pairing s_1..s_2n."""
    p = build_fibonacci_polytope(n)
    return GluedComplex(polytopes=[p], signs=[1], pairing=fibonacci_pairing(p))


# ---------------------------------------------------------------------------
# edge cycles
# ---------------------------------------------------------------------------

@dataclass
class EdgeCycle:
    """One quotient edge class: the polytope edges traversed in order, and
    the matches used to step between them (name, +1 forward / -1 inverse)."""

    edges: list[tuple[int, tuple[str, str]]]
    maps: list[tuple[str, int]]

    @property
    def length(self) -> int:
        return len(self.edges)


def _edge_key(p: CombinatorialPolytope, e: frozenset[str]) -> tuple[int, int]:
    i, j = sorted(p.vertex_index(v) for v in e)
    return (i, j)


def edge_cycles(gc: GluedComplex) -> list[EdgeCycle]:
    """All quotient edge classes of the complex.

    Raises StructureError when a vertex bijection fails to carry an edge to
    an edge or when a cycle closes with its endpoints exchanged.
    """
    edge_faces = [p.edge_faces() for p in gc.polytopes]
    order: list[tuple[int, tuple[int, int], frozenset[str]]] = []
    for ci, p in enumerate(gc.polytopes):
        for e in edge_faces[ci]:
            order.append((ci, _edge_key(p, e), e))
    order.sort(key=lambda t: (t[0], t[1]))

    visited: set[tuple[int, frozenset[str]]] = set()
    cycles: list[EdgeCycle] = []
    budget = len(order) + 1

    for ci0, _, e0 in order:
        if (ci0, e0) in visited:
            continue
        p0 = gc.polytopes[ci0]
        incident = edge_faces[ci0][e0]
        if len(incident) != 2 or incident[0] == incident[1]:
            raise StructureError(
                f"edge {tuple(sorted(e0))} of copy {ci0} lies in {len(incident)} faces"
            )
        u0, v0 = sorted(e0, key=p0.vertex_index)
        edges = [(ci0, (u0, v0))]
        maps: list[tuple[str, int]] = []
        visited.add((ci0, e0))

        ci, u, v = ci0, u0, v0
        leave_face = min(incident)
        for _ in range(budget):
            slot = (ci, leave_face)
            if not gc.pairing.has(slot):
                raise StructureError(
                    f"face slot {slot} on the cycle through {edges[0]} is unmatched"
                )
            (cj, fj), vmap, name, direction = gc.pairing.transport(slot)
            try:
                u2, v2 = vmap[u], vmap[v]
            except KeyError as missing:
                raise StructureError(
                    f"match {name} has no image for vertex {missing} of face slot {slot}"
                ) from None
            e2 = frozenset((u2, v2))
            faces2 = edge_faces[cj].get(e2)
            if faces2 is None or fj not in faces2:
                raise StructureError(
                    f"match {name} does not carry edge {(u, v)} to an edge of face {fj}"
                )
            maps.append((name, direction))
            if (cj, e2) == (ci0, e0):
                if (u2, v2) != (u0, v0):
                    raise StructureError(
                        f"edge cycle through {edges[0]} closes with endpoints "
                        f"exchanged: {(u2, v2)} != {(u0, v0)}"
                    )
                break
            if (cj, e2) in visited:
                raise StructureError(
                    f"edge cycle through {edges[0]} re-enters {(cj, tuple(sorted(e2)))} "
                    "before closing"
                )
            visited.add((cj, e2))
            edges.append((cj, (u2, v2)))
            other = [f for f in faces2 if f != fj]
            if len(faces2) != 2 or not other:
                raise StructureError(
                    f"edge {tuple(sorted(e2))} of copy {cj} lies in {len(faces2)} faces"
                )
            ci, u, v = cj, u2, v2
            leave_face = other[0]
        else:
            raise StructureError(f"edge cycle through {edges[0]} did not close")
        cycles.append(EdgeCycle(edges, maps))
    return cycles


# ---------------------------------------------------------------------------
# manifold verification
# ---------------------------------------------------------------------------

class UnionFind:
    def __init__(self) -> None:
        self.parent: dict = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != x:
            self.parent[x] = p = self.parent[p]
            x, p = p, self.parent[p]
        return x

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx

    def class_count(self, keys) -> int:
        return len({self.find(k) for k in keys})


@dataclass
class VertexLinkReport:
    """Surface assembled from the vertex's corner disks, one per cell."""

    representative: tuple
    disks: int
    euler: int
    connected: bool
    closed: bool

    @property
    def is_sphere(self) -> bool:
        return self.connected and self.closed and self.euler == 2

    def __repr__(self) -> str:
        kind = "sphere" if self.is_sphere else "NOT a sphere"
        return (
            f"<link at {self.representative}: {self.disks} disks, chi={self.euler}, "
            f"connected={self.connected}, closed={self.closed} -> {kind}>"
        )


@dataclass
class ManifoldReport:
    """Everything verify checks about a quotient: cell counts, Euler
    characteristic, vertex links, and orientability."""

    cells: int
    quotient_vertices: int
    quotient_edges: int
    quotient_faces: int
    euler_characteristic: int
    closed: bool
    orientable: bool
    vertex_links: list[VertexLinkReport]
    problems: list[str]

    @property
    def links_all_spheres(self) -> bool:
        return all(link.is_sphere for link in self.vertex_links)

    @property
    def ok(self) -> bool:
        return (
            self.closed
            and self.orientable
            and self.euler_characteristic == 0
            and self.links_all_spheres
            and not self.problems
        )

    def summary(self) -> str:
        lines = [
            f"closed orientable: {'yes' if self.ok else 'no'}; tetrahedra: {self.cells}",
            f"quotient cells: V={self.quotient_vertices} E={self.quotient_edges} "
            f"F={self.quotient_faces} T={self.cells}",
            f"euler characteristic: {self.euler_characteristic}",
            f"vertex links: {sum(link.is_sphere for link in self.vertex_links)}"
            f"/{len(self.vertex_links)} spheres",
            f"orientable: {'yes' if self.orientable else 'no'}",
        ]
        lines.extend(f"problem: {p}" for p in self.problems)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "cells": self.cells,
            "quotientVertices": self.quotient_vertices,
            "quotientEdges": self.quotient_edges,
            "quotientFaces": self.quotient_faces,
            "eulerCharacteristic": self.euler_characteristic,
            "closed": self.closed,
            "orientable": self.orientable,
            "linksAllSpheres": self.links_all_spheres,
            "vertexLinks": [
                {
                    "representative": list(link.representative),
                    "disks": link.disks,
                    "euler": link.euler,
                    "connected": link.connected,
                    "closed": link.closed,
                    "isSphere": link.is_sphere,
                }
                for link in self.vertex_links
            ],
            "problems": list(self.problems),
        }


def _is_rotation(seq: list, target: list) -> bool:
    if len(seq) != len(target):
        return False
    if not seq:
        return True
    doubled = target + target
    return any(doubled[k : k + len(seq)] == seq for k in range(len(target)))


def _match_structure_problem(gc: GluedComplex, m: FaceMatch) -> Optional[str]:
    (ci, fi), (cj, fj) = m.source, m.target
    try:
        src = gc.polytopes[ci].faces[fi]
        tgt = gc.polytopes[cj].faces[fj]
    except IndexError:
        return f"match {m.name} references a missing face slot"
    if set(m.vertex_map.keys()) != set(src) or set(m.vertex_map.values()) != set(tgt):
        return f"match {m.name} is not a vertex bijection between its two faces"
    image = [m.vertex_map[v] for v in src]
    if not (_is_rotation(image, list(tgt)) or _is_rotation(image, list(reversed(tgt)))):
        return f"match {m.name} does not respect the cyclic edge structure"
    return None


def _oriented_cycle(gc, orientations, slot: Slot) -> list[str]:
    ci, fi = slot
    cyc = list(gc.polytopes[ci].faces[fi])
    if orientations[ci][fi] * gc.signs[ci] == -1:
        cyc.reverse()
    return cyc


def match_is_orientation_reversing(gc: GluedComplex, m: FaceMatch, orientations=None) -> bool:
    """Whether a match reverses the induced boundary orientation, taking the
    copies' orientation signs into account."""
    if orientations is None:
        orientations = _copy_orientations(gc)
    src = _oriented_cycle(gc, orientations, m.source)
    tgt = _oriented_cycle(gc, orientations, m.target)
    image = [m.vertex_map[v] for v in src]
    return _is_rotation(image, list(reversed(tgt)))


def _copy_orientations(gc: GluedComplex) -> list[list[int]]:
    cache: dict[int, list[int]] = {}
    out = []
    for p in gc.polytopes:
        key = id(p)
        if key not in cache:
            cache[key] = boundary_orientation(p)
        out.append(cache[key])
    return out


def verify_closed_manifold(gc: GluedComplex) -> ManifoldReport:
    """Check that the quotient of the complex is a closed orientable
    3-manifold; every condition is reported rather than raised."""
    problems: list[str] = []

    slots = gc.all_slots()
    slot_set = set(slots)
    unmatched = [s for s in slots if not gc.pairing.has(s)]
    alien = [s for s in gc.pairing.slots() if s not in slot_set]
    closed = not unmatched and not alien
    if unmatched:
        problems.append(f"unmatched faces: {unmatched}")
    if alien:
        problems.append(f"pairing references faces outside the complex: {alien}")

    match_problems = [_match_structure_problem(gc, m) for m in gc.pairing.matches]
    problems.extend(p for p in match_problems if p)

    # quotient cells by union-find over the identifications
    vertex_uf = UnionFind()
    edge_uf = UnionFind()
    all_vertices = [
        (ci, v) for ci, p in enumerate(gc.polytopes) for v in p.vertices
    ]
    all_edges = [
        (ci, e) for ci, p in enumerate(gc.polytopes) for e in p.edge_faces()
    ]
    for ci, v in all_vertices:
        vertex_uf.find((ci, v))
    for ci, e in all_edges:
        edge_uf.find((ci, e))

    usable_matches = [
        m for m, problem in zip(gc.pairing.matches, match_problems) if problem is None
    ]
    for m in usable_matches:
        (ci, fi), (cj, fj) = m.source, m.target
        for v, w in m.vertex_map.items():
            vertex_uf.union((ci, v), (cj, w))
        for e in gc.polytopes[ci].face_cycle_edges(fi):
            image = frozenset(m.vertex_map[v] for v in e)
            edge_uf.union((ci, e), (cj, image))

    quotient_vertices = vertex_uf.class_count(all_vertices)
    quotient_edges = edge_uf.class_count(all_edges)
    matched_slots = sum(1 for s in slots if gc.pairing.has(s))
    quotient_faces = matched_slots // 2 + len(unmatched)
    cells = gc.copies
    euler = quotient_vertices - quotient_edges + quotient_faces - cells

    # vertex links: one polygonal disk per (copy, vertex); sides indexed by
    # the face corners at the vertex, corners by the edges at the vertex
    at_vertex_cache: dict[int, dict[str, list[int]]] = {}
    for ci, p in enumerate(gc.polytopes):
        if id(p) not in at_vertex_cache:
            table: dict[str, list[int]] = {v: [] for v in p.vertices}
            for fi, f in enumerate(p.faces):
                for v in f:
                    table[v].append(fi)
            at_vertex_cache[id(p)] = table

    side_uf = UnionFind()
    corner_uf = UnionFind()
    disk_uf = UnionFind()
    disk_sides: dict[tuple[int, str], list[tuple]] = {}
    side_matched: dict[tuple, bool] = {}

    def face_neighbors(p: CombinatorialPolytope, fi: int, v: str) -> tuple[str, str]:
        cyc = p.faces[fi]
        k = cyc.index(v)
        return cyc[(k - 1) % len(cyc)], cyc[(k + 1) % len(cyc)]

    for ci, p in enumerate(gc.polytopes):
        table = at_vertex_cache[id(p)]
        for v in p.vertices:
            disk = (ci, v)
            disk_uf.find(disk)
            sides = []
            for fi in table[v]:
                side = (ci, v, fi)
                sides.append(side)
                side_uf.find(side)
                prev_v, next_v = face_neighbors(p, fi, v)
                corner_uf.find((ci, v, frozenset((v, prev_v))))
                corner_uf.find((ci, v, frozenset((v, next_v))))
                side_matched.setdefault(side, False)
            disk_sides[disk] = sides

    for m in usable_matches:
        (ci, fi), (cj, fj) = m.source, m.target
        p = gc.polytopes[ci]
        for v in p.faces[fi]:
            w = m.vertex_map[v]
            side_a, side_b = (ci, v, fi), (cj, w, fj)
            side_uf.union(side_a, side_b)
            side_matched[side_a] = True
            side_matched[side_b] = True
            disk_uf.union((ci, v), (cj, w))
            prev_v, next_v = face_neighbors(p, fi, v)
            for nb in (prev_v, next_v):
                corner_uf.union(
                    (ci, v, frozenset((v, nb))),
                    (cj, w, frozenset((w, m.vertex_map[nb]))),
                )

    links: list[VertexLinkReport] = []
    classes: dict = {}
    for ci, v in all_vertices:
        classes.setdefault(vertex_uf.find((ci, v)), []).append((ci, v))
    for root in sorted(classes, key=lambda r: (r[0], gc.polytopes[r[0]].vertex_index(r[1]))):
        members = classes[root]
        disks = len(members)
        sides = [s for d in members for s in disk_sides[d]]
        corners = set()
        for ci, v, fi in sides:
            prev_v, next_v = face_neighbors(gc.polytopes[ci], fi, v)
            corners.add(corner_uf.find((ci, v, frozenset((v, prev_v)))))
            corners.add(corner_uf.find((ci, v, frozenset((v, next_v)))))
        link_edges = len({side_uf.find(s) for s in sides})
        link_closed = all(side_matched[s] for s in sides)
        connected = disk_uf.class_count(members) == 1
        euler_link = disks - link_edges + len(corners)
        rep = min(members, key=lambda d: (d[0], gc.polytopes[d[0]].vertex_index(d[1])))
        links.append(VertexLinkReport(rep, disks, euler_link, connected, link_closed))

    # orientability with the given copy signs
    orientable = True
    try:
        orientations = _copy_orientations(gc)
    except ValueError as exc:
        problems.append(f"copy boundary not orientable: {exc}")
        orientable = False
    else:
        bad = [
            m.name
            for m in usable_matches
            if not match_is_orientation_reversing(gc, m, orientations)
        ]
        if bad:
            orientable = False
            problems.append(f"orientation-incompatible matches: {bad}")

    return ManifoldReport(
        cells=cells,
        quotient_vertices=quotient_vertices,
        quotient_edges=quotient_edges,
        quotient_faces=quotient_faces,
        euler_characteristic=euler,
        closed=closed,
        orientable=orientable,
        vertex_links=links,
        problems=problems,
    )
