"""Combinatorial structure of the Löbell drums R(n) and the capped
antiprisms Y(n): cell counts, incidences, labels, orientations, JSON."""

import json

import pytest

from lobfib.polytope import (
    FIBONACCI,
    LOBELL,
    boundary_orientation,
    build_fibonacci_polytope,
    build_lobell_polytope,
    validate_polytope,
)


class TestLobellPolytope:
    """R(n) is a trivalent 3-polytope: two rings of n pentagons between two
    n-gonal bases, with 4n vertices and 6n edges."""

    @pytest.mark.parametrize("n", range(5, 13))
    def test_cell_counts(self, n):
        p = build_lobell_polytope(n)
        assert len(p.vertices) == 4 * n, f"R({n}) must have 4n vertices"
        assert len(p.edges()) == 6 * n, f"R({n}) must have 6n edges"
        assert len(p.faces) == 2 * n + 2, f"R({n}) must have 2n+2 faces"

    @pytest.mark.parametrize("n", range(5, 13))
    def test_face_sizes(self, n):
        p = build_lobell_polytope(n)
        sizes = sorted(len(f) for f in p.faces)
        assert sizes == sorted([5] * (2 * n) + [n, n]), (
            f"R({n}) must consist of 2n pentagons and two {n}-gons, got {sizes}"
        )

    @pytest.mark.parametrize("n", (5, 6, 9))
    def test_trivalent(self, n):
        p = build_lobell_polytope(n)
        degrees = {p.vertex_degree(v) for v in p.vertices}
        assert degrees == {3}, f"every vertex of R({n}) must be trivalent, got {degrees}"

    @pytest.mark.parametrize("n", range(5, 13))
    def test_validates(self, n):
        report = validate_polytope(build_lobell_polytope(n), family=LOBELL)
        assert report.ok, f"R({n}) fails structural checks: {report.failed()}"

    def test_labels_cover_range(self):
        p = build_lobell_polytope(7)
        assert sorted(int(lab) for lab in p.face_labels) == list(range(1, 17)), (
            "faces of R(7) must be labeled 1..2n+2"
        )

    def test_ring_adjacency(self):
        """Upper pentagon i touches its ring neighbours, the lower pentagons
        shifted by one, and the upper basis; the pentagon labeled n+1 closes
        the lower ring against labels 1 and n."""
        n = 6
        p = build_lobell_polytope(n)
        label_of = {fi: int(lab) for lab, fi in p.face_labels.items()}
        neighbors = {lab: set() for lab in label_of.values()}
        for pair in p.adjacent_face_pairs():
            x, y = tuple(pair)
            neighbors[label_of[x]].add(label_of[y])
            neighbors[label_of[y]].add(label_of[x])
        assert neighbors[2] == {1, 3, n + 2, n + 3, 2 * n + 1}, (
            f"upper pentagon 2 of R(6) has wrong neighbours: {sorted(neighbors[2])}"
        )
        assert neighbors[n + 1] == {1, n, n + 2, 2 * n, 2 * n + 2}, (
            f"lower pentagon n+1 of R(6) has wrong neighbours: {sorted(neighbors[n + 1])}"
        )
        assert neighbors[2 * n + 1] == set(range(1, n + 1)), (
            "the upper basis must touch exactly the upper pentagon ring"
        )
        assert neighbors[2 * n + 2] == set(range(n + 1, 2 * n + 1)), (
            "the lower basis must touch exactly the lower pentagon ring"
        )

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            build_lobell_polytope(4)

    def test_deterministic(self):
        assert build_lobell_polytope(8) == build_lobell_polytope(8), (
            "construction must be reproducible"
        )


class TestFibonacciPolytope:
    """Y(n) is the 2n-gonal antiprism capped by two apexes Q and R: all 4n
    faces are triangles, apexes have degree n, the P-ring degree 5."""

    @pytest.mark.parametrize("n", range(4, 12))
    def test_cell_counts(self, n):
        p = build_fibonacci_polytope(n)
        assert len(p.vertices) == 2 * n + 2, f"Y({n}) must have 2n+2 vertices"
        assert len(p.edges()) == 6 * n, f"Y({n}) must have 6n edges"
        assert len(p.faces) == 4 * n, f"Y({n}) must have 4n faces"

    @pytest.mark.parametrize("n", range(4, 12))
    def test_all_triangles(self, n):
        p = build_fibonacci_polytope(n)
        assert all(len(f) == 3 for f in p.faces), "every face of Y(n) must be a triangle"

    @pytest.mark.parametrize("n", (4, 5, 8))
    def test_degrees(self, n):
        p = build_fibonacci_polytope(n)
        assert p.vertex_degree("Q") == n, "apex Q must have degree n"
        assert p.vertex_degree("R") == n, "apex R must have degree n"
        ring = {p.vertex_degree(f"P{k}") for k in range(1, 2 * n + 1)}
        assert ring == {5}, f"ring vertices of Y({n}) must have degree 5, got {ring}"

    @pytest.mark.parametrize("n", range(4, 12))
    def test_validates(self, n):
        report = validate_polytope(build_fibonacci_polytope(n), family=FIBONACCI)
        assert report.ok, f"Y({n}) fails structural checks: {report.failed()}"

    def test_face_labels(self):
        p = build_fibonacci_polytope(5)
        expected = {f"F{i}" for i in range(1, 11)} | {f"F{i}*" for i in range(1, 11)}
        assert set(p.face_labels) == expected, "faces must be labeled F1..F2n, F1*..F2n*"

    def test_star_faces_avoid_apexes(self):
        p = build_fibonacci_polytope(6)
        for lab, fi in p.face_labels.items():
            touches_apex = "Q" in p.faces[fi] or "R" in p.faces[fi]
            assert touches_apex != lab.endswith("*"), (
                f"face {lab} must touch an apex exactly when it is not starred"
            )

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            build_fibonacci_polytope(3)


class TestEdgesAndOrientation:
    """Every edge lies in exactly two faces, and the boundary 2-sphere is
    orientable: faces can be signed so that each edge is traversed once in
    each direction."""

    @pytest.mark.parametrize(
        "build,n", [(build_lobell_polytope, 6), (build_lobell_polytope, 9),
                    (build_fibonacci_polytope, 4), (build_fibonacci_polytope, 7)],
    )
    def test_edges_in_two_faces(self, build, n):
        p = build(n)
        for e, faces in p.edge_faces().items():
            assert len(faces) == 2, f"edge {sorted(e)} lies in {len(faces)} faces"

    @pytest.mark.parametrize(
        "build,n", [(build_lobell_polytope, 5), (build_lobell_polytope, 8),
                    (build_fibonacci_polytope, 4), (build_fibonacci_polytope, 9)],
    )
    def test_coherent_orientation(self, build, n):
        p = build(n)
        signs = boundary_orientation(p)
        assert set(signs) <= {1, -1} and signs[0] == 1
        directed: set[tuple[str, str]] = set()
        for fi, face in enumerate(p.faces):
            cyc = list(face) if signs[fi] == 1 else list(reversed(face))
            for k in range(len(cyc)):
                arc = (cyc[k], cyc[(k + 1) % len(cyc)])
                assert arc not in directed, f"edge {arc} traversed twice the same way"
                directed.add(arc)
        assert all((v, u) in directed for (u, v) in directed), (
            "each edge must be traversed once in each direction"
        )


class TestSerialization:
    """The JSON document carries exactly family, n, faces, faceLabels."""

    def test_json_fields(self):
        doc = build_lobell_polytope(6).to_json_dict()
        assert set(doc) == {"family", "n", "faces", "faceLabels"}
        assert doc["family"] == LOBELL and doc["n"] == 6
        assert len(doc["faces"]) == 14 and len(doc["faceLabels"]) == 14

    def test_json_deterministic(self):
        a = build_fibonacci_polytope(5).to_json()
        b = build_fibonacci_polytope(5).to_json()
        assert a == b, "same build must serialize to identical bytes"
        json.loads(a)  # must be well-formed
