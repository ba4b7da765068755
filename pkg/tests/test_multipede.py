from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from simplex_ceva.cevians import build_family, feet_from_point, l_faces
from simplex_ceva.errors import DimensionMismatch, MissingEdgePoint, NotInterior
from simplex_ceva.exact import BaryPoint, Face, restrict_point
from simplex_ceva.instances import concurrent_family, perturb_family, random_interior_point, seeded_rng
from simplex_ceva.multipede import (Multipede, closure_points, colinear_with_vertex, cycle_ratio_product,
                                    feet_closure_cardinality, induce_multipede, lemma_disagreements,
                                    precedes)

from oracles import cartesian, random_vertices

TET = Face.full(3)


class TestInduce:
    def test_triangle_centroid_gives_midpoints(self):
        mp = induce_multipede(Face.full(2), Face.full(2).centroid())
        for e in Face.full(2).subfaces(min_dim=1, max_dim=1):
            assert mp.points[e] == e.centroid()

    def test_tetrahedron_example(self):
        q = BaryPoint.of("1/2", "1/4", "1/8", "1/8")
        mp = induce_multipede(TET, q)
        assert TET.without(0).local(mp.points[TET.without(0)]) == (F(1, 2), F(1, 4), F(1, 4))
        assert mp.points[Face((2, 3), 3)] == BaryPoint.of(0, 0, "1/2", "1/2")
        assert len(mp.points) == 11
        # every colinearity triple, checked with an exact determinant
        P = random_vertices(3, seed=4)
        for G, g in mp.points.items():
            if G.dim < 2:
                continue
            for i in G:
                a = cartesian(mp.points[G.without(i)].coords, P)
                b = cartesian(g.coords, P)
                M = sp.Matrix.hstack(a - P[i], b - P[i])
                assert M.rank() <= 1

    def test_edge_base_case(self):
        q = BaryPoint.of("1/3", "2/3", 0)
        mp = induce_multipede(Face((0, 1), 2), q)
        assert dict(mp.points) == {Face((0, 1), 2): q}

    def test_not_interior(self):
        with pytest.raises(NotInterior):
            induce_multipede(TET, BaryPoint.of(0, "1/2", "1/4", "1/4"))


@st.composite
def face_points(draw, n_max=5):
    n = draw(st.integers(2, n_max))
    idx = draw(st.lists(st.integers(0, n), min_size=2, unique=True))
    T = Face.of(idx, n)
    w = [draw(st.integers(1, 20)) for _ in T]
    return T, T.lift([F(v, sum(w)) for v in w])


@settings(max_examples=80, deadline=None)
@given(face_points())
def test_multipede_closed_and_unique(tq):
    T, q = tq
    mp = induce_multipede(T, q)
    assert mp.is_closed()
    assert set(mp.points) == set(T.subfaces(min_dim=1))
    # a multipede built by projecting straight onto each face is the same one
    direct = Multipede(T, {F_: restrict_point(q, F_) for F_ in T.subfaces(min_dim=1)})
    assert direct == mp


def test_closure_check_detects_broken_multipede():
    mp = induce_multipede(TET, TET.centroid())
    pts = dict(mp.points)
    pts[Face((0, 1), 3)] = BaryPoint.of("1/3", "2/3", 0, 0)
    assert not Multipede(TET, pts).is_closed()


def test_colinear_with_vertex():
    a = BaryPoint.of(0, "1/2", "1/2")
    assert colinear_with_vertex(0, a, BaryPoint.of("1/2", "1/4", "1/4"))
    assert not colinear_with_vertex(0, a, BaryPoint.of("1/2", "1/3", "1/6"))


class TestPrecedes:
    def test_centroid_chain(self):
        e, t = Face((0, 1), 3), Face((0, 1, 2), 3)
        assert precedes(e.centroid(), t.centroid())
        assert precedes(t.centroid(), TET.centroid())
        assert precedes(e.centroid(), TET.centroid())
        assert not precedes(TET.centroid(), t.centroid())

    def test_vertex_rule(self):
        P0 = BaryPoint.vertex(0, 3)
        assert precedes(P0, BaryPoint.of("1/2", "1/2", 0, 0))
        assert precedes(P0, TET.centroid())
        assert not precedes(P0, BaryPoint.of(0, "1/2", "1/2", 0))

    def test_non_midpoint(self):
        p = BaryPoint.of("1/3", "2/3", 0)
        assert not precedes(p, Face.full(2).centroid())

    def test_self(self):
        q = BaryPoint.of("1/2", "1/4", "1/8", "1/8")
        assert precedes(q, q)

    def test_outside_face(self):
        with pytest.raises(ValueError):
            precedes(BaryPoint.of("1/2", "1/2", 0, 0), TET.centroid(), Face((0, 1, 2), 3))


@settings(max_examples=60, deadline=None)
@given(face_points(), st.data())
def test_precedes_transitive(tq, data):
    T, r = tq
    mp = induce_multipede(T, r)
    faces = sorted(mp.points)
    G = data.draw(st.sampled_from(faces))
    q = mp.points[G]
    sub = sorted(induce_multipede(G, q).points)
    H = data.draw(st.sampled_from(sub))
    p = induce_multipede(G, q).points[H]
    assert precedes(p, q) and precedes(q, r)
    assert precedes(p, r)


class TestCycleRatioProduct:
    tri = Face.full(2)

    def test_midpoints(self):
        pts = {e.indices: e.centroid() for e in TET.subfaces(min_dim=1, max_dim=1)}
        assert cycle_ratio_product(TET, [0, 1, 2, 3], pts) == 1
        assert cycle_ratio_product(TET, [0, 2], pts) == 1

    def test_concurrent_triangle(self):
        feet = feet_from_point(BaryPoint.of("1/2", "1/3", "1/6"), 1)
        pts = {q.support.indices: q for q in feet.values()}
        # leg ratios recomputed from Euclidean lengths in a concrete triangle
        P = random_vertices(2, seed=1)
        legs = []
        for i, j in [(0, 1), (1, 2), (2, 0)]:
            Q = cartesian(pts[tuple(sorted((i, j)))].coords, P)
            legs.append((Q - P[i]).norm() / (P[j] - Q).norm())
        assert sp.simplify(legs[0] * legs[1] * legs[2]) == 1
        assert [sp.nsimplify(v) for v in legs] == [sp.Rational(2, 3), sp.Rational(1, 2), 3]
        assert cycle_ratio_product(self.tri, [0, 1, 2], pts) == 1

    def test_perturbed_triangle(self):
        feet = feet_from_point(BaryPoint.of("1/2", "1/3", "1/6"), 1)
        pts = {q.support.indices: q for q in feet.values()}
        pts[(0, 1)] = BaryPoint.of("1/2", "1/2", 0)
        prod = cycle_ratio_product(self.tri, [0, 1, 2], pts)
        # 1 * (1/2) * 3
        assert prod == F(3, 2)

    def test_missing_edge(self):
        with pytest.raises(MissingEdgePoint):
            cycle_ratio_product(self.tri, [0, 1, 2], {(0, 1): BaryPoint.of("1/2", "1/2", 0)})


@settings(max_examples=60, deadline=None)
@given(face_points(), st.data())
def test_cycle_products_from_one_multipede(tq, data):
    T, q = tq
    if T.dim < 2:
        return
    mp = induce_multipede(T, q)
    edges = {F_.indices: p for F_, p in mp.points.items() if F_.dim == 1}
    cyc = data.draw(st.lists(st.sampled_from(T.indices), min_size=3, max_size=len(T), unique=True))
    prod = cycle_ratio_product(T, cyc, edges)
    assert prod == 1
    assert cycle_ratio_product(T, cyc[::-1], edges) * prod == 1


def test_reverse_cycle_is_reciprocal():
    pts = {(0, 1): BaryPoint.of("1/5", "4/5", 0), (1, 2): BaryPoint.of(0, "1/3", "2/3"),
           (0, 2): BaryPoint.of("1/7", 0, "6/7")}
    a = cycle_ratio_product(Face.full(2), [0, 1, 2], pts)
    b = cycle_ratio_product(Face.full(2), [2, 1, 0], pts)
    assert a * b == 1 and a != 1


class TestClosureCardinality:
    @pytest.mark.parametrize("n,k", [(4, 1), (4, 2), (5, 2), (6, 3)])
    def test_concurrent(self, n, k):
        fam, x = concurrent_family(seeded_rng("card", n, k), n, k)
        l = n + 1 - k
        W = closure_points(fam)
        for T in Face.full(n).subfaces(min_dim=1, max_dim=l - 1):
            assert feet_closure_cardinality(fam, T, W) == 1
            assert W[T] == {restrict_point(x, T)}

    def test_centroid(self):
        x = Face.full(4).centroid()
        fam = build_family(4, 1, feet_from_point(x, 1))
        for T in Face.full(4).subfaces(min_dim=1, max_dim=3):
            (p,) = closure_points(fam)[T]
            assert p == T.centroid()

    def test_perturbed_has_a_split_face(self):
        rng = seeded_rng("card-bad")
        fam, _ = concurrent_family(rng, 4, 2)
        bad = perturb_family(rng, fam)
        W = closure_points(bad)
        counts = [feet_closure_cardinality(bad, T, W) for T in Face.full(4).subfaces(min_dim=1, max_dim=2)]
        assert max(counts) >= 2

    def test_face_dimension_checked(self):
        fam, _ = concurrent_family(seeded_rng("dim"), 4, 2)
        with pytest.raises(DimensionMismatch):
            feet_closure_cardinality(fam, Face((0, 1, 2, 3), 4))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (4, 2), (5, 2)])
def test_lemma_points_agree_under_condition_2(n, k):
    for i in range(5):
        fam, _ = concurrent_family(seeded_rng("lemma", n, k, i), n, k)
        for L in l_faces(n, k):
            assert lemma_disagreements(fam, L) == []


def test_lemma_detects_disagreement():
    rng = seeded_rng("lemma-bad")
    fam, _ = concurrent_family(rng, 4, 1)
    bad = perturb_family(rng, fam)
    assert lemma_disagreements(bad, Face.full(4))


def test_random_interior_point_bounded_denominators():
    rng = seeded_rng("den")
    for _ in range(50):
        p = random_interior_point(rng, Face.full(5), 64)
        assert all(0 < c and 64 % c.denominator == 0 for c in p.coords)
