"""Shape tests, the marked census, singularity verdicts, chart localization."""

import random
from fractions import Fraction as F

import pytest

from einpoly.curvature import LaurentPoly, scalar_curvature
from einpoly.faces import (
    NEEDS_MORE_DATA,
    NONSINGULAR,
    SINGULAR,
    ChartSubstitution,
    boundary_jacobian,
    curve_singular,
    localize,
    marked_census,
    parallelogram_singular,
    vertices_have_weight_shape,
)
from einpoly.faces import test1_pyramid as pyramid_test
from einpoly.faces import test2_octahedron as octahedron_test
from einpoly.homspace import kaehler_b2_polytope, load_catalog, weight_polytope
from einpoly.infinity import delta_min, flat_complex
from einpoly.polytope import hull, permutohedron


def face_by_signature(P, sig):
    for dim_, faces in P.all_proper_faces().items():
        for face in faces:
            if face.normal_signature() == tuple(sig):
                return face
    raise LookupError(sig)


def minimal_polytope(data):
    return delta_min(weight_polytope(data), flat_complex(data))


D5_CHART = ChartSubstitution(
    scalars=[F(-3, 2), F(-3, 4), F(3, 4), 1, 1],
    exponents=[
        (1, 1, 0, -1, -1),
        (3, 2, 1, -2, -2),
        (2, 2, 1, -2, -1),
        (0, 0, 0, -1, 0),
        (0, 0, 0, 0, -1),
    ],
    scaling_index=0,
)


# ---------------------------------------------------------------------------
# tests 1 and 2
# ---------------------------------------------------------------------------


def test_simplex_facets_pass_the_pyramid_test(e8_d6):
    P = minimal_polytope(e8_d6)
    for face in P.faces(4):
        if len(face.vertex_indices) == 5:
            assert pyramid_test(P, face)


def test_pentagon_face_fails_both_tests():
    P = kaehler_b2_polytope(4)
    pentagon = next(f for f in P.faces(2) if len(f.vertex_indices) == 5)
    assert not pyramid_test(P, pentagon)
    assert not octahedron_test(P, pentagon)


def test_no_marked_edges_on_the_b2_family():
    for d in (3, 4, 5):
        P = kaehler_b2_polytope(d)
        for edge in P.faces(1):
            assert pyramid_test(P, edge) or octahedron_test(P, edge)


def test_centered_square_passes_test2():
    P = kaehler_b2_polytope(4)
    squares = [
        f for f in P.faces(2)
        if len(f.vertex_indices) == 4 and octahedron_test(P, f)
    ]
    assert len(squares) == 1


def test_triangle_fails_test2():
    P = kaehler_b2_polytope(4)
    tri = next(f for f in P.faces(2) if len(f.vertex_indices) == 3)
    assert not octahedron_test(P, tri)


def test_test2_counts_round_up():
    # the family has ceil(d/2) centered-octahedron faces
    counts = {d: marked_census(kaehler_b2_polytope(d)).test2_count() for d in range(3, 7)}
    assert counts == {3: 2, 4: 2, 5: 3, 6: 3}


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def test_census_totals_table():
    totals = {d: marked_census(kaehler_b2_polytope(d)).marked_total() for d in range(2, 7)}
    assert totals == {2: 0, 3: 0, 4: 3, 5: 13, 6: 40}


def test_census_by_dimension():
    assert marked_census(kaehler_b2_polytope(5)).marked_by_dim() == {2: 7, 3: 6}
    assert marked_census(kaehler_b2_polytope(6)).marked_by_dim() == {2: 15, 3: 13, 4: 12}


def test_census_d4_marked_shapes():
    census = marked_census(kaehler_b2_polytope(4))
    sizes = sorted(len(e.face.vertex_indices) for e in census.marked_faces())
    assert sizes == [4, 4, 5]


def test_census_inapplicable_on_other_polytopes():
    # a polytope with a bare basis vertex falls outside the tests' validity
    segment = hull([(-1, 2), (1, 0)])
    census = marked_census(segment)
    assert not census.applicable
    assert all(e.marked is None for e in census.entries)
    # permutohedra do have the required vertex shape (2 e_i - e_j)
    assert vertices_have_weight_shape(permutohedron(4))


def test_census_invariant_under_coordinate_permutations(e8_d5):
    rng = random.Random(14)
    P = minimal_polytope(e8_d5)
    base = marked_census(P).marked_by_dim()
    verts = list(P.vertices)
    for _ in range(3):
        perm = list(range(5))
        rng.shuffle(perm)
        Q = hull([tuple(v[perm[i]] for i in range(5)) for v in verts])
        assert marked_census(Q).marked_by_dim() == base


def test_census_respects_thread_cap(monkeypatch, e8_d6):
    monkeypatch.setenv("HS_THREADS", "1")
    P = minimal_polytope(e8_d6)
    assert marked_census(P).marked_total() == 40


# ---------------------------------------------------------------------------
# singularity verdicts
# ---------------------------------------------------------------------------


def test_d5_parallelogram_is_singular(e8_d5):
    s = scalar_curvature(e8_d5)
    P = minimal_polytope(e8_d5)
    face = face_by_signature(P, (2, 4, 3, 1, 1))
    restricted_coeffs = sorted(
        scalar_curvature(e8_d5).terms[v] for v in face.vertices()
    )
    assert restricted_coeffs == [F(-3), F(-2), F(-1), F(-2, 3)]
    # opposite products both equal 2
    assert F(-2, 3) * F(-3) == F(-2) * F(-1) == F(2)
    assert parallelogram_singular(s, face) == SINGULAR


def test_d5_other_parallelograms_nonsingular(e8_d5):
    s = scalar_curvature(e8_d5)
    P = minimal_polytope(e8_d5)
    for sig in [(1, 1, 2, 2, 3), (1, 2, 3, 4, 4), (1, 2, 2, 3, 4),
                (2, 4, 5, 3, 1), (5, 3, 2, 6, 1), (3, 1, 2, 2, 1)]:
        face = face_by_signature(P, sig)
        assert parallelogram_singular(s, face) == NONSINGULAR


def test_synthetic_four_term_nonsingular():
    # generic coefficients on a unit parallelogram
    p = LaurentPoly(3, {
        (0, 0, 1): F(1), (1, 0, 0): F(2), (0, 1, 0): F(5), (1, 1, -1): F(7),
    })
    P = hull(p.support())
    face = P.whole_face()
    assert parallelogram_singular(p, face) == NONSINGULAR
    assert curve_singular(p, face) == NONSINGULAR


def test_product_form_is_singular():
    # support z0 * (1 + z1)(1 + z2) on a parallelogram: singular at (-1, -1)
    p = LaurentPoly(3, {
        (0, 0, 1): F(1), (1, 0, 0): F(1), (0, 1, 0): F(1), (1, 1, -1): F(1),
    })
    face = hull(p.support()).whole_face()
    assert parallelogram_singular(p, face) == SINGULAR
    assert curve_singular(p, face) == SINGULAR


def test_methods_agree_on_random_parallelograms():
    rng = random.Random(21)
    for _ in range(12):
        coeffs = [F(rng.randint(1, 9)) for _ in range(3)]
        make_singular = rng.random() < 0.5
        a0, a1, a2 = coeffs
        a12 = a1 * a2 / a0 if make_singular else a1 * a2 / a0 + rng.randint(1, 4)
        p = LaurentPoly(3, {
            (0, 0, 1): a0, (1, 0, 0): a1, (0, 1, 0): a2, (1, 1, -1): a12,
        })
        face = hull(p.support()).whole_face()
        v1 = parallelogram_singular(p, face)
        v2 = curve_singular(p, face)
        assert v1 == v2 == (SINGULAR if make_singular else NONSINGULAR)


def test_parallelogram_with_extra_support_defers():
    p = LaurentPoly(2, {
        (0, 0): F(1), (1, 0): F(1), (0, 1): F(1), (1, 1): F(1),
        # fifth point inside the square
    })
    P = hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    q = LaurentPoly(2, dict(p.terms))
    # drop one vertex coefficient: support is not the full vertex set
    q = LaurentPoly(2, {e: c for e, c in q.terms.items() if e != (1, 1)})
    assert parallelogram_singular(q, P.whole_face()) == NEEDS_MORE_DATA


def test_d6_lists_a_and_b(e8_d6):
    s = scalar_curvature(e8_d6)
    P = minimal_polytope(e8_d6)
    lista = [(5, 5, 2, 7, 3, 2), (3, 6, 8, 5, 2, 3), (5, 5, 2, 3, 7, 2),
             (3, 6, 7, 10, 13, 12), (3, 4, 6, 3, 2, 1), (3, 6, 6, 5, 2, 1)]
    listb = [(3, 6, 7, 8, 5, 2), (8, 3, 5, 6, 2, 8), (5, 7, 2, 3, 7, 4),
             (3, 6, 7, 6, 9, 12), (7, 5, 2, 9, 5, 4), (5, 7, 2, 5, 9, 4),
             (3, 4, 7, 8, 11, 10), (3, 2, 1, 3, 1, 2), (1, 2, 3, 4, 4, 4)]
    for sig in lista:
        assert parallelogram_singular(s, face_by_signature(P, sig)) == SINGULAR
    for sig in listb:
        assert parallelogram_singular(s, face_by_signature(P, sig)) == NONSINGULAR
    # membership counts: three facets each, except the two last in list b
    for sig in lista + listb[:-2]:
        assert len(face_by_signature(P, sig).facet_indices) == 3
    for sig in listb[-2:]:
        assert len(face_by_signature(P, sig).facet_indices) != 3


# ---------------------------------------------------------------------------
# chart localization
# ---------------------------------------------------------------------------


def expected_weight_terms(pairs):
    return {tuple(e): F(c) for e, c in pairs}


def test_chart_matrix_is_unimodular():
    assert D5_CHART.num_vars == 5


def test_chart_reproduces_linear_truncations(e8_d5):
    s = scalar_curvature(e8_d5)
    local = localize(s, D5_CHART)

    def lin(key):
        return dict(local[key].y_degree_truncate([3, 4], 1).terms)

    z0, z1, z2 = (-1, 0, 0, 0, 0), (0, -1, 0, 0, 0), (0, 0, -1, 0, 0)

    def mono(*exps):
        return tuple(sum(v) for v in zip(*exps)) if exps else (0, 0, 0, 0, 0)

    y1 = (0, 0, 0, -1, 0)
    y2 = (0, 0, 0, 0, -1)
    y1_over_z1 = (0, 1, 0, -1, 0)
    assert lin("s") == expected_weight_terms([
        (z0, 1), (mono(z0, z1), 1), (mono(z0, z2), 1), (mono(z0, z1, z2), 1),
        (y1, 8), (y1_over_z1, F(-8, 3)), (y2, 4),
    ])
    assert lin("s1") == expected_weight_terms([
        (mono(z0, z1), 1), (mono(z0, z2), -2), (mono(z0, z1, z2), -1),
        (y1_over_z1, F(8, 3)),
    ])
    assert lin("s2") == expected_weight_terms([
        (z0, 1), (mono(z0, z2), 1), (y1_over_z1, F(-8, 3)),
    ])
    assert lin("s3") == expected_weight_terms([
        (z0, -1), (mono(z0, z1, z2), 1), (y1_over_z1, F(8, 3)),
    ])
    assert lin("s4") == expected_weight_terms([
        (mono(z0, z1), -1), (mono(z0, z1, z2), -1), (y1, -8),
    ])
    assert lin("s5") == expected_weight_terms([
        (z0, -1), (mono(z0, z1), -1), (y2, -4),
    ])


def test_boundary_jacobian_cofactors(e8_d5):
    cof = boundary_jacobian(e8_d5, D5_CHART, [F(1), F(-1), F(-1), F(0), F(0)])
    assert cof == (F(128, 3), F(128), F(256, 3), F(0), F(0))
    # the expansion reads (128/3) (d1 + 3 d2 + 2 d3)
    assert [c / F(128, 3) for c in cof] == [F(1), F(3), F(2), F(0), F(0)]


def test_chart_rejects_non_unimodular():
    with pytest.raises(ValueError):
        ChartSubstitution(scalars=[1, 1], exponents=[(2, 0), (0, 1)])


def test_boundary_jacobian_rejects_zero_scaling_coordinate(e8_d5):
    with pytest.raises(ValueError):
        boundary_jacobian(e8_d5, D5_CHART, [F(0), F(-1), F(-1), F(0), F(0)])
