"""Solution counting, certification, and the bound report."""

import random
from fractions import Fraction as F

import pytest

from einpoly.curvature import einstein_system
from einpoly.homspace import (
    HomSpaceData,
    jordan_space,
    load_catalog,
    product_of_irreducibles,
    weight_polytope,
)
from einpoly.infinity import delta_min, flat_complex
from einpoly.solver import (
    UnsupportedDimensionError,
    bound_report,
    count_complex,
    dehomogenize,
    delannoy,
    legendre_at_3,
    real_positive,
)


def wang_ziller_shape(b1, b2, t1, t2, name="wz_shape"):
    return HomSpaceData(
        name=name, d=3, dims=(2, 2, 1), b=(F(b1), F(b2), F(0)),
        triples={(1, 1, 3): F(t1), (2, 2, 3): F(t2)},
        bracket_meets_h=frozenset({(1, 1), (2, 2)}),
        h_nontrivial=frozenset({1, 2}),
        central=frozenset({3}),
        complement="killing_orthogonal",
    )


# ---------------------------------------------------------------------------
# combinatorial sequences
# ---------------------------------------------------------------------------


def test_delannoy_series():
    assert [delannoy(n) for n in range(6)] == [1, 3, 13, 63, 321, 1683]


def test_delannoy_equals_legendre_at_three():
    for n in range(13):
        assert delannoy(n) == legendre_at_3(n)


def test_delannoy_one_by_one_grid():
    assert delannoy(1) == 3


# ---------------------------------------------------------------------------
# dehomogenization
# ---------------------------------------------------------------------------


def test_dehomogenize_product_case_linear():
    data = product_of_irreducibles(2)
    polys, removed = dehomogenize(einstein_system(data))
    assert len(polys) == 1
    assert set(polys[0]) <= {(0,), (1,)}


def test_dehomogenize_bivariate(su3_t2):
    polys, _ = dehomogenize(einstein_system(su3_t2))
    assert len(polys) == 2
    assert all(len(next(iter(p))) == 2 for p in polys)


def test_clearing_preserves_torus_zeros(su3_t2):
    rng = random.Random(6)
    system = einstein_system(su3_t2)
    polys, _ = dehomogenize(system)
    for _ in range(20):
        x = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(2)]
        full = [f.eval(list(x) + [F(1)]) for f in system]
        cleared = []
        for p in polys:
            acc = F(0)
            for e, c in p.items():
                acc += c * x[0] ** e[0] * x[1] ** e[1]
            cleared.append(acc)
        for a, b in zip(full, cleared):
            assert (a == 0) == (b == 0)


# ---------------------------------------------------------------------------
# complex counts
# ---------------------------------------------------------------------------


def test_product_d2_has_one_solution():
    sol = count_complex(product_of_irreducibles(2))
    assert sol.distinct_complex == 1


def test_wang_ziller_shape_has_three_solutions():
    rng = random.Random(17)
    for _ in range(5):
        data = wang_ziller_shape(
            F(rng.randint(1, 30), rng.randint(1, 9)),
            F(rng.randint(1, 30), rng.randint(1, 9)),
            F(rng.randint(1, 30), rng.randint(1, 9)),
            F(rng.randint(1, 30), rng.randint(1, 9)),
        )
        assert count_complex(data).distinct_complex == 3


def test_su3_t2_counts(su3_t2):
    sol = real_positive(su3_t2)
    assert sol.distinct_complex == 4
    assert sol.real_count == 4
    assert sol.positive_count == 4
    exact_points = sorted(tuple(s["x"]) for s in sol.solutions if s["exact"])
    assert exact_points == [("1", "1"), ("1", "2"), ("1/2", "1/2"), ("2", "1")]
    assert all(s["residual"] == "0" for s in sol.solutions if s["exact"])


def test_jordan_2_single_solution():
    assert count_complex(jordan_space(2)).distinct_complex == 1


def test_unsupported_dimension_raises(e8_d5):
    with pytest.raises(UnsupportedDimensionError):
        count_complex(e8_d5)


def test_counts_scale_invariant(su3_t2, wang_ziller_killing):
    for data in (su3_t2, wang_ziller_killing):
        scaled = HomSpaceData(
            name=data.name + "_scaled",
            d=data.d,
            dims=data.dims,
            b=tuple(F(7, 3) * v for v in data.b),
            triples={k: F(7, 3) * v for k, v in data.triples.items()},
            bracket_meets_h=data.bracket_meets_h,
            h_nontrivial=data.h_nontrivial,
            central=data.central,
            complement=data.complement,
        )
        assert count_complex(scaled).distinct_complex == count_complex(data).distinct_complex


def test_counts_stable_under_small_perturbation():
    rng = random.Random(23)
    base = wang_ziller_shape(4, 4, 2, 2)
    expected = count_complex(base).distinct_complex
    for _ in range(6):
        eps = [F(rng.randint(-1, 1), rng.randint(50, 99)) for _ in range(4)]
        data = wang_ziller_shape(4 + eps[0], 4 + eps[1], 2 + eps[2], 2 + eps[3])
        assert count_complex(data).distinct_complex == expected == 3


# ---------------------------------------------------------------------------
# real and positive counts
# ---------------------------------------------------------------------------


def test_product_d2_real_positive():
    sol = real_positive(product_of_irreducibles(2))
    assert sol.real_count == 1 and sol.positive_count == 1
    assert sol.solutions[0]["exact"] and sol.solutions[0]["residual"] == "0"


def test_instance_without_real_roots():
    # an eliminant with a complex-conjugate pair only
    data = HomSpaceData(
        name="noreal", d=2, dims=(1, 1), b=(F(10), F(2)),
        triples={(1, 2, 2): F(4)},
    )
    sol = real_positive(data)
    assert sol.real_count == 0
    assert sol.positive_count == 0


def test_wang_ziller_catalog_positive_solutions(wang_ziller_killing):
    sol = real_positive(wang_ziller_killing)
    assert sol.distinct_complex == 3
    # for this parameter choice two of the three solutions are complex
    # (the eliminant has a single real root, certified by Sturm)
    assert sol.real_count == 1
    assert sol.positive_count == 1
    assert sol.solutions[0]["x"] == ["3/4", "3/4"]
    # every certificate carries a residual bound
    for s in sol.solutions:
        assert s["residual" if s["exact"] else "residual_bound"] is not None


def test_counts_never_exceed_complex(su3_t2):
    for data in (su3_t2, product_of_irreducibles(2), jordan_space(2)):
        sol = real_positive(data)
        assert sol.positive_count <= sol.real_count <= sol.distinct_complex


# ---------------------------------------------------------------------------
# bound report
# ---------------------------------------------------------------------------


def test_bound_report_e8_d5(e8_d5):
    br = bound_report(e8_d5)
    assert br.nu == 82
    assert br.epsilon_annotation == 81
    assert br.escaped_to_infinity == 1
    assert br.verdicts["epsilon_le_nu"] is True


def test_bound_report_jordan_3():
    br = bound_report(jordan_space(3))
    assert br.nu == 23
    assert br.t_size == 4
    assert br.epsilon_annotation == 19


def test_bound_report_d4_flag_below_delannoy_third():
    # nu = 20 for the d = 4 family polytope; 20 < 63/3 = 21
    from einpoly.homspace import kaehler_b2_polytope

    nu = kaehler_b2_polytope(4).normalized_volume()
    assert nu == 20
    assert nu < F(delannoy(3), 3)


def test_bound_report_inequalities_on_catalog():
    for name in ("su3_t2", "wang_ziller_killing", "wang_ziller_q", "sphere_s3",
                  "e8_t1_a3_a4", "e8_t1_a4_a2_a1"):
        data = load_catalog(name)
        br = bound_report(data)
        assert br.nu <= br.delannoy_bound < br.six_power
        if br.epsilon_computed is not None:
            assert br.epsilon_computed <= br.nu
