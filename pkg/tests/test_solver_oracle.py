"""Independent cross-check of the bivariate torus-solution count.

Random small systems are counted twice: by the resultant/quotient-gcd
machinery and by an exact shape-position reading of a lex Groebner basis
computed with sympy.  (sympy.solve itself is not a reliable oracle: it can
silently drop quartic roots.)
"""

import random
from fractions import Fraction as F

import pytest
import sympy

from einpoly.solver import DegenerateSystemError, _count_bivariate

X, Y = sympy.symbols("x y")


def _expr(poly):
    return sympy.Add(*[sympy.Rational(c) * X**e[0] * Y**e[1] for e, c in poly.items()])


def _shape_position_count(g1, g2):
    """Distinct torus solutions via a lex Groebner basis, or None when the
    basis is not in shape position (constant-leading x-generator plus a
    univariate in y)."""
    basis = sympy.groebner([_expr(g1), _expr(g2)], X, Y, order="lex")
    exprs = list(basis.exprs)
    if exprs == [sympy.Integer(1)]:
        return 0
    if len(exprs) != 2:
        return None
    univ = [e for e in exprs if X not in e.free_symbols]
    linear = [e for e in exprs if X in e.free_symbols]
    if len(univ) != 1 or len(linear) != 1:
        return None
    u = sympy.Poly(univ[0], Y)
    lin = sympy.Poly(linear[0], X)
    if lin.degree() != 1:
        return None
    a = lin.coeff_monomial(X)
    if a.free_symbols:
        return None  # leading coefficient depends on y: not shape position
    b = sympy.Poly(sympy.expand(a * X - linear[0]), Y)  # x = b(y) / a
    # distinct y-values: squarefree part of u, excluding y = 0
    usf = u.div(sympy.gcd(u, u.diff(Y)))[0]
    count = sympy.degree(usf, Y)
    if usf.eval(0) == 0:
        count -= 1
        usf = sympy.Poly(sympy.cancel(usf.as_expr() / Y), Y)
    # exclude solutions with x = 0: common roots of usf and b
    g = sympy.gcd(usf, b)
    drop = sympy.degree(g, Y)
    if drop:
        if g.eval(0) == 0:
            drop -= 1  # y = 0 already excluded
        count -= drop
    return int(count)


def _random_poly(rng, deg):
    poly = {}
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            if rng.random() < 0.7:
                poly[(i, j)] = F(rng.randint(-4, 4))
    return {e: c for e, c in poly.items() if c}


def test_bivariate_count_matches_groebner_shape_oracle():
    rng = random.Random(90)
    checked = 0
    attempts = 0
    while checked < 12 and attempts < 200:
        attempts += 1
        g1 = _random_poly(rng, 2)
        g2 = _random_poly(rng, 2)
        if len(g1) < 2 or len(g2) < 2:
            continue
        try:
            count, generic = _count_bivariate(g1, g2)
        except DegenerateSystemError:
            continue
        if not generic:
            continue
        expected = _shape_position_count(g1, g2)
        if expected is None:
            continue
        assert count == expected, (g1, g2, count, expected)
        checked += 1
    assert checked >= 8


def test_fiber_splitting_handles_shared_projections():
    # two solutions over the same x-coordinate: (1, 1) and (1, -1);
    # forces a genuine gcd-degree split over the eliminant root x = 1
    g1 = {(1, 1): F(1), (1, 0): F(-3), (0, 1): F(-1), (0, 0): F(3)}  # (x-1)(y-3)
    g2 = {(0, 2): F(1), (0, 0): F(-1)}  # y^2 - 1
    count, generic = _count_bivariate(g1, g2)
    assert generic
    assert count == 2


def test_common_factor_detected():
    # both polynomials share the factor (x y - 1): infinitely many zeros
    g1 = {(1, 1): F(1), (0, 0): F(-1)}
    g2 = {(2, 2): F(1), (1, 1): F(-1)}
    with pytest.raises(DegenerateSystemError):
        _count_bivariate(g1, g2)
