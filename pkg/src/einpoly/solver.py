"""Exact counting and certified extraction of complex, real, and positive
solutions of the Einstein system for d <= 3, plus the volume/Delannoy bound
report.

Counting is resultant-based.  For d = 3 the fiber over every eliminant root
is analyzed through gcd computations in the quotient ring Q[x]/(h) with
dynamic splitting of the (squarefree) modulus, so the distinct-solution
count is exact without any root approximation.  Real and positive counts
are certified by Sturm isolation plus an interval Newton (Krawczyk)
operator over exact rational intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .curvature import LaurentPoly, einstein_system
from .exact import (
    UniPoly,
    format_rat,
    isolate_real_roots,
    refine_root_interval,
    resultant,
    sturm_count,
)
from .homspace import HomSpaceData, weight_polytope
from .infinity import delta_min, flat_complex


class UnsupportedDimensionError(ValueError):
    """Solving is implemented for d in {2, 3} only."""


class DegenerateSystemError(ValueError):
    """The system has a positive-dimensional solution set (or is zero)."""


# ---------------------------------------------------------------------------
# combinatorial bounds
# ---------------------------------------------------------------------------

def delannoy(n: int) -> int:
    """Central Delannoy number by the lattice-path array recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [1] * (n + 1)
    for _ in range(n):
        new = [1] * (n + 1)
        for j in range(1, n + 1):
            new[j] = new[j - 1] + row[j] + row[j - 1]
        row = new
    return row[n]


def legendre_at_3(n: int) -> int:
    """Legendre polynomial P_n evaluated at 3, by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p0, p1 = Fraction(1), Fraction(3)
    if n == 0:
        return 1
    for k in range(1, n):
        p0, p1 = p1, ((2 * k + 1) * 3 * p1 - k * p0) / (k + 1)
    assert p1.denominator == 1
    return int(p1)


# ---------------------------------------------------------------------------
# dehomogenization
# ---------------------------------------------------------------------------

def dehomogenize(system: Sequence[LaurentPoly]) -> Tuple[list, list]:
    """Set x_d = 1 and clear denominators by the minimal monomial.

    Returns (polys, removed) where each poly is a dict of nonnegative true
    exponent tuples in x_1..x_{d-1}, and removed[i] is the monomial shift
    (a common factor whose torus zeros are excluded anyway).
    """
    out = []
    removed = []
    for f in system:
        sums = {sum(e) for e in f.terms}
        if len(sums) > 1:
            raise ValueError("system is not homogeneous")
        n = f.num_vars - 1
        true_terms: Dict[tuple, Fraction] = {}
        for a, c in f.terms.items():
            key = tuple(-ai for ai in a[:-1])
            true_terms[key] = true_terms.get(key, Fraction(0)) + c
        true_terms = {e: c for e, c in true_terms.items() if c != 0}
        if not true_terms:
            raise DegenerateSystemError("zero polynomial after clearing")
        mins = [min(e[i] for e in true_terms) for i in range(n)]
        cleared = {tuple(e[i] - mins[i] for i in range(n)): c for e, c in true_terms.items()}
        common = [min(e[i] for e in cleared) for i in range(n)]
        if any(common):
            cleared = {tuple(e[i] - common[i] for i in range(n)): c for e, c in cleared.items()}
        removed.append(tuple(m + c for m, c in zip(mins, common)))
        out.append(cleared)
    return out, removed


# ---------------------------------------------------------------------------
# quotient-ring gcd machinery (dynamic modulus splitting)
# ---------------------------------------------------------------------------

def _mod(p: UniPoly, h: UniPoly) -> UniPoly:
    return p.divmod(h)[1]


def _ext_gcd(a: UniPoly, b: UniPoly):
    r0, r1 = a, b
    s0, s1 = UniPoly.const(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.const(1)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def _inverse_mod(c: UniPoly, h: UniPoly) -> UniPoly:
    g, u, _v = _ext_gcd(c, h)
    if g.degree != 0:
        raise ArithmeticError("element not invertible in the quotient")
    return _mod(u * (Fraction(1) / g.coeffs[0]), h)


def _trim(A: list, h: UniPoly) -> list:
    """Reduce a y-coefficient list mod h and trim until the leading
    coefficient is invertible; splits the modulus when it is a zero divisor.
    Returns [(h_branch, trimmed_list)] covering all branches."""
    out = []
    stack = [(h, [c for c in A])]
    while stack:
        hb, poly = stack.pop()
        poly = [_mod(c, hb) for c in poly]
        while poly and poly[-1].is_zero():
            poly.pop()
        if not poly:
            out.append((hb, []))
            continue
        g = poly[-1].gcd(hb)
        if g.degree == 0:
            out.append((hb, poly))
        elif g.degree == hb.degree:
            stack.append((hb, poly[:-1]))
        else:
            stack.append((g, poly))
            stack.append((hb.exact_div(g).monic(), poly))
    return out


def _poly_mod(A: list, B: list, h: UniPoly) -> list:
    """Remainder of A by B in (Q[x]/(h))[y]; lead(B) must be invertible."""
    inv = _inverse_mod(B[-1], h)
    rem = [_mod(c, h) for c in A]
    db = len(B) - 1
    while len(rem) - 1 >= db:
        while rem and rem[-1].is_zero():
            rem.pop()
        if len(rem) - 1 < db:
            break
        factor = _mod(rem[-1] * inv, h)
        shift = len(rem) - 1 - db
        for i, c in enumerate(B):
            rem[shift + i] = _mod(rem[shift + i] - factor * c, h)
        rem.pop()
    while rem and rem[-1].is_zero():
        rem.pop()
    return rem


def _fiber_gcd_branches(A: list, B: list, h: UniPoly) -> list:
    """[(h_branch, G)] with G = gcd of A and B in (Q[x]/(h_branch))[y],
    trimmed so deg_y G is well-defined on the branch."""
    out = []
    stack = [(h, A, B)]
    while stack:
        hb, A0, B0 = stack.pop()
        if hb.degree == 0:
            continue
        branches_a = _trim(A0, hb)
        if len(branches_a) > 1 or branches_a[0][0] != hb:
            for ha, A1 in branches_a:
                stack.append((ha, A1, B0))
            continue
        A1 = branches_a[0][1]
        branches_b = _trim(B0, hb)
        if len(branches_b) > 1 or branches_b[0][0] != hb:
            for hb2, B1 in branches_b:
                stack.append((hb2, A1, B1))
            continue
        B1 = branches_b[0][1]
        if not A1 and not B1:
            raise DegenerateSystemError("both polynomials vanish on a whole branch")
        if not A1:
            out.append((hb, B1))
            continue
        if not B1:
            out.append((hb, A1))
            continue
        if len(A1) < len(B1):
            A1, B1 = B1, A1
        R = _poly_mod(A1, B1, hb)
        stack.append((hb, B1, R))
    return out


def _torus_sf_degree_total(G: list, h: UniPoly) -> int:
    """Sum over branches of deg(h_branch) * (number of distinct nonzero
    y-roots of G on the branch)."""
    total = 0
    stack = [(h, G)]
    while stack:
        hb, poly = stack.pop()
        if hb.degree == 0:
            continue
        branches = _trim(poly, hb)
        if len(branches) > 1 or branches[0][0] != hb:
            stack.extend(branches)
            continue
        poly = branches[0][1]
        if not poly:
            raise DegenerateSystemError("gcd vanished identically on a branch")
        # strip y-powers, splitting on the constant term
        c0 = poly[0]
        g0 = c0.gcd(hb)
        if g0.degree == hb.degree:
            stack.append((hb, poly[1:]))
            continue
        if g0.degree > 0:
            stack.append((g0, poly))
            stack.append((hb.exact_div(g0).monic(), poly))
            continue
        k = len(poly) - 1
        if k == 0:
            continue
        deriv = [i * poly[i] for i in range(1, k + 1)]
        for h2, D in _fiber_gcd_branches(poly, deriv, hb):
            total += h2.degree * (k - (len(D) - 1))
    return total


# ---------------------------------------------------------------------------
# bivariate helpers
# ---------------------------------------------------------------------------

def _bivar_cols(poly: dict, axis: int) -> list:
    """Coefficient list in the chosen variable, entries UniPoly in the other."""
    other = 1 - axis
    deg_main = max(e[axis] for e in poly)
    deg_other = max(e[other] for e in poly)
    cols = []
    for j in range(deg_main + 1):
        coeffs = [Fraction(0)] * (deg_other + 1)
        for e, c in poly.items():
            if e[axis] == j:
                coeffs[e[other]] = c
        cols.append(UniPoly(coeffs))
    return cols


def _torus_part(p: UniPoly) -> UniPoly:
    _, q = p.strip_x_power()
    return q


def _count_fibers(cols1: list, cols2: list, h: UniPoly) -> int:
    total = 0
    for hb, G in _fiber_gcd_branches(cols1, cols2, h):
        if not G:
            continue
        total += _torus_sf_degree_total(G, hb)
    return total


def _count_bivariate(g1: dict, g2: dict) -> Tuple[int, bool]:
    """(distinct torus solutions, genericity flag); the count is verified by
    eliminating in both variable orders."""
    cols1x = _bivar_cols(g1, 1)
    cols2x = _bivar_cols(g2, 1)
    r1 = resultant(cols1x, cols2x)
    if r1.is_zero():
        raise DegenerateSystemError("resultant vanished; common factor present")
    hx = _torus_part(r1)
    count_x = 0
    if hx.degree > 0:
        count_x = _count_fibers(cols1x, cols2x, hx.squarefree().monic())
    cols1y = _bivar_cols(g1, 0)
    cols2y = _bivar_cols(g2, 0)
    r2 = resultant(cols1y, cols2y)
    if r2.is_zero():
        raise DegenerateSystemError("resultant vanished; common factor present")
    hy = _torus_part(r2)
    count_y = 0
    if hy.degree > 0:
        count_y = _count_fibers(cols1y, cols2y, hy.squarefree().monic())
    return count_x, count_x == count_y


# ---------------------------------------------------------------------------
# interval arithmetic and Krawczyk certification
# ---------------------------------------------------------------------------

Interval = Tuple[Fraction, Fraction]


def _iv(lo, hi) -> Interval:
    return (Fraction(lo), Fraction(hi))


def _iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _iv_sub(a, b):
    return (a[0] - b[1], a[1] - b[0])


def _iv_mul(a, b):
    vals = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(vals), max(vals))


def _iv_pow(a, n):
    out = _iv(1, 1)
    for _ in range(n):
        out = _iv_mul(out, a)
    return out


def _iv_scale(a, c):
    c = Fraction(c)
    return (a[0] * c, a[1] * c) if c >= 0 else (a[1] * c, a[0] * c)


def _eval_dict_interval(poly: dict, box: Sequence[Interval]) -> Interval:
    acc = _iv(0, 0)
    for e, c in poly.items():
        term = _iv(1, 1)
        for xi, ei in zip(box, e):
            if ei:
                term = _iv_mul(term, _iv_pow(xi, ei))
        acc = _iv_add(acc, _iv_scale(term, c))
    return acc


def _dict_partial(poly: dict, axis: int) -> dict:
    out = {}
    for e, c in poly.items():
        if e[axis] == 0:
            continue
        ne = list(e)
        ne[axis] -= 1
        out[tuple(ne)] = out.get(tuple(ne), Fraction(0)) + c * e[axis]
    return out


def _eval_dict_exact(poly: dict, x: Sequence[Fraction]) -> Fraction:
    acc = Fraction(0)
    for e, c in poly.items():
        term = c
        for xi, ei in zip(x, e):
            term *= xi**ei
        acc += term
    return acc


def _krawczyk_2x2(g1: dict, g2: dict, box: Sequence[Interval]):
    """Returns 'unique', 'empty' or 'unknown' for the box."""
    f1 = _eval_dict_interval(g1, box)
    f2 = _eval_dict_interval(g2, box)
    if f1[0] > 0 or f1[1] < 0 or f2[0] > 0 or f2[1] < 0:
        return "empty"
    m = [Fraction(b[0] + b[1], 2) for b in box]
    j11 = _dict_partial(g1, 0)
    j12 = _dict_partial(g1, 1)
    j21 = _dict_partial(g2, 0)
    j22 = _dict_partial(g2, 1)
    a = _eval_dict_exact(j11, m)
    b = _eval_dict_exact(j12, m)
    c = _eval_dict_exact(j21, m)
    d = _eval_dict_exact(j22, m)
    det = a * d - b * c
    if det == 0:
        return "unknown"
    y = [[d / det, -b / det], [-c / det, a / det]]
    fm = [_eval_dict_exact(g1, m), _eval_dict_exact(g2, m)]
    jac = [
        [_eval_dict_interval(j11, box), _eval_dict_interval(j12, box)],
        [_eval_dict_interval(j21, box), _eval_dict_interval(j22, box)],
    ]
    # I - Y * J(box)
    res = []
    for i in range(2):
        row = []
        for j in range(2):
            acc = _iv(1 if i == j else 0, 1 if i == j else 0)
            for k in range(2):
                acc = _iv_sub(acc, _iv_scale(jac[k][j], y[i][k]))
            row.append(acc)
        res.append(row)
    dx = [_iv_sub(boxi, _iv(mi, mi)) for boxi, mi in zip(box, m)]
    k_img = []
    for i in range(2):
        acc = _iv(m[i] - (y[i][0] * fm[0] + y[i][1] * fm[1]),
                  m[i] - (y[i][0] * fm[0] + y[i][1] * fm[1]))
        for j in range(2):
            acc = _iv_add(acc, _iv_mul(res[i][j], dx[j]))
        k_img.append(acc)
    inside = all(box[i][0] < k_img[i][0] and k_img[i][1] < box[i][1] for i in range(2))
    if inside:
        return "unique"
    disjoint = any(k_img[i][1] < box[i][0] or k_img[i][0] > box[i][1] for i in range(2))
    if disjoint:
        return "empty"
    return "unknown"


# ---------------------------------------------------------------------------
# solution sets
# ---------------------------------------------------------------------------

@dataclass
class SolutionSet:
    d: int
    distinct_complex: int
    real_count: Optional[int] = None
    positive_count: Optional[int] = None
    solutions: List[dict] = field(default_factory=list)
    genericity: bool = True
    multiplicity_excess: int = 0
    warnings: List[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "distinct_complex": self.distinct_complex,
            "real_count": self.real_count,
            "positive_count": self.positive_count,
            "solutions": self.solutions,
            "genericity": self.genericity,
            "multiplicity_excess": self.multiplicity_excess,
            "warnings": self.warnings,
        }


def _system_dicts(data: HomSpaceData) -> Tuple[list, list]:
    system = einstein_system(data)
    return dehomogenize(system)


def count_complex(data: HomSpaceData) -> SolutionSet:
    """Distinct complex solutions of the Einstein system modulo scaling,
    torus solutions only (roots with a zero coordinate are excluded)."""
    if data.d not in (2, 3):
        raise UnsupportedDimensionError(
            f"complex counting is implemented for d in {{2, 3}}, got d = {data.d}"
        )
    polys, _removed = _system_dicts(data)
    if data.d == 2:
        p = _to_unipoly_1d(polys[0])
        ptor = _torus_part(p)
        if ptor.degree <= 0:
            return SolutionSet(2, 0)
        sf = ptor.squarefree()
        excess = ptor.degree - sf.degree
        return SolutionSet(2, sf.degree, multiplicity_excess=excess)
    g1, g2 = polys
    count, generic = _count_bivariate(g1, g2)
    out = SolutionSet(3, count, genericity=generic)
    if not generic:
        out.warnings.append("eliminations in the two variable orders disagree")
    return out


def _to_unipoly_1d(poly: dict) -> UniPoly:
    deg = max(e[0] for e in poly)
    coeffs = [Fraction(0)] * (deg + 1)
    for e, c in poly.items():
        coeffs[e[0]] = c
    return UniPoly(coeffs)


def real_positive(data: HomSpaceData, max_rounds: int = 40) -> SolutionSet:
    """count_complex enriched with certified real and positive counts and
    refined solution boxes with residual certificates."""
    base = count_complex(data)
    polys, _removed = _system_dicts(data)
    system = einstein_system(data)
    if data.d == 2:
        return _real_positive_d2(data, base, polys[0], system)
    return _real_positive_d3(data, base, polys, system, max_rounds)


def _residual_entry(system, point_or_box, exact: bool) -> dict:
    if exact:
        x = list(point_or_box) + [Fraction(1)]
        res = [f.eval(x) for f in system]
        assert all(r == 0 for r in res)
        return {"x": [format_rat(v) for v in point_or_box], "exact": True, "residual": "0"}
    box = point_or_box
    bounds = []
    for f in system:
        poly = {}
        for a, c in f.terms.items():
            key = tuple(-ai for ai in a[:-1])
            poly[key] = poly.get(key, Fraction(0)) + c
        mins = [min(e[i] for e in poly) for i in range(len(box))]
        cleared = {tuple(e[i] - mins[i] for i in range(len(box))): c for e, c in poly.items()}
        iv = _eval_dict_interval(cleared, box)
        denom = _iv(1, 1)
        for b, m in zip(box, mins):
            if m < 0:
                denom = _iv_mul(denom, _iv_pow(b, -m))
        # |f| <= |cleared| / min|denom| on a positive box
        scale = min(abs(denom[0]), abs(denom[1]))
        bound = max(abs(iv[0]), abs(iv[1])) / scale if scale else max(abs(iv[0]), abs(iv[1]))
        bounds.append(bound)
    return {
        "box": [[format_rat(b[0]), format_rat(b[1])] for b in box],
        "exact": False,
        "residual_bound": format_rat(max(bounds)),
    }


def _real_positive_d2(data, base, poly, system) -> SolutionSet:
    p = _torus_part(_to_unipoly_1d(poly))
    sf = p.squarefree() if p.degree > 0 else p
    base.real_count = sturm_count(sf) if sf.degree > 0 else 0
    base.positive_count = sturm_count(sf, Fraction(0), None) if sf.degree > 0 else 0
    for lo, hi in isolate_real_roots(sf) if sf.degree > 0 else []:
        root = _rational_root_in(sf, lo, hi)
        if root is not None:
            base.solutions.append(_residual_entry(system, [root], exact=True))
        else:
            lo2, hi2 = refine_root_interval(sf, lo, hi, Fraction(1, 2**20))
            base.solutions.append(
                _residual_entry(system, [_iv(lo2, hi2)], exact=False)
            )
    return base


def _rational_root_in(p: UniPoly, lo: Fraction, hi: Fraction):
    """A rational root of p inside (lo, hi], when cheap to find."""
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // __import__("math").gcd(scale, c.denominator)
    ints = [int(c * scale) for c in p.coeffs]
    a0 = next((c for c in ints if c != 0), 0)
    an = ints[-1]
    if a0 == 0 or an == 0 or abs(a0) > 10**7 or abs(an) > 10**7:
        return None
    def divisors(n):
        n = abs(n)
        out = set()
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.add(i)
                out.add(n // i)
            i += 1
        return out
    for num in divisors(a0):
        for den in divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if lo < cand <= hi and p(cand) == 0:
                    return cand
    return None


def _real_positive_d3(data, base, polys, system, max_rounds) -> SolutionSet:
    g1, g2 = polys
    r1 = resultant(_bivar_cols(g1, 1), _bivar_cols(g2, 1))
    r2 = resultant(_bivar_cols(g1, 0), _bivar_cols(g2, 0))
    q1 = _torus_part(r1)
    q2 = _torus_part(r2)
    q1 = q1.squarefree() if q1.degree > 0 else q1
    q2 = q2.squarefree() if q2.degree > 0 else q2
    if q1.degree <= 0 or q2.degree <= 0:
        base.real_count = 0
        base.positive_count = 0
        return base
    iso1 = isolate_real_roots(q1)
    iso2 = isolate_real_roots(q2)
    real = 0
    positive = 0
    for i1 in iso1:
        for i2 in iso2:
            b1, b2 = i1, i2
            status = "unknown"
            for _ in range(max_rounds):
                box = (_iv(*b1), _iv(*b2))
                status = _krawczyk_2x2(g1, g2, box)
                if status in ("unique", "empty"):
                    break
                b1 = refine_root_interval(q1, b1[0], b1[1], (b1[1] - b1[0]) / 4)
                b2 = refine_root_interval(q2, b2[0], b2[1], (b2[1] - b2[0]) / 4)
            if status == "unique":
                real += 1
                box = (_iv(*b1), _iv(*b2))
                if box[0][0] > 0 and box[1][0] > 0:
                    positive += 1
                elif box[0][1] > 0 and box[1][1] > 0 and (box[0][0] <= 0 or box[1][0] <= 0):
                    base.warnings.append("sign-ambiguous box; refining")
                    b1 = refine_root_interval(q1, b1[0], b1[1], Fraction(1, 2**30))
                    b2 = refine_root_interval(q2, b2[0], b2[1], Fraction(1, 2**30))
                    if b1[0] > 0 and b2[0] > 0:
                        positive += 1
                rr1 = _rational_root_in(q1, b1[0], b1[1])
                rr2 = _rational_root_in(q2, b2[0], b2[1])
                if (
                    rr1 is not None
                    and rr2 is not None
                    and _eval_dict_exact(g1, [rr1, rr2]) == 0
                    and _eval_dict_exact(g2, [rr1, rr2]) == 0
                ):
                    base.solutions.append(_residual_entry(system, [rr1, rr2], exact=True))
                else:
                    b1w = refine_root_interval(q1, b1[0], b1[1], Fraction(1, 2**20))
                    b2w = refine_root_interval(q2, b2[0], b2[1], Fraction(1, 2**20))
                    base.solutions.append(
                        _residual_entry(system, (_iv(*b1w), _iv(*b2w)), exact=False)
                    )
            elif status == "unknown":
                base.warnings.append(
                    "cluster separation failure; widened interval left unresolved"
                )
    base.real_count = real
    base.positive_count = positive
    return base


# ---------------------------------------------------------------------------
# bound report
# ---------------------------------------------------------------------------

@dataclass
class BoundReport:
    d: int
    nu: int
    delannoy_bound: int
    six_power: int
    epsilon_computed: Optional[int] = None
    epsilon_annotation: Optional[int] = None
    t_size: Optional[int] = None
    escaped_to_infinity: Optional[int] = None
    verdicts: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "nu": self.nu,
            "delannoy_bound": self.delannoy_bound,
            "six_power": self.six_power,
            "epsilon_computed": self.epsilon_computed,
            "epsilon_annotation": self.epsilon_annotation,
            "t_size": self.t_size,
            "escaped_to_infinity": self.escaped_to_infinity,
            "verdicts": self.verdicts,
        }


def bound_report(data: HomSpaceData, solve: bool = True) -> BoundReport:
    """nu, the Delannoy/Legendre bound, 6^(d-1), the solver count when
    available, and the missing-solution note when nu exceeds epsilon."""
    P = weight_polytope(data)
    T = flat_complex(data)
    Pmin = delta_min(P, T)
    nu = Pmin.normalized_volume()
    dl = delannoy(data.d - 1)
    six = 6 ** (data.d - 1)
    eps_c = None
    if solve and data.d in (2, 3):
        eps_c = count_complex(data).distinct_complex
    eps_a = None
    if data.expected and "epsilon" in data.expected:
        eps_a = data.expected["epsilon"]
    eps = eps_c if eps_c is not None else eps_a
    report = BoundReport(
        d=data.d,
        nu=nu,
        delannoy_bound=dl,
        six_power=six,
        epsilon_computed=eps_c,
        epsilon_annotation=eps_a,
        t_size=len(T.maximal_flats),
        escaped_to_infinity=(nu - eps) if (eps is not None and nu > eps) else
        (0 if eps is not None else None),
        verdicts={
            "epsilon_le_nu": (eps <= nu) if eps is not None else None,
            "nu_le_delannoy": nu <= dl,
            "delannoy_lt_six_power": dl < six,
        },
    )
    if report.verdicts["epsilon_le_nu"] is False:
        report.verdicts["violation"] = "epsilon exceeds nu"
    return report
