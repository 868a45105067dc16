"""Marked-face census and face-restricted singularity analysis.

A proper non-vertex face is *marked* when it fails both shape tests below;
marked faces are the candidate carriers of solutions at infinity.  The tests
are the simplified forms valid when every vertex is of the shape
e_i + e_j - e_k; on other polytopes the census reports them inapplicable.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .curvature import LaurentPoly, restrict_to_face
from .exact import UniPoly, det, resultant
from .polytope import Face, LatticePolytope, hull, is_cross_polytope
from .exact import integer_kernel_basis, solve_unique

SINGULAR = "singular"
NONSINGULAR = "nonsingular"
NEEDS_MORE_DATA = "needs_more_data"


def _basis_points_on(polytope: LatticePolytope, face: Face) -> list:
    d = polytope.ambient_dim
    out = []
    for i in range(1, d + 1):
        e = tuple(1 if j == i else 0 for j in range(1, d + 1))
        if face.contains_point(e):
            out.append((i, e))
    return out


def test1_pyramid(polytope: LatticePolytope, face: Face) -> bool:
    """Some apex a of the face sees every basis point e_i on the face either
    at a itself or inside the hull of the remaining vertices."""
    verts = face.vertices()
    if len(verts) < 2:
        return False
    epts = _basis_points_on(polytope, face)
    for a in sorted(verts):
        others = [v for v in verts if v != a]
        if len(others) >= 2:
            base = others[0]
            diffs = [[v[i] - base[i] for i in range(len(base))] for v in others[1:]]
            from .exact import rank as _rank

            base_rank = _rank(diffs) if diffs else 0
            with_a = diffs + [[a[i] - base[i] for i in range(len(base))]]
            if _rank(with_a) == base_rank:
                continue  # a is not an apex
        if not epts:
            return True
        base_hull = hull(others)
        if all(e == a or base_hull.contains(e) for _i, e in epts):
            return True
    return False


def test2_octahedron(polytope: LatticePolytope, face: Face) -> bool:
    """The face is a cross polytope centered at some basis point e_{i0} and
    carries no other basis point."""
    center = is_cross_polytope(face)
    if center is None:
        return False
    if any(c.denominator != 1 for c in center):
        return False
    ic = [int(c) for c in center]
    if sum(ic) != 1 or any(c not in (0, 1) for c in ic):
        return False
    i0 = ic.index(1) + 1
    for i, _e in _basis_points_on(polytope, face):
        if i != i0:
            return False
    return True


def vertices_have_weight_shape(polytope: LatticePolytope) -> bool:
    """All vertices of the shape e_i + e_j - e_k (coordinate sum 1 with
    positive part {1,1} or {2} and negative part {-1})."""
    for v in polytope.vertices:
        if sum(v) != 1:
            return False
        pos = sorted(x for x in v if x > 0)
        neg = [x for x in v if x < 0]
        if neg != [-1] or pos not in ([1, 1], [2]):
            return False
    return True


@dataclass
class CensusEntry:
    face: Face
    dim: int
    test1: Optional[bool]
    test2: Optional[bool]
    marked: Optional[bool]
    signature: tuple
    applicable: bool


@dataclass
class MarkedFaceCensus:
    polytope: LatticePolytope
    entries: List[CensusEntry]
    applicable: bool

    def by_dim(self) -> Dict[int, List[CensusEntry]]:
        out: Dict[int, List[CensusEntry]] = {}
        for e in self.entries:
            out.setdefault(e.dim, []).append(e)
        return out

    def marked_by_dim(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for e in self.entries:
            if e.marked:
                out[e.dim] = out.get(e.dim, 0) + 1
        return out

    def marked_total(self) -> int:
        return sum(1 for e in self.entries if e.marked)

    def marked_faces(self) -> List[CensusEntry]:
        return [e for e in self.entries if e.marked]

    def test2_count(self) -> int:
        return sum(1 for e in self.entries if e.test2)


def _census_workers() -> int:
    raw = os.environ.get("HS_THREADS")
    cores = os.cpu_count() or 1
    if raw is None:
        return cores
    try:
        n = int(raw)
    except ValueError:
        return cores
    return max(1, min(n, cores))


def marked_census(polytope: LatticePolytope) -> MarkedFaceCensus:
    """Shape tests over every proper non-vertex face, merged deterministically
    by (dimension, vertex set)."""
    applicable = vertices_have_weight_shape(polytope)
    faces = []
    for dim_, fs in sorted(polytope.all_proper_faces().items()):
        if dim_ == 0:
            continue
        faces.extend(fs)

    def examine(face: Face) -> CensusEntry:
        if not applicable:
            return CensusEntry(face, face.dim, None, None, None, face.normal_signature(), False)
        t1 = test1_pyramid(polytope, face)
        t2 = test2_octahedron(polytope, face)
        return CensusEntry(face, face.dim, t1, t2, not (t1 or t2), face.normal_signature(), True)

    workers = _census_workers()
    if workers > 1 and len(faces) > 32:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(examine, faces))
    else:
        entries = [examine(f) for f in faces]
    entries.sort(key=lambda e: (e.dim, e.face.vertex_indices))
    return MarkedFaceCensus(polytope, entries, applicable)


# ---------------------------------------------------------------------------
# singularity of face-restricted hypersurfaces
# ---------------------------------------------------------------------------

def _parallelogram_diagonals(verts: list):
    """Split four vertices into the two diagonal pairs (equal sums)."""
    v0 = verts[0]
    for a, b in ((1, 2), (1, 3), (2, 3)):
        c = ({1, 2, 3} - {a, b}).pop()
        if tuple(x + y for x, y in zip(v0, verts[c])) == tuple(
            x + y for x, y in zip(verts[a], verts[b])
        ):
            return (v0, verts[c]), (verts[a], verts[b])
    return None


def parallelogram_singular(s: LaurentPoly, face: Face) -> str:
    """Verdict for the hypersurface cut out by the face restriction of s on
    a parallelogram face: with vertex coefficients a0, a1, a12, a2 (a0/a12
    and a1/a2 opposite) the restriction factors through a torus translate
    iff a0*a12 = a1*a2, and then it is singular."""
    verts = face.vertices()
    if face.dim != 2 or len(verts) != 4:
        raise ValueError("face is not a parallelogram")
    diag = _parallelogram_diagonals(verts)
    if diag is None:
        raise ValueError("face is not a parallelogram")
    restricted = restrict_to_face(s, face)
    support = set(restricted.terms)
    if support != set(verts):
        return NEEDS_MORE_DATA
    (p0, p12), (p1, p2) = diag
    a0, a12 = restricted.terms[p0], restricted.terms[p12]
    a1, a2 = restricted.terms[p1], restricted.terms[p2]
    return SINGULAR if a0 * a12 == a1 * a2 else NONSINGULAR


def _face_chart_poly(s: LaurentPoly, face: Face):
    """Rewrite the face restriction in two lattice coordinates of the face;
    returns a dict (i, j) -> coeff of true exponents, or None when the
    restriction is empty."""
    restricted = restrict_to_face(s, face)
    if restricted.is_zero():
        return None
    pts = list(restricted.terms)
    base = pts[0]
    n = len(base)
    diffs = [[p[i] - base[i] for i in range(n)] for p in pts[1:]]
    ortho = integer_kernel_basis(diffs) if diffs else None
    if ortho is None:
        return {(0, 0): restricted.terms[base]}
    basis = integer_kernel_basis(ortho) if ortho else [
        [1 if i == j else 0 for j in range(n)] for i in range(n)
    ]
    if len(basis) > 2:
        raise ValueError("face restriction spans more than two directions")
    while len(basis) < 2:
        basis.append([0] * n)
    cols = [[Fraction(basis[j][i]) for j in range(len(basis))] for i in range(n)]
    out = {}
    for p, coef in restricted.terms.items():
        dvec = [Fraction(p[i] - base[i]) for i in range(n)]
        try:
            u = solve_unique(cols, dvec)
        except Exception:
            u = None
        if u is None:
            raise ValueError("face point outside the face lattice")
        out[(int(u[0]), int(u[1]))] = coef
    return out


def _shift_nonneg(poly: dict) -> dict:
    mi = min(e[0] for e in poly)
    mj = min(e[1] for e in poly)
    return {(i - mi, j - mj): c for (i, j), c in poly.items()}


def _strip_monomial(poly: dict) -> dict:
    return _shift_nonneg(poly)


def _to_bivar(poly: dict):
    """dict -> y-coefficient list of UniPoly in x."""
    degy = max(e[1] for e in poly)
    degx = max(e[0] for e in poly)
    cols = []
    for j in range(degy + 1):
        coeffs = [Fraction(0)] * (degx + 1)
        for (i, jj), c in poly.items():
            if jj == j:
                coeffs[i] = c
        cols.append(UniPoly(coeffs))
    return cols


def _euler_bivar(poly: dict, axis: int) -> dict:
    out = {}
    for (i, j), c in poly.items():
        t = (i, j)[axis]
        if t:
            out[(i, j)] = c * t
    return out


def curve_singular(s: LaurentPoly, face: Face) -> str:
    """Exact decision whether the plane curve cut out by the face restriction
    has a singular point with all torus coordinates nonzero.

    A constant gcd of the two elimination resultants certifies smoothness;
    the remaining (degenerate) cases are settled by an exact radical-membership
    computation (Groebner basis with a torus saturation variable).
    """
    if face.dim != 2:
        raise ValueError("curve singularity analysis needs a 2-face")
    poly = _face_chart_poly(s, face)
    if poly is None or len(poly) <= 1:
        return NEEDS_MORE_DATA
    poly = _strip_monomial(poly)
    g1 = _strip_monomial(_euler_bivar(poly, 0)) if _euler_bivar(poly, 0) else {}
    g2 = _strip_monomial(_euler_bivar(poly, 1)) if _euler_bivar(poly, 1) else {}
    if not g1 or not g2:
        # the curve is essentially univariate; it is singular only if the
        # univariate part has a repeated torus root
        return _univariate_singular(poly)
    try:
        r1 = resultant(_to_bivar(poly), _to_bivar(g1))
        r2 = resultant(_to_bivar(poly), _to_bivar(g2))
        _, r1t = r1.strip_x_power()
        _, r2t = r2.strip_x_power()
        if not r1t.is_zero() and not r2t.is_zero():
            h = r1t.gcd(r2t)
            _, ht = h.strip_x_power()
            if ht.degree <= 0:
                return NONSINGULAR
    except Exception:
        pass
    return _groebner_torus_singular(poly, g1, g2)


def _univariate_singular(poly: dict) -> str:
    xs = sorted({e[0] for e in poly})
    ys = sorted({e[1] for e in poly})
    if len(ys) == 1:
        coeffs = [Fraction(0)] * (max(xs) + 1)
        for (i, _j), c in poly.items():
            coeffs[i] = c
        p = UniPoly(coeffs)
    else:
        coeffs = [Fraction(0)] * (max(ys) + 1)
        for (_i, j), c in poly.items():
            coeffs[j] = c
        p = UniPoly(coeffs)
    _, pt = p.strip_x_power()
    g = pt.gcd(pt.derivative())
    gt_deg = g.strip_x_power()[1].degree
    return SINGULAR if gt_deg > 0 else NONSINGULAR


def _groebner_torus_singular(poly: dict, g1: dict, g2: dict) -> str:
    import sympy

    t1, t2, w = sympy.symbols("t1 t2 w")

    def expr(p):
        return sympy.Add(*[sympy.Rational(c) * t1**i * t2**j for (i, j), c in p.items()])

    basis = sympy.groebner(
        [expr(poly), expr(g1), expr(g2), 1 - w * t1 * t2],
        t1,
        t2,
        w,
        order="lex",
    )
    return NONSINGULAR if basis.exprs == [sympy.Integer(1)] else SINGULAR


# ---------------------------------------------------------------------------
# monomial charts at faces
# ---------------------------------------------------------------------------

class ChartSubstitution:
    """Per-variable monomial substitution x_i = scalar_i * prod t_j^(E_ij)
    with a unimodular exponent matrix; used to localize the curvature
    polynomials near a designated face."""

    def __init__(self, scalars, exponents, scaling_index: int = 0, face: Optional[Face] = None):
        self.scalars = tuple(Fraction(s) for s in scalars)
        self.exponents = tuple(tuple(int(e) for e in row) for row in exponents)
        self.scaling_index = scaling_index
        self.face = face
        n = len(self.exponents)
        if any(len(row) != n for row in self.exponents):
            raise ValueError("exponent matrix must be square")
        if any(s == 0 for s in self.scalars):
            raise ValueError("chart scalars must be nonzero")
        d = det([list(r) for r in self.exponents])
        if d not in (1, -1):
            raise ValueError(f"chart exponent matrix is not unimodular (det {d})")

    @property
    def num_vars(self) -> int:
        return len(self.exponents)


def localize(s: LaurentPoly, chart: ChartSubstitution) -> dict:
    """s and all s_i = x_i ds/dx_i rewritten in the chart variables."""
    from .curvature import monomial_substitute

    subs = list(zip(chart.scalars, chart.exponents))
    out = {"s": monomial_substitute(s, subs, chart.num_vars)}
    for i in range(s.num_vars):
        out[f"s{i + 1}"] = monomial_substitute(s.euler(i), subs, chart.num_vars)
    return out


def boundary_jacobian(data, chart: ChartSubstitution, point: Sequence) -> tuple:
    """Cofactor expansion of the localized jacobian with a symbolic
    dimension row.

    Builds the d x d matrix whose scaling-variable row is replaced by the
    symbolic dimensions (d_1 ... d_d) and whose remaining rows are the
    partials of the localized s_1 ... s_d in the other chart variables,
    evaluated at the given chart point.  Returns the cofactor coefficients
    (c_1, ..., c_d) of the expansion sum_i d_i c_i.
    """
    from .curvature import scalar_curvature

    s = scalar_curvature(data)
    local = localize(s, chart)
    n = chart.num_vars
    pt = [Fraction(v) for v in point]
    if len(pt) != n:
        raise ValueError("chart point has wrong length")
    if pt[chart.scaling_index] == 0:
        raise ValueError("scaling coordinate must be nonzero")
    var_rows = [k for k in range(n) if k != chart.scaling_index]
    d = data.d
    mat_rows = []
    for k in var_rows:
        row = []
        for i in range(1, d + 1):
            row.append(local[f"s{i}"].partial(k).eval(pt))
        mat_rows.append(row)
    cof = []
    for i in range(d):
        minor = [[row[j] for j in range(d) if j != i] for row in mat_rows]
        cof.append((-1) ** i * det(minor))
    return tuple(cof)
