"""Exact convex polytopes over the integer lattice.

V- and H-representations are kept simultaneously: a polytope stores its
irredundant vertex set, the equations of its affine hull, and one primitive
inward facet normal per facet.  Hulls are computed by the double description
method on the cone of valid inequalities, entirely in integer arithmetic.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import product as iter_product
from math import gcd
from typing import Iterable, Optional, Tuple

from .exact import (
    DimensionError,
    Fraction as Rat,
    integer_kernel_basis,
    primitive,
    rank,
    solve_integer,
    solve_unique,
    vec_gcd,
)

LatticePoint = Tuple[int, ...]


class EmptyHullError(ValueError):
    """Hull of an empty point set was requested."""


def _as_point(p) -> LatticePoint:
    return tuple(int(x) for x in p)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# double description: extreme rays of {y : C y >= 0}
# ---------------------------------------------------------------------------

def _initial_rays(constraints: list, m: int) -> tuple:
    """Pick m independent constraints and return their simplicial cone rays."""
    chosen = []
    idx = []
    for i, c in enumerate(constraints):
        if rank(chosen + [c]) > len(chosen):
            chosen.append(c)
            idx.append(i)
            if len(chosen) == m:
                break
    if len(chosen) < m:
        raise DimensionError("constraint matrix is rank deficient")
    # rays r_j with <c_i, r_j> = 0 for i != j and > 0 for i == j
    rays = []
    for j in range(m):
        cols = [[Fraction(chosen[i][k]) for k in range(m)] for i in range(m) if i != j]
        kern = integer_kernel_basis([[int(x) for x in row] for row in cols]) if cols else []
        if cols:
            r = kern[0]
        else:
            r = [1] * m
        if _dot(chosen[j], r) < 0:
            r = [-x for x in r]
        rays.append(primitive(r))
    return rays, idx


def _extreme_rays(constraints: list) -> list:
    """All extreme rays of the pointed cone {y : C y >= 0} (integer rows)."""
    m = len(constraints[0])
    rays, init_idx = _initial_rays(constraints, m)
    processed = list(init_idx)

    def tight_mask(ray):
        mask = 0
        for pos, ci in enumerate(processed):
            if _dot(constraints[ci], ray) == 0:
                mask |= 1 << pos
        return mask

    for ci in range(len(constraints)):
        if ci in processed:
            continue
        c = constraints[ci]
        vals = [_dot(c, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            processed.append(ci)
            continue
        masks = [tight_mask(r) for r in rays]
        new_rays = [rays[i] for i in pos + zer]
        for ip in pos:
            for ineg in neg:
                common = masks[ip] & masks[ineg]
                adjacent = True
                for k in range(len(rays)):
                    if k in (ip, ineg):
                        continue
                    if masks[k] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vn = vals[ip], vals[ineg]
                combo = [vp * b - vn * a for a, b in zip(rays[ip], rays[ineg])]
                new_rays.append(primitive(combo))
        processed.append(ci)
        # dedupe (combinations can coincide in degenerate positions)
        seen = {}
        rays = []
        for r in new_rays:
            if r not in seen:
                seen[r] = True
                rays.append(r)
    return rays


# ---------------------------------------------------------------------------
# faces
# ---------------------------------------------------------------------------

class Face:
    """A face of a LatticePolytope, identified by its vertex subset."""

    __slots__ = ("polytope", "vertex_indices", "dim", "facet_indices")

    def __init__(self, polytope, vertex_indices, dim, facet_indices):
        self.polytope = polytope
        self.vertex_indices = tuple(sorted(vertex_indices))
        self.dim = dim
        self.facet_indices = tuple(sorted(facet_indices))

    def vertices(self) -> list:
        return [self.polytope.vertices[i] for i in self.vertex_indices]

    def __eq__(self, other):
        return (
            isinstance(other, Face)
            and self.polytope is other.polytope
            and self.vertex_indices == other.vertex_indices
        )

    def __hash__(self):
        return hash((id(self.polytope), self.vertex_indices))

    def __repr__(self):
        return f"Face(dim={self.dim}, vertices={self.vertices()})"

    def contains_point(self, x) -> bool:
        """Exact membership of a rational point in this face."""
        P = self.polytope
        if not P.contains(x):
            return False
        for fi in self.facet_indices:
            normal, offset = P.facets[fi]
            if _dot(normal, x) != offset:
                return False
        # the face is the intersection of its tight facets with P
        return True

    def lattice_points(self) -> list:
        return [p for p in self.polytope.lattice_points() if self.contains_point(p)]

    def normal_signature(self) -> tuple:
        """Primitive sum of the defining facet normals; identifies the face
        among faces of the same polytope.  Meaningful only when all defining
        facets are canonicalized to offset 0 (sum-1 polytopes); otherwise
        returns the empty signature."""
        P = self.polytope
        if not self.facet_indices:
            return ()
        d = P.ambient_dim
        acc = [0] * d
        for fi in self.facet_indices:
            normal, offset = P.facets[fi]
            if offset != 0:
                return ()
            for k in range(d):
                acc[k] += normal[k]
        return primitive(acc)


class LatticePolytope:
    """Convex hull of integer points with exact V/H-representations."""

    def __init__(self, vertices, facets, affine_hull, ambient_dim, dim):
        self.vertices: tuple = vertices          # sorted tuple of LatticePoint
        self.facets: tuple = facets              # tuple of (normal, offset)
        self.affine_hull: tuple = affine_hull    # tuple of (row, rhs)
        self.ambient_dim: int = ambient_dim
        self.dim: int = dim
        self._faces_by_dim = None
        self._chart = None

    # -- construction ------------------------------------------------------

    def __repr__(self):
        return (
            f"LatticePolytope(dim={self.dim}, ambient={self.ambient_dim}, "
            f"{len(self.vertices)} vertices, {len(self.facets)} facets)"
        )

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    # -- basic predicates ----------------------------------------------------

    def contains(self, x) -> bool:
        if len(x) != self.ambient_dim:
            raise DimensionError("point has wrong ambient dimension")
        for row, rhs in self.affine_hull:
            if _dot(row, x) != rhs:
                return False
        for normal, offset in self.facets:
            if _dot(normal, x) < offset:
                return False
        if self.dim == 0:
            return tuple(Fraction(v) for v in x) == tuple(
                Fraction(v) for v in self.vertices[0]
            )
        return True

    def contains_polytope(self, other: "LatticePolytope") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        return all(self.contains(v) for v in other.vertices)

    def in_dual_cone(self, y) -> bool:
        """True iff <x, y> >= 0 for every vertex x."""
        if len(y) != self.ambient_dim:
            raise DimensionError("vector has wrong ambient dimension")
        return all(_dot(v, y) >= 0 for v in self.vertices)

    # -- faces ---------------------------------------------------------------

    def _vertex_chart(self):
        """Chart coordinates of the vertices inside the affine hull."""
        if self._chart is not None:
            return self._chart
        p0 = self.vertices[0]
        diffs = [[v[i] - p0[i] for i in range(self.ambient_dim)] for v in self.vertices]
        if self.dim == 0:
            self._chart = (p0, [], [[] for _ in self.vertices])
            return self._chart
        ortho = integer_kernel_basis(diffs)
        if ortho:
            basis = integer_kernel_basis(ortho)
        else:
            basis = [[1 if i == j else 0 for j in range(self.ambient_dim)] for i in range(self.ambient_dim)]
        cols = [[Fraction(basis[j][i]) for j in range(len(basis))] for i in range(self.ambient_dim)]
        coords = []
        for dvec in diffs:
            u = solve_unique(cols, [Fraction(x) for x in dvec])
            coords.append([int(c) for c in u])
        self._chart = (p0, basis, coords)
        return self._chart

    def faces(self, k: int) -> list:
        """All k-dimensional faces."""
        if k < 0 or k > self.dim:
            raise DimensionError(f"no faces of dimension {k}")
        if k == self.dim:
            return [self.whole_face()]
        return self._face_lattice()[k]

    def all_proper_faces(self) -> dict:
        """Proper faces grouped by dimension 0..dim-1."""
        lattice = self._face_lattice()
        return {d: list(faces) for d, faces in lattice.items()}

    def whole_face(self) -> Face:
        return Face(self, range(len(self.vertices)), self.dim, ())

    def _face_lattice(self) -> dict:
        if self._faces_by_dim is not None:
            return self._faces_by_dim
        nv = len(self.vertices)
        incidences = []
        for normal, offset in self.facets:
            mask = 0
            for i, v in enumerate(self.vertices):
                if _dot(normal, v) == offset:
                    mask |= 1 << i
            incidences.append(mask)
        _, _, coords = self._vertex_chart()

        def mask_dim(mask):
            pts = [coords[i] for i in range(nv) if mask >> i & 1]
            if not pts:
                return -1
            base = pts[0]
            diffs = [[p[i] - base[i] for i in range(len(base))] for p in pts[1:]]
            return rank(diffs) if diffs else 0

        seen = {}
        frontier = {}
        for mask in incidences:
            if mask and mask not in frontier:
                frontier[mask] = None
        while frontier:
            nxt = {}
            for mask in frontier:
                if mask in seen:
                    continue
                seen[mask] = mask_dim(mask)
                for inc in incidences:
                    sub = mask & inc
                    if sub and sub != mask and sub not in seen:
                        nxt[sub] = None
            frontier = nxt
        by_dim = {d: [] for d in range(self.dim)}
        for mask, dim_ in sorted(seen.items(), key=lambda kv: (kv[1], kv[0])):
            verts = [i for i in range(nv) if mask >> i & 1]
            fids = [fi for fi, inc in enumerate(incidences) if mask & inc == mask]
            by_dim.setdefault(dim_, []).append(Face(self, verts, dim_, fids))
        for d in by_dim:
            by_dim[d].sort(key=lambda f: f.vertex_indices)
        self._faces_by_dim = by_dim
        return by_dim

    # -- volume ---------------------------------------------------------------

    def normalized_volume(self) -> int:
        """(d-1)! times the euclidean volume in the drop-last-coordinate
        chart; requires the polytope to lie in the coordinate-sum-1
        hyperplane.  Returns 0 when not full-dimensional there."""
        d = self.ambient_dim
        if any(sum(v) != 1 for v in self.vertices):
            raise ValueError("normalized volume needs the coordinate-sum-1 hyperplane")
        if self.dim < d - 1:
            return 0
        chart = [v[:-1] for v in self.vertices]
        total = 0
        for simplex in self._pulling_triangulation():
            base = chart[simplex[0]]
            mat = [[chart[i][k] - base[k] for k in range(d - 1)] for i in simplex[1:]]
            total += abs(_int_det(mat))
        return total

    def _pulling_triangulation(self) -> list:
        """Triangulation into simplices given by vertex-index tuples."""
        if self.dim == 0:
            return [tuple([0])]
        lattice = self._face_lattice()
        children = {}
        all_faces = [f for faces in lattice.values() for f in faces]
        all_faces.append(self.whole_face())

        def face_key(f):
            return f.vertex_indices

        by_key = {face_key(f): f for f in all_faces}
        memo = {}

        def triangulate(f: Face):
            key = face_key(f)
            if key in memo:
                return memo[key]
            if f.dim == 0:
                memo[key] = [key]
                return memo[key]
            pull = f.vertex_indices[0]
            vset = set(f.vertex_indices)
            simplices = []
            for child in lattice.get(f.dim - 1, []):
                if pull in child.vertex_indices:
                    continue
                if not set(child.vertex_indices) <= vset:
                    continue
                for s in triangulate(child):
                    simplices.append((pull,) + s)
            memo[key] = simplices
            return simplices

        return triangulate(self.whole_face())

    # -- lattice points ---------------------------------------------------------

    def lattice_points(self) -> list:
        lo = [min(v[i] for v in self.vertices) for i in range(self.ambient_dim)]
        hi = [max(v[i] for v in self.vertices) for i in range(self.ambient_dim)]
        out = []
        for p in iter_product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
            if self.contains(p):
                out.append(p)
        return out

    # -- serialization ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "vertices": [list(v) for v in self.vertices],
            "facets": [
                {"normal": list(n), "offset": off} for n, off in self.facets
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def _int_det(mat: list) -> int:
    from .exact import det as _det

    return int(_det(mat))


def polytope_from_json(obj) -> "LatticePolytope":
    if isinstance(obj, str):
        obj = json.loads(obj)
    return hull([tuple(v) for v in obj["vertices"]])


# ---------------------------------------------------------------------------
# hull construction
# ---------------------------------------------------------------------------

def hull(points: Iterable) -> LatticePolytope:
    """Convex hull of integer points: irredundant vertices plus a complete
    facet description within the affine hull."""
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise EmptyHullError("empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionError("points of mixed length")
    p0 = pts[0]
    diffs = [[p[i] - p0[i] for i in range(n)] for p in pts]
    ortho = integer_kernel_basis(diffs) if any(any(d) for d in diffs) else None
    if ortho is None:
        # single point (possibly repeated)
        eqs = tuple(
            (tuple(1 if j == i else 0 for j in range(n)), p0[i]) for i in range(n)
        )
        return LatticePolytope((p0,), (), eqs, n, 0)
    if ortho:
        basis = integer_kernel_basis(ortho)
    else:
        basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = len(basis)
    affine = tuple((tuple(row), _dot(row, p0)) for row in ortho)
    # chart coordinates
    cols = [[Fraction(basis[j][i]) for j in range(r)] for i in range(n)]
    chart_pts = []
    for dvec in diffs:
        u = solve_unique(cols, [Fraction(x) for x in dvec])
        assert all(c.denominator == 1 for c in u), "chart basis not saturated"
        chart_pts.append(tuple(int(c) for c in u))
    if r == 0:
        return LatticePolytope((p0,), (), affine, n, 0)
    # cone of valid inequalities on (a, c): <a, u> + c >= 0
    constraints = [list(u) + [1] for u in chart_pts]
    rays = _extreme_rays(constraints)
    sum_one = all(sum(p) == 1 for p in pts)
    facets = []
    for ray in rays:
        a_chart, c = list(ray[:-1]), ray[-1]
        if not any(a_chart):
            continue
        # lift: rows of `basis` form B^T, so solve B^T a = a_chart
        a_amb = solve_integer([list(bv) for bv in basis], a_chart)
        assert a_amb is not None, "facet normal lift failed"
        offset = _dot(a_amb, p0) - c
        if sum_one:
            # canonical representative: subtract offset * (1,...,1)
            a_amb = [x - offset for x in a_amb]
            offset = 0
        g = vec_gcd(a_amb)
        if g > 1:
            a_amb = [x // g for x in a_amb]
            offset = min(_dot(a_amb, p) for p in pts)
        facets.append((tuple(a_amb), offset))
    facets = tuple(sorted(set(facets)))
    # keep extreme points only: a point is a vertex iff its tight facet
    # normals span the chart
    vertices = []
    for p, u in zip(pts, chart_pts):
        tight = [f for f, (normal, offset) in enumerate(facets) if _dot(facets[f][0], p) == facets[f][1]]
        chart_normals = []
        for f in tight:
            normal = facets[f][0]
            chart_normals.append([_dot(normal, b) for b in basis])
        if rank(chart_normals) == r:
            vertices.append(p)
    vertices = tuple(sorted(vertices))
    return LatticePolytope(vertices, facets, affine, n, r)


def _transpose(mat):
    return [list(row) for row in zip(*mat)]


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------

def standard_simplex(d: int) -> LatticePolytope:
    return hull([tuple(1 if j == i else 0 for j in range(d)) for i in range(d)])


def permutohedron(d: int) -> LatticePolytope:
    """Hull of all coordinate permutations of (2, 0, ..., 0, -1)."""
    if d < 2:
        raise DimensionError("permutohedron needs d >= 2")
    pts = set()
    base = [0] * d
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            p = base[:]
            p[i] = 2
            p[j] = -1
            pts.add(tuple(p))
    return hull(pts)


# ---------------------------------------------------------------------------
# shape tests used by the face census
# ---------------------------------------------------------------------------

def is_pyramid(face: Face) -> Optional[LatticePoint]:
    """Lexicographically least vertex a with a not in aff(other vertices);
    None when the face is not a pyramid."""
    verts = face.vertices()
    if len(verts) < 2:
        return None
    for a in sorted(verts):
        others = [v for v in verts if v != a]
        base = others[0]
        diffs = [[v[i] - base[i] for i in range(len(base))] for v in others[1:]]
        base_rank = rank(diffs) if diffs else 0
        with_a = diffs + [[a[i] - base[i] for i in range(len(base))]]
        if rank(with_a) > base_rank:
            return a
    return None


def is_cross_polytope(face: Face) -> Optional[tuple]:
    """Center of the face when it is a k-dimensional cross polytope
    (2k vertices pairing to a common midpoint, independent differences)."""
    verts = face.vertices()
    k = face.dim
    if k < 1 or len(verts) != 2 * k:
        return None
    n = len(verts[0])
    center = tuple(Fraction(sum(v[i] for v in verts), len(verts)) for i in range(n))
    vset = set(verts)
    reps = []
    used = set()
    for v in verts:
        if v in used:
            continue
        partner = tuple(2 * center[i] - v[i] for i in range(n))
        if any(c.denominator != 1 for c in partner if isinstance(c, Fraction)):
            return None
        partner = tuple(int(c) for c in partner)
        if partner not in vset or partner == v:
            return None
        used.add(v)
        used.add(partner)
        reps.append([Fraction(v[i]) - center[i] for i in range(n)])
    if rank(reps) != k:
        return None
    return center
