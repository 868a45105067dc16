"""Exact rational arithmetic, integer lattice routines, and univariate
polynomial algebra.

Everything here is exact: rationals are `fractions.Fraction`, matrices are
nested sequences, no floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Rat = Fraction

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")


class DimensionError(ValueError):
    """Matrix or vector dimensions do not fit the operation."""


def rat(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rat(text: str) -> Fraction:
    """Parse a decimal-free rational string 'p/q' or 'n'."""
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ValueError(f"not a rational string: {text!r}")
    return Fraction(text)


def format_rat(q: Fraction) -> str:
    """Render a Fraction as 'p/q' (or 'n' when integral)."""
    q = Fraction(q)
    return str(q)


# ---------------------------------------------------------------------------
# rational linear algebra
# ---------------------------------------------------------------------------

def det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination with rational pivots."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant requires a square matrix")
    a = [[Fraction(x) for x in r] for r in rows]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        pivot = a[col][col]
        result *= pivot
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] / pivot
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return sign * result


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    if not rows:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    m, n = len(a), len(a[0])
    rnk = 0
    col = 0
    while rnk < m and col < n:
        piv = next((r for r in range(rnk, m) if a[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        a[rnk], a[piv] = a[piv], a[rnk]
        pivot = a[rnk][col]
        for r in range(rnk + 1, m):
            if a[r][col] != 0:
                factor = a[r][col] / pivot
                a[r] = [x - factor * y for x, y in zip(a[r], a[rnk])]
        rnk += 1
        col += 1
    return rnk


def solve_unique(rows: Sequence[Sequence], rhs: Sequence) -> Optional[list]:
    """Solve A x = b when A has full column rank; None if inconsistent.

    A may be rectangular (more rows than columns).
    """
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    m = len(a)
    n = len(a[0]) - 1
    pivots = []
    rnk = 0
    for col in range(n):
        piv = next((r for r in range(rnk, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rnk], a[piv] = a[piv], a[rnk]
        pivot = a[rnk][col]
        a[rnk] = [x / pivot for x in a[rnk]]
        for r in range(m):
            if r != rnk and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[rnk])]
        pivots.append(col)
        rnk += 1
    if rnk < n:
        raise DimensionError("matrix does not have full column rank")
    for r in range(rnk, m):
        if a[r][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = a[i][n]
    return x


# ---------------------------------------------------------------------------
# integer lattice routines (Hermite / Smith normal forms, naive pivoting)
# ---------------------------------------------------------------------------

def _column_hnf(a: list) -> tuple:
    """Column-style Hermite reduction.

    Returns (H, U) with A @ U = H, U unimodular, and H in column echelon
    form (zero columns pushed right).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    h = [list(map(int, row)) for row in a]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_op_swap(i, j):
        for row in h:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    def col_op_add(i, j, k):
        # column i += k * column j
        for row in h:
            row[i] += k * row[j]
        for row in u:
            row[i] += k * row[j]

    def col_op_neg(i):
        for row in h:
            row[i] = -row[i]
        for row in u:
            row[i] = -row[i]

    r = 0
    for row_i in range(m):
        if r == n:
            break
        # gcd-reduce entries of row row_i across columns r..n-1
        while True:
            cols = [c for c in range(r, n) if h[row_i][c] != 0]
            if not cols:
                break
            piv = min(cols, key=lambda c: abs(h[row_i][c]))
            if piv != r:
                col_op_swap(r, piv)
            if h[row_i][r] < 0:
                col_op_neg(r)
            done = True
            for c in range(r, n):
                if c != r and h[row_i][c] != 0:
                    col_op_add(c, r, -(h[row_i][c] // h[row_i][r]))
                    if h[row_i][c] != 0:
                        done = False
            if done:
                break
        if h[row_i][r] != 0:
            r += 1
    return h, u


def integer_kernel_basis(rows: Sequence[Sequence[int]]) -> list:
    """Basis of the saturated integer kernel {z : A z = 0} of an integer
    matrix, as a list of integer vectors."""
    if not rows:
        raise DimensionError("empty matrix")
    n = len(rows[0])
    h, u = _column_hnf([list(r) for r in rows])
    m = len(rows)
    basis = []
    for c in range(n):
        if all(h[r][c] == 0 for r in range(m)):
            basis.append([u[r][c] for r in range(n)])
    return basis


def solve_integer(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> Optional[list]:
    """One integer solution x of A x = b, or None when none exists."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0])
    if len(rhs) != m:
        raise DimensionError("right-hand side length mismatch")
    h, u = _column_hnf(a)
    # H is in column echelon form: solve H y = b column by column along the
    # staircase of leading rows, then verify.
    b = [Fraction(v) for v in rhs]
    sol = [Fraction(0)] * n
    prev_lead = -1
    for j in range(n):
        lead = next((r for r in range(m) if h[r][j] != 0), None)
        if lead is None:
            break
        assert lead > prev_lead
        prev_lead = lead
        acc = b[lead]
        for jj in range(j):
            acc -= h[lead][jj] * sol[jj]
        sol[j] = Fraction(acc, h[lead][j])
    for r_i in range(m):
        acc = Fraction(0)
        for j in range(n):
            acc += h[r_i][j] * sol[j]
        if acc != b[r_i]:
            return None
    if any(s.denominator != 1 for s in sol):
        return None
    return [sum(u[i][j] * int(sol[j]) for j in range(n)) for i in range(n)]


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list:
    """Diagonal entries of the Smith normal form (nonnegative, possibly 0).

    Naive pivoting; fine for the small matrices used here.
    """
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    m, n = len(a), len(a[0])
    diag = []
    top = 0
    while top < m and top < n:
        # locate smallest nonzero entry in the remaining block
        best = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        # clear row and column by euclidean steps
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, m):
                if a[i][top] != 0:
                    q = a[i][top] // a[top][top]
                    a[i] = [x - q * y for x, y in zip(a[i], a[top])]
                    if a[i][top] != 0:
                        a[top], a[i] = a[i], a[top]
                        dirty = True
            for j in range(top + 1, n):
                if a[top][j] != 0:
                    q = a[top][j] // a[top][top]
                    for row in a:
                        row[j] -= q * row[top]
                    if a[top][j] != 0:
                        for row in a:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
        diag.append(abs(a[top][top]))
        top += 1
    while len(diag) < min(m, n):
        diag.append(0)
    # enforce the divisibility chain d1 | d2 | ... (diag(a,b) ~ diag(gcd,lcm))
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            if x and y and y % x != 0:
                g = gcd(x, y)
                diag[i], diag[i + 1] = g, x * y // g
                changed = True
            elif x == 0 and y != 0:
                diag[i], diag[i + 1] = y, 0
                changed = True
    return diag


def lattice_index(generators: Sequence[Sequence[int]]) -> Optional[int]:
    """Index in Z^d of the subgroup generated by the given integer vectors.

    Returns None when the generators do not span a finite-index subgroup
    (rank deficient), i.e. the index is infinite.
    """
    gens = [list(map(int, g)) for g in generators]
    if not gens:
        raise DimensionError("need at least one generator")
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise DimensionError("generators of mixed length")
    diag = smith_diagonal(gens)
    nonzero = [x for x in diag if x != 0]
    if len(nonzero) < d:
        return None
    idx = 1
    for x in nonzero:
        idx *= x
    return idx


def vec_gcd(vec: Sequence[int]) -> int:
    g = 0
    for x in vec:
        g = gcd(g, int(x))
    return g


def primitive(vec: Sequence[int]) -> tuple:
    """Divide an integer vector by the gcd of its entries."""
    g = vec_gcd(vec)
    if g == 0:
        return tuple(int(x) for x in vec)
    return tuple(int(x) // g for x in vec)


# ---------------------------------------------------------------------------
# univariate polynomials over Q
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([Fraction(c)])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dlead = other.coeffs[-1]
        dn = other.degree
        while len(rem) - 1 >= dn and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dn:
                break
            shift = len(rem) - 1 - dn
            factor = rem[-1] / dlead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return UniPoly([c / self.coeffs[-1] for c in self.coeffs])

    def shift_coeff(self, k: int) -> "UniPoly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    def strip_x_power(self) -> tuple:
        """Return (k, p) with self = x**k * p and p(0) != 0."""
        if self.is_zero():
            return 0, self
        k = 0
        cs = list(self.coeffs)
        while cs and cs[0] == 0:
            cs.pop(0)
            k += 1
        return k, UniPoly(cs)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic() if not a.is_zero() else a

    def squarefree(self) -> "UniPoly":
        """Squarefree part p / gcd(p, p')."""
        if self.is_zero():
            raise ValueError("zero polynomial has no squarefree part")
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.exact_div(g).monic()

    def cauchy_root_bound(self) -> Fraction:
        """All real roots lie in (-B, B]."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.coeffs[-1])
        m = max(abs(c) for c in self.coeffs[:-1])
        return Fraction(1) + m / lead


def _sign_at(p: UniPoly, x, plus_inf: bool = False, minus_inf: bool = False) -> int:
    if p.is_zero():
        return 0
    if plus_inf:
        return 1 if p.coeffs[-1] > 0 else -1
    if minus_inf:
        s = 1 if p.coeffs[-1] > 0 else -1
        return s if p.degree % 2 == 0 else -s
    v = p(x)
    return (v > 0) - (v < 0)


def sturm_chain(p: UniPoly) -> list:
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        _, r = chain[-2].divmod(chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return [q for q in chain if not q.is_zero()]


def _variations(chain, x, plus_inf=False, minus_inf=False) -> int:
    signs = [s for s in (_sign_at(q, x, plus_inf, minus_inf) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(p: UniPoly, a=None, b=None) -> int:
    """Number of distinct real roots of p in (a, b].

    None stands for -oo (as a) or +oo (as b).
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree()
    if sf.degree < 1:
        return 0
    chain = sturm_chain(sf)
    va = _variations(chain, a, minus_inf=a is None)
    vb = _variations(chain, b, plus_inf=b is None)
    return va - vb


def isolate_real_roots(p: UniPoly) -> list:
    """Disjoint isolating intervals (a, b] with exactly one real root each."""
    sf = p.squarefree()
    total = sturm_count(sf)
    if total == 0:
        return []
    bound = sf.cauchy_root_bound()
    chain = sturm_chain(sf)

    def var(x):
        return _variations(chain, x)

    out = []

    def split(lo, hi, count):
        if count == 0:
            return
        if count == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        left = var(lo) - var(mid)
        split(lo, mid, left)
        split(mid, hi, count - left)

    split(-bound, bound, total)
    out.sort()
    return out


def refine_root_interval(p: UniPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple:
    """Bisect an isolating interval (lo, hi] of squarefree p down to width."""
    chain = sturm_chain(p)

    def var(x):
        return _variations(chain, x)

    vlo = var(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if vlo - var(mid) == 1:
            hi = mid
        else:
            lo = mid
            vlo = var(lo)
    return lo, hi


# ---------------------------------------------------------------------------
# resultants (Sylvester determinant, fraction-free elimination)
# ---------------------------------------------------------------------------

class DegenerateEliminationError(ValueError):
    """Both inputs are constant in the eliminated variable."""


def _bareiss_det_poly(mat: list) -> UniPoly:
    """Bareiss fraction-free determinant over Q[x] (entries UniPoly)."""
    n = len(mat)
    a = [row[:] for row in mat]
    sign = 1
    prev = UniPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if piv is None:
                return UniPoly()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = UniPoly()
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def resultant(p: Sequence[UniPoly], q: Sequence[UniPoly]) -> UniPoly:
    """Resultant in y of two polynomials given as y-coefficient lists over
    Q[x]; returns a polynomial in x.

    Computed as the Sylvester determinant with fraction-free elimination.
    """
    pc = list(p)
    qc = list(q)
    while pc and pc[-1].is_zero():
        pc.pop()
    while qc and qc[-1].is_zero():
        qc.pop()
    m = len(pc) - 1
    n = len(qc) - 1
    if m < 0 or n < 0:
        return UniPoly()
    if m == 0 and n == 0:
        raise DegenerateEliminationError("both inputs constant in the eliminated variable")
    if m == 0:
        out = UniPoly.const(1)
        for _ in range(n):
            out = out * pc[0]
        return out
    if n == 0:
        out = UniPoly.const(1)
        for _ in range(m):
            out = out * qc[0]
        return out
    size = m + n
    zero = UniPoly()
    mat = [[zero] * size for _ in range(size)]
    for row in range(n):
        for i, c in enumerate(reversed(pc)):
            mat[row][row + i] = c
    for row in range(m):
        for i, c in enumerate(reversed(qc)):
            mat[n + row][row + i] = c
    return _bareiss_det_poly(mat)
