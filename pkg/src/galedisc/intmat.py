"""Exact integer matrix algorithms.

Kernels (saturated, Hermite-canonical), gcd of maximal minors, Smith normal
form with unimodular transforms, adjugates, LLL reduction over exact
rationals, and lattice membership solving. Everything is arbitrary-precision
integer or Fraction arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


class IntMatrix:
    """Immutable integer matrix stored row-major.

    Supports zero-column matrices (a trivial kernel basis is one of those)
    but not zero-row ones.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int):
        return self.entries[i]

    def col(self, j: int):
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "IntMatrix":
        if self.cols == 0:
            raise ValueError("cannot transpose a zero-column matrix")
        return IntMatrix(list(zip(*self.entries)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ot = list(zip(*other.entries)) if other.cols else []
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in ot] for r in self.entries]
        )

    def mul_vec(self, v):
        """Matrix times column vector, exact (accepts ints or Fractions)."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * x for a, x in zip(r, v)) for r in self.entries)

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix([[c * x for x in r] for r in self.entries])

    def det(self) -> int:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        return _int_det([list(r) for r in self.entries])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(list(r) for r in self.entries),)

    def to_lists(self):
        return [list(r) for r in self.entries]


def _int_det(m) -> int:
    """Fraction-free Bareiss determinant of a list-of-lists integer matrix.

    Mutates its argument.
    """
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _row_hnf(entries, want_transform=False):
    """Row Hermite normal form of a list-of-rows integer matrix.

    Returns (H, U) with U unimodular, U*M = H, H in row echelon form with
    positive pivots and entries above each pivot reduced to [0, pivot).
    The form is the canonical one, so equal row lattices give equal H.
    """
    h = [list(r) for r in entries]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)] if want_transform else None

    def addrow(dst, src, q):
        h[dst] = [a - q * b for a, b in zip(h[dst], h[src])]
        if u is not None:
            u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def negate(i):
        h[i] = [-a for a in h[i]]
        if u is not None:
            u[i] = [-a for a in u[i]]

    r = 0
    for c in range(ncols):
        live = [i for i in range(r, nrows) if h[i][c] != 0]
        if not live:
            continue
        # Euclid on the column until a single nonzero entry remains.
        while len(live) > 1:
            live.sort(key=lambda i: (abs(h[i][c]), i))
            base = live[0]
            for i in live[1:]:
                addrow(i, base, h[i][c] // h[base][c])
            live = [i for i in live if h[i][c] != 0]
        if live[0] != r:
            swap(live[0], r)
        if h[r][c] < 0:
            negate(r)
        for i in range(r):
            if h[i][c] != 0:
                addrow(i, r, h[i][c] // h[r][c])
        r += 1
        if r == nrows:
            break
    return h, u


def hermite_column_basis(m: IntMatrix) -> IntMatrix:
    """Canonical basis of the lattice spanned by the columns of m.

    Computed as the transposed row Hermite form with zero columns dropped;
    two matrices span the same column lattice iff this agrees.
    """
    h, _ = _row_hnf(m.transpose().entries)
    keep = [row for row in h if any(row)]
    if not keep:
        return IntMatrix([[] for _ in range(m.rows)])
    return IntMatrix(list(zip(*keep)))


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel lattice {x : a*x = 0}, as columns.

    The kernel of an integer matrix is automatically saturated, so the gcd
    of the maximal minors of the result is 1 whenever the kernel is
    nontrivial. The basis is canonicalized through the Hermite form to make
    outputs reproducible.
    """
    h, u = _row_hnf(a.transpose().entries, want_transform=True)
    kern = [u[i] for i in range(len(h)) if not any(h[i])]
    if not kern:
        return IntMatrix([[] for _ in range(a.cols)])
    return hermite_column_basis(IntMatrix(list(zip(*kern))))


def gcd_maximal_minors(c: IntMatrix) -> int:
    """gcd of all maximal (cols x cols) minors of a tall matrix, >= 0."""
    if c.rows < c.cols:
        raise ValueError("expected at least as many rows as columns")
    if c.cols == 0:
        return 1
    g = 0
    for rows in combinations(range(c.rows), c.cols):
        sub = [list(c.entries[i]) for i in rows]
        g = math.gcd(g, _int_det(sub))
        if g == 1:
            break
    return g


@dataclass(frozen=True)
class SNFDecomposition:
    """M = U * D * V with U, V unimodular and D = diag(invariant_factors)."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    invariant_factors: tuple


def smith_normal_form(m: IntMatrix) -> SNFDecomposition:
    """Smith normal form of a square integer matrix.

    Returns M = U*D*V with |det U| = |det V| = 1 and nonnegative diagonal
    d_1 | d_2 | ... | d_n. Pivot selection is by minimal absolute value,
    first in row-major order, so the decomposition is deterministic.
    """
    if not m.is_square:
        raise ValueError("square matrix required")
    n = m.rows
    a = [list(r) for r in m.entries]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    # Row op a <- L a is compensated by U <- U L^{-1}; column op a <- a R
    # by V <- R^{-1} V, which keeps U*a*V equal to m throughout.
    def row_add(i, j, q):  # a[i] -= q*a[j]
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        for r in range(n):
            u[r][j] += q * u[r][i]

    def col_add(i, j, q):  # col i of a -= q * col j
        for r in range(n):
            a[r][i] -= q * a[r][j]
        v[j] = [x + q * y for x, y in zip(v[j], v[i])]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    def col_swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        v[i], v[j] = v[j], v[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        for r in range(n):
            u[r][i] = -u[r][i]

    for t in range(n):
        while True:
            pivot = None
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                row_swap(pi, t)
            if pj != t:
                col_swap(pj, t)
            dirty = False
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    row_add(i, t, a[i][t] // a[t][t])
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    col_add(j, t, a[t][j] // a[t][t])
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            # Pivot now isolated; enforce divisibility of the rest.
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, -1)  # fold the offending row into row t
        if a[t][t] < 0:
            row_negate(t)

    d = IntMatrix(a)
    um = IntMatrix(u)
    vm = IntMatrix(v)
    assert um * d * vm == m
    assert abs(um.det()) == 1 and abs(vm.det()) == 1
    factors = tuple(a[i][i] for i in range(n))
    for i in range(n - 1):
        assert factors[i + 1] % factors[i] == 0 if factors[i] != 0 else factors[i + 1] == 0
    return SNFDecomposition(U=um, D=d, V=vm, invariant_factors=factors)


def adjugate(m: IntMatrix) -> IntMatrix:
    """Adjugate (transposed cofactor matrix): m * adjugate(m) = det(m) * I."""
    if not m.is_square:
        raise ValueError("square matrix required")
    n = m.rows
    if n == 1:
        return IntMatrix([[1]])
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m.entries[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            adj[j][i] = (-1) ** (i + j) * _int_det(minor)
    return IntMatrix(adj)


def solve_in_lattice(m: IntMatrix, v):
    """Integer solution x of m*x = v, or None when v is outside the column
    lattice of m. Raises on singular m."""
    if not m.is_square:
        raise ValueError("square matrix required")
    det = m.det()
    if det == 0:
        raise ValueError("singular matrix")
    if len(v) != m.rows:
        raise ValueError("vector length mismatch")
    adj = adjugate(m)
    x = [Fraction(sum(adj.entries[i][j] * v[j] for j in range(m.rows)), det) for i in range(m.rows)]
    if all(xi.denominator == 1 for xi in x):
        return tuple(int(xi) for xi in x)
    return None


def lll_reduce(b: IntMatrix) -> IntMatrix:
    """LLL-reduced basis (delta = 3/4) of the column lattice of b.

    Exact rational Gram-Schmidt throughout. The output spans the same
    lattice as the input (checked by callers via hermite_column_basis).
    Raises 'rank deficient' when the columns are dependent.
    """
    n, m = b.rows, b.cols
    basis = [list(b.col(j)) for j in range(m)]
    delta = Fraction(3, 4)

    def gram_schmidt():
        # Returns (mu, norms) of the orthogonalized basis; norms squared.
        star = []
        mu = [[Fraction(0)] * m for _ in range(m)]
        norms = []
        for i in range(m):
            vec = [Fraction(x) for x in basis[i]]
            for j in range(i):
                dot = sum(Fraction(basis[i][k]) * star[j][k] for k in range(n))
                if norms[j] == 0:
                    raise ValueError("rank deficient")
                mu[i][j] = dot / norms[j]
                vec = [a - mu[i][j] * c for a, c in zip(vec, star[j])]
            star.append(vec)
            norms.append(sum(x * x for x in vec))
        if any(nm == 0 for nm in norms):
            raise ValueError("rank deficient")
        return mu, norms

    k = 1
    mu, norms = gram_schmidt()
    while k < m:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                basis[k] = [a - r * c for a, c in zip(basis[k], basis[j])]
                mu, norms = gram_schmidt()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            mu, norms = gram_schmidt()
            k = max(k - 1, 1)
    return IntMatrix(list(zip(*basis)))
