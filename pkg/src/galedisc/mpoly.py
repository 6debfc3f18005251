"""Sparse multivariate integer polynomials and the exact operations the
discriminant pipeline needs.

Coefficients are arbitrary-precision ints; exponent vectors are tuples and
may go negative (Laurent polynomials show up as intermediate objects in the
monomial substitutions). Rational numbers appear only in `evaluate`.

The canonical form used everywhere for "the" defining polynomial of a
hypersurface: integer content removed, and the sign chosen so that the
graded-lex *minimal* term has positive coefficient. Graded lex here compares
total degree first, then exponents read from the last variable backwards.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import sympy

from .intmat import IntMatrix, _int_det


def _gl_key(e):
    return (sum(e), tuple(reversed(e)))


class MPoly:
    """Immutable sparse polynomial in n_vars variables over Z."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms=None):
        if n_vars < 1:
            raise ValueError("need at least one variable")
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(int(x) for x in e)
                if len(e) != n_vars:
                    raise ValueError("exponent length mismatch")
                if not isinstance(c, int):
                    raise TypeError("integer coefficients only")
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> "MPoly":
        return cls(n_vars, {})

    @classmethod
    def one(cls, n_vars: int) -> "MPoly":
        return cls(n_vars, {(0,) * n_vars: 1})

    @classmethod
    def constant(cls, n_vars: int, c: int) -> "MPoly":
        return cls(n_vars, {(0,) * n_vars: int(c)})

    @classmethod
    def variable(cls, n_vars: int, var_index: int) -> "MPoly":
        """The monomial y_i, with var_index 1-based."""
        if not 1 <= var_index <= n_vars:
            raise ValueError("variable index out of range")
        e = [0] * n_vars
        e[var_index - 1] = 1
        return cls(n_vars, {tuple(e): 1})

    # -- ring structure ----------------------------------------------------

    def _check_compat(self, other):
        if not isinstance(other, MPoly) or other.n_vars != self.n_vars:
            raise ValueError("operands live in different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = MPoly.constant(self.n_vars, other)
        self._check_compat(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            nc = t.get(e, 0) + c
            if nc:
                t[e] = nc
            else:
                t.pop(e, None)
        return MPoly(self.n_vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPoly.constant(self.n_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MPoly(self.n_vars, {e: c * other for e, c in self.terms.items()})
        self._check_compat(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nc = t.get(e, 0) + c1 * c2
                if nc:
                    t[e] = nc
                else:
                    del t[e]
        return MPoly(self.n_vars, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.one(self.n_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __repr__(self):
        return "MPoly(%d, %s)" % (self.n_vars, self.to_text())

    # -- structure queries -------------------------------------------------

    @property
    def is_laurent(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var_index: int) -> int:
        """Degree in one variable (1-based); -1 for the zero polynomial."""
        if not 1 <= var_index <= self.n_vars:
            raise ValueError("variable index out of range")
        if not self.terms:
            return -1
        return max(e[var_index - 1] for e in self.terms)

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _gl_key(t[0]), reverse=True)

    def trailing_coefficient(self) -> int:
        if not self.terms:
            raise ValueError("zero input")
        return self.terms[min(self.terms, key=_gl_key)]

    def sign_normalized(self) -> "MPoly":
        """Flip the global sign if needed so the graded-lex minimal term is
        positive."""
        if not self.terms:
            return self
        return self if self.trailing_coefficient() > 0 else -self

    def content(self) -> int:
        if not self.terms:
            raise ValueError("zero input")
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def min_exponents(self):
        """Componentwise minimum of the exponent vectors."""
        if not self.terms:
            raise ValueError("zero input")
        return tuple(min(e[i] for e in self.terms) for i in range(self.n_vars))

    def shift(self, delta) -> "MPoly":
        """Multiply by the (Laurent) monomial with exponent vector delta."""
        if len(delta) != self.n_vars:
            raise ValueError("exponent length mismatch")
        return MPoly(
            self.n_vars,
            {tuple(a + b for a, b in zip(e, delta)): c for e, c in self.terms.items()},
        )

    def set_var_one(self, var_index: int) -> "MPoly":
        """Substitute 1 for one variable (1-based), merging terms."""
        if not 1 <= var_index <= self.n_vars:
            raise ValueError("variable index out of range")
        i = var_index - 1
        t = {}
        for e, c in self.terms.items():
            e2 = e[:i] + (0,) + e[i + 1 :]
            nc = t.get(e2, 0) + c
            if nc:
                t[e2] = nc
            else:
                del t[e2]
        return MPoly(self.n_vars, t)

    def coeffs_in(self, var_index: int):
        """Coefficients with respect to one variable: a dict mapping the
        var exponent k to an MPoly (same ring, that variable cleared)."""
        if not 1 <= var_index <= self.n_vars:
            raise ValueError("variable index out of range")
        i = var_index - 1
        buckets = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1 :]
            buckets.setdefault(k, {})[e2] = c
        return {k: MPoly(self.n_vars, t) for k, t in buckets.items()}

    def restrict(self, keep):
        """Project onto a subset of variables (1-based index tuple). Raises
        when a dropped variable actually occurs."""
        keep0 = [v - 1 for v in keep]
        drop = [i for i in range(self.n_vars) if i not in keep0]
        t = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise ValueError("restriction drops a live variable")
            t[tuple(e[i] for i in keep0)] = c
        return MPoly(len(keep0), t)

    def evaluate(self, point) -> Fraction:
        """Exact evaluation at a rational point. Raises 'pole' when a zero
        coordinate meets a negative exponent."""
        if len(point) != self.n_vars:
            raise ValueError("point length mismatch")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            val = Fraction(c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if pt[i] == 0:
                    if k < 0:
                        raise ValueError("pole at variable %d" % (i + 1))
                    val = Fraction(0)
                    break
                val *= pt[i] ** k
            total += val
        return total

    # -- printing and serialization ----------------------------------------

    def to_text(self, var_names=None) -> str:
        if var_names is None:
            var_names = ["y%d" % (i + 1) for i in range(self.n_vars)]
        if len(var_names) != self.n_vars:
            raise ValueError("variable name count mismatch")
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = []
            for name, k in zip(var_names, e):
                if k == 0:
                    continue
                mono.append(name if k == 1 else "%s^%d" % (name, k))
            body = "*".join(mono)
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = "%d*%s" % (abs(c), body)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json_dict(self, var_names=None) -> dict:
        if var_names is None:
            var_names = ["y%d" % (i + 1) for i in range(self.n_vars)]
        if len(var_names) != self.n_vars:
            raise ValueError("variable name count mismatch")
        return {
            "vars": list(var_names),
            "terms": [
                {"c": str(c), "e": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, d):
        """Parse the poly JSON schema; returns (poly, var_names)."""
        names = d["vars"]
        if not isinstance(names, list) or not names or not all(isinstance(s, str) for s in names):
            raise ValueError("bad 'vars' field")
        n = len(names)
        terms = {}
        for t in d["terms"]:
            c = int(t["c"])
            e = tuple(int(x) for x in t["e"])
            if len(e) != n:
                raise ValueError("bad exponent length in term")
            if c:
                terms[e] = terms.get(e, 0) + c
        return cls(n, terms), list(names)


# -- normal forms ------------------------------------------------------------


def content_primitive(p: MPoly):
    """Split p into (content, primitive part), content > 0 and the primitive
    part sign-normalized."""
    if not p:
        raise ValueError("zero input")
    c = p.content()
    prim = MPoly(p.n_vars, {e: v // c for e, v in p.terms.items()})
    return c, prim.sign_normalized()


def partial_derivative(p: MPoly, var_index: int) -> MPoly:
    """d/dy_i with var_index 1-based; valid for Laurent terms too."""
    if not 1 <= var_index <= p.n_vars:
        raise ValueError("variable index out of range")
    i = var_index - 1
    t = {}
    for e, c in p.terms.items():
        if e[i] == 0:
            continue
        e2 = e[:i] + (e[i] - 1,) + e[i + 1 :]
        nc = t.get(e2, 0) + c * e[i]
        if nc:
            t[e2] = nc
        else:
            del t[e2]
    return MPoly(p.n_vars, t)


def _to_sympy(p: MPoly, syms):
    return sympy.Poly.from_dict(dict(p.terms), *syms, domain=sympy.ZZ)


def _from_sympy(poly, n_vars: int) -> MPoly:
    return MPoly(
        n_vars,
        {tuple(int(x) for x in mono): int(c) for mono, c in poly.terms()},
    )


def squarefree_part(p: MPoly) -> MPoly:
    """Product of the distinct irreducible factors of p, primitive and
    sign-normalized. Rejects Laurent input."""
    if not p:
        raise ValueError("zero input")
    if p.is_laurent:
        raise ValueError("negative exponents unsupported")
    _, prim = content_primitive(p)
    if prim.is_constant():
        return MPoly.one(p.n_vars)
    syms = sympy.symbols("t0:%d" % p.n_vars)
    f = _to_sympy(prim, syms)
    g = f
    for s in syms:
        g = g.gcd(f.diff(s))
    sf = f.exquo(g)
    _, out = content_primitive(_from_sympy(sf, p.n_vars))
    return out


# -- determinants of polynomial matrices -------------------------------------


def _exact_div(num: MPoly, den: MPoly) -> MPoly:
    """Exact division num/den, for use inside fraction-free elimination.

    Raises ArithmeticError if the division does not come out exact; the
    Bareiss invariant guarantees it always does there.
    """
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return num
    if den.is_constant():
        d = den.terms[(0,) * den.n_vars]
        t = {}
        for e, c in num.terms.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError("non-exact constant division")
            t[e] = q
        return MPoly(num.n_vars, t)
    den_lead = max(den.terms, key=_gl_key)
    dc = den.terms[den_lead]
    rem = dict(num.terms)
    quo = {}
    while rem:
        e_r = max(rem, key=_gl_key)
        c_r = rem[e_r]
        e_q = tuple(a - b for a, b in zip(e_r, den_lead))
        if any(x < 0 for x in e_q):
            raise ArithmeticError("non-exact division (exponents)")
        c_q, r = divmod(c_r, dc)
        if r:
            raise ArithmeticError("non-exact division (coefficients)")
        quo[e_q] = quo.get(e_q, 0) + c_q
        for e_d, c_d in den.terms.items():
            e = tuple(a + b for a, b in zip(e_q, e_d))
            nc = rem.get(e, 0) - c_q * c_d
            if nc:
                rem[e] = nc
            else:
                rem.pop(e, None)
    return MPoly(num.n_vars, quo)


def _det_bareiss_poly(mat, n_vars: int) -> MPoly:
    """Fraction-free Bareiss determinant of a square matrix of MPoly."""
    n = len(mat)
    m = [list(row) for row in mat]
    sign = 1
    prev = MPoly.one(n_vars)
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(n_vars)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(pivot * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = MPoly.zero(n_vars)
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result


def _newton_interpolate(xs, ys):
    """Coefficients (ascending) of the unique degree < len(xs) polynomial
    through the given points. Exact over Fraction."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    for i in range(n - 2, -1, -1):
        # multiply by (x - xs[i]) then add dd[i]
        for k in range(n - 1, 0, -1):
            coeffs[k] = coeffs[k - 1] - xs[i] * coeffs[k]
        coeffs[0] = dd[i] - xs[i] * coeffs[0]
    return coeffs


def _eval_int_matrix(mat, point):
    """Evaluate a matrix of MPoly at an integer point, as list-of-lists."""
    out = []
    for row in mat:
        r = []
        for p in row:
            v = p.evaluate(point)
            assert v.denominator == 1
            r.append(int(v))
        out.append(r)
    return out


def _det_by_interpolation(mat, n_vars: int, active, bounds) -> MPoly:
    """Determinant via evaluation at integer nodes plus Newton interpolation.

    `active` lists the (0-based) variables actually occurring in the matrix
    entries; supports one or two of them. Degree bounds must dominate the
    true degrees of the determinant.
    """
    n = len(mat)
    base = [0] * n_vars

    if len(active) == 1:
        v = active[0]
        d = bounds[v]
        nodes = list(range(d + 1))
        vals = []
        for a in nodes:
            pt = list(base)
            pt[v] = a
            vals.append(_int_det(_eval_int_matrix(mat, pt)))
        coeffs = _newton_interpolate(nodes, vals)
        t = {}
        for k, c in enumerate(coeffs):
            assert c.denominator == 1
            if c:
                e = [0] * n_vars
                e[v] = k
                t[tuple(e)] = int(c)
        return MPoly(n_vars, t)

    v1, v2 = active
    d1, d2 = bounds[v1], bounds[v2]
    nodes1 = list(range(d1 + 1))
    nodes2 = list(range(d2 + 1))
    # First interpolate in v1 at each fixed v2 node, then in v2.
    slices = []
    for b in nodes2:
        vals = []
        for a in nodes1:
            pt = list(base)
            pt[v1] = a
            pt[v2] = b
            vals.append(_int_det(_eval_int_matrix(mat, pt)))
        coeffs = _newton_interpolate(nodes1, vals)
        for c in coeffs:
            assert c.denominator == 1
        slices.append([int(c) for c in coeffs])
    t = {}
    for k in range(d1 + 1):
        coeffs = _newton_interpolate(nodes2, [s[k] for s in slices])
        for l, c in enumerate(coeffs):
            assert c.denominator == 1
            if c:
                e = [0] * n_vars
                e[v1] = k
                e[v2] = l
                t[tuple(e)] = int(c)
    return MPoly(n_vars, t)


def sylvester_resultant(p: MPoly, q: MPoly, var_index: int) -> MPoly:
    """Resultant of p and q with respect to one variable (1-based), as the
    determinant of their Sylvester matrix.

    Small matrices go through fraction-free elimination directly on the
    polynomial entries; large ones with at most two other variables in play
    are evaluated at integer nodes and interpolated, which is dramatically
    faster for the big elimination steps.
    """
    if p.n_vars != q.n_vars:
        raise ValueError("operands live in different rings")
    if p.is_laurent or q.is_laurent:
        raise ValueError("negative exponents unsupported")
    dp = p.degree_in(var_index)
    dq = q.degree_in(var_index)
    if dp < 1 or dq < 1:
        raise ValueError("nothing to eliminate")
    n_vars = p.n_vars
    zero = MPoly.zero(n_vars)
    pc = p.coeffs_in(var_index)
    qc = q.coeffs_in(var_index)
    size = dp + dq
    mat = [[zero] * size for _ in range(size)]
    for i in range(dq):
        for j in range(dp + 1):
            mat[i][i + j] = pc.get(dp - j, zero)
    for i in range(dp):
        for j in range(dq + 1):
            mat[dq + i][i + j] = qc.get(dq - j, zero)

    if size >= 10:
        bounds = [0] * n_vars
        for row in mat:
            for v in range(n_vars):
                if v == var_index - 1:
                    continue
                bounds[v] += max((e.degree_in(v + 1) for e in row if e), default=0)
        active = [v for v in range(n_vars) if bounds[v] > 0]
        grid = 1
        for v in active:
            grid *= bounds[v] + 1
        if len(active) <= 2 and grid <= 5000:
            if not active:
                ints = [[int(e.evaluate([0] * n_vars)) for e in row] for row in mat]
                return MPoly.constant(n_vars, _int_det(ints))
            return _det_by_interpolation(mat, n_vars, active, bounds)
    return _det_bareiss_poly(mat, n_vars)


def substitute_monomial(p: MPoly, m: IntMatrix) -> MPoly:
    """Monomial change of coordinates: each variable y_j is replaced by the
    monomial with exponent vector given by column j of m, so a term exponent
    e maps to m*e. Requires det(m) != 0, which makes the map injective on
    monomials; the result is Laurent whenever m*e goes negative."""
    if not m.is_square or m.rows != p.n_vars:
        raise ValueError("matrix shape mismatch")
    if _int_det([list(r) for r in m.entries]) == 0:
        raise ValueError("singular matrix")
    t = {}
    for e, c in p.terms.items():
        e2 = m.mul_vec(e)
        t[tuple(e2)] = c
    assert len(t) == len(p.terms)
    return MPoly(p.n_vars, t)
