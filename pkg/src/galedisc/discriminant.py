"""Defining polynomials of the parametrized hypersurfaces and the maps
between them.

The two-column case is implicitized exactly: clearing psi to a pair of
pencils den_k(u) y_k - num_k(u) and eliminating u with a Sylvester
resultant leaves the defining polynomial of the image curve, which is then
normalized (content and stray monomial factors out, square-free part,
canonical sign). A pair of sanity checks, the logarithmic Gauss map
inversion and a sampled commuting-diagram test, guard the construction.

Nested exponent lattices are handled by transfer: when C1 = C2 * M the two
defining polynomials determine each other through the monomial coordinate
change alpha_M and a product over the finite group of coordinate scalings
killed by it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .intmat import (
    IntMatrix,
    adjugate,
    gcd_maximal_minors,
    smith_normal_form,
    solve_in_lattice,
)
from .mpoly import (
    MPoly,
    content_primitive,
    partial_derivative,
    squarefree_part,
    substitute_monomial,
    sylvester_resultant,
)
from .parametrization import (
    ParamSpec,
    Verdict,
    build,
    defect_test,
    evaluate_psi,
    primitive_direction,
    sample_off_arrangement,
)


# -- implicitization (m = 2) --------------------------------------------------


def _pencils(spec: ParamSpec):
    """The cleared equations den_k(u) * y_k - num_k(u) in Z[u1,u2,y1,y2],
    plus their u-degrees."""
    n_vars = 4
    pencils = []
    degrees = []
    for k in range(2):
        num = MPoly.one(n_vars)
        den = MPoly.one(n_vars)
        for i in range(spec.n):
            c = spec.C.entries[i][k]
            if c == 0:
                continue
            form = MPoly(
                n_vars,
                {
                    (1, 0, 0, 0): spec.C.entries[i][0],
                    (0, 1, 0, 0): spec.C.entries[i][1],
                },
            )
            if c > 0:
                num = num * form ** c
            else:
                den = den * form ** (-c)
        y = MPoly.variable(n_vars, 3 + k)
        pencils.append(den * y - num)
        degrees.append(sum(max(spec.C.entries[i][k], 0) for i in range(spec.n)))
    return pencils, degrees


def implicitize(spec: ParamSpec, seed: int = 0) -> MPoly:
    """Defining polynomial of the closure of the image of psi, for m = 2.

    Requires a matrix without proportional rows (merge first); the result
    is primitive, square-free and sign-normalized, and is validated by
    degree count and by vanishing at sampled parametrized points.
    """
    if spec.m != 2:
        raise ValueError("implicitization needs m = 2")
    dirs = set()
    for row in spec.C.entries:
        w, _ = primitive_direction(row)
        if w in dirs:
            raise ValueError("proportional rows present: merge them first")
        dirs.add(w)
    if defect_test(spec, trials=5, seed=seed) is not Verdict.NON_DEFECTIVE:
        raise ValueError("defective configuration: the closure is not a hypersurface")

    pencils, degrees = _pencils(spec)
    # Dehomogenize u and eliminate the remaining variable. Setting u2 = 1
    # is degenerate when a pencil drops degree (both top coefficients kill
    # u1^d); fall back to u1 = 1 in that case.
    resultant = None
    for keep_var, drop_var in ((1, 2), (2, 1)):
        dehom = [g.set_var_one(drop_var) for g in pencils]
        if all(h.degree_in(keep_var) == d for h, d in zip(dehom, degrees)):
            resultant = sylvester_resultant(dehom[0], dehom[1], keep_var)
            break
    if resultant is None:
        raise ValueError(
            "implicitization validation failed: both dehomogenizations degenerate"
        )
    if not resultant:
        raise ValueError(
            "implicitization validation failed: resultant vanished identically"
        )
    curve = resultant.restrict((3, 4))
    _, curve = content_primitive(curve)
    mins = curve.min_exponents()
    if any(mins):
        curve = curve.shift(tuple(-x for x in mins))
    delta = squarefree_part(curve)

    if delta.total_degree() != spec.d:
        raise ValueError(
            "implicitization validation failed: degree %d, expected %d"
            % (delta.total_degree(), spec.d)
        )
    rng = random.Random(seed)
    for _ in range(10):
        u = sample_off_arrangement(spec, rng)
        if delta.evaluate(evaluate_psi(spec, u)) != 0:
            raise ValueError(
                "implicitization validation failed: nonzero at a parametrized point"
            )
    return delta


# -- sanity checks ------------------------------------------------------------


def gauss_map(delta: MPoly, y):
    """Scaled gradient (y_1 d_1 delta, ..., y_m d_m delta) at a point."""
    if len(y) != delta.n_vars:
        raise ValueError("point length mismatch")
    vals = tuple(
        Fraction(y[k - 1]) * partial_derivative(delta, k).evaluate(y)
        for k in range(1, delta.n_vars + 1)
    )
    if all(v == 0 for v in vals):
        raise ValueError("Gauss map undefined here: all scaled partials vanish")
    return vals


def gauss_inverse_check(
    spec: ParamSpec, delta: MPoly, trials: int = 20, seed: int = 0
) -> bool:
    """Check that the scaled gradient of delta inverts psi.

    At y = psi(u) the vector (y_k d_k delta) must be proportional to u;
    that pins delta down as the defining polynomial of the image (up to
    factors). Returns False on the first failed sample.
    """
    if delta.n_vars != spec.m:
        raise ValueError("variable count mismatch")
    rng = random.Random(seed)
    for _ in range(max(1, trials)):
        for _attempt in range(50):
            u = sample_off_arrangement(spec, rng)
            try:
                g = gauss_map(delta, evaluate_psi(spec, u))
            except ValueError:
                continue  # singular point, resample
            break
        else:
            raise RuntimeError("could not find a smooth parametrized point")
        for i in range(spec.m):
            for j in range(i + 1, spec.m):
                if g[i] * u[j] != g[j] * u[i]:
                    return False
    return True


def lambda_map(M: IntMatrix, u):
    """The linear substitution u -> M u."""
    return M.mul_vec(u)


def monomial_map(M: IntMatrix, y):
    """alpha_M at a rational point: coordinate j is y^(column j of M)."""
    vals = [Fraction(x) for x in y]
    out = []
    for j in range(M.cols):
        v = Fraction(1)
        for k in range(M.rows):
            e = M.entries[k][j]
            if e:
                if vals[k] == 0 and e < 0:
                    raise ValueError("pole in monomial map")
                v *= vals[k] ** e
        out.append(v)
    return tuple(out)


def diagram_check(
    C1: IntMatrix, C2: IntMatrix, M: IntMatrix, trials: int = 20, seed: int = 0
) -> bool:
    """Sampled check that psi_C1 = alpha_M o psi_C2 o lambda_M when
    C1 = C2 * M."""
    if C2 * M != C1:
        raise ValueError("matrix relation C2 * M = C1 violated")
    s1 = build(C1)
    s2 = build(C2)
    rng = random.Random(seed)
    for _ in range(max(1, trials)):
        u = sample_off_arrangement(s1, rng)
        # The C2-forms at M u coincide with the C1-forms at u, so M u is
        # off the C2-arrangement automatically.
        if monomial_map(M, evaluate_psi(s2, lambda_map(M, u))) != evaluate_psi(s1, u):
            return False
    return True


# -- products over scaling groups and lattice transfer ------------------------


def _unit_root_product(g: MPoly, var_index: int, d: int) -> MPoly:
    """Product of g over the scalings y_var -> w * y_var, w^d = 1.

    Computed as a univariate resultant against t^d - y_var^d after moving
    the scaled variable into a fresh slot t. Laurent input is handled by
    shifting all exponents up front; each scaling multiplies the shifted
    monomial by a root of unity whose product over the group is
    (-1)^(d+1)."""
    n = g.n_vars
    mins = g.min_exponents()
    g0 = g.shift(tuple(-x for x in mins))
    k0 = var_index - 1
    if g0.degree_in(var_index) == 0:
        prod = g0 ** d
    else:
        b = MPoly(
            n + 1,
            {
                e[:k0] + (0,) + e[k0 + 1 :] + (e[k0],): c
                for e, c in g0.terms.items()
            },
        )
        e_y = [0] * (n + 1)
        e_y[k0] = d
        a = MPoly(n + 1, {(0,) * n + (d,): 1, tuple(e_y): -1})
        prod = sylvester_resultant(a, b, n + 1).restrict(tuple(range(1, n + 1)))
    out = prod.shift(tuple(d * x for x in mins))
    if ((d + 1) * mins[k0]) % 2:
        out = -out
    return out


def group_product(f: MPoly, M: IntMatrix) -> MPoly:
    """Product of f over the |det M| coordinate scalings that alpha_M kills.

    Conjugating by the Smith normal form M = U D V reduces the group to an
    independent product of root-of-unity scalings, one per invariant
    factor. The result has integer coefficients again, and is f itself for
    unimodular M.
    """
    if not M.is_square or M.rows != f.n_vars:
        raise ValueError("matrix shape mismatch")
    det = M.det()
    if det == 0:
        raise ValueError("singular matrix")
    if abs(det) == 1 or not f:
        return f
    snf = smith_normal_form(M)
    u_inv = adjugate(snf.U).scale(snf.U.det())
    g = substitute_monomial(f, u_inv)
    for k, dk in enumerate(snf.invariant_factors):
        if dk > 1:
            g = _unit_root_product(g, k + 1, dk)
    out = substitute_monomial(g, snf.U)
    assert not out.is_laurent, "group product left negative exponents"
    return out


def transfer(delta2: MPoly, M: IntMatrix):
    """Defining polynomial across a finite-index change of exponent
    lattice.

    For C1 = C2 * M this turns the (primitive) defining polynomial of the
    C2-hypersurface into the pair (delta1, v) with

        delta1(alpha_M(y)) = y^v * prod over the scaling group of delta2,

    v a vector in the column lattice of M. The group product composed with
    alpha_{adj M} is alpha_{det M * I} up to the monomial y^v, so dividing
    every exponent by det M and clearing minimal exponents recovers delta1
    exactly; non-divisible exponents mean the input was not such a
    defining polynomial."""
    if not M.is_square or M.rows != delta2.n_vars:
        raise ValueError("matrix shape mismatch")
    det = M.det()
    if det == 0:
        raise ValueError("singular matrix")
    if not delta2:
        raise ValueError("zero input")
    if delta2.content() != 1:
        raise ValueError("input polynomial is not primitive")
    prod = group_product(delta2, M)
    q = substitute_monomial(prod, adjugate(M))
    terms = {}
    for e, c in q.terms.items():
        e2 = []
        for x in e:
            if x % det:
                raise ValueError(
                    "transfer consistency failure: exponent %d not divisible by %d"
                    % (x, det)
                )
            e2.append(x // det)
        terms[tuple(e2)] = c
    out = MPoly(delta2.n_vars, terms)
    mins = out.min_exponents()
    out = out.shift(tuple(-x for x in mins))
    v = tuple(M.mul_vec([-x for x in mins]))
    if solve_in_lattice(M, v) is None:
        raise ValueError("transfer consistency failure: v outside the column lattice")
    c, prim = content_primitive(out)
    if c != 1:
        raise ValueError("transfer consistency failure: content %d" % c)
    return prim, v


def homogenize(delta: MPoly, B: IntMatrix) -> MPoly:
    """Push the defining polynomial through the exponent embedding B.

    Each term exponent e maps to B e (B of full column rank, so terms stay
    distinct); minimal exponents are cleared and the result normalized.
    Term count and the coefficient multiset are untouched."""
    if B.cols != delta.n_vars:
        raise ValueError("matrix shape mismatch")
    if B.rows < B.cols or gcd_maximal_minors(B) == 0:
        raise ValueError("rank deficient")
    if not delta:
        raise ValueError("zero input")
    terms = {}
    for e, c in delta.terms.items():
        terms[tuple(B.mul_vec(e))] = c
    assert len(terms) == len(delta.terms)
    out = MPoly(B.rows, terms)
    mins = out.min_exponents()
    out = out.shift(tuple(-x for x in mins))
    _, prim = content_primitive(out)
    return prim
