"""Rational parametrizations attached to an integer exponent matrix.

An n x m integer matrix C with zero column sums and no zero row determines
linear forms l_i = <C_i, u> and the map

    psi_C(u) = ( prod_i l_i(u)^{c_i1}, ..., prod_i l_i(u)^{c_im} ),

together with its clearing to a pencil of degree-d forms f_0, ..., f_m.
This module builds that data, evaluates psi and its logarithmic Jacobian
exactly, merges proportional rows (tracking the induced coordinate
scaling), and runs the randomized rank test that distinguishes the
hypersurface case from the defective one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .intmat import IntMatrix


class Verdict(Enum):
    NON_DEFECTIVE = "NonDefective"
    PROBABLY_DEFECTIVE = "ProbablyDefective"


@dataclass(frozen=True)
class ParamSpec:
    """C plus the cleared numerator exponents.

    numer_exps[k][i] is the exponent of l_i in f_k, with k = 0 the common
    denominator row; every f_k has the same total degree d. removed_common
    records the per-form exponents stripped because every f_k shared them
    (always the zero vector for the construction used here, kept so reports
    can show it).
    """

    C: IntMatrix
    numer_exps: tuple
    d: int
    removed_common: tuple

    @property
    def n(self) -> int:
        return self.C.rows

    @property
    def m(self) -> int:
        return self.C.cols


def build(C: IntMatrix) -> ParamSpec:
    n, m = C.rows, C.cols
    if m < 2 or n < m:
        raise ValueError("need n >= m >= 2")
    for i, row in enumerate(C.entries):
        if not any(row):
            raise ValueError("zero row (row %d)" % (i + 1,))
    for k in range(m):
        s = sum(C.entries[i][k] for i in range(n))
        if s != 0:
            raise ValueError("not regular: column %d sums to %d" % (k + 1, s))
    e0 = [-min(0, min(C.entries[i])) for i in range(n)]
    exps = [tuple(e0)]
    for k in range(m):
        exps.append(tuple(C.entries[i][k] + e0[i] for i in range(n)))
    # A factor common to every f_k would drop out of the pencil; remove it.
    common = tuple(min(exps[k][i] for k in range(m + 1)) for i in range(n))
    if any(common):
        exps = [tuple(e[i] - common[i] for i in range(n)) for e in exps]
    degrees = {sum(e) for e in exps}
    assert len(degrees) == 1, "pencil degrees disagree"
    return ParamSpec(C=C, numer_exps=tuple(exps), d=degrees.pop(), removed_common=common)


def primitive_direction(row):
    """Primitive vector with positive first nonzero entry spanning the same
    line as row, plus the (signed) multiplier t with row = t * direction."""
    g = 0
    for x in row:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero row")
    first = next(x for x in row if x)
    t = g if first > 0 else -g
    return tuple(x // t for x in row), t


def merge_proportional_rows(C: IntMatrix):
    """Collapse each class of proportional rows to a single row.

    Returns (C', lam) where lam is the coordinate scaling with
    psi_C = lam * psi_C' away from the arrangements; classes whose row
    multiplicities sum to zero disappear entirely. All exactly rational.
    """
    classes = {}
    order = []
    for row in C.entries:
        w, t = primitive_direction(row)
        if w not in classes:
            classes[w] = []
            order.append(w)
        classes[w].append(t)
    merged = []
    scale = [Fraction(1)] * C.cols
    for w in order:
        ts = classes[w]
        s = sum(ts)
        tt = Fraction(1)
        for t in ts:
            tt *= Fraction(t) ** t
        if s != 0:
            merged.append([s * x for x in w])
            ratio = tt / Fraction(s) ** s
        else:
            ratio = tt
        for k in range(C.cols):
            scale[k] *= ratio ** w[k]
    if not merged:
        raise ValueError("all rows merged away")
    return IntMatrix(merged), tuple(scale)


def _forms_at(C: IntMatrix, u):
    return [sum(C.entries[i][j] * u[j] for j in range(C.cols)) for i in range(C.rows)]


def evaluate_psi(spec: ParamSpec, u, translate=None):
    """psi at an exact rational point off the arrangement.

    translate, when given, scales coordinate k by translate[k]; merge
    reports exactly this scaling.
    """
    if len(u) != spec.m:
        raise ValueError("point length mismatch")
    uu = [Fraction(x) for x in u]
    forms = _forms_at(spec.C, uu)
    dead = [i + 1 for i, l in enumerate(forms) if l == 0]
    if dead:
        raise ValueError(
            "point on the arrangement: form%s %s vanish%s"
            % ("s" if len(dead) > 1 else "",
               ", ".join(map(str, dead)),
               "" if len(dead) > 1 else "es")
        )
    out = []
    for k in range(spec.m):
        y = Fraction(1)
        for i in range(spec.n):
            c = spec.C.entries[i][k]
            if c:
                y *= forms[i] ** c
        if translate is not None:
            y *= translate[k]
        out.append(y)
    return tuple(out)


def log_jacobian(spec: ParamSpec, u):
    """The m x m matrix J_jk = sum_i c_ij c_ik / l_i(u), exact."""
    if len(u) != spec.m:
        raise ValueError("point length mismatch")
    uu = [Fraction(x) for x in u]
    forms = _forms_at(spec.C, uu)
    dead = [i + 1 for i, l in enumerate(forms) if l == 0]
    if dead:
        raise ValueError(
            "point on the arrangement: form%s %s vanish%s"
            % ("s" if len(dead) > 1 else "",
               ", ".join(map(str, dead)),
               "" if len(dead) > 1 else "es")
        )
    m = spec.m
    jac = []
    for j in range(m):
        row = []
        for k in range(m):
            row.append(
                sum(
                    Fraction(spec.C.entries[i][j] * spec.C.entries[i][k], 1) / forms[i]
                    for i in range(spec.n)
                )
            )
        jac.append(tuple(row))
    return tuple(jac)


def rank_of_fractions(rows) -> int:
    """Rank of a matrix given as rows of Fractions, by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / pr[c]
                m[r] = [a - f * b for a, b in zip(m[r], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def sample_off_arrangement(spec: ParamSpec, rng: random.Random, bound: int = 10000):
    """Random integer point with every form nonzero."""
    for _ in range(1000):
        u = tuple(rng.randint(-bound, bound) for _ in range(spec.m))
        if not any(u):
            continue
        if all(l != 0 for l in _forms_at(spec.C, u)):
            return u
    raise RuntimeError("could not sample a point off the arrangement")


def defect_test(spec: ParamSpec, trials: int = 5, seed: int = 0) -> Verdict:
    """Randomized check that psi parametrizes a hypersurface.

    The image is a hypersurface iff the logarithmic Jacobian generically has
    rank m - 1 (it always kills u itself). One witness sample settles the
    question; if every sample comes out smaller the configuration is
    reported as probably defective, which for these integer samples is
    wrong only with vanishing probability.
    """
    rng = random.Random(seed)
    for _ in range(max(1, trials)):
        u = sample_off_arrangement(spec, rng)
        if rank_of_fractions(log_jacobian(spec, u)) == spec.m - 1:
            return Verdict.NON_DEFECTIVE
    return Verdict.PROBABLY_DEFECTIVE
