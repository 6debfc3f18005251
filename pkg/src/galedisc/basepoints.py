"""Base points of the cleared pencil in the plane case, and the local
monomial data attached to each of them.

All of this is for m = 3: the forms l_i cut out a line arrangement in P^2,
the pencil f_0, ..., f_3 has a finite base locus exactly when no
arrangement line lies in it entirely, and localizing the pencil at a base
point yields (after dropping unit factors and collapsing proportional
forms) exponent vectors in the local branch coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .intmat import IntMatrix, _int_det
from .parametrization import ParamSpec, primitive_direction


@dataclass(frozen=True)
class BasePoint:
    """A common zero of the pencil, as a point of P^2.

    coords is the representative with first nonzero coordinate 1; vanishing
    lists the 1-based indices of the forms through the point, sorted.
    """

    coords: tuple
    vanishing: tuple


@dataclass(frozen=True)
class LocalIdeal:
    """Exponent data of the pencil localized at a base point.

    directions: the distinct line directions through the point, in order of
    first appearance along the vanishing list. per_form has one entry per
    pencil member: (exponents per direction class, unit flag), the flag
    marking that nonvanishing (hence locally invertible) factors were
    dropped. gens collects the distinct exponent vectors, minimalized when
    the ideal is monomial, i.e. when at most two directions meet the point.
    """

    base: BasePoint
    directions: tuple
    per_form: tuple
    gens: tuple
    monomial: bool


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _normalize_point(p):
    idx = next((i for i, x in enumerate(p) if x != 0), None)
    if idx is None:
        return None
    lead = Fraction(p[idx])
    return tuple(Fraction(x) / lead for x in p)


def _vanishing_at(C: IntMatrix, coords):
    out = []
    for i, row in enumerate(C.entries):
        if sum(c * x for c, x in zip(row, coords)) == 0:
            out.append(i + 1)
    return tuple(out)


def base_points(spec: ParamSpec):
    """All base points of the pencil, sorted by coordinates.

    Raises when m != 3 or when an entire arrangement line consists of base
    points, which happens exactly when some direction class carries a
    positive exponent in every pencil member.
    """
    if spec.m != 3:
        raise ValueError("base point enumeration needs m = 3")
    C = spec.C
    classes = {}
    for i, row in enumerate(C.entries):
        w, _ = primitive_direction(row)
        classes.setdefault(w, []).append(i)
    for w, members in classes.items():
        if all(
            any(spec.numer_exps[k][i] > 0 for i in members)
            for k in range(spec.m + 1)
        ):
            raise ValueError("base locus not finite (direction %s)" % (w,))

    seen = {}
    for i, j in combinations(range(spec.n), 2):
        p = _cross3(C.entries[i], C.entries[j])
        coords = _normalize_point(p)
        if coords is None:  # proportional rows
            continue
        if coords not in seen:
            seen[coords] = _vanishing_at(C, coords)

    points = []
    for coords, vanishing in seen.items():
        van0 = [i - 1 for i in vanishing]
        basic = all(
            any(spec.numer_exps[k][i] > 0 for i in van0)
            for k in range(spec.m + 1)
        )
        if basic:
            points.append(BasePoint(coords=coords, vanishing=vanishing))
    points.sort(key=lambda bp: bp.coords)
    return points


def localize(spec: ParamSpec, p: BasePoint) -> LocalIdeal:
    """Local exponent data of the pencil at a base point.

    The vanishing set is recomputed from the coordinates rather than taken
    from p. Proportional vanishing forms are collapsed into one direction
    class each; the class exponent of a pencil member is the sum over the
    class of its factor exponents.
    """
    if spec.m != 3:
        raise ValueError("localization needs m = 3")
    vanishing = _vanishing_at(spec.C, p.coords)
    van0 = [i - 1 for i in vanishing]
    directions = []
    cls_of = {}
    for i in van0:
        w, _ = primitive_direction(spec.C.entries[i])
        if w not in cls_of:
            cls_of[w] = len(directions)
            directions.append(w)
        # membership recorded through cls_of below
    per_form = []
    for k in range(spec.m + 1):
        exps = [0] * len(directions)
        for i in van0:
            w, _ = primitive_direction(spec.C.entries[i])
            exps[cls_of[w]] += spec.numer_exps[k][i]
        unit = any(
            spec.numer_exps[k][i] > 0
            for i in range(spec.n)
            if i not in van0
        )
        per_form.append((tuple(exps), unit))
    if any(not any(exps) for exps, _ in per_form):
        raise ValueError("not a base point of the pencil")
    monomial = len(directions) <= 2
    gens = set(exps for exps, _ in per_form)
    if monomial:
        gens = {
            g
            for g in gens
            if not any(
                h != g and all(a <= b for a, b in zip(h, g)) for h in gens
            )
        }
    return LocalIdeal(
        base=BasePoint(coords=p.coords, vanishing=vanishing),
        directions=tuple(directions),
        per_form=tuple(per_form),
        gens=tuple(sorted(gens)),
        monomial=monomial,
    )


def is_uniform(C: IntMatrix) -> bool:
    """True when every 3 x 3 minor of the n x 3 matrix is nonzero."""
    if C.cols != 3:
        raise ValueError("uniformity test needs three columns")
    if C.rows < 3:
        raise ValueError("need at least three rows")
    for rows in combinations(range(C.rows), 3):
        sub = [list(C.entries[i]) for i in rows]
        if _int_det(sub) == 0:
            return False
    return True
