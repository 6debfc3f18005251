"""Staircase multiplicities and the degree of the parametrized surface.

A zero-dimensional monomial ideal in two local variables is a staircase;
its Hilbert-Samuel multiplicity is twice the area cut off by the lower
convex hull of the minimal generators, computed here by an exact shoelace
sum. Summing those local multiplicities over the base points turns the
degree d of the pencil into the degree of the image surface:

    degree = d^2 - sum of local multiplicities

valid in the uniform case, where every base point is an ordinary crossing
of exactly two arrangement lines and the parametrization is birational.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intmat import IntMatrix
from .parametrization import Verdict, build, defect_test
from .basepoints import BasePoint, base_points, is_uniform, localize


def minimal_generators(points):
    """Minimal generating set of the monomial ideal spanned by the given
    (a, b) exponent pairs: duplicates and dominated pairs removed, sorted."""
    pts = set()
    for p in points:
        a, b = p
        a, b = int(a), int(b)
        if a < 0 or b < 0:
            raise ValueError("exponents must be nonnegative")
        pts.add((a, b))
    if not pts:
        raise ValueError("empty generator set")
    return tuple(
        sorted(
            p
            for p in pts
            if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in pts)
        )
    )


@dataclass(frozen=True)
class Staircase2:
    """Monomial ideal in two variables, held as its minimal generators."""

    gens: tuple

    @classmethod
    def of(cls, points) -> "Staircase2":
        return cls(gens=minimal_generators(points))


def _require_zero_dimensional(gens):
    if not any(b == 0 for _, b in gens) or not any(a == 0 for a, _ in gens):
        raise ValueError("not zero-dimensional")


def _cross(o, u, v):
    return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0])


def staircase_multiplicity(s: Staircase2) -> int:
    """Multiplicity e = 2 * area enclosed by the axes and the lower hull of
    the staircase generators."""
    gens = minimal_generators(s.gens)
    _require_zero_dimensional(gens)
    chain = []
    for p in gens:  # already sorted by first coordinate
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    polygon = [(0, 0)] + chain
    twice_area = 0
    for (x0, y0), (x1, y1) in zip(polygon, polygon[1:] + polygon[:1]):
        twice_area += x0 * y1 - x1 * y0
    return abs(twice_area)


def colength(s: Staircase2) -> int:
    """Number of standard monomials under the staircase (the codimension of
    the ideal in the local ring)."""
    gens = minimal_generators(s.gens)
    _require_zero_dimensional(gens)
    a_pure = next(a for a, b in gens if b == 0)
    return sum(min(b for a, b in gens if a <= x) for x in range(a_pure))


@dataclass(frozen=True)
class DegreeReport:
    d: int
    deg_psi: int
    points: tuple  # (BasePoint, multiplicity) pairs
    degree: int

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "degree": self.degree,
            "base_points": [
                {
                    "point": [str(c) for c in bp.coords],
                    "vanishing": list(bp.vanishing),
                    "e": e,
                }
                for bp, e in self.points
            ],
        }


def degree_uniform(C: IntMatrix, seed: int = 0) -> DegreeReport:
    """Degree of the parametrized surface for a uniform n x 3 matrix.

    Uniformity makes every base point an ordinary double point of the
    arrangement with a bona fide monomial local ideal, so the correction
    term is a staircase multiplicity at each point.
    """
    if C.cols != 3:
        raise ValueError("degree formula needs a three-column matrix")
    if not is_uniform(C):
        raise ValueError("non-uniform: degree formula unsupported")
    spec = build(C)
    if defect_test(spec, trials=5, seed=seed) is not Verdict.NON_DEFECTIVE:
        raise ValueError("defective configuration: the image is not a surface")
    pairs = []
    total = 0
    for bp in base_points(spec):
        loc = localize(spec, bp)
        assert loc.monomial, "uniform matrix produced a non-monomial local ideal"
        e = staircase_multiplicity(Staircase2.of(loc.gens))
        pairs.append((bp, e))
        total += e
    degree = spec.d * spec.d - total
    if degree < 1:
        raise ValueError("degree formula produced %d, input is degenerate" % degree)
    return DegreeReport(d=spec.d, deg_psi=1, points=tuple(pairs), degree=degree)


def sparse_origin_multiplicity(exponents) -> int:
    """Multiplicity of the origin on a plane curve from its support alone.

    Needs pure powers (a, 0) and (0, b), a, b >= 1, in the support; then
    the multiplicity equals the staircase multiplicity of the monomial
    ideal the support generates, independent of the coefficients.
    """
    pts = [(int(a), int(b)) for a, b in exponents]
    if not any(a >= 1 and b == 0 for a, b in pts) or not any(
        a == 0 and b >= 1 for a, b in pts
    ):
        raise ValueError(
            "hypothesis violated: support must contain pure powers (a,0) and (0,b)"
        )
    return staircase_multiplicity(Staircase2.of(pts))
