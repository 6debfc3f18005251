"""Staircase multiplicities, colengths, and the degree formula for parametrized surfaces."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from galedisc.degree import (
    Staircase2,
    colength,
    degree_uniform,
    minimal_generators,
    sparse_origin_multiplicity,
    staircase_multiplicity,
)
from galedisc.intmat import IntMatrix

C42 = IntMatrix([[2, 1, 3], [-2, -1, -2], [1, 1, 0], [-1, -1, -1]])
C43 = IntMatrix([[1, -1, 0], [1, -1, 1], [1, -1, 0], [-1, 2, 0], [-1, 1, -2], [-1, 0, 1]])
CDERIVED = IntMatrix([[1, 1, 2], [1, -1, 0], [-1, 1, -1], [-1, -1, -1]])


# ---------------------------------------------------------------- oracle helpers


def hull_envelope_height(gens, x):
    """Lower-hull height over abscissa x, by exact linear interpolation.

    Test-local oracle. Walks every hull edge of the minimal staircase rather
    than reusing any library geometry.
    """
    pts = sorted(minimal_generators(gens))
    # lower convex hull from (0, b) to (a, 0), monotone chain
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= x <= x2:
            return Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (x - x1)
    raise AssertionError("abscissa outside hull range")


def multiplicity_by_trapezoids(gens):
    """Twice the area under the hull, via unit-interval trapezoid strips."""
    pts = sorted(minimal_generators(gens))
    a = pts[-1][0]
    total = Fraction(0)
    for x in range(a):
        total += (hull_envelope_height(gens, x) + hull_envelope_height(gens, x + 1)) / 2
    e = 2 * total
    assert e.denominator == 1
    return int(e)


def colength_by_counting(gens):
    """Count monomials outside the ideal by brute-force membership checks."""
    pts = minimal_generators(gens)
    amax = max(p[0] for p in pts)
    bmax = max(p[1] for p in pts)
    count = 0
    for x in range(amax + 2):
        for y in range(bmax + 2):
            if not any(a <= x and b <= y for a, b in pts):
                count += 1
    return count


# ---------------------------------------------------------------- generators


def test_minimal_generators_dedupes_and_drops_dominated():
    gens = minimal_generators([(4, 0), (0, 3), (2, 1), (5, 5), (4, 0), (2, 1)])
    assert gens == ((0, 3), (2, 1), (4, 0))


def test_minimal_generators_rejections():
    with pytest.raises(ValueError, match="nonnegative"):
        minimal_generators([(-1, 2)])
    with pytest.raises(ValueError, match="empty generator set"):
        minimal_generators([])


def test_staircase_of_convenience():
    s = Staircase2.of([(4, 0), (0, 3), (2, 1)])
    assert s.gens == ((0, 3), (2, 1), (4, 0))


# ---------------------------------------------------------------- multiplicities


@pytest.mark.parametrize(
    "gens, e",
    [
        ([(4, 0), (0, 3), (2, 1)], 10),
        ([(3, 0), (2, 1), (1, 3), (0, 4)], 11),
        ([(6, 0), (4, 1), (0, 3)], 18),
        ([(1, 0), (0, 1)], 1),
        ([(2, 0), (0, 2)], 4),
        ([(5, 0), (0, 7)], 35),
        ([(8, 0), (0, 5), (1, 4), (7, 1)], 37),
    ],
)
def test_staircase_multiplicity_goldens(gens, e):
    assert staircase_multiplicity(Staircase2.of(gens)) == e


@pytest.mark.parametrize(
    "gens, length",
    [
        ([(4, 0), (0, 3), (2, 1)], 8),
        ([(2, 0), (1, 1), (0, 2)], 3),
        ([(1, 0), (0, 1)], 1),
        ([(3, 0), (0, 4)], 12),
        ([(8, 0), (0, 5), (1, 4), (7, 1)], 30),
    ],
)
def test_colength_goldens(gens, length):
    assert colength(Staircase2.of(gens)) == length


def test_multiplicity_requires_pure_powers_on_both_axes():
    with pytest.raises(ValueError, match="not zero-dimensional"):
        staircase_multiplicity(Staircase2.of([(1, 1)]))
    with pytest.raises(ValueError, match="not zero-dimensional"):
        colength(Staircase2.of([(2, 0), (1, 1)]))


@given(st.data())
@settings(deadline=None, max_examples=60)
def test_multiplicity_matches_trapezoid_oracle(data):
    a = data.draw(st.integers(1, 6))
    b = data.draw(st.integers(1, 6))
    extra = data.draw(
        st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=4)
    )
    gens = [(a, 0), (0, b)] + extra
    assert staircase_multiplicity(Staircase2.of(gens)) == multiplicity_by_trapezoids(gens)


@given(st.data())
@settings(deadline=None, max_examples=60)
def test_colength_matches_counting_oracle(data):
    a = data.draw(st.integers(1, 6))
    b = data.draw(st.integers(1, 6))
    extra = data.draw(
        st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=4)
    )
    gens = [(a, 0), (0, b)] + extra
    assert colength(Staircase2.of(gens)) == colength_by_counting(gens)


# ---------------------------------------------------------------- degree formula


def test_degree_of_the_quartic_surface():
    rep = degree_uniform(C42)
    assert rep.d == 3 and rep.degree == 4 and rep.deg_psi == 1
    assert [(p.vanishing, e) for p, e in rep.points] == [((1, 2), 4), ((1, 4), 1)]


def test_degree_report_json_shape():
    obj = degree_uniform(C42).to_json_dict()
    assert obj == {
        "d": 3,
        "degree": 4,
        "base_points": [
            {"point": ["1", "-2", "0"], "vanishing": [1, 2], "e": 4},
            {"point": ["1", "-1/2", "-1/2"], "vanishing": [1, 4], "e": 1},
        ],
    }


def test_degree_of_four_point_configuration():
    rep = degree_uniform(CDERIVED)
    assert rep.d == 3 and rep.degree == 4
    assert sorted(e for _, e in rep.points) == [1, 1, 1, 2]
    assert rep.d**2 == rep.deg_psi * rep.degree + sum(e for _, e in rep.points)


def test_degree_refuses_nonuniform_input():
    with pytest.raises(ValueError, match="non-uniform: degree formula unsupported"):
        degree_uniform(C43)


def test_degree_needs_three_columns():
    with pytest.raises(ValueError, match="three-column matrix"):
        degree_uniform(IntMatrix([[1, 2], [-2, -3], [1, 0], [0, 1]]))


def test_degree_is_seed_independent():
    assert degree_uniform(C42, seed=0).degree == degree_uniform(C42, seed=99).degree


# ---------------------------------------------------------------- sparse corner multiplicity


@pytest.mark.parametrize(
    "support, e",
    [
        ([(2, 0), (0, 2)], 4),
        ([(2, 0), (0, 3), (1, 1)], 5),
        ([(1, 0), (0, 1)], 1),
        ([(3, 0), (0, 4), (1, 1)], 7),
    ],
)
def test_sparse_origin_multiplicity_goldens(support, e):
    assert sparse_origin_multiplicity(support) == e


def test_sparse_origin_multiplicity_needs_pure_powers():
    with pytest.raises(ValueError, match="hypothesis violated"):
        sparse_origin_multiplicity([(1, 1), (2, 2)])


def test_sparse_origin_multiplicity_order_insensitive():
    rng = random.Random(3)
    support = [(2, 0), (0, 3), (1, 1)]
    for _ in range(5):
        rng.shuffle(support)
        assert sparse_origin_multiplicity(support) == 5
