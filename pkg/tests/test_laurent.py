from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from jumploci.laurent import LaurentPolynomial, torus_zero_dimension
from strategies import SEEDED, small_ints


def t(n):
    return [LaurentPolynomial.variable(n, i) for i in range(n)]


def test_arithmetic():
    t1, t2 = t(2)
    f = (t1 + 1) * (t1 - 1)
    assert f == t1 * t1 - 1
    assert (f - f).terms == {}
    assert f.coefficient_sum() == 0
    assert f.evaluate([3, 5]) == 8


def test_substitution_cancels():
    t1, t2, t3 = t(3)
    f = t1 - t2 + 1
    g = f.substitute([[1, 0], [1, 0], [0, 1]])
    assert g == LaurentPolynomial.constant(2, 1)
    assert f.substitute([[1, 0], [0, 0], [0, 1]]).is_monomial()


def test_negative_exponents():
    u = LaurentPolynomial.monomial((-2,))
    assert u.evaluate([2]) == Fraction(1, 4)
    assert u.to_string() == "t1^-2"


def test_torus_zero_dimension():
    t1, t2 = t(2)
    assert torus_zero_dimension([(1 + t1) * (1 - t2), t1 * t1 - 1], 2) == 1
    assert torus_zero_dimension([t1 - 1, t2 - 2], 2) == 0
    assert torus_zero_dimension([t1 - 1, t1 - 2], 2) == -1
    assert torus_zero_dimension([], 2) == 2
    assert torus_zero_dimension([t1 * t2], 2) == -1
    # t1 = 0 is not a torus point
    assert torus_zero_dimension([t1 * t1 - t1, t2 - 1], 2) == 0
    assert torus_zero_dimension([t1 * t1 - t1 * t1 * t1, t1 * t2], 2) == -1
    s = t(1)[0]
    assert torus_zero_dimension([s * s - 1, s + 1], 1) == 0
    assert torus_zero_dimension([s * s - 1, s - 2], 1) == -1


def test_json_round_trip():
    t1, t2 = t(2)
    f = Fraction(3, 2) * t1 - t2 * t2 + 7
    assert LaurentPolynomial.from_json(f.to_json(), 2) == f


polys = st.dictionaries(st.tuples(small_ints, small_ints), small_ints.filter(bool), max_size=4) \
    .map(lambda d: LaurentPolynomial(2, d))


@SEEDED
@given(polys, polys, st.tuples(small_ints.filter(bool), small_ints.filter(bool)))
def test_evaluation_is_a_ring_map(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
