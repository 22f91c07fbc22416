from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumploci.resonance import (
    aomoto,
    algebra_from_json,
    build_algebra,
    cohomology_dims,
    exterior_quotient,
    resonance_contains,
    resonance_upto_contains,
)
from strategies import SEEDED, nonzero_rat_vectors, small_rats


def heisenberg_type():
    """``E(4) / (a1 b2 + a2 b1, a1 b1, a2 b2)``."""
    return exterior_quotient(4, [{(0, 3): 1, (1, 2): 1}, {(0, 2): 1}, {(1, 3): 1}], 2)


def _full_dims(alg, a):
    """Cohomology in every degree, the top one included."""
    cx = aomoto(alg, a)
    ranks = [alg.rank(D) for D in cx.maps] + [0]
    return [alg.dims[j] - ranks[j] - (ranks[j - 1] if j else 0) for j in range(alg.top + 1)]


def test_exterior_dimensions():
    E = exterior_quotient(4, [], 4)
    assert E.dims == (1, 4, 6, 4, 1)
    assert heisenberg_type().dims == (1, 4, 3)


def test_exterior_algebra_is_acyclic():
    E = exterior_quotient(3, [], 3)
    assert _full_dims(E, [1, 2, 3]) == [0, 0, 0, 0]
    assert cohomology_dims(E, [0, 0, 0]) == [1, 3, 3]


def test_heisenberg_type_resonance():
    alg = heisenberg_type()
    assert resonance_contains(alg, [1, 0, 1, 0], 1)
    assert resonance_contains(alg, [0, 0, 1, 1], 1)
    assert not resonance_contains(alg, [1, 0, 0, 1], 1)
    assert resonance_contains(alg, [0, 0, 0, 0], 1, 4)
    assert not resonance_upto_contains(alg, [1, 0, 0, 1], 1)
    assert resonance_upto_contains(alg, [0, 0, 0, 0], 0)


def test_quadric_law():
    alg = heisenberg_type()
    for a in ([1, 2, 3, 6], [2, 1, 4, 2], [Fraction(1, 2), 3, 1, 6]):
        assert resonance_contains(alg, a, 1) == (a[0] * a[3] == a[1] * a[2])


def test_surface_algebra():
    # genus two: a1 b1 = a2 b2 and the mixed products vanish
    rels = [{(0, 1): 1, (2, 3): -1}, {(0, 2): 1}, {(0, 3): 1}, {(1, 2): 1}, {(1, 3): 1}]
    alg = exterior_quotient(4, rels, 2)
    assert alg.dims == (1, 4, 1)
    assert cohomology_dims(alg, [1, 2, 3, 4]) == [0, 2]


def test_finite_field():
    alg = exterior_quotient(2, [], 2, "zp:3")
    assert cohomology_dims(alg, [1, 0]) == [0, 0]
    assert cohomology_dims(alg, [3, 0]) == [1, 2]


def test_validation():
    with pytest.raises(ValueError):
        build_algebra("Q", (1, 2, 1), {1: [[[0]], [[0]]]})
    bad = [[[1], [0]], [[1], [0]]]
    with pytest.raises(ValueError):
        build_algebra("Q", (1, 2, 1), {1: bad})
    with pytest.raises(ValueError):
        build_algebra("zp:2", (1, 1), {}, torsion=True)
    with pytest.raises(ValueError):
        resonance_contains(heisenberg_type(), [1, 0, 0, 0], 2)
    with pytest.raises(ValueError):
        resonance_contains(heisenberg_type(), [1, 0, 0], 1)


def test_json_forms_agree():
    alg = heisenberg_type()
    again = algebra_from_json({"field": "Q", "exterior": 4, "top": 2,
                               "relations": [[[0, 3, 1], [1, 2, 1]], [[0, 2, 1]], [[1, 3, 1]]]})
    assert again.dims == alg.dims
    explicit = algebra_from_json(alg.to_json())
    for a in ([1, 0, 1, 0], [1, 2, 3, 4], [1, 2, 3, 6]):
        assert cohomology_dims(explicit, a) == cohomology_dims(alg, a)


relation_sets = st.lists(
    st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda p: p[0] < p[1]),
                    st.integers(-2, 2).filter(bool), min_size=1, max_size=3),
    max_size=3)


@SEEDED
@given(relation_sets, nonzero_rat_vectors(4))
def test_aomoto_squares_to_zero_and_euler(rels, a):
    alg = exterior_quotient(4, rels, 4)
    cx = aomoto(alg, a)  # raises if d^2 != 0
    assert len(cx.maps) == 4
    euler = sum((-1) ** j * b for j, b in enumerate(alg.dims))
    assert sum((-1) ** j * h for j, h in enumerate(_full_dims(alg, a))) == euler


@SEEDED
@given(relation_sets, nonzero_rat_vectors(4), small_rats.filter(bool))
def test_scaling_invariance(rels, a, c):
    alg = exterior_quotient(4, rels, 3)
    assert cohomology_dims(alg, a) == cohomology_dims(alg, [c * x for x in a])


@SEEDED
@given(relation_sets, nonzero_rat_vectors(4))
def test_depth_monotone(rels, a):
    alg = exterior_quotient(4, rels, 2)
    seen = [resonance_contains(alg, a, 1, d) for d in range(1, 5)]
    assert seen == sorted(seen, reverse=True)
    assert cohomology_dims(alg, a)[0] == 0


def test_quotient_dimension_count():
    E = exterior_quotient(5, [{(0, 1): 1}], 2)
    assert E.dims == (1, 5, comb(5, 2) - 1)
