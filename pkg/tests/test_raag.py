import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jumploci.fox import cv1_contains
from jumploci.raag import (
    MAX_VERTICES,
    raag_presentation,
    raag_sigma_certificate,
    raag_sigma_contains,
    toric_cv,
    toric_omega_contains,
    toric_resonance,
    toric_supports,
)
from jumploci.simplicial import barycentric_subdivision, build_complex, flag_complex, rp2_six_vertex
from jumploci.varieties import coordinate_subspace, full_space, span, sphere_locus_contains
from strategies import SEEDED


def graph(n, edges):
    V = list(range(1, n + 1))
    return flag_complex(build_complex([[v] for v in V] + [list(e) for e in edges], V))


def supports(L, i=1, coeffs="Q"):
    return [sorted(W) for W in toric_supports(L, i, coeffs).supports]


def test_supports_of_small_graphs():
    assert supports(graph(1, [])) == [[]]
    assert supports(graph(2, [])) == [[1, 2]]
    assert supports(graph(2, [(1, 2)])) == [[]]
    assert supports(graph(3, [(1, 2), (2, 3)])) == [[1, 3]]
    # the square: two disjoint diagonals
    assert supports(graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])) == [[1, 3], [2, 4]]


def test_toric_resonance_and_cv():
    L = graph(3, [(1, 2), (2, 3)])
    R = toric_resonance(L, 1)
    assert list(R) == [coordinate_subspace(3, [0, 2])]
    W = toric_cv(L, 1)
    assert len(W.tori) == 1 and W.tori[0].direction == coordinate_subspace(3, [0, 2])


def test_higher_degree_supports():
    # a hollow triangle: T_L has a jump in degree 2 only along the full torus
    L = build_complex([[1, 2], [2, 3], [1, 3]])
    assert supports(L, 1) == [[]]
    assert supports(L, 2) == [[1, 2, 3]]


def test_omega():
    L = graph(3, [(1, 2), (2, 3)])
    assert toric_omega_contains(L, 1, 1, span([[1, 1, 1]]))
    assert not toric_omega_contains(L, 1, 1, span([[1, 0, 0]]))
    assert not toric_omega_contains(L, 1, 2, span([[1, 0, 0], [0, 1, 0]]))
    with pytest.raises(ValueError):
        toric_omega_contains(L, 1, 2, span([[1, 1, 1]]))


def test_sigma_free_and_abelian():
    F2 = graph(2, [])
    Z2 = graph(2, [(1, 2)])
    for chi in ([1, 0], [1, 1], [-2, 3]):
        assert not raag_sigma_contains(F2, chi, 1)
        assert raag_sigma_contains(Z2, chi, 1)
        assert raag_sigma_contains(Z2, chi, 2)


def test_sigma_path():
    P3 = graph(3, [(1, 2), (2, 3)])
    assert raag_sigma_contains(P3, [0, 1, 0], 1)
    assert raag_sigma_contains(P3, [1, 1, 0], 1)
    assert not raag_sigma_contains(P3, [1, 0, 0], 1)
    assert not raag_sigma_contains(P3, [1, 0, 1], 1)


def test_sigma_torsion_sensitivity():
    D = barycentric_subdivision(rp2_six_vertex())
    chi = [1] * len(D.vertices)
    assert raag_sigma_certificate(D, chi, 2, "Q") is None
    cert = raag_sigma_certificate(D, chi, 2, "Z")
    assert cert is not None and cert[0] == () and cert[1] == 1
    assert cert[2].torsion_in(1) == (2,)
    assert raag_sigma_contains(D, chi, 2, "zp:3")
    assert not raag_sigma_contains(D, chi, 2, "zp:2")


def test_sigma_validation():
    with pytest.raises(ValueError):
        raag_sigma_contains(build_complex([[1, 2], [2, 3], [1, 3]]), [1, 1, 1], 1)
    with pytest.raises(ValueError):
        raag_sigma_contains(graph(2, []), [0, 0], 1)
    with pytest.raises(ValueError):
        raag_sigma_contains(graph(2, []), [1], 1)


def test_vertex_cap():
    with pytest.raises(ValueError):
        toric_supports(graph(MAX_VERTICES + 1, []), 1)


def test_presentation():
    P = raag_presentation(graph(3, [(1, 2)]))
    assert P.generators == ("1", "2", "3")
    assert P.relators == ((1, 2, -1, -2),)


random_graphs = st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(1, n), st.integers(1, n))
                                            .filter(lambda e: e[0] < e[1]))))


@SEEDED
@given(random_graphs, st.integers(0, 10 ** 6))
def test_toric_cv_matches_fox_calculus(g, seed):
    n, edges = g
    L = graph(n, edges)
    fam = toric_supports(L, 1)
    P = raag_presentation(L)
    rng = random.Random(seed)
    rho = [rng.choice([1, 1, -1, 2, Fraction(1, 3)]) for _ in range(n)]
    moved = {v for v, x in zip(L.vertices, rho) if x != 1}
    predicted = any(moved <= W for W in fam.supports)
    assert cv1_contains(P, rho) == predicted


@SEEDED
@given(random_graphs, st.integers(0, 10 ** 6))
def test_sigma_one_is_resonance_complement(g, seed):
    n, edges = g
    L = graph(n, edges)
    rng = random.Random(seed)
    chi = [rng.choice([0, 1, -2]) for _ in range(n)]
    if not any(chi):
        chi[0] = 1
    in_sigma = raag_sigma_contains(L, chi, 1, "Z")
    assert in_sigma == (not sphere_locus_contains(toric_resonance(L, 1), chi))
    assert raag_sigma_contains(L, [-x for x in chi], 1) == in_sigma


@SEEDED
@given(random_graphs, st.integers(0, 10 ** 6))
def test_sigma_nesting(g, seed):
    n, edges = g
    L = graph(n, edges)
    rng = random.Random(seed)
    chi = [rng.choice([0, 1, 3]) for _ in range(n)]
    if not any(chi):
        chi[-1] = 1
    levels = [raag_sigma_contains(L, chi, i, c) for i in (1, 2, 3) for c in ("Z",)]
    assert levels == sorted(levels, reverse=True)
    for i in (1, 2):
        if raag_sigma_contains(L, chi, i, "Z"):
            assert raag_sigma_contains(L, chi, i, "Q")


def test_full_torus_when_disconnected():
    L = graph(3, [(1, 2)])
    R = toric_resonance(L, 1)
    assert list(R) == [full_space(3)]
