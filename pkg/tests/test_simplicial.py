from itertools import chain, combinations

import pytest
from hypothesis import given

from jumploci.simplicial import (
    barycentric_subdivision,
    build_complex,
    complex_from_json,
    empty_complex,
    flag_complex,
    induced_subcomplex,
    is_flag,
    link,
    reduced_homology,
    relative_link,
    rp2_six_vertex,
    simplex,
)
from strategies import SEEDED, complexes

HOLLOW = build_complex([{1, 2}, {2, 3}, {1, 3}])
CYCLE4 = build_complex([{1, 2}, {2, 3}, {3, 4}, {1, 4}])


def test_build_complex():
    assert HOLLOW.vertices == (1, 2, 3)
    assert len(HOLLOW.facets) == 3
    K = build_complex([{1, 2}, {1}])
    assert K.facets == frozenset([frozenset({1, 2})])
    assert rp2_six_vertex().f_vector() == (6, 15, 10)


def test_build_complex_declared_vertices():
    K = build_complex([{1, 2}], vertices=[1, 2, 3])
    assert K.vertices == (1, 2, 3)
    with pytest.raises(ValueError):
        build_complex([{1, 5}], vertices=[1, 2])


def test_induced_subcomplex():
    assert induced_subcomplex(HOLLOW, {1, 2}).facets == frozenset([frozenset({1, 2})])
    assert induced_subcomplex(HOLLOW, set()) == empty_complex()
    opp = induced_subcomplex(CYCLE4, {1, 3})
    assert opp.facets == frozenset([frozenset({1}), frozenset({3})])
    with pytest.raises(ValueError):
        induced_subcomplex(HOLLOW, {7})


def test_link():
    assert link(HOLLOW, ()) == HOLLOW
    solid = simplex([1, 2, 3])
    assert link(solid, {1}).facets == frozenset([frozenset({2, 3})])
    assert link(HOLLOW, {1}).facets == frozenset([frozenset({2}), frozenset({3})])
    assert link(solid, {1, 2, 3}) == empty_complex()
    with pytest.raises(ValueError):
        link(HOLLOW, {1, 2, 3})


def test_flag_complex():
    assert flag_complex(HOLLOW) == simplex([1, 2, 3])
    assert flag_complex(CYCLE4) == CYCLE4
    assert flag_complex(rp2_six_vertex()) == simplex(range(1, 7))


def test_subdivision():
    assert barycentric_subdivision(simplex([1, 2])).f_vector() == (3, 2)
    assert barycentric_subdivision(simplex([1, 2, 3])).f_vector() == (7, 12, 6)
    D = barycentric_subdivision(rp2_six_vertex())
    assert D.f_vector() == (31, 90, 60)
    assert is_flag(D)
    assert reduced_homology(D, "Z").torsion_in(1) == (2,)


def test_reduced_homology_examples():
    assert reduced_homology(HOLLOW).ranks == (0, 0, 1)
    two = build_complex([{1}, {2}])
    assert reduced_homology(two).rank(0) == 1
    assert reduced_homology(empty_complex()).ranks == (1,)
    K = rp2_six_vertex()
    HZ = reduced_homology(K, "Z")
    assert HZ.torsion_in(1) == (2,)
    assert [HZ.rank(d) for d in (0, 1, 2)] == [0, 0, 0]
    H2 = reduced_homology(K, 2)
    assert H2.rank(1) == 1 and H2.rank(2) == 1
    assert reduced_homology(K, "zp:3").rank(1) == 0


def test_universal_coefficients_rp2():
    for K in (rp2_six_vertex(), barycentric_subdivision(rp2_six_vertex())):
        HQ = reduced_homology(K, "Q")
        HZ = reduced_homology(K, "Z")
        for p in (2, 3):
            Hp = reduced_homology(K, p)
            for d in range(-1, 3):
                tors = sum(1 for t in HZ.torsion_in(d) if t % p == 0)
                tors += sum(1 for t in HZ.torsion_in(d - 1) if t % p == 0)
                assert Hp.rank(d) == HQ.rank(d) + tors


def test_json_round_trip():
    D = barycentric_subdivision(simplex([1, 2]))
    import json
    assert complex_from_json(json.loads(json.dumps(D.to_json()))) == D


@SEEDED
@given(complexes())
def test_euler_characteristic(data):
    facets, _ = data
    K = build_complex(facets)
    H = reduced_homology(K, "Q")
    assert H.reduced_euler() == K.euler_characteristic() - 1


@SEEDED
@given(complexes(max_vertices=4))
def test_subdivision_is_flag(data):
    facets, _ = data
    K = build_complex(facets)
    D = barycentric_subdivision(K)
    assert flag_complex(D) == D
    assert reduced_homology(D, "Z") == reduced_homology(K, "Z")


def _subsets(xs):
    return chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))


@SEEDED
@given(complexes())
def test_relative_link_brute_force(data):
    facets, verts = data
    K = build_complex(facets, verts)
    faces = {frozenset(f) for f in K.all_faces()}
    for W in _subsets(verts):
        W = frozenset(W)
        rest = induced_subcomplex(K, set(verts) - W)
        for sigma in rest.all_faces():
            got = relative_link(K, W, sigma)
            want = {frozenset(t) for t in _subsets(sorted(W)) if frozenset(t) | frozenset(sigma) in faces}
            assert {frozenset(f) for f in got.all_faces()} == want
