"""Rational subspace arrangements and unions of translated subtori.

A character of ``Z^n`` is written additively: the torsion point ``q`` in
``Q^n / Z^n`` stands for ``exp(2 pi i q)``, and a rational subspace ``L``
stands for the subtorus ``exp(L ⊗ C)``.  Every question asked below
reduces to rank and lattice-coset tests on these data, so no cyclotomic
arithmetic is ever needed.
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm

from .exactlin import (
    hermite_form,
    in_integer_row_lattice,
    integer_kernel,
    integerize_rows,
    nullspace,
    rat_rank,
    rref,
    to_rat,
)
from .laurent import LaurentPolynomial, torus_zero_dimension

__all__ = [
    "RationalSubspace",
    "SubspaceArrangement",
    "TranslatedTorus",
    "LaurentLocus",
    "VarietyDescription",
    "VarietyFiltration",
    "Intersection",
    "StrictnessWitness",
    "EMPTY",
    "FINITE",
    "POSITIVE",
    "WHOLE",
    "span",
    "torus",
    "full_space",
    "zero_space",
    "identity_variety",
    "subspace_from_equations",
    "coordinate_subspace",
    "intersect_subspaces",
    "sum_subspaces",
    "arrangement",
    "lattice_coset_contains",
    "torus_contains",
    "primitive_lattice_basis",
    "tau1",
    "tau1_polynomial",
    "tau1_locus",
    "sigma_r_contains",
    "sphere_locus_contains",
    "torus_intersection_dim",
    "hypersurface_restriction",
    "torus_hypersurface_finiteness",
    "locus_intersection",
    "omega_contains",
    "omega_obstruction",
    "schubert_bound_contains",
    "sigma_bound_excludes",
    "hypersurface_omega_locus",
    "product_varieties",
    "product_filtration",
    "strictness_witness",
    "sigma_gap_direction",
    "grassmannian_points",
    "rationals_of_height",
    "variety_from_json",
    "parse_plane",
]

EMPTY = "empty"
FINITE = "finite"
POSITIVE = "positive"
WHOLE = "whole"


@dataclass(frozen=True)
class RationalSubspace:
    """Subspace of ``Q^n`` stored by the nonzero rows of its reduced echelon
    form, so equal subspaces compare equal."""

    ambient_dim: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [list(v) for v in self.basis]

    def contains(self, v):
        v = [to_rat(x) for x in v]
        if len(v) != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        if not any(v):
            return True
        return rat_rank(self.vectors() + [v]) == self.dim

    def __le__(self, other):
        _check_ambient(self, other)
        return all(other.contains(v) for v in self.basis)

    def __lt__(self, other):
        return self <= other and self.dim < other.dim

    def equations(self):
        """Rows spanning the annihilator."""
        if not self.basis:
            return [[Fraction(int(i == j)) for j in range(self.ambient_dim)]
                    for i in range(self.ambient_dim)]
        return nullspace(self.vectors())

    def integer_basis(self):
        """Basis vectors scaled to primitive integer vectors."""
        return integerize_rows(self.vectors())

    def to_json(self):
        return [[str(x) for x in v] for v in self.basis]

    def __repr__(self):
        rows = "; ".join(",".join(str(x) for x in v) for v in self.basis)
        return f"RationalSubspace(n={self.ambient_dim}, [{rows}])"


def _check_ambient(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def span(vectors, ambient_dim=None):
    vectors = [[to_rat(x) for x in v] for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient dimension needed for an empty span")
        ambient_dim = len(vectors[0])
    if any(len(v) != ambient_dim for v in vectors):
        raise ValueError("vectors of mixed length")
    if not vectors:
        return RationalSubspace(ambient_dim, ())
    R, piv = rref(vectors)
    return RationalSubspace(ambient_dim, tuple(tuple(R[i]) for i in range(len(piv))))


def subspace_from_equations(rows, ambient_dim=None):
    """``{x : rows · x = 0}``."""
    rows = [[to_rat(x) for x in r] for r in rows]
    n = ambient_dim if ambient_dim is not None else len(rows[0])
    return span(nullspace(rows, n), n)


def coordinate_subspace(n, support):
    return span([[int(i == j) for i in range(n)] for j in sorted(support)], n)


def full_space(n):
    return coordinate_subspace(n, range(n))


def zero_space(n):
    return RationalSubspace(n, ())


def intersect_subspaces(A, B):
    _check_ambient(A, B)
    n = A.ambient_dim
    return subspace_from_equations(A.equations() + B.equations(), n)


def sum_subspaces(A, B):
    _check_ambient(A, B)
    return span(A.vectors() + B.vectors(), A.ambient_dim)


def _subspace_key(V):
    return (-V.dim, V.basis)


@dataclass(frozen=True)
class SubspaceArrangement:
    ambient_dim: int
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def contains_vector(self, v):
        return any(L.contains(v) for L in self.members)

    def to_json(self):
        return [m.to_json() for m in self.members]


def arrangement(ambient_dim, subspaces):
    """Irredundant arrangement: duplicates and contained members dropped."""
    subs = []
    for V in subspaces:
        if V.ambient_dim != ambient_dim:
            raise ValueError("arrangement member in the wrong ambient space")
        if V not in subs:
            subs.append(V)
    keep = [V for V in subs if not any(V < W for W in subs)]
    return SubspaceArrangement(ambient_dim, tuple(sorted(keep, key=_subspace_key)))


def _reduce_mod1(q):
    return tuple(to_rat(x) - (to_rat(x).numerator // to_rat(x).denominator) for x in q)


@dataclass(frozen=True)
class TranslatedTorus:
    """The coset ``exp(2 pi i q) · exp(L ⊗ C)``."""

    translate: tuple
    direction: RationalSubspace

    def __post_init__(self):
        object.__setattr__(self, "translate", _reduce_mod1(self.translate))
        if len(self.translate) != self.direction.ambient_dim:
            raise ValueError("translate and direction live in different tori")

    @property
    def ambient_dim(self):
        return self.direction.ambient_dim

    @property
    def dim(self):
        return self.direction.dim

    @property
    def torsion_order(self):
        return lcm(1, *(x.denominator for x in self.translate))

    def passes_through_identity(self):
        return lattice_coset_contains(self.translate, self.direction)

    def to_json(self):
        return {"q": [str(x) for x in self.translate], "L": self.direction.to_json()}


def torus(q, basis, n=None):
    """Convenience constructor from a translate and spanning vectors."""
    q = [to_rat(x) for x in q]
    n = n or len(q)
    return TranslatedTorus(tuple(q), span(basis, n))


@dataclass(frozen=True)
class LaurentLocus:
    """Common zero set of Laurent polynomials in ``(C^×)^n``; a single
    equation is a hypersurface."""

    ambient_dim: int
    equations: tuple

    def __post_init__(self):
        if not self.equations:
            raise ValueError("a locus needs at least one equation")
        for f in self.equations:
            if f.nvars != self.ambient_dim:
                raise ValueError("equation in the wrong number of variables")
            if not f:
                raise ValueError("zero equation; use a torus component for the whole torus")

    @classmethod
    def hypersurface(cls, f):
        return cls(f.nvars, (f,))

    def contains_identity(self):
        return all(f.coefficient_sum() == 0 for f in self.equations)

    def to_json(self):
        if len(self.equations) == 1:
            return self.equations[0].to_json()
        return {"equations": [f.to_json() for f in self.equations]}


@dataclass(frozen=True)
class VarietyDescription:
    ambient_dim: int
    tori: tuple = ()
    hypersurfaces: tuple = ()
    points: tuple = ()

    def __post_init__(self):
        n = self.ambient_dim
        object.__setattr__(self, "points", tuple(_reduce_mod1(p) for p in self.points))
        for c in self.tori:
            if c.ambient_dim != n:
                raise ValueError("torus component in the wrong ambient torus")
        for h in self.hypersurfaces:
            if h.ambient_dim != n:
                raise ValueError("hypersurface in the wrong ambient torus")
        for p in self.points:
            if len(p) != n:
                raise ValueError("point in the wrong ambient torus")

    def union(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return VarietyDescription(
            self.ambient_dim,
            self.tori + other.tori,
            self.hypersurfaces + other.hypersurfaces,
            self.points + other.points,
        ).normalized()

    def normalized(self):
        """Drop duplicate components and tori or points inside another torus."""
        tori = []
        for c in self.tori:
            if not any(torus_contains(d, c) for d in tori):
                tori = [d for d in tori if not torus_contains(c, d)] + [c]
        tori.sort(key=lambda c: (-c.dim, c.direction.basis, c.translate))
        points = []
        for p in self.points:
            if p not in points and not any(lattice_coset_contains(
                    [a - b for a, b in zip(p, c.translate)], c.direction) for c in tori):
                points.append(p)
        hyps = []
        for h in self.hypersurfaces:
            if h not in hyps:
                hyps.append(h)
        return VarietyDescription(self.ambient_dim, tuple(tori), tuple(hyps), tuple(sorted(points)))

    def to_json(self):
        return {
            "n": self.ambient_dim,
            "tori": [c.to_json() for c in self.tori],
            "hypersurfaces": [h.to_json() for h in self.hypersurfaces],
            "points": [[str(x) for x in p] for p in self.points],
        }


def identity_variety(n):
    return VarietyDescription(n, points=((Fraction(0),) * n,))


@dataclass(frozen=True)
class VarietyFiltration:
    ambient_dim: int
    layers: tuple

    def __post_init__(self):
        if self.layers:
            first = self.layers[0]
            ident = (Fraction(0),) * self.ambient_dim
            only_identity = (not first.hypersurfaces
                             and all(c.dim == 0 and not any(c.translate) for c in first.tori)
                             and all(p == ident for p in first.points)
                             and (first.tori or first.points))
            if not only_identity:
                raise ValueError("layer 0 of a filtration must be the identity point")

    @property
    def top(self):
        return len(self.layers) - 1


def lattice_coset_contains(q, V):
    """Whether ``(q + V) ∩ Z^n`` is nonempty, i.e. ``exp(2 pi i q)`` lies in
    ``exp(V ⊗ C)``."""
    q = [to_rat(x) for x in q]
    if len(q) != V.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if all(x.denominator == 1 for x in q):
        return True
    # need z ∈ Z^n with M z = M q, M an integer matrix cutting out V
    M = integerize_rows(V.equations()) if V.dim < V.ambient_dim else []
    if not M:
        return True
    target = [sum(a * b for a, b in zip(row, q)) for row in M]
    # the image lattice M Z^n is the row lattice of M^T
    H, _ = hermite_form([list(col) for col in zip(*M)])
    return in_integer_row_lattice(target, H)


def torus_contains(big, small):
    """Whether the translated torus ``small`` lies inside ``big``."""
    if not small.direction <= big.direction:
        return False
    diff = [a - b for a, b in zip(small.translate, big.translate)]
    return lattice_coset_contains(diff, big.direction)


def primitive_lattice_basis(P):
    """An ``n x r`` integer matrix whose columns are a Z-basis of ``P ∩ Z^n``."""
    n = P.ambient_dim
    if P.dim == 0:
        return [[] for _ in range(n)]
    if P.dim == n:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    K = integer_kernel(P.equations(), n)
    H, _ = hermite_form(K)
    H = [row for row in H if any(row)]
    return [[row[i] for row in H] for i in range(n)]


def _tau1_rec(f, V, memo, out):
    if V in memo:
        return
    memo.add(V)
    exps = list(f.terms)
    eqs = V.equations()
    # group exponents that no vector of V can separate
    classes = []
    for e in exps:
        for cls in classes:
            d = [a - b for a, b in zip(e, cls[0])]
            if V.dim == 0 or all(sum(x * y for x, y in zip(d, v)) == 0 for v in V.basis):
                cls.append(e)
                break
        else:
            classes.append([e])
    if all(sum(f.terms[e] for e in cls) == 0 for cls in classes):
        out.append(V)
        return
    if V.dim == 0:
        return
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            d = [a - b for a, b in zip(classes[i][0], classes[j][0])]
            sub = subspace_from_equations(eqs + [d], V.ambient_dim)
            _tau1_rec(f, sub, memo, out)


def tau1_polynomial(f):
    """Maximal rational subspaces ``V`` with ``f(exp(λz)) ≡ 0`` for ``z ∈ V``.

    Along ``exp(λz)`` the terms of ``f`` group by the value of ``<e, z>``; the
    restriction vanishes identically iff every group has zero coefficient sum.
    The recursion walks down from the whole space, forcing one more pair of
    exponents to collide each step.
    """
    out = []
    _tau1_rec(f, full_space(f.nvars), set(), out)
    return arrangement(f.nvars, out).members


def tau1_locus(locus):
    """Exponential tangent cone of a Laurent locus (intersection over its
    equations, since the cone commutes with intersections)."""
    n = locus.ambient_dim
    current = None
    for f in locus.equations:
        comps = tau1_polynomial(f)
        if current is None:
            current = list(comps)
        else:
            current = [intersect_subspaces(a, b) for a in current for b in comps]
        if not current:
            return ()
    return arrangement(n, current).members


def tau1(W):
    """Exponential tangent cone of ``W`` at the identity, as an irredundant
    arrangement of rational subspaces."""
    n = W.ambient_dim
    members = []
    for c in W.tori:
        if c.passes_through_identity():
            members.append(c.direction)
    for h in W.hypersurfaces:
        members.extend(tau1_locus(h))
    for p in W.points:
        if all(x == 0 for x in p):
            members.append(zero_space(n))
    return arrangement(n, members)


def sigma_r_contains(L, P):
    """Whether the plane ``P`` lies in the special Schubert variety of ``L``,
    i.e. ``P ∩ L ≠ 0``."""
    _check_ambient(L, P)
    if P.dim == 0:
        raise ValueError("P must have positive dimension")
    if L.dim == 0:
        return False
    return rat_rank(P.vectors() + L.vectors()) < P.dim + L.dim


def sphere_locus_contains(arr, chi):
    chi = [to_rat(x) for x in chi]
    if not any(chi):
        raise ValueError("χ must be nonzero")
    if len(chi) != arr.ambient_dim:
        raise ValueError("χ has the wrong length")
    return arr.contains_vector(chi)


@dataclass(frozen=True)
class Intersection:
    kind: str
    dim: int = -1

    @property
    def finite(self):
        return self.kind in (EMPTY, FINITE)


def torus_intersection_dim(P, C):
    """Shape of ``exp(P ⊗ C) ∩ C``.

    When nonempty the intersection is a finite union of cosets of
    ``exp((P ∩ L) ⊗ C)``.
    """
    _check_ambient(P, C.direction)
    if not lattice_coset_contains(C.translate, sum_subspaces(P, C.direction)):
        return Intersection(EMPTY, -1)
    d = intersect_subspaces(P, C.direction).dim
    return Intersection(FINITE, 0) if d == 0 else Intersection(POSITIVE, d)


def hypersurface_restriction(f, P):
    """Restriction of ``f`` to ``exp(P ⊗ C)``, in the coordinates of a
    primitive basis of ``P ∩ Z^n``."""
    if isinstance(f, LaurentLocus):
        f = f.equations[0]
    if f.nvars != P.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return f.substitute(primitive_lattice_basis(P))


def _classify(dim, r):
    if dim < 0:
        return Intersection(EMPTY, -1)
    if dim == 0:
        return Intersection(FINITE, 0)
    if dim == r:
        return Intersection(WHOLE, r)
    return Intersection(POSITIVE, dim)


def torus_hypersurface_finiteness(f, P):
    """Trichotomy for a hypersurface meeting ``exp(P ⊗ C)``."""
    if isinstance(f, LaurentLocus):
        f = f.equations[0]
    r = P.dim
    if r < 1:
        raise ValueError("P must have positive dimension")
    g = hypersurface_restriction(f, P)
    if not g:
        return Intersection(WHOLE, r)
    if g.is_monomial():
        return Intersection(EMPTY, -1)
    if r == 1:
        return Intersection(FINITE, 0)
    return Intersection(POSITIVE, r - 1)


def locus_intersection(locus, P):
    if len(locus.equations) == 1:
        return torus_hypersurface_finiteness(locus.equations[0], P)
    B = primitive_lattice_basis(P)
    restricted = [f.substitute(B) for f in locus.equations]
    return _classify(torus_zero_dimension(restricted, P.dim), P.dim)


def omega_obstruction(W, P):
    """First component meeting ``exp(P ⊗ C)`` in positive dimension, as a
    ``(kind, index, Intersection)`` triple, or ``None``."""
    if P.ambient_dim != W.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if P.dim < 1:
        raise ValueError("P must have positive dimension")
    for i, c in enumerate(W.tori):
        res = torus_intersection_dim(P, c)
        if not res.finite:
            return ("torus", i, res)
    for i, h in enumerate(W.hypersurfaces):
        res = locus_intersection(h, P)
        if not res.finite:
            return ("hypersurface", i, res)
    return None


def omega_contains(W, P):
    """Whether ``exp(P ⊗ C) ∩ W`` is finite."""
    return omega_obstruction(W, P) is None


def schubert_bound_contains(W, P):
    """Whether ``P`` avoids every special Schubert variety of the tangent cone."""
    return not any(sigma_r_contains(L, P) for L in tau1(W) if L.dim)


def sigma_bound_excludes(W, chi):
    """Whether ``chi`` is cut out of the Σ-bound by the tangent cone of ``W``."""
    return sphere_locus_contains(tau1(W), chi)


def hypersurface_omega_locus(f, r):
    """For ``r >= 2``: subspaces ``Z`` such that the ``r``-planes meeting the
    hypersurface finitely are exactly the planes inside some ``Z``.

    A plane qualifies iff the restricted polynomial has at most one term,
    i.e. iff the partition of exponents it induces has at most one block with
    nonzero coefficient sum.  Each such partition ``π`` defines the subspace
    ``Z_π`` orthogonal to all in-block differences.
    """
    if r < 2:
        raise ValueError("the monomial-unit analysis is for r >= 2")
    exps = sorted(f.terms)
    n = f.nvars
    found = []

    def blocks_ok(parts):
        return sum(1 for b in parts if sum(f.terms[e] for e in b) != 0) <= 1

    def partitions(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for sub in partitions(rest):
            for k in range(len(sub)):
                yield sub[:k] + [[first] + sub[k]] + sub[k + 1:]
            yield [[first]] + sub

    for parts in partitions(exps):
        if not blocks_ok(parts):
            continue
        diffs = [[a - b for a, b in zip(e, blk[0])] for blk in parts for e in blk[1:]]
        Z = subspace_from_equations(diffs, n) if diffs else full_space(n)
        if Z.dim >= r:
            found.append(Z)
    return arrangement(n, found).members


def _product_torus(c1, c2):
    n1, n2 = c1.ambient_dim, c2.ambient_dim
    vecs = [list(v) + [0] * n2 for v in c1.direction.basis]
    vecs += [[0] * n1 + list(v) for v in c2.direction.basis]
    return TranslatedTorus(c1.translate + c2.translate, span(vecs, n1 + n2))


def _torus_equations(c, offset, total):
    """Laurent equations with rational coefficients cutting out a translated
    torus of order at most 2, embedded at ``offset``."""
    if c.torsion_order > 2:
        raise NotImplementedError("torsion translates of order > 2 need cyclotomic coefficients")
    n = c.ambient_dim
    eqs = []
    for m in integer_kernel(c.direction.vectors(), n) if c.dim else \
            [[int(i == j) for j in range(n)] for i in range(n)]:
        if not any(m):
            continue
        sign = -1 if sum(a * b for a, b in zip(m, c.translate)).denominator == 2 else 1
        pos = [max(x, 0) for x in m]
        neg = [max(-x, 0) for x in m]
        e_pos = [0] * total
        e_neg = [0] * total
        e_pos[offset:offset + n] = pos
        e_neg[offset:offset + n] = neg
        eqs.append(LaurentPolynomial(total, {tuple(e_pos): 1, tuple(e_neg): -sign}))
    return eqs


def _locus_times_torus(locus, c, left):
    n1 = locus.ambient_dim
    n2 = c.ambient_dim
    total = n1 + n2
    if left:
        eqs = [f.embed(total, 0) for f in locus.equations]
        eqs += _torus_equations(c, n1, total)
    else:
        eqs = _torus_equations(c, 0, total)
        eqs += [f.embed(total, n2) for f in locus.equations]
    return LaurentLocus(total, tuple(eqs))


def _components(W):
    ident = [TranslatedTorus(p, zero_space(W.ambient_dim)) for p in W.points]
    return list(W.tori) + ident, list(W.hypersurfaces)


def product_varieties(W1, W2):
    """``W1 × W2`` inside ``(C^×)^{n1 + n2}``."""
    n1, n2 = W1.ambient_dim, W2.ambient_dim
    t1, h1 = _components(W1)
    t2, h2 = _components(W2)
    tori = [_product_torus(a, b) for a in t1 for b in t2]
    hyps = [_locus_times_torus(h, b, True) for h in h1 for b in t2]
    hyps += [_locus_times_torus(h, a, False) for a in t1 for h in h2]
    for a in h1:
        for b in h2:
            eqs = tuple(f.embed(n1 + n2, 0) for f in a.equations)
            eqs += tuple(f.embed(n1 + n2, n1) for f in b.equations)
            hyps.append(LaurentLocus(n1 + n2, eqs))
    return VarietyDescription(n1 + n2, tuple(tori), tuple(hyps)).normalized()


def product_filtration(WX, WY, top=None):
    """Layers ``⋃_{p+q=i} W^p(X) × W^q(Y)``."""
    if top is None:
        top = min(WX.top, WY.top)
    if top > WX.top or top > WY.top:
        raise ValueError(f"both filtrations must reach degree {top}")
    n = WX.ambient_dim + WY.ambient_dim
    layers = []
    for i in range(top + 1):
        acc = VarietyDescription(n)
        for p in range(i + 1):
            acc = acc.union(product_varieties(WX.layers[p], WY.layers[i - p]))
        layers.append(acc)
    return VarietyFiltration(n, tuple(layers))


def rationals_of_height(h):
    """Rationals ``a/b`` with ``|a|, b <= h`` in a fixed order."""
    vals = {Fraction(a, b) for b in range(1, h + 1) for a in range(-h, h + 1)}
    return sorted(vals, key=lambda x: (max(abs(x.numerator), x.denominator), x))


def grassmannian_points(n, r, height):
    """Every ``r``-plane in ``Q^n`` whose reduced echelon basis has entries
    of height at most ``height``; each plane is produced once."""
    from itertools import combinations
    vals = rationals_of_height(height)
    for pivots in combinations(range(n), r):
        free = [(i, j) for i in range(r) for j in range(n)
                if j > pivots[i] and j not in pivots]
        for choice in product(vals, repeat=len(free)):
            M = [[Fraction(0)] * n for _ in range(r)]
            for i, p in enumerate(pivots):
                M[i][p] = Fraction(1)
            for (i, j), v in zip(free, choice):
                M[i][j] = v
            yield RationalSubspace(n, tuple(tuple(row) for row in M))


@dataclass(frozen=True)
class StrictnessWitness:
    plane: RationalSubspace
    component: int
    obstruction: tuple
    attempts: int
    extra: dict = field(default_factory=dict)


def _avoids(P, members):
    return not any(sigma_r_contains(L, P) for L in members if L.dim)


def strictness_witness(W, r, height=2, budget=2000, seed=0):
    """Search for a rational ``r``-plane ``P`` with ``P ∩ τ₁(W) = 0`` that
    still meets ``W`` in positive dimension.

    For a translated component ``(q, L)`` away from the identity, take a
    vector of ``L`` together with a lift ``q + z`` (``z`` integral), then pad
    with ``r - 2`` bounded-height vectors.  Such planes meet the component along a
    coset of ``exp((P ∩ L) ⊗ C)``; they only need to dodge the tangent cone.
    If no such component helps, bounded-height planes are scanned directly.
    Enumeration is deterministic for a fixed ``seed``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    n = W.ambient_dim
    if r > n:
        return None
    members = tau1(W).members
    rng = random.Random(seed)
    vals = rationals_of_height(height)
    attempts = 0
    if r >= 2:
        for idx, c in enumerate(W.tori):
            if c.dim == 0 or c.passes_through_identity():
                continue
            lbasis = c.direction.integer_basis()
            q = list(c.translate)
            for k in range(budget):
                attempts += 1
                if attempts > budget:
                    break
                if k == 0:
                    lv = lbasis[0]
                    z = [0] * n
                    extra = []
                else:
                    lv = [sum(rng.choice(vals) * v[i] for v in lbasis) for i in range(n)]
                    if not any(lv):
                        continue
                    z = [rng.randint(-1, 1) for _ in range(n)]
                    extra = []
                if len(extra) < r - 2:
                    extra += [[rng.choice(vals) for _ in range(n)] for _ in range(r - 2 - len(extra))]
                P = span([lv, [a + b for a, b in zip(q, z)]] + extra, n)
                if P.dim != r or not _avoids(P, members):
                    continue
                obs = omega_obstruction(W, P)
                if obs is not None:
                    return StrictnessWitness(P, idx, obs, attempts)
    # generic fallback: bounded-height planes in a fixed order
    for P in grassmannian_points(n, r, height):
        attempts += 1
        if attempts > budget:
            break
        if not _avoids(P, members):
            continue
        obs = omega_obstruction(W, P)
        if obs is not None:
            return StrictnessWitness(P, -1, obs, attempts)
    return None


def sigma_gap_direction(W, P):
    """A rational ``χ ∈ P`` that the τ₁-bound does not exclude.

    If ``P`` avoids ``τ₁(W)`` but is not in the Ω-set, the unit sphere of
    ``P`` cannot lie in Σ, so some ``χ`` like this one is missing from Σ
    although the bound keeps it.
    """
    for v in P.integer_basis():
        if not sigma_bound_excludes(W, v):
            return v
    return None


def variety_from_json(data):
    """Parse ``{"n", "tori": [{"q", "L"}], "hypersurfaces": [...], "points": [...]}``.

    A hypersurface entry is ``{"terms": [{"exp", "coef"}]}``; a locus with
    several equations is ``{"equations": [{"terms": ...}, ...]}``.
    """
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["n"])
    tori = []
    for c in data.get("tori", []):
        q = [to_rat(str(x)) for x in c.get("q", ["0"] * n)]
        L = [[to_rat(str(x)) for x in v] for v in c.get("L", [])]
        tori.append(TranslatedTorus(tuple(q), span(L, n)))
    hyps = []
    for h in data.get("hypersurfaces", []):
        eqs = h["equations"] if "equations" in h else [h]
        hyps.append(LaurentLocus(n, tuple(LaurentPolynomial.from_json(e, n) for e in eqs)))
    points = [tuple(to_rat(str(x)) for x in p) for p in data.get("points", [])]
    return VarietyDescription(n, tuple(tori), tuple(hyps), tuple(points))


def parse_plane(text, n=None):
    """``"1,1,0;0,0,1"`` -> span of the listed vectors."""
    rows = [[to_rat(x) for x in r.split(",")] for r in text.split(";") if r.strip()]
    return span(rows, n)
