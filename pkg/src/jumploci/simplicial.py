"""Finite abstract simplicial complexes and their reduced homology.

A complex is stored through its facets.  Two degenerate complexes are kept
apart on purpose: the *void* complex has no faces at all, while the *empty*
complex ``{∅}`` consists of the empty simplex only.  The latter arises as the
induced subcomplex on no vertices and as the link of a facet; its reduced
homology is one-dimensional in degree -1.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations

import networkx as nx

from .exactlin import field_rank, int_rank, is_prime, smith_form

__all__ = [
    "SimplicialComplex",
    "HomologyProfile",
    "build_complex",
    "void_complex",
    "empty_complex",
    "simplex",
    "induced_subcomplex",
    "link",
    "relative_link",
    "flag_complex",
    "is_flag",
    "barycentric_subdivision",
    "boundary_matrix",
    "reduced_homology",
    "parse_coeffs",
    "rp2_six_vertex",
    "complex_from_json",
]


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: frozenset

    def __repr__(self):
        fs = sorted((tuple(sorted(f)) for f in self.facets), key=lambda t: (len(t), t))
        return f"SimplicialComplex(vertices={self.vertices!r}, facets={fs!r})"

    @property
    def is_void(self):
        return not self.facets

    @cached_property
    def _faces_by_dim(self):
        out = {}
        seen = set()
        for facet in self.facets:
            for k in range(len(facet) + 1):
                for sub in combinations(sorted(facet), k):
                    if sub not in seen:
                        seen.add(sub)
                        out.setdefault(k - 1, []).append(sub)
        for d in out:
            out[d].sort()
        return out

    @cached_property
    def _face_set(self):
        return frozenset(frozenset(f) for fs in self._faces_by_dim.values() for f in fs)

    def faces(self, dim):
        """Sorted vertex tuples of the ``dim``-dimensional faces."""
        return list(self._faces_by_dim.get(dim, []))

    def all_faces(self):
        return [f for d in sorted(self._faces_by_dim) for f in self._faces_by_dim[d]]

    def has_face(self, sigma):
        return frozenset(sigma) in self._face_set

    @property
    def dim(self):
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def f_vector(self):
        """Face counts in dimensions 0, 1, ..., dim."""
        return tuple(len(self._faces_by_dim.get(d, [])) for d in range(self.dim + 1))

    def edges(self):
        return self.faces(1)

    def euler_characteristic(self):
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "facets": sorted((sorted(f) for f in self.facets), key=lambda t: (len(t), t)),
        }


def build_complex(facets, vertices=None):
    """Complex generated by ``facets``; dominated faces are dropped.

    ``vertices`` may declare extra labels (they become 0-simplices), but every
    label used by a facet must be declared.
    """
    fs = {frozenset(f) for f in facets}
    if vertices is not None:
        declared = set(vertices)
        used = set().union(*fs) if fs else set()
        if not used <= declared:
            raise ValueError(f"facets use undeclared vertices {sorted(used - declared)}")
        fs |= {frozenset([v]) for v in declared}
    maximal = frozenset(f for f in fs if not any(f < g for g in fs))
    verts = tuple(sorted(set().union(*maximal))) if maximal else ()
    return SimplicialComplex(verts, maximal)


def void_complex():
    return SimplicialComplex((), frozenset())


def empty_complex():
    return SimplicialComplex((), frozenset([frozenset()]))


def simplex(vertices):
    return build_complex([vertices])


def induced_subcomplex(K, W):
    """Faces of ``K`` whose vertices all lie in ``W``."""
    W = frozenset(W)
    if not W <= set(K.vertices):
        raise ValueError(f"{sorted(W - set(K.vertices))} are not vertices of the complex")
    if K.is_void:
        return void_complex()
    facets = {f & W for f in K.facets}
    return build_complex(facets)


def link(K, sigma):
    """``{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}``; the link of ∅ is ``K`` itself."""
    sigma = frozenset(sigma)
    if not K.has_face(sigma):
        raise ValueError(f"{sorted(sigma)} is not a face of the complex")
    facets = {f - sigma for f in K.facets if sigma <= f}
    return build_complex(facets)


def relative_link(K, W, sigma):
    """Link of ``σ`` inside the subcomplex induced on ``W`` for ``σ`` disjoint
    from ``W``: the faces ``τ ⊆ W`` with ``τ ∪ σ ∈ K``."""
    sigma = frozenset(sigma)
    W = frozenset(W)
    if sigma & W:
        raise ValueError("σ must be disjoint from W")
    return link(induced_subcomplex(K, W | sigma), sigma)


def _graph(K):
    g = nx.Graph()
    g.add_nodes_from(K.vertices)
    g.add_edges_from(K.edges())
    return g


def flag_complex(K):
    """Clique complex of the 1-skeleton of ``K``."""
    if K.is_void:
        return void_complex()
    if not K.vertices:
        return empty_complex()
    return build_complex(nx.find_cliques(_graph(K)))


def is_flag(K):
    return flag_complex(K) == K


def barycentric_subdivision(K):
    """Order complex of the face poset; vertices are sorted face tuples."""
    if K.is_void:
        return void_complex()
    if not K.vertices:
        return empty_complex()
    facets = []
    for f in K.facets:
        for perm in permutations(sorted(f)):
            facets.append([tuple(sorted(perm[: k + 1])) for k in range(len(perm))])
    return build_complex(facets)


def boundary_matrix(K, d):
    """Matrix of the augmented boundary ``C_d -> C_{d-1}``.

    Rows index the (d-1)-faces and columns the d-faces, both in label order;
    ``C_{-1}`` is spanned by the empty simplex.
    """
    rows = K.faces(d - 1)
    cols = K.faces(d)
    index = {f: i for i, f in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            M[index[sub]][j] = -1 if pos % 2 else 1
    return M


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology; ``ranks[0]`` is degree -1."""

    ranks: tuple
    torsion: tuple = field(default=())
    coeffs: str = "Q"

    def rank(self, degree):
        i = degree + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def torsion_in(self, degree):
        i = degree + 1
        return self.torsion[i] if 0 <= i < len(self.torsion) else ()

    def vanishes(self, degree):
        return self.rank(degree) == 0 and not self.torsion_in(degree)

    def nonzero_degrees(self):
        return [j - 1 for j in range(len(self.ranks)) if not self.vanishes(j - 1)]

    def reduced_euler(self):
        return sum((-1) ** (i - 1) * r for i, r in enumerate(self.ranks))


def parse_coeffs(coeffs):
    """Normalise a coefficient choice.  Fields come back as ``"Q"`` or an int
    prime; the integers as ``"Z"``."""
    if isinstance(coeffs, int):
        if not is_prime(coeffs):
            raise ValueError(f"{coeffs} is not prime")
        return coeffs
    c = str(coeffs).strip().lower()
    if c in ("q", "qq", "rational", "r", "real"):
        return "Q"
    if c in ("z", "zz", "integer"):
        return "Z"
    for prefix in ("zp:", "gf", "gf(", "f"):
        if c.startswith(prefix):
            p = int(c[len(prefix):].rstrip(")"))
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            return p
    raise ValueError(f"unknown coefficient ring {coeffs!r}")


def reduced_homology(K, coeffs="Q"):
    """Reduced simplicial homology; ``coeffs`` is parsed by :func:`parse_coeffs`."""
    coeffs = parse_coeffs(coeffs)
    if K.is_void:
        return HomologyProfile((), (), str(coeffs))
    top = K.dim
    f = {d: len(K.faces(d)) for d in range(-1, top + 1)}
    rk = {}
    inv = {}
    for d in range(0, top + 1):
        M = boundary_matrix(K, d)
        if coeffs == "Z":
            snf = smith_form(M)
            rk[d] = snf.rank
            inv[d] = snf.torsion()
        elif coeffs == "Q":
            rk[d] = int_rank(M)
        else:
            rk[d] = field_rank(M, coeffs)
    ranks = []
    torsion = []
    for d in range(-1, top + 1):
        ranks.append(f[d] - rk.get(d, 0) - rk.get(d + 1, 0))
        torsion.append(tuple(sorted(inv.get(d + 1, ()))) if coeffs == "Z" else ())
    return HomologyProfile(tuple(ranks), tuple(torsion), str(coeffs))


def rp2_six_vertex():
    """The minimal 6-vertex triangulation of the real projective plane."""
    faces = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ]
    return build_complex(faces)


def _hashable(x):
    return tuple(_hashable(y) for y in x) if isinstance(x, list) else x


def complex_from_json(data):
    """Inverse of :meth:`SimplicialComplex.to_json`; list labels such as
    those of a subdivision come back as tuples."""
    facets = [[_hashable(v) for v in f] for f in data["facets"]]
    verts = data.get("vertices")
    if verts is not None:
        verts = [_hashable(v) for v in verts]
    return build_complex(facets, verts)
