"""Jump loci and Σ-invariants of toric complexes and right-angled Artin
groups, read off the homology of links.

Throughout, ``L`` is a simplicial complex whose vertex order fixes the
coordinates of ``H^1(T_L) = k^V``.  Supports ``W`` are frozensets of vertex
labels; the empty support stands for the identity character.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactlin import to_rat
from .fox import GroupPresentation
from .simplicial import induced_subcomplex, is_flag, parse_coeffs, reduced_homology, relative_link
from .varieties import (
    TranslatedTorus,
    VarietyDescription,
    arrangement,
    coordinate_subspace,
    sigma_r_contains,
)

__all__ = [
    "CoordinateSupportFamily",
    "MAX_VERTICES",
    "support_certificate",
    "toric_supports",
    "toric_resonance",
    "toric_cv",
    "toric_omega_contains",
    "raag_sigma_certificate",
    "raag_sigma_contains",
    "raag_presentation",
]

MAX_VERTICES = 16


@dataclass(frozen=True)
class CoordinateSupportFamily:
    degree: int
    coeffs: str
    vertices: tuple
    supports: tuple

    def indices(self, W):
        pos = {v: k for k, v in enumerate(self.vertices)}
        return sorted(pos[v] for v in W)

    def to_json(self):
        return {"degree": self.degree, "coeffs": self.coeffs,
                "supports": [sorted(W) for W in self.supports]}


def _faces_with_empty(K):
    """Faces of ``K`` including the empty simplex, smallest first."""
    if K.is_void:
        return []
    return K.all_faces()


def support_certificate(L, W, i, coeffs="Q"):
    """A triple ``(σ, degree, homology)`` showing that the subtorus on ``W``
    lies in ``V^i``: ``σ`` is a face of ``L`` on ``V ∖ W`` and the reduced
    homology of the link of ``σ`` in ``L_W`` is nonzero in a degree between
    -1 and ``i - 1 - |σ|``.  Returns ``None`` if there is none.
    """
    W = frozenset(W)
    rest = frozenset(L.vertices) - W
    for sigma in _faces_with_empty(induced_subcomplex(L, rest)):
        top = i - 1 - len(sigma)
        if top < -1:
            continue
        H = reduced_homology(relative_link(L, W, sigma), coeffs)
        for deg in range(-1, top + 1):
            if not H.vanishes(deg):
                return (tuple(sigma), deg, H)
    return None


def toric_supports(L, i, coeffs="Q", max_vertices=MAX_VERTICES):
    """Maximal supports ``W`` with ``(k^×)^W ⊆ V^i(T_L, k)``."""
    if i < 1:
        raise ValueError("degree must be at least 1")
    coeffs = parse_coeffs(coeffs)
    V = tuple(L.vertices)
    if len(V) > max_vertices:
        raise ValueError(f"{len(V)} vertices exceeds the cap of {max_vertices}")
    found = []
    for size in range(len(V), -1, -1):
        for W in combinations(V, size):
            W = frozenset(W)
            if any(W <= F for F in found):
                continue
            if support_certificate(L, W, i, coeffs) is not None:
                found.append(W)
    found.sort(key=lambda W: (-len(W), sorted(V.index(v) for v in W)))
    return CoordinateSupportFamily(i, str(coeffs), V, tuple(found))


def toric_resonance(L, i, coeffs="Q"):
    fam = toric_supports(L, i, coeffs)
    n = len(fam.vertices)
    return arrangement(n, [coordinate_subspace(n, fam.indices(W)) for W in fam.supports])


def toric_cv(L, i, coeffs="Q"):
    fam = toric_supports(L, i, coeffs)
    n = len(fam.vertices)
    tori = [TranslatedTorus((Fraction(0),) * n, coordinate_subspace(n, fam.indices(W)))
            for W in fam.supports]
    return VarietyDescription(n, tuple(tori)).normalized()


def toric_omega_contains(L, i, r, P):
    """Dwyer-Fried membership: ``P`` must avoid every resonance subspace."""
    if P.dim != r:
        raise ValueError(f"plane has dimension {P.dim}, expected {r}")
    R = toric_resonance(L, i, "Q")
    if P.ambient_dim != R.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return not any(sigma_r_contains(M, P) for M in R if M.dim)


def raag_sigma_certificate(L, chi, i, coeffs="Z"):
    """The first obstruction ``(σ, degree, homology)`` to ``χ ∈ Σ^i(G_L, k)``,
    or ``None`` when ``χ`` is in Σ.

    With ``W`` the support of ``χ``, membership needs the link of every face
    ``σ`` of ``L`` on ``V ∖ W`` (the empty face included) inside ``L_W`` to
    have vanishing reduced homology in degrees ``-1 .. i - |σ| - 1``.  Over
    Z a torsion group counts as nonvanishing.
    """
    if not is_flag(L):
        raise ValueError("Σ-invariants of a right-angled Artin group need a flag complex")
    chi = [to_rat(x) for x in chi]
    V = tuple(L.vertices)
    if len(chi) != len(V):
        raise ValueError(f"χ needs {len(V)} coordinates")
    if not any(chi):
        raise ValueError("χ must be nonzero")
    coeffs = parse_coeffs(coeffs)
    W = frozenset(v for v, x in zip(V, chi) if x)
    rest = frozenset(V) - W
    for sigma in _faces_with_empty(induced_subcomplex(L, rest)):
        top = i - len(sigma) - 1
        if top < -1:
            continue
        H = reduced_homology(relative_link(L, W, sigma), coeffs)
        for deg in range(-1, top + 1):
            if not H.vanishes(deg):
                return (tuple(sigma), deg, H)
    return None


def raag_sigma_contains(L, chi, i, coeffs="Z"):
    return raag_sigma_certificate(L, chi, i, coeffs) is None


def raag_presentation(L):
    """One generator per vertex and a commutator ``v w v^-1 w^-1`` per edge."""
    V = tuple(L.vertices)
    pos = {v: k + 1 for k, v in enumerate(V)}
    rels = [(pos[v], pos[w], -pos[v], -pos[w]) for v, w in L.edges()]
    return GroupPresentation(tuple(str(v) for v in V), tuple(rels))
