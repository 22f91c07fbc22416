"""Fox calculus for finitely presented groups, leading to Alexander
matrices and degree-one characteristic varieties.

Words are tuples of nonzero ints: ``k`` stands for the generator ``x_k``
(1-based) and ``-k`` for its inverse.  Elements of the integral group ring
of the free group are dicts from freely reduced words to nonzero ints.
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactlin import hermite_form, rat_rank, smith_form
from .laurent import LaurentPolynomial, torus_zero_dimension
from .varieties import primitive_lattice_basis

__all__ = [
    "GroupPresentation",
    "AbelianizationData",
    "free_reduce",
    "inverse_word",
    "ring_add",
    "ring_mul",
    "ring_scale",
    "fox_derivative",
    "abelianize",
    "alexander_matrix",
    "evaluate_alexander",
    "h1_dimension",
    "cv1_contains",
    "cv1_torus_restriction",
    "cv1_omega_contains",
    "parse_presentation",
    "presentation_from_json",
]


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(word):
    return tuple(-x for x in reversed(word))


def ring_add(a, b):
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + c
        if not out[w]:
            del out[w]
    return out


def ring_scale(a, k):
    return {w: c * k for w, c in a.items()} if k else {}


def ring_mul(a, b):
    out = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = free_reduce(w1 + w2)
            out[w] = out.get(w, 0) + c1 * c2
            if not out[w]:
                del out[w]
    return out


def fox_derivative(word, j):
    """``∂w/∂x_j`` in the group ring of the free group."""
    out = {}
    prefix = ()
    for x in word:
        if x == j:
            out = ring_add(out, {free_reduce(prefix): 1})
        elif x == -j:
            out = ring_add(out, {free_reduce(prefix + (x,)): -1})
        prefix = prefix + (x,)
    return out


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        g = len(self.generators)
        if len(set(self.generators)) != g:
            raise ValueError("repeated generator label")
        rels = []
        for r in self.relators:
            for x in r:
                if not isinstance(x, int) or x == 0 or abs(x) > g:
                    raise ValueError(f"relator letter {x!r} does not name a generator")
            rels.append(free_reduce(tuple(r)))
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self):
        return len(self.generators)

    def exponent_matrix(self):
        """Exponent sums: one row per relator, one column per generator."""
        M = []
        for r in self.relators:
            row = [0] * self.ngens
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            M.append(row)
        return M

    def word_to_string(self, word):
        if not word:
            return "1"
        parts = []
        for x in word:
            name = self.generators[abs(x) - 1]
            parts.append(name if x > 0 else f"{name}^-1")
        return " ".join(parts)

    def to_json(self):
        return {"generators": list(self.generators), "relators": [list(r) for r in self.relators]}


def _parse_word(text, index):
    word = []
    for tok in text.split():
        m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?", tok)
        if not m or m.group(1) not in index:
            raise ValueError(f"cannot parse {tok!r} as a generator power")
        e = int(m.group(2) or 1)
        k = index[m.group(1)]
        word.extend([k if e > 0 else -k] * abs(e))
    return word


def parse_presentation(text):
    """Parse ``gens: x1 x2 ; rels: x1 x2 x1^-1 x2^-2, ...``.

    Relators are separated by commas; letters inside a relator by spaces.
    """
    fields = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, _, val = part.partition(":")
        fields[key.strip().lower()] = val.strip()
    if "gens" not in fields:
        raise ValueError("presentation needs a 'gens:' field")
    gens = fields["gens"].split()
    index = {g: i + 1 for i, g in enumerate(gens)}
    rels = [_parse_word(r, index) for r in fields.get("rels", "").split(",") if r.strip()]
    return GroupPresentation(tuple(gens), tuple(map(tuple, rels)))


def presentation_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    gens = data["generators"]
    if isinstance(gens, int):
        gens = [f"x{i + 1}" for i in range(gens)]
    return GroupPresentation(tuple(gens), tuple(tuple(r) for r in data["relators"]))


@dataclass(frozen=True)
class AbelianizationData:
    """``proj[j]`` is the image of generator ``j`` in ``Z^rank``;
    ``torsion_proj[j]`` its image in the torsion summands."""

    rank: int
    torsion: tuple
    proj: tuple
    torsion_proj: tuple


def abelianize(P):
    E = P.exponent_matrix()
    g = P.ngens
    if not E:
        snf_rank, diag = 0, ()
        R = [[int(i == j) for j in range(g)] for i in range(g)]
    else:
        snf = smith_form(E)
        snf_rank, diag = snf.rank, snf.diag
        R = [list(row) for row in snf.right]
    n = g - snf_rank
    # generator j lands on row j of the right transform
    free = [R[j][snf_rank:] for j in range(g)]
    tors_idx = [k for k, d in enumerate(diag) if d > 1]
    tors = [tuple(R[j][k] % diag[k] for k in tors_idx) for j in range(g)]
    if n:
        # canonical basis: Hermite form of the transposed image matrix
        H, _ = hermite_form([list(col) for col in zip(*free)])
        free = [[H[s][j] for s in range(n)] for j in range(g)]
    return AbelianizationData(n, tuple(diag[k] for k in tors_idx),
                              tuple(tuple(v) for v in free), tuple(tors))


def _abelianize_element(elem, ab):
    n = ab.rank
    terms = {}
    for w, c in elem.items():
        e = [0] * n
        for x in w:
            v = ab.proj[abs(x) - 1]
            s = 1 if x > 0 else -1
            for i in range(n):
                e[i] += s * v[i]
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return LaurentPolynomial(n, terms)


def alexander_matrix(P, ab=None):
    """Fox derivatives of the relators pushed to ``Z[Z^n]``; rows are
    relators and columns generators."""
    ab = ab or abelianize(P)
    if ab.rank == 0:
        raise ValueError("the abelianization has rank 0, so there is no character torus")
    return [[_abelianize_element(fox_derivative(r, j + 1), ab) for j in range(P.ngens)]
            for r in P.relators]


def evaluate_alexander(A, rho):
    return [[f.evaluate(rho) for f in row] for row in A]


def _check_rho(rho, n):
    rho = [Fraction(x) for x in rho]
    if len(rho) != n:
        raise ValueError(f"character has {len(rho)} coordinates, expected {n}")
    if any(x == 0 for x in rho):
        raise ValueError("character coordinates must be nonzero")
    return rho


def h1_dimension(P, rho, ab=None, A=None):
    """``dim H_1`` of the presentation complex with coefficients twisted by
    the rational character ``rho``."""
    ab = ab or abelianize(P)
    rho = _check_rho(rho, ab.rank)
    if all(x == 1 for x in rho):
        return ab.rank
    A = A if A is not None else alexander_matrix(P, ab)
    rank = rat_rank(evaluate_alexander(A, rho)) if A else 0
    return P.ngens - 1 - rank


def cv1_contains(P, rho, d=1, ab=None, A=None):
    if d < 1:
        raise ValueError("depth must be at least 1")
    return h1_dimension(P, rho, ab, A) >= d


def _det(M):
    """Determinant by cofactor expansion along the first row; entries may be
    elements of any commutative ring."""
    k = len(M)
    if k == 0:
        return 1
    if k == 1:
        return M[0][0]
    total = None
    for j in range(k):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else M[0][0] * 0


def cv1_torus_restriction(P, Q, ab=None):
    """Nonzero ``(g-1)``-minors of the Alexander matrix restricted to
    ``exp(Q ⊗ C)`` in the coordinates of a primitive basis of ``Q ∩ Z^n``.

    Away from the identity a character lies in ``V^1`` iff all these vanish.
    An empty result therefore means the whole subtorus lies in ``V^1``.
    """
    ab = ab or abelianize(P)
    if Q.ambient_dim != ab.rank:
        raise ValueError("subspace lives in the wrong ambient space")
    if Q.dim < 1:
        raise ValueError("Q must have positive dimension")
    A = alexander_matrix(P, ab)
    B = primitive_lattice_basis(Q)
    g = P.ngens
    k = g - 1
    out = []
    if k == 0:
        return [LaurentPolynomial.constant(Q.dim, 1)]
    for rows in combinations(range(len(A)), k):
        for cols in combinations(range(g), k):
            m = _det([[A[i][j] for j in cols] for i in rows])
            if not m:
                continue
            g_restricted = m.substitute(B)
            if g_restricted and g_restricted not in out:
                out.append(g_restricted)
    return out


def cv1_omega_contains(P, Q, ab=None):
    """Whether ``exp(Q ⊗ C)`` meets ``W^1`` in finitely many points."""
    polys = cv1_torus_restriction(P, Q, ab)
    return torus_zero_dimension(polys, Q.dim) <= 0
