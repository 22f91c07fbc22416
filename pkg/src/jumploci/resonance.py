"""Finite graded-commutative algebras and their resonance varieties.

An algebra is given by left multiplication tables for degree-one classes.
``mult[j][i]`` is the ``b_j x b_{j+1}`` matrix of ``f -> e_i * f`` on
``A^j``, in row-vector convention (row ``s`` holds ``e_i * f_s``).  Degree 0
is spanned by the unit and needs no table.  Membership in resonance
varieties is decided pointwise through ranks of the Aomoto complex.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactlin import field_rank, rat_rank, to_rat
from .simplicial import parse_coeffs

__all__ = [
    "GradedAlgebra",
    "AomotoComplex",
    "build_algebra",
    "exterior_quotient",
    "aomoto",
    "cohomology_dims",
    "resonance_contains",
    "resonance_upto_contains",
    "algebra_from_json",
]


def _zero(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def _mul(A, B, cols):
    if not A:
        return []
    return [[sum((row[k] * B[k][c] for k in range(len(row))), Fraction(0)) for c in range(cols)]
            for row in A]


def _is_zero(M, field):
    if field == "Q":
        return all(x == 0 for row in M for x in row)
    return all(_mod(x, field) == 0 for row in M for x in row)


def _mod(x, p):
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass(frozen=True)
class GradedAlgebra:
    field: object
    dims: tuple
    mult: tuple
    torsion: bool = False

    @property
    def top(self):
        return len(self.dims) - 1

    def table(self, j, i):
        """Left multiplication by ``e_i`` on ``A^j``."""
        if j == 0:
            row = [Fraction(0)] * self.dims[1]
            row[i] = Fraction(1)
            return [row]
        return self.mult[j][i]

    def rank(self, M):
        if not M or not M[0]:
            return 0
        return rat_rank(M) if self.field == "Q" else field_rank(M, self.field)

    def to_json(self):
        return {
            "field": "Q" if self.field == "Q" else f"zp:{self.field}",
            "dims": list(self.dims),
            "mult": {str(j): [[[str(x) for x in row] for row in M] for M in self.mult[j]]
                     for j in range(1, len(self.mult))},
            "torsion": self.torsion,
        }


def build_algebra(field, dims, mult, torsion=False):
    """Validate the tables and return a :class:`GradedAlgebra`.

    ``mult`` maps each degree ``j >= 1`` with ``j + 1 <= top`` to the list of
    ``b_1`` tables; a list indexed from degree 1 is also accepted.
    """
    field = parse_coeffs(field)
    if field == "Z":
        raise ValueError("algebras are defined over Q or GF(p)")
    if field == 2 and torsion:
        raise ValueError("characteristic 2 needs torsion-free integral first homology")
    dims = tuple(int(b) for b in dims)
    if not dims or dims[0] != 1:
        raise ValueError("dims must start with b_0 = 1")
    if any(b < 0 for b in dims):
        raise ValueError("negative dimension")
    top = len(dims) - 1
    if isinstance(mult, dict):
        mult = {int(k): v for k, v in mult.items()}
    else:
        mult = {j + 1: v for j, v in enumerate(mult)}
    b1 = dims[1] if top >= 1 else 0
    tables = [None]
    for j in range(1, top):
        if j not in mult:
            raise ValueError(f"missing multiplication tables in degree {j}")
        ts = mult[j]
        if len(ts) != b1:
            raise ValueError(f"degree {j}: expected {b1} tables, got {len(ts)}")
        clean = []
        for M in ts:
            M = [[to_rat(x) for x in row] for row in M]
            if len(M) != dims[j] or any(len(row) != dims[j + 1] for row in M):
                raise ValueError(f"degree {j}: table shape must be {dims[j]} x {dims[j + 1]}")
            clean.append(M)
        tables.append(tuple(clean))
    extra = sorted(k for k in mult if k >= top or k < 1)
    if extra:
        raise ValueError(f"tables given for degrees {extra} beyond the top degree")
    alg = GradedAlgebra(field, dims, tuple(tables), bool(torsion))
    _check_graded_commutative(alg)
    return alg


def _check_graded_commutative(alg):
    """``e_i (e_k f) = -e_k (e_i f)`` and ``e_i (e_i f) = 0`` for all basis
    elements; at ``f = 1`` this is anticommutativity of degree-one classes,
    and in general it is what makes ``a * a`` act as zero."""
    b1 = alg.dims[1] if alg.top >= 1 else 0
    for j in range(0, alg.top - 1):
        width = alg.dims[j + 2]
        for i in range(b1):
            Mi = alg.table(j, i)
            if not _is_zero(_mul(Mi, alg.table(j + 1, i), width), alg.field):
                raise ValueError(f"e_{i + 1} squares to a nonzero element on degree {j}")
            for k in range(i + 1, b1):
                Mk = alg.table(j, k)
                s = _mul(Mk, alg.table(j + 1, i), width)
                t = _mul(Mi, alg.table(j + 1, k), width)
                tot = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(s, t)]
                if not _is_zero(tot, alg.field):
                    raise ValueError(
                        f"e_{i + 1} and e_{k + 1} do not anticommute on degree {j}")


def exterior_quotient(n, relations, top=2, field="Q"):
    """Exterior algebra on ``n`` generators modulo the ideal generated by
    degree-two ``relations``, truncated above degree ``top``.

    A relation is a dict from pairs ``(i, j)`` with ``i < j`` (0-based) to
    coefficients, meaning ``Σ c e_i e_j``.  Quotient bases are the
    monomials that are not leading terms of the ideal, in lex order.
    """
    field = parse_coeffs(field)
    if field == "Z":
        raise ValueError("algebras are defined over Q or GF(p)")
    norm = (lambda x: Fraction(x)) if field == "Q" else (lambda x: Fraction(_mod(x, field)))
    monos = [list(combinations(range(n), j)) for j in range(top + 1)]
    index = [{m: k for k, m in enumerate(ms)} for ms in monos]

    def wedge(a, b):
        """Sign and monomial of ``a ∧ b`` for sorted tuples, or ``None``."""
        if set(a) & set(b):
            return None
        seq = list(a) + list(b)
        sign = 1
        for x in range(len(seq)):
            for y in range(x + 1, len(seq)):
                if seq[x] > seq[y]:
                    sign = -sign
        return sign, tuple(sorted(seq))

    # spanning rows of the ideal in each degree, then a reduced echelon basis
    reducers = [{} for _ in range(top + 1)]
    for j in range(2, top + 1):
        rows = []
        for rel in relations:
            for m in monos[j - 2]:
                v = [Fraction(0)] * len(monos[j])
                for (a, b), c in rel.items():
                    if a == b:
                        continue
                    sgn = 1
                    if a > b:
                        a, b, sgn = b, a, -1
                    w = wedge((a, b), m)
                    if w:
                        v[index[j][w[1]]] += sgn * w[0] * to_rat(c)
                rows.append([norm(x) for x in v])
        reducers[j] = _echelon(rows, field)
    basis = []
    for j in range(top + 1):
        basis.append([m for m in monos[j] if index[j][m] not in reducers[j]])
    dims = tuple(len(b) for b in basis)

    def reduce(vec, j):
        v = list(vec)
        for piv, row in reducers[j].items():
            if v[piv]:
                c = v[piv]
                v = [norm(a - c * b) for a, b in zip(v, row)]
        return [v[index[j][m]] for m in basis[j]]

    mult = {}
    for j in range(1, top):
        tables = []
        for i in range(n):
            M = []
            for m in basis[j]:
                v = [Fraction(0)] * len(monos[j + 1])
                w = wedge((i,), m)
                if w:
                    v[index[j + 1][w[1]]] = Fraction(w[0])
                M.append(reduce(v, j + 1))
            tables.append(M)
        mult[j] = tables
    if top >= 1:
        dims = (1,) + dims[1:]
    return build_algebra("Q" if field == "Q" else field, dims, mult)


def _echelon(rows, field):
    """Fully reduced echelon form as ``{pivot_column: row}``."""
    if field == "Q":
        inv = lambda x: 1 / x
        norm = lambda x: x
    else:
        inv = lambda x: Fraction(pow(int(x), -1, field))
        norm = lambda x: Fraction(_mod(x, field))
    out = {}
    for row in rows:
        v = list(row)
        for piv, r in out.items():
            if v[piv]:
                c = v[piv]
                v = [norm(a - c * b) for a, b in zip(v, r)]
        lead = next((k for k, x in enumerate(v) if x), None)
        if lead is None:
            continue
        s = inv(v[lead])
        v = [norm(x * s) for x in v]
        for piv in list(out):
            r = out[piv]
            if r[lead]:
                c = r[lead]
                out[piv] = [norm(a - c * b) for a, b in zip(r, v)]
        out[lead] = v
    return out


@dataclass(frozen=True)
class AomotoComplex:
    """``maps[j]`` is the ``b_j x b_{j+1}`` matrix of ``f -> f * a``."""

    algebra: GradedAlgebra
    a: tuple
    maps: tuple


def aomoto(alg, a):
    """Right multiplication by ``a`` degree by degree; ``f * a`` equals
    ``(-1)^j a * f`` on ``A^j``."""
    if alg.top < 1:
        raise ValueError("the algebra has no degree-one part")
    a = tuple(to_rat(x) for x in a)
    if len(a) != alg.dims[1]:
        raise ValueError(f"a needs {alg.dims[1]} coordinates")
    maps = []
    for j in range(alg.top):
        D = _zero(alg.dims[j], alg.dims[j + 1])
        sign = -1 if j % 2 else 1
        for i, ai in enumerate(a):
            if not ai:
                continue
            M = alg.table(j, i)
            for s in range(alg.dims[j]):
                for t in range(alg.dims[j + 1]):
                    if M[s][t]:
                        D[s][t] += sign * ai * M[s][t]
        maps.append(D)
    for j in range(len(maps) - 1):
        if not _is_zero(_mul(maps[j], maps[j + 1], alg.dims[j + 2]), alg.field):
            raise ValueError("d^2 != 0; the multiplication tables are inconsistent")
    return AomotoComplex(alg, a, tuple(maps))


def cohomology_dims(alg, a, upto=None):
    """``dim H^j(A, a)`` for ``j`` up to ``upto`` (default: every degree that
    has an outgoing map)."""
    cx = aomoto(alg, a)
    ranks = [alg.rank(D) for D in cx.maps]
    upto = alg.top - 1 if upto is None else upto
    out = []
    for j in range(upto + 1):
        incoming = ranks[j - 1] if j >= 1 else 0
        out.append(alg.dims[j] - ranks[j] - incoming)
    return out


def resonance_contains(alg, a, i, d=1):
    """Whether ``dim H^i(A, a) >= d``."""
    if i < 0 or i > alg.top - 1:
        raise ValueError(f"degree {i} needs tables up to degree {i + 1}")
    if d < 1:
        raise ValueError("depth must be at least 1")
    return cohomology_dims(alg, a, i)[i] >= d


def resonance_upto_contains(alg, a, i):
    """Whether ``H^j(A, a) != 0`` for some ``j <= i``."""
    if i < 0 or i > alg.top - 1:
        raise ValueError(f"degree {i} needs tables up to degree {i + 1}")
    return any(h > 0 for h in cohomology_dims(alg, a, i))


def algebra_from_json(data):
    """Either explicit tables ``{"field", "dims", "mult"}`` or an exterior
    quotient ``{"field", "exterior": n, "relations": [[[i, j, c], ...], ...], "top"}``
    (generator indices 0-based)."""
    if isinstance(data, str):
        data = json.loads(data)
    field = data.get("field", "Q")
    if "exterior" in data:
        rels = []
        for rel in data.get("relations", []):
            d = {}
            for i, j, c in rel:
                d[(int(i), int(j))] = d.get((int(i), int(j)), 0) + to_rat(str(c))
            rels.append(d)
        return exterior_quotient(int(data["exterior"]), rels, int(data.get("top", 2)), field)
    mult = data["mult"]
    if isinstance(mult, dict):
        mult = {int(k): [[[to_rat(str(x)) for x in row] for row in M] for M in v]
                for k, v in mult.items()}
    else:
        mult = [[[[to_rat(str(x)) for x in row] for row in M] for M in v] for v in mult]
    return build_algebra(field, data["dims"], mult, data.get("torsion", False))
