"""Degree-one combinatorics of central hyperplane arrangements.

A generic plane section exposes the multiple points.  From those come the
Orlik-Solomon algebra through degree two and the local resonance
components, which in turn bound Ω and Σ.

Line indices are 0-based internally; :meth:`IncidencePoint.label` gives the
1-based spelling such as ``"124"``.
"""

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .exactlin import rat_rank, rref, to_rat
from .resonance import exterior_quotient, resonance_contains
from .varieties import (
    SubspaceArrangement,
    arrangement,
    sigma_r_contains,
    span,
    sphere_locus_contains,
)

__all__ = [
    "Arrangement",
    "PlanarArrangement",
    "IncidencePoint",
    "LineArrangementCombinatorics",
    "SectionCertificate",
    "make_arrangement",
    "parse_arrangement_polynomial",
    "rank_two_flats",
    "generic_section",
    "incidence_points",
    "combinatorics",
    "os_relations",
    "os_algebra_deg2",
    "local_components",
    "res1_membership",
    "search_resonant_vectors",
    "nonlocal_components",
    "arr_bounds",
    "sigma_lower_negative",
    "cone_decone_sigma",
    "braid_arrangement",
    "deleted_b3_arrangement",
    "pencil_arrangement",
]


def _normalize(form):
    """Scale to a primitive integer vector with positive leading entry."""
    form = [to_rat(x) for x in form]
    lead = next((x for x in form if x), None)
    if lead is None:
        raise ValueError("zero linear form")
    return tuple(x / lead for x in form)


@dataclass(frozen=True)
class Arrangement:
    """Central arrangement given by linear forms on ``Q^ℓ``."""

    ambient_dim: int
    forms: tuple

    def __post_init__(self):
        seen = set()
        for f in self.forms:
            if len(f) != self.ambient_dim:
                raise ValueError("form of the wrong length")
            key = _normalize(f)
            if key in seen:
                raise ValueError(f"proportional forms {f}")
            seen.add(key)

    @property
    def n(self):
        return len(self.forms)

    @property
    def rank(self):
        return rat_rank([list(f) for f in self.forms])

    def to_json(self):
        return {"dim": self.ambient_dim, "forms": [[str(x) for x in f] for f in self.forms]}


def make_arrangement(forms):
    forms = [tuple(to_rat(x) for x in f) for f in forms]
    if not forms:
        raise ValueError("an arrangement needs at least one hyperplane")
    return Arrangement(len(forms[0]), tuple(forms))


@dataclass(frozen=True)
class PlanarArrangement:
    """Affine lines ``a s + b t + c = 0`` in ``Q^2``, stored as ``(a, b, c)``."""

    lines: tuple

    @property
    def n(self):
        return len(self.lines)


def _split_top_level(text):
    parts, depth, cur, k = [], 0, "", 0
    while k < len(text):
        ch = text[k]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            if text[k:k + 2] == "**":
                cur += "**"
                k += 2
                continue
            parts.append(cur)
            cur = ""
        else:
            cur += ch
        k += 1
    parts.append(cur)
    return [p.strip() for p in parts if p.strip()]


def parse_arrangement_polynomial(text, variables=None):
    """Linear forms of a product of rational linear forms such as
    ``"z0*z1*(z0^2-z1^2)"``.

    Top-level factors keep their order; the linear factors of one top-level
    factor are listed in increasing coefficient order.
    """
    import sympy
    text = text.replace("^", "**")
    if variables is None:
        names = sorted(set(re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text)),
                       key=lambda s: (re.sub(r"\d+$", "", s), int(re.search(r"\d*$", s).group() or 0)))
    else:
        names = list(variables)
    if not names or len(names) > 4:
        raise ValueError("expected between 1 and 4 variables")
    syms = sympy.symbols(names)
    local = dict(zip(names, syms))
    forms = []
    for part in _split_top_level(text):
        expr = sympy.sympify(part, locals=local)
        _, factors = sympy.factor_list(sympy.expand(expr), *syms)
        block = []
        for fac, mult in factors:
            poly = sympy.Poly(fac, *syms)
            if poly.total_degree() != 1 or poly.coeff_monomial(1) != 0:
                raise ValueError(f"factor {fac} is not a linear form through the origin")
            coeffs = [Fraction(str(poly.coeff_monomial(s))) for s in syms]
            block.extend([_normalize(coeffs)] * mult)
        forms.extend(sorted(block))
    return make_arrangement(forms)


def rank_two_flats(A):
    """Maximal sets of at least two hyperplanes whose forms span a plane."""
    forms = [list(f) for f in A.forms]
    flats = set()
    for i, j in combinations(range(A.n), 2):
        flat = frozenset(k for k in range(A.n)
                         if rat_rank([forms[i], forms[j], forms[k]]) == 2)
        flats.add(flat)
    return sorted(flats, key=lambda F: sorted(F))


@dataclass(frozen=True)
class SectionCertificate:
    kind: str
    attempts: int
    plane: tuple
    flats: tuple


def generic_section(A, seed=0, tries=200, height=5):
    """Restrict ``A`` to a random affine 2-plane ``p + s u + t v``.

    The section is accepted only when no two restricted lines are parallel
    and its multiple points coincide with the rank-two flats of ``A``.
    """
    if A.rank < 2:
        raise ValueError("arrangement rank must be at least 2")
    flats = rank_two_flats(A)
    if A.ambient_dim == 2:
        lines = tuple((f[0], f[1], Fraction(0)) for f in A.forms)
        return PlanarArrangement(lines), SectionCertificate(
            "identity", 0, (), tuple(tuple(sorted(F)) for F in flats))
    rng = random.Random(seed)
    ell = A.ambient_dim
    for attempt in range(1, tries + 1):
        p, u, v = ([Fraction(rng.randint(-height, height)) for _ in range(ell)] for _ in range(3))
        lines = []
        for f in A.forms:
            ev = lambda w: sum((a * b for a, b in zip(f, w)), Fraction(0))
            lines.append((ev(u), ev(v), ev(p)))
        if any(a == 0 and b == 0 for a, b, _ in lines):
            continue
        planar = PlanarArrangement(tuple(lines))
        try:
            comb = incidence_points(planar)
        except ValueError:
            continue
        got = sorted((frozenset(pt.lines) for pt in comb.points), key=sorted)
        if got == flats:
            return planar, SectionCertificate(
                "random-plane", attempt, (tuple(p), tuple(u), tuple(v)),
                tuple(tuple(sorted(F)) for F in flats))
    raise RuntimeError(f"no generic section found in {tries} attempts")


@dataclass(frozen=True)
class IncidencePoint:
    point: tuple
    lines: tuple

    @property
    def multiplicity(self):
        return len(self.lines)

    def label(self):
        return "".join(str(i + 1) for i in self.lines) if len(self.lines) < 10 else \
            ",".join(str(i + 1) for i in self.lines)


@dataclass(frozen=True)
class LineArrangementCombinatorics:
    n: int
    points: tuple

    def multiple_points(self, m=3):
        return [p for p in self.points if p.multiplicity >= m]

    def count(self, m):
        return sum(1 for p in self.points if p.multiplicity == m)


def incidence_points(planar):
    lines = planar.lines
    groups = {}
    for i, j in combinations(range(len(lines)), 2):
        a1, b1, c1 = lines[i]
        a2, b2, c2 = lines[j]
        det = a1 * b2 - a2 * b1
        if det == 0:
            raise ValueError(f"lines {i + 1} and {j + 1} are parallel")
        s = (b1 * c2 - b2 * c1) / det
        t = (a2 * c1 - a1 * c2) / det
        groups.setdefault((s, t), set()).update((i, j))
    pts = [IncidencePoint(pt, tuple(sorted(ls))) for pt, ls in groups.items()]
    pts.sort(key=lambda p: p.lines)
    return LineArrangementCombinatorics(len(lines), tuple(pts))


def combinatorics(A, seed=0):
    """Multiple-point data of an arrangement, sectioning first if needed."""
    if isinstance(A, LineArrangementCombinatorics):
        return A
    if isinstance(A, PlanarArrangement):
        return incidence_points(A)
    planar, _ = generic_section(A, seed)
    return incidence_points(planar)


def os_relations(C):
    """Degree-two relations ``e_j e_k - e_i e_k + e_i e_j`` for every triple of
    lines through a common point."""
    rels = []
    for pt in C.points:
        if pt.multiplicity < 3:
            continue
        for i, j, k in combinations(pt.lines, 3):
            rels.append({(j, k): 1, (i, k): -1, (i, j): 1})
    return rels


def os_algebra_deg2(C, field="Q"):
    C = combinatorics(C)
    return exterior_quotient(C.n, os_relations(C), 2, field)


def local_components(C):
    """One ``(m-1)``-dimensional subspace per point of multiplicity ``m >= 3``."""
    C = combinatorics(C)
    subs = []
    for pt in C.multiple_points(3):
        first = pt.lines[0]
        vecs = []
        for k in pt.lines[1:]:
            v = [0] * C.n
            v[first], v[k] = 1, -1
            vecs.append(v)
        subs.append(span(vecs, C.n))
    return arrangement(C.n, subs)


def res1_membership(C, a, algebra=None):
    alg = algebra or os_algebra_deg2(C)
    return resonance_contains(alg, a, 1, 1)


def search_resonant_vectors(C, height=1, algebra=None):
    """Integer vectors with entries in ``[-height, height]`` summing to zero
    that are resonant but lie in no local component."""
    C = combinatorics(C)
    alg = algebra or os_algebra_deg2(C)
    local = local_components(C)
    hits = []
    for v in product(range(-height, height + 1), repeat=C.n):
        if not any(v) or sum(v) != 0:
            continue
        if local.contains_vector(v):
            continue
        if resonance_contains(alg, v, 1, 1):
            hits.append(list(v))
    return hits


def nonlocal_components(C, height=1, algebra=None, checks=10, seed=0):
    """Group non-local resonant vectors into linear subspaces.

    Vectors ``v, w`` are put together when ``v + w`` and ``v + 2w`` are
    resonant too.  Each resulting span is then probed at ``checks`` random
    rational points; spans failing a probe are discarded.
    """
    C = combinatorics(C)
    alg = algebra or os_algebra_deg2(C)
    hits = search_resonant_vectors(C, height, alg)
    rng = random.Random(seed)
    comps = []
    for v in hits:
        if any(S.contains(v) for S in comps):
            continue
        group = [v]
        for w in hits:
            if rat_rank(group + [w]) == len(group):
                continue
            if all(resonance_contains(alg, [a + k * b for a, b in zip(v, w)], 1, 1)
                   for k in (1, 2)):
                group.append(w)
        S = span(group, C.n)
        ok = True
        for _ in range(checks):
            coef = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in S.basis]
            pt = [sum((c * b[i] for c, b in zip(coef, S.basis)), Fraction(0)) for i in range(C.n)]
            if any(pt) and not resonance_contains(alg, pt, 1, 1):
                ok = False
                break
        if ok:
            comps.append(S)
    return arrangement(C.n, comps).members


def _components(C, extra):
    local = local_components(C)
    return arrangement(local.ambient_dim, list(local) + list(extra or []))


def arr_bounds(C, query, extra_components=()):
    """Within-bound verdict for ``("omega", P)`` or ``("sigma", chi)``.

    Returns ``(verdict, certificate)``; the certificate names the component
    that excludes the query, or is ``None``.
    """
    C = combinatorics(C)
    comps = _components(C, extra_components)
    kind, obj = query
    if kind == "omega":
        for k, L in enumerate(comps):
            if L.dim and sigma_r_contains(L, obj):
                return False, k
        return True, None
    if kind == "sigma":
        for k, L in enumerate(comps):
            if sphere_locus_contains(SubspaceArrangement(C.n, (L,)), obj):
                return False, k
        return True, None
    raise ValueError(f"unknown query {kind!r}")


def sigma_lower_negative(A, chi, i):
    """Certified membership of ``χ`` in ``Σ^i`` from the negative octant."""
    chi = [to_rat(x) for x in chi]
    if len(chi) != A.n:
        raise ValueError(f"χ needs {A.n} coordinates")
    return all(x < 0 for x in chi) and i < A.rank


def cone_decone_sigma(A, chi, extra_components=(), seed=0):
    """``("in" | "out" | "unknown", provenance)`` for ``χ ∈ Σ^1(A)``.

    Off the great sphere ``Σχ = 0`` membership is certain.  On it, only the
    resonance upper bound can decide, and only negatively.
    """
    chi = [to_rat(x) for x in chi]
    n = A.n if isinstance(A, Arrangement) else combinatorics(A).n
    if len(chi) != n:
        raise ValueError(f"χ needs {n} coordinates")
    if not any(chi):
        raise ValueError("χ must be nonzero")
    if sum(chi) != 0:
        return "in", "off the great sphere of the decone"
    C = combinatorics(A, seed)
    ok, comp = arr_bounds(C, ("sigma", chi), extra_components)
    if not ok:
        return "out", f"inside resonance component {comp}"
    return "unknown", "on the great sphere and outside the known resonance components"


def braid_arrangement():
    return parse_arrangement_polynomial("z0*z1*z2*(z0-z1)*(z0-z2)*(z1-z2)")


def deleted_b3_arrangement():
    return parse_arrangement_polynomial("z0*z1*(z0^2-z1^2)*(z0^2-z2^2)*(z1^2-z2^2)")


def pencil_arrangement(n):
    """``n`` distinct lines through the origin of ``Q^2``."""
    if n < 1:
        raise ValueError("need at least one line")
    forms = [(1, 0), (0, 1)] + [(1, -k) for k in range(1, n - 1)]
    return make_arrangement(forms[:n])
