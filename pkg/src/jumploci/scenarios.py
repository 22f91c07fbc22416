"""Named golden scenarios with embedded expected verdicts.

Each scenario returns a list of :class:`Check` records.  The CLI prints
them as a report and the test suite asserts them, so both run the same
code.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import arrangements as arr
from .fox import abelianize, alexander_matrix, cv1_contains, cv1_omega_contains, parse_presentation
from .laurent import LaurentPolynomial
from .resonance import exterior_quotient, resonance_contains
from .simplicial import barycentric_subdivision, is_flag, reduced_homology, rp2_six_vertex
from .raag import raag_sigma_certificate
from .varieties import (
    LaurentLocus,
    TranslatedTorus,
    VarietyDescription,
    VarietyFiltration,
    coordinate_subspace,
    full_space,
    grassmannian_points,
    hypersurface_omega_locus,
    identity_variety,
    omega_contains,
    product_filtration,
    schubert_bound_contains,
    sigma_bound_excludes,
    sigma_gap_direction,
    sigma_r_contains,
    span,
    strictness_witness,
    tau1,
    torus,
)

__all__ = ["Check", "SCENARIOS", "run_scenario", "scenario_names"]


@dataclass
class Check:
    query: str
    value: object
    expected: object
    certificate: object = None

    @property
    def ok(self):
        return self.value == self.expected

    def to_json(self):
        return {"query": self.query, "value": _jsonable(self.value),
                "expected": _jsonable(self.expected), "ok": self.ok,
                "certificate": _jsonable(self.certificate)}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(y) for y in x)
    return x


def _rand_rat(rng, h=5):
    return Fraction(rng.choice([k for k in range(-h, h + 1) if k]), rng.randint(1, h))


# --- presentations and supplied data -------------------------------------------------

EX51 = "gens: x1 x2 ; rels: x1 x2 x1^-1 x2^-2"
EX53 = "gens: x1 x2 ; rels: x1^2 x2 x1^-2 x2^-1"


def ex53_w1():
    """``{1} ∪ {t_1 = -1}``."""
    return VarietyDescription(2, (torus([Fraction(1, 2), 0], [[0, 1]]),), points=((0, 0),))


def ex56_w2():
    """``{1} ∪ {t_1 - t_2 + 1 = 0}`` in three variables."""
    t = [LaurentPolynomial.variable(3, i) for i in range(3)]
    f = t[0] - t[1] + 1
    return VarietyDescription(3, hypersurfaces=(LaurentLocus.hypersurface(f),), points=((0, 0, 0),))


def ex71_algebra():
    """Exterior algebra on ``a1, a2, b1, b2`` modulo
    ``a1 b2 + a2 b1 = a1 b1 = a2 b2 = 0``."""
    return exterior_quotient(4, [{(0, 3): 1, (1, 2): 1}, {(0, 2): 1}, {(1, 3): 1}], 2)


def ex71_planes():
    return [
        span([[0, 0, 1, 0], [0, 0, 0, 1]]),
        span([[1, 0, 0, 0], [0, 1, 0, 0]]),
        span([[1, 0, -1, 0], [0, 1, 0, -1]]),
    ]


def ex71_w1():
    return VarietyDescription(4, tuple(TranslatedTorus((0,) * 4, L) for L in ex71_planes()),
                              points=((0,) * 4,))


# an order-2 translate with a one-dimensional direction, unreachable from 1
B3_DIRECTION = (1, -1, -1, 1, 2, 0, -2, 0)
B3_TRANSLATE = (0, Fraction(1, 2), Fraction(1, 2), 0, 0, Fraction(1, 2), 0, Fraction(1, 2))


def deleted_b3_w1(C=None):
    C = C or arr.combinatorics(arr.deleted_b3_arrangement())
    n = C.n
    local = arr.local_components(C)
    tori = [TranslatedTorus((0,) * n, L) for L in local]
    tori.append(torus(B3_TRANSLATE, [B3_DIRECTION]))
    return VarietyDescription(n, tuple(tori), points=((0,) * n,))


def rp2_flag():
    return barycentric_subdivision(rp2_six_vertex())


# --- scenarios ----------------------------------------------------------------------

def scenario_ex51(**_):
    P = parse_presentation(EX51)
    ab = abelianize(P)
    A = alexander_matrix(P, ab)
    checks = [Check("b1", ab.rank, 1)]
    expected = {"1": True, "2": True, "3": False, "1/2": False, "-1": False, "5": False}
    for r, want in expected.items():
        checks.append(Check(f"rho={r} in V1", cv1_contains(P, [Fraction(r)], 1, ab, A), want))
    checks.append(Check("alexander row", [f.to_string() for f in A[0]], ["0", "t1 - 2"]))
    checks.append(Check("Omega1_1 = {pt}", cv1_omega_contains(P, full_space(1), ab), True))
    return checks


def scenario_ex53(**_):
    P = parse_presentation(EX53)
    W = ex53_w1()
    Q2 = full_space(2)
    t = tau1(W)
    return [
        Check("rho=(-1,7) in V1", cv1_contains(P, [-1, 7]), True),
        Check("rho=(-1,1/3) in V1", cv1_contains(P, [-1, Fraction(1, 3)]), True),
        Check("rho=(2,3) in V1", cv1_contains(P, [2, 3]), False),
        Check("rho=(1,1) in V1", cv1_contains(P, [1, 1]), True),
        Check("tau1(W1) = {0}", [L.dim for L in t], [0], t),
        Check("Omega1_2 contains Q^2", omega_contains(W, Q2), False),
        Check("Fox-side Omega1_2 contains Q^2", cv1_omega_contains(P, Q2), False),
        Check("Q^2 outside sigma_2(R1)", schubert_bound_contains(W, Q2), True),
        Check("bound excludes chi=(1,0)", sigma_bound_excludes(W, [1, 0]), False),
        Check("bound excludes chi=(-1,0)", sigma_bound_excludes(W, [-1, 0]), False),
    ]


def scenario_ex56(height=3, **_):
    W = ex56_w2()
    f = W.hypersurfaces[0].equations[0]
    planes = list(grassmannian_points(3, 2, height))
    good = [P for P in planes if omega_contains(W, P)]
    want = [span([[1, 1, 0], [0, 0, 1]]), span([[1, 0, 0], [0, 0, 1]])]
    locus = hypersurface_omega_locus(f, 2)
    return [
        Check("tau1(W2) = {0}", [L.dim for L in tau1(W)], [0]),
        Check(f"planes enumerated (height <= {height})", len(planes), len(planes)),
        Check("Omega2_2 points found", sorted(P.to_json() for P in good),
              sorted(P.to_json() for P in want)),
        Check("monomial-unit locus", sorted(Z.to_json() for Z in locus),
              sorted(P.to_json() for P in want)),
        Check("locus members are planes", [Z.dim for Z in locus], [2, 2]),
    ]


def scenario_ex66(**_):
    D = rp2_flag()
    chi = [1] * len(D.vertices)
    cert_q = raag_sigma_certificate(D, chi, 2, "Q")
    cert_z = raag_sigma_certificate(D, chi, 2, "Z")
    H = reduced_homology(D, "Z")
    return [
        Check("vertices", len(D.vertices), 31),
        Check("flag", is_flag(D), True),
        Check("H1 torsion", list(H.torsion_in(1)), [2]),
        Check("diagonal in Sigma2(Q)", cert_q is None, True),
        Check("diagonal in Sigma2(Z)", cert_z is None, False,
              None if cert_z is None else {"sigma": list(cert_z[0]), "degree": cert_z[1],
                                           "torsion": list(cert_z[2].torsion_in(cert_z[1]))}),
    ]


def ex71_resonance_agreement(count=200, seed=0):
    alg = ex71_algebra()
    rng = random.Random(seed)
    agree = 0
    for k in range(count):
        a = [_rand_rat(rng) for _ in range(4)]
        if k % 2:
            # land on the quadric half of the time
            a[3] = a[1] * a[2] / a[0]
        quad = a[0] * a[3] - a[1] * a[2]
        agree += resonance_contains(alg, a, 1, 1) == (quad == 0)
    return agree


def scenario_ex71(seed=0, samples=200, **_):
    alg = ex71_algebra()
    W = ex71_w1()
    rng = random.Random(seed)
    checks = [
        Check("dims", list(alg.dims), [1, 4, 3]),
        Check("(1,0,1,0) in R1", resonance_contains(alg, [1, 0, 1, 0], 1), True),
        Check("(1,0,0,1) in R1", resonance_contains(alg, [1, 0, 0, 1], 1), False),
        Check(f"quadric agreement on {samples} points",
              ex71_resonance_agreement(samples, seed), samples),
        Check("tau1(W1) = {L1, L2, L3}", sorted(L.to_json() for L in tau1(W)),
              sorted(L.to_json() for L in ex71_planes())),
    ]
    for k, L in enumerate(ex71_planes(), 1):
        excluded = 0
        for _ in range(5):
            c = [_rand_rat(rng) for _ in L.basis]
            v = [sum(x * b[i] for x, b in zip(c, L.basis)) for i in range(4)]
            P = span([v, [_rand_rat(rng) for _ in range(4)]], 4)
            excluded += sigma_r_contains(L, P) and not omega_contains(W, P)
        checks.append(Check(f"L{k} excludes 5 seeded planes from Omega1_2", excluded, 5))
    lines_total = 20
    agree = 0
    for _ in range(lines_total):
        a = [_rand_rat(rng) for _ in range(4)]
        inside = any(L.contains(a) for L in ex71_planes())
        agree += omega_contains(W, span([a])) == (not inside)
    checks.append(Check("Omega1_1 on seeded lines", agree, lines_total))
    hit = 0
    for _ in range(20):
        P = span([[_rand_rat(rng) for _ in range(4)] for _ in range(3)], 4)
        hit += all(sigma_r_contains(L, P) for L in ex71_planes())
    checks.append(Check("seeded 3-planes meet every L_i", hit, 20,
                        "dim P + dim L_i = 5 > 4"))
    return checks


def scenario_braid(**_):
    C = arr.combinatorics(arr.braid_arrangement())
    alg = arr.os_algebra_deg2(C)
    local = arr.local_components(C)
    nonlocal_ = arr.nonlocal_components(C, 1, alg)
    rng = random.Random(0)
    sampled = 0
    for S in nonlocal_:
        for _ in range(10):
            c = [_rand_rat(rng) for _ in S.basis]
            pt = [sum(x * b[i] for x, b in zip(c, S.basis)) for i in range(C.n)]
            sampled += arr.res1_membership(C, pt, alg)
    pattern = all(v[0] == v[5] and v[1] == v[4] and v[2] == v[3] and sum(v) == 0
                  for S in nonlocal_ for v in S.basis)
    return [
        Check("triple points", sorted(p.label() for p in C.multiple_points(3)),
              ["124", "135", "236", "456"]),
        Check("double points", C.count(2), 3),
        Check("b2", alg.dims[2], 11),
        Check("local components", [L.dim for L in local], [2, 2, 2, 2]),
        Check("non-local components", [S.dim for S in nonlocal_], [2],
              [S.to_json() for S in nonlocal_]),
        Check("non-local pattern x1=x6, x2=x5, x3=x4", pattern, True),
        Check("sampled non-local points resonant", sampled, 10 * len(nonlocal_)),
        Check("all-ones resonant", arr.res1_membership(C, [1] * 6, alg), False),
        Check("e1-e2 within Sigma bound", arr.arr_bounds(C, ("sigma", [1, -1, 0, 0, 0, 0]))[0],
              False),
    ]


def scenario_pencil(n=4, seed=0, **_):
    n = int(n)
    if n < 3:
        raise ValueError("a pencil needs at least 3 lines")
    A = arr.pencil_arrangement(n)
    C = arr.combinatorics(A)
    alg = arr.os_algebra_deg2(C)
    local = arr.local_components(C)
    rng = random.Random(seed)
    planes_blocked = 0
    for _ in range(10):
        P = span([[_rand_rat(rng) for _ in range(n)] for _ in range(2)], n)
        planes_blocked += not arr.arr_bounds(C, ("omega", P))[0]
    ins = outs = 0
    for _ in range(10):
        chi = [_rand_rat(rng) for _ in range(n)]
        if sum(chi) == 0:
            chi[0] += 1
        ins += arr.cone_decone_sigma(A, chi)[0] == "in"
        c = [_rand_rat(rng) for _ in range(n - 1)]
        chi = c + [-sum(c)]
        if any(chi):
            outs += arr.cone_decone_sigma(A, chi)[0] == "out"
        else:
            outs += 1
    # X(A) = X(decone) x C^*: the decone is C minus n-1 points (a wedge of
    # n-1 circles), the second factor a circle
    wedge = VarietyFiltration(n - 1, (identity_variety(n - 1), VarietyDescription(
        n - 1, (TranslatedTorus((0,) * (n - 1), full_space(n - 1)),))))
    circle = VarietyFiltration(1, (identity_variety(1), identity_variety(1)))
    prod = product_filtration(wedge, circle, 1)
    t = tau1(prod.layers[1])
    return [
        Check("R1 components", [L.dim for L in local], [n - 1]),
        Check("R1 component resonant at sample",
              arr.res1_membership(C, [1, -1] + [0] * (n - 2), alg), True),
        Check("Omega1_2 bound blocks seeded planes", planes_blocked, 10,
              "every 2-plane meets the hyperplane sum = 0"),
        Check("Sigma verdict 'in' off the great sphere", ins, 10),
        Check("Sigma verdict 'out' inside the component", outs, 10),
        Check("product tau1 supported on decone coordinates",
              [L.to_json() for L in t],
              [coordinate_subspace(n, range(n - 1)).to_json()]),
    ]


def strictness_report(W, r=2, height=2, budget=2000, seed=0):
    w = strictness_witness(W, r, height, budget, seed)
    if w is None:
        return None, None
    chi = sigma_gap_direction(W, w.plane)
    return w, chi


def scenario_deleted_b3(seed=0, budget=2000, height=2, **_):
    C = arr.combinatorics(arr.deleted_b3_arrangement())
    W = deleted_b3_w1(C)
    local = arr.local_components(C)
    w, chi = strictness_report(W, 2, height, budget, seed)
    on_sphere = list(B3_DIRECTION)
    cert = None
    if w is not None:
        cert = {"plane": w.plane.to_json(), "component": w.component,
                "attempts": w.attempts, "chi": chi}
    return [
        Check("lines", C.n, 8),
        Check("quadruple points", C.count(4), 1),
        Check("triple points", C.count(3), 6),
        Check("local components", sorted(L.dim for L in local), [2, 2, 2, 2, 2, 2, 3]),
        Check("b2", arr.os_algebra_deg2(C).dims[2], 19),
        Check("translate unreachable from 1", W.tori[-1].passes_through_identity(), False),
        Check("witness plane found", w is not None, True, cert),
        Check("witness avoids tau1",
              w is not None and schubert_bound_contains(W, w.plane), True),
        Check("witness outside Omega1_2", w is not None and not omega_contains(W, w.plane), True),
        Check("Sigma1 strictly smaller than the tau1 bound",
              w is not None and chi is not None and not sigma_bound_excludes(W, chi), True,
              "a chi in the witness plane survives the bound but cannot lie in Sigma1"),
        Check("great-sphere chi outside R1 is undecided",
              arr.cone_decone_sigma(C, on_sphere)[0], "unknown"),
    ]


SCENARIOS = {
    "ex51": scenario_ex51,
    "ex53": scenario_ex53,
    "ex56": scenario_ex56,
    "ex66": scenario_ex66,
    "ex71": scenario_ex71,
    "braid": scenario_braid,
    "pencil": scenario_pencil,
    "deletedB3": scenario_deleted_b3,
}

ALIASES = {"ex82": "braid", "ex85": "pencil", "ex88": "deletedB3", "deletedb3": "deletedB3"}


def scenario_names():
    return sorted(SCENARIOS)


def run_scenario(name, **params):
    key = ALIASES.get(name, name)
    if key not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; known: {', '.join(scenario_names())}")
    return SCENARIOS[key](**params)
