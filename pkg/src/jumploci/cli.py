"""Command-line interface.

Every command prints one JSON report on stdout::

    {"schema": "jumploci.report/1", "command": [...], "inputs_digest": "...",
     "verdicts": [{"query": ..., "value": ..., "certificate": ...}, ...]}

Exit status is 0 on success and 2 on bad input; a golden scenario that
fails to reproduce exits with 1.  Rationals are written as strings such as ``"-3/4"``.
Σ queries take rational directions χ only.
"""

import argparse
import hashlib
import json
import sys
import time

from . import arrangements as arr
from . import fox, raag, resonance, scenarios, simplicial, varieties
from .exactlin import to_rat

SCHEMA = "jumploci.report/1"


class InputError(Exception):
    pass


def _vector(text):
    try:
        return [to_rat(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"cannot parse vector {text!r}: {e}")


def _matrix(text):
    return [_vector(r) for r in text.split(";") if r.strip()]


def _load_json(path, inputs):
    try:
        with open(path) as fh:
            raw = fh.read()
    except OSError as e:
        raise InputError(str(e))
    inputs.append(raw)
    try:
        return json.loads(raw)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: malformed JSON ({e})")


def _complex(args, inputs):
    if getattr(args, "preset", None):
        if args.preset == "rp2":
            K = simplicial.rp2_six_vertex()
        elif args.preset == "rp2_flag":
            K = scenarios.rp2_flag()
        else:
            raise InputError(f"unknown preset {args.preset!r}")
        inputs.append(args.preset)
        return K
    if not args.complex:
        raise InputError("--complex or --preset is required")
    data = _load_json(args.complex, inputs)
    try:
        return simplicial.complex_from_json(data)
    except (KeyError, TypeError) as e:
        raise InputError(f"complex JSON needs 'facets': {e}")


def _verdict(query, value, certificate=None):
    return {"query": query, "value": scenarios._jsonable(value),
            "certificate": scenarios._jsonable(certificate)}


def _homology_json(H):
    return {"coeffs": H.coeffs,
            "ranks": {str(d - 1): r for d, r in enumerate(H.ranks)},
            "torsion": {str(d - 1): list(t) for d, t in enumerate(H.torsion) if t}}


# --- verbs ---------------------------------------------------------------------------

def cmd_complex(args, inputs):
    K = _complex(args, inputs)
    if args.subdivide:
        K = simplicial.barycentric_subdivision(K)
    out = []
    if args.action == "info":
        out.append(_verdict("f_vector", list(K.f_vector())))
        out.append(_verdict("flag", simplicial.is_flag(K)))
    elif args.action == "homology":
        out.append(_verdict("reduced_homology",
                            _homology_json(simplicial.reduced_homology(K, args.coeffs))))
    elif args.action == "flag":
        out.append(_verdict("flag_complex", simplicial.flag_complex(K).to_json()))
    elif args.action == "subdivide":
        out.append(_verdict("subdivision", simplicial.barycentric_subdivision(K).to_json()))
    elif args.action == "link":
        sigma = [_label(x) for x in args.sigma.split(",") if x.strip()] if args.sigma else []
        out.append(_verdict("link", simplicial.link(K, sigma).to_json()))
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(K.to_json(), fh, default=str)
    return out


def _label(x):
    x = x.strip()
    try:
        return int(x)
    except ValueError:
        return x


def cmd_raag(args, inputs):
    K = _complex(args, inputs)
    i = args.degree
    if args.action in ("cv", "res"):
        fam = raag.toric_supports(K, i, args.coeffs)
        certs = []
        for W in fam.supports:
            c = raag.support_certificate(K, W, i, args.coeffs)
            certs.append({"W": sorted(W), "sigma": list(c[0]), "degree": c[1]})
        if args.action == "cv":
            value = raag.toric_cv(K, i, args.coeffs).to_json()
        else:
            value = raag.toric_resonance(K, i, args.coeffs).to_json()
        return [_verdict(f"{args.action}^{i}", value, certs)]
    if args.action == "omega":
        if not args.plane:
            raise InputError("--plane is required")
        P = varieties.parse_plane(args.plane, len(K.vertices))
        r = args.rank or P.dim
        return [_verdict(f"Omega^{i}_{r} contains P", raag.toric_omega_contains(K, i, r, P))]
    if args.action == "sigma":
        if not args.chi:
            raise InputError("--chi is required")
        chi = _vector(args.chi)
        cert = raag.raag_sigma_certificate(K, chi, i, args.coeffs)
        c = None if cert is None else {"sigma": list(cert[0]), "degree": cert[1],
                                        "homology": _homology_json(cert[2])}
        return [_verdict(f"chi in Sigma^{i}({args.coeffs})", cert is None, c)]
    if args.action == "presentation":
        return [_verdict("presentation", raag.raag_presentation(K).to_json())]
    raise InputError(f"unknown action {args.action!r}")


def _presentation(args, inputs):
    if args.presentation:
        inputs.append(args.presentation)
        return fox.parse_presentation(args.presentation)
    if args.presentation_file:
        return fox.presentation_from_json(_load_json(args.presentation_file, inputs))
    raise InputError("--presentation or --presentation-file is required")


def cmd_fox(args, inputs):
    P = _presentation(args, inputs)
    ab = fox.abelianize(P)
    if args.action == "abelianize":
        return [_verdict("abelianization", {"rank": ab.rank, "torsion": list(ab.torsion),
                                            "proj": [list(v) for v in ab.proj]})]
    if args.action == "alexander":
        A = fox.alexander_matrix(P, ab)
        return [_verdict("alexander_matrix", [[f.to_string() for f in row] for row in A])]
    if args.action == "cv1":
        if not args.rho:
            raise InputError("--rho is required")
        rho = _vector(args.rho)
        dim = fox.h1_dimension(P, rho, ab)
        return [_verdict(f"rho in V1_{args.depth}", dim >= args.depth, {"dim_H1": dim})]
    if args.action == "omega":
        Q = varieties.parse_plane(args.plane, ab.rank) if args.plane else varieties.full_space(ab.rank)
        polys = fox.cv1_torus_restriction(P, Q, ab)
        return [_verdict("Omega1 contains Q", fox.cv1_omega_contains(P, Q, ab),
                         [f.to_string() for f in polys])]
    raise InputError(f"unknown action {args.action!r}")


def cmd_variety(args, inputs):
    if not args.variety:
        raise InputError("--variety is required")
    try:
        W = varieties.variety_from_json(_load_json(args.variety, inputs))
    except (KeyError, TypeError) as e:
        raise InputError(f"bad variety description: {e}")
    n = W.ambient_dim
    if args.action == "tau1":
        return [_verdict("tau1", varieties.tau1(W).to_json())]
    if args.action == "omega":
        if not args.plane:
            raise InputError("--plane is required")
        P = varieties.parse_plane(args.plane, n)
        obs = varieties.omega_obstruction(W, P)
        cert = None if obs is None else {"component": obs[0], "index": obs[1],
                                         "intersection": obs[2].kind, "dim": obs[2].dim}
        return [_verdict("Omega contains P", obs is None, cert)]
    if args.action == "sigma":
        if not args.chi:
            raise InputError("--chi is required")
        chi = _vector(args.chi)
        return [_verdict("bound excludes chi", varieties.sigma_bound_excludes(W, chi))]
    if args.action == "witness":
        w = varieties.strictness_witness(W, args.rank or 2, args.height, args.budget, args.seed)
        if w is None:
            return [_verdict("witness found", False, {"budget": args.budget})]
        chi = varieties.sigma_gap_direction(W, w.plane)
        return [
            _verdict("witness found", True, {"plane": w.plane.to_json(), "component": w.component,
                                             "attempts": w.attempts}),
            _verdict("Sigma strictly smaller than tau1 bound", chi is not None, {"chi": chi}),
        ]
    raise InputError(f"unknown action {args.action!r}")


def cmd_resonance(args, inputs):
    if not args.algebra:
        raise InputError("--algebra is required")
    try:
        alg = resonance.algebra_from_json(_load_json(args.algebra, inputs))
    except (KeyError, TypeError) as e:
        raise InputError(f"bad algebra description: {e}")
    if args.action == "dims":
        out = [_verdict("dims", list(alg.dims))]
        if args.a:
            out.append(_verdict("cohomology", resonance.cohomology_dims(alg, _vector(args.a))))
        return out
    if not args.a:
        raise InputError("--a is required")
    a = _vector(args.a)
    if args.action == "contains":
        v = resonance.resonance_contains(alg, a, args.degree, args.depth)
        return [_verdict(f"a in R^{args.degree}_{args.depth}", v,
                         {"cohomology": resonance.cohomology_dims(alg, a, args.degree)})]
    if args.action == "upto":
        v = resonance.resonance_upto_contains(alg, a, args.degree)
        return [_verdict(f"H^j(A,a) != 0 for some j <= {args.degree}", v)]
    raise InputError(f"unknown action {args.action!r}")


def _arrangement(args, inputs):
    if args.forms:
        inputs.append(args.forms)
        return arr.make_arrangement(_matrix(args.forms))
    if args.poly:
        inputs.append(args.poly)
        return arr.parse_arrangement_polynomial(args.poly)
    if args.preset:
        inputs.append(args.preset)
        presets = {"braid": arr.braid_arrangement, "deletedB3": arr.deleted_b3_arrangement}
        if args.preset.startswith("pencil"):
            return arr.pencil_arrangement(int(args.preset[6:] or 3))
        if args.preset not in presets:
            raise InputError(f"unknown preset {args.preset!r}")
        return presets[args.preset]()
    raise InputError("--forms, --poly or --preset is required")


def _extra(args, inputs):
    if not args.components:
        return []
    data = _load_json(args.components, inputs)
    return [varieties.span([[to_rat(str(x)) for x in v] for v in S]) for S in data]


def cmd_arr(args, inputs):
    A = _arrangement(args, inputs)
    if args.action == "section":
        planar, cert = arr.generic_section(A, args.seed)
        return [_verdict("section", [[str(x) for x in ln] for ln in planar.lines],
                         {"kind": cert.kind, "attempts": cert.attempts,
                          "flats": [[i + 1 for i in F] for F in cert.flats if len(F) > 2]})]
    C = arr.combinatorics(A, args.seed)
    if args.action == "points":
        return [_verdict("points", [{"lines": p.label(), "multiplicity": p.multiplicity}
                                    for p in C.points])]
    if args.action == "os":
        alg = arr.os_algebra_deg2(C, args.coeffs)
        return [_verdict("dims", list(alg.dims))]
    if args.action == "local":
        return [_verdict("local_components", arr.local_components(C).to_json())]
    if args.action == "nonlocal":
        comps = arr.nonlocal_components(C, args.height)
        return [_verdict("nonlocal_components", [S.to_json() for S in comps])]
    if args.action == "res1":
        if not args.a:
            raise InputError("--a is required")
        return [_verdict("a in R1", arr.res1_membership(C, _vector(args.a)))]
    if args.action == "bounds":
        extra = _extra(args, inputs)
        out = []
        if args.plane:
            P = varieties.parse_plane(args.plane, C.n)
            ok, comp = arr.arr_bounds(C, ("omega", P), extra)
            out.append(_verdict("P within Omega bound", ok, comp))
        if args.chi:
            ok, comp = arr.arr_bounds(C, ("sigma", _vector(args.chi)), extra)
            out.append(_verdict("chi within Sigma bound", ok, comp))
        if not out:
            raise InputError("--plane or --chi is required")
        return out
    if args.action == "octant":
        if not args.chi:
            raise InputError("--chi is required")
        return [_verdict(f"chi in Sigma^{args.degree} by the negative octant",
                         arr.sigma_lower_negative(A, _vector(args.chi), args.degree))]
    if args.action == "cone":
        if not args.chi:
            raise InputError("--chi is required")
        verdict, why = arr.cone_decone_sigma(A, _vector(args.chi), _extra(args, inputs), args.seed)
        return [_verdict("chi in Sigma1", verdict, why)]
    raise InputError(f"unknown action {args.action!r}")


def cmd_examples(args, inputs):
    if args.action == "list":
        return [_verdict("scenarios", scenarios.scenario_names())]
    if not args.name:
        raise InputError("a scenario name is required")
    inputs.append(args.name)
    params = {"seed": args.seed}
    if args.n is not None:
        params["n"] = args.n
    try:
        checks = scenarios.run_scenario(args.name, **params)
    except KeyError as e:
        raise InputError(str(e.args[0]))
    args._golden_ok = all(c.ok for c in checks)
    return [c.to_json() for c in checks]


# --- parser --------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="jumploci", description=__doc__.split("\n")[0])
    p.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--coeffs", "--field", dest="coeffs", default="Q",
                        help="q, z or zp:<p>")
        sp.add_argument("--degree", type=int, default=1)
        sp.add_argument("--depth", type=int, default=1)
        sp.add_argument("--rank", type=int)
        sp.add_argument("--budget", type=int, default=2000)
        sp.add_argument("--height", type=int, default=2)
        sp.add_argument("--plane", help='rows separated by ";", e.g. "1,1,0;0,0,1"')
        sp.add_argument("--chi", help="rational direction, e.g. 1,-1,0")

    sp = sub.add_parser("complex", help="simplicial complexes")
    sp.add_argument("action", choices=["info", "homology", "flag", "subdivide", "link"])
    sp.add_argument("--complex")
    sp.add_argument("--preset", choices=["rp2", "rp2_flag"])
    sp.add_argument("--subdivide", action="store_true")
    sp.add_argument("--sigma")
    sp.add_argument("--output")
    common(sp)
    sp.set_defaults(func=cmd_complex)

    sp = sub.add_parser("raag", help="toric complexes and right-angled Artin groups")
    sp.add_argument("action", choices=["cv", "res", "omega", "sigma", "presentation"])
    sp.add_argument("--complex")
    sp.add_argument("--preset", choices=["rp2", "rp2_flag"])
    common(sp)
    sp.set_defaults(func=cmd_raag)

    sp = sub.add_parser("fox", help="finitely presented groups")
    sp.add_argument("action", choices=["abelianize", "alexander", "cv1", "omega"])
    sp.add_argument("--presentation", help='e.g. "gens: x1 x2 ; rels: x1 x2 x1^-1 x2^-2"')
    sp.add_argument("--presentation-file")
    sp.add_argument("--rho", help="rational character, e.g. -1,7")
    common(sp)
    sp.set_defaults(func=cmd_fox)

    sp = sub.add_parser("variety", help="unions of translated subtori and hypersurfaces")
    sp.add_argument("action", choices=["tau1", "omega", "sigma", "witness"])
    sp.add_argument("--variety")
    common(sp)
    sp.set_defaults(func=cmd_variety)

    sp = sub.add_parser("resonance", help="graded algebras and Aomoto complexes")
    sp.add_argument("action", choices=["dims", "contains", "upto"])
    sp.add_argument("--algebra")
    sp.add_argument("--a")
    common(sp)
    sp.set_defaults(func=cmd_resonance)

    sp = sub.add_parser("arr", help="hyperplane arrangements")
    sp.add_argument("action", choices=["section", "points", "os", "local", "nonlocal",
                                       "res1", "bounds", "octant", "cone"])
    sp.add_argument("--forms", help='covectors, e.g. "1,0,0;0,1,0;1,-1,0"')
    sp.add_argument("--poly", help='defining polynomial, e.g. "z0*z1*(z0-z1)"')
    sp.add_argument("--preset", help="braid, deletedB3 or pencil<n>")
    sp.add_argument("--components", help="JSON list of extra resonance subspaces")
    sp.add_argument("--a")
    common(sp)
    sp.set_defaults(func=cmd_arr, height=1)

    sp = sub.add_parser("examples", help="golden scenarios")
    sp.add_argument("action", choices=["list", "reproduce"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_examples)
    return p


def run(argv):
    """Run the CLI; returns ``(exit_code, report_or_None)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else 2), None
    inputs = []
    start = time.perf_counter()
    try:
        verdicts = args.func(args, inputs)
    except (InputError, ValueError, NotImplementedError, ZeroDivisionError) as e:
        err = {"schema": SCHEMA, "command": list(argv), "error": type(e).__name__,
               "reason": str(e)}
        print(json.dumps(err), file=sys.stderr)
        return 2, None
    report = {
        "schema": SCHEMA,
        "command": list(argv),
        "inputs_digest": hashlib.sha256(
            json.dumps([list(argv), inputs], sort_keys=True, default=str).encode()).hexdigest(),
        "verdicts": verdicts,
    }
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    code = 0
    if getattr(args, "_golden_ok", True) is False:
        report["golden"] = "mismatch"
        code = 1
    elif hasattr(args, "_golden_ok"):
        report["golden"] = "reproduced"
    return code, report


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, report = run(argv)
    if report is not None:
        json.dump(report, sys.stdout, indent=2, sort_keys=False, default=str)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
