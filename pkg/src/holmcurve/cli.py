"""Command-line front end.

Subcommands: validate, map, mul, divpoly, lemmas, certify, search-integral.
All numeric inputs are exact (integers or "num/den" fractions); output is
deterministic text, optionally mirrored to a JSON document via --json PATH.

Exit codes: 0 success/confirmed, 1 validation or capacity error,
2 contradiction finding (a result the theorem rules out), 3 internal
consistency error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from .curves import (
    EPoint,
    HPoint,
    HolmParams,
    INFINITY,
    curve_from_params,
    default_x_bound,
    find_integral_points,
    on_E,
    on_H,
)
from .division_polys import DivPolyCache, mul_via_divpolys
from .errors import (
    CapacityError,
    ConsistencyError,
    ContradictionError,
    TorsionDenominatorError,
    ValidationError,
)
from .exact_arith import format_rational, parse_rational, prime_factorize, vp
from .group_law import e_scalar_mul
from .isomorphism import gamma, gamma_inv
from .torsion import (
    CONFIRMED,
    TORSION_FREE_CONFIRMED,
    certify_torsion_free,
    lemma1_check,
    lemma2_check,
    lemma3_check,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_CONTRADICTION = 2
EXIT_CONSISTENCY = 3


def _point_str(p: EPoint) -> str:
    return str(p)


def _epoint_json(p: EPoint) -> dict:
    if p.is_infinity:
        return {"type": "infinity"}
    return {"type": "affine", "x": format_rational(p.x), "y": format_rational(p.y)}


def _hpoint_json(p: HPoint) -> dict:
    return {"x": format_rational(p.x), "y": format_rational(p.y)}


def _parse_epoint(x: str, y: str) -> EPoint:
    if x.lower() in ("inf", "infinity") or y.lower() in ("inf", "infinity"):
        return INFINITY
    return EPoint(parse_rational(x), parse_rational(y))


def _write_json(path: Optional[str], doc: dict) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def cmd_validate(args) -> tuple[dict, int]:
    doc = {"command": "validate", "k": str(args.k), "l": str(args.l)}
    try:
        HolmParams(args.k, args.l)
    except ValidationError as exc:
        print(f"invalid: {exc}")
        doc.update(valid=False, reason=str(exc))
        return doc, EXIT_VALIDATION
    print(f"valid: (k, l) = ({args.k}, {args.l})")
    doc.update(valid=True, reason=None)
    return doc, EXIT_OK


def cmd_map(args) -> tuple[dict, int]:
    params = HolmParams(args.k, args.l)
    doc = {"command": "map", "k": str(args.k), "l": str(args.l)}
    if args.to_e:
        p = HPoint(parse_rational(args.to_e[0]), parse_rational(args.to_e[1]))
        image = gamma(params, p)
        doc.update(direction="to-e", input=_hpoint_json(p), output=_epoint_json(image))
        print(_point_str(image))
    else:
        p = _parse_epoint(*args.to_h)
        image = gamma_inv(params, p)
        doc.update(direction="to-h", input=_epoint_json(p), output=_hpoint_json(image))
        print(str(image))
    return doc, EXIT_OK


def _valuation_notes(params: HolmParams, p: EPoint) -> dict[str, str]:
    notes: dict[str, str] = {}
    if p.is_infinity:
        return notes
    for q, _ in prime_factorize(params.k * params.l):
        notes[str(q)] = str(vp(p.x, q))
    return notes


def cmd_mul(args) -> tuple[dict, int]:
    params = HolmParams(args.k, args.l)
    curve = curve_from_params(params)
    p = _parse_epoint(args.x, args.y)
    if not on_E(curve, p):
        raise ValidationError(f"point {p} is not on {curve}")
    doc = {
        "command": "mul",
        "k": str(args.k),
        "l": str(args.l),
        "n": str(args.n),
        "method": args.method,
    }

    results: dict[str, EPoint] = {}
    if args.method in ("grouplaw", "both"):
        results["grouplaw"] = e_scalar_mul(curve, args.n, p)
    if args.method in ("divpoly", "both"):
        results["divpoly"] = mul_via_divpolys(DivPolyCache(curve), args.n, p)

    for name, point in results.items():
        doc[name] = _epoint_json(point)
    if args.method == "both":
        match = results["grouplaw"] == results["divpoly"]
        doc["match"] = match
        print(f"grouplaw: {_point_str(results['grouplaw'])}")
        print(f"divpoly:  {_point_str(results['divpoly'])}")
        print("MATCH" if match else "MISMATCH")
        if not match:
            raise ConsistencyError("group-law and division-polynomial products differ")
        result = results["grouplaw"]
    else:
        result = next(iter(results.values()))
        print(_point_str(result))

    notes = _valuation_notes(params, result)
    doc["valuations"] = notes
    for q, v in notes.items():
        print(f"v_{q}(x) = {v}")
    return doc, EXIT_OK


def _coeff_strings(coeffs) -> list[str]:
    return [str(c) for c in coeffs]


def cmd_divpoly(args) -> tuple[dict, int]:
    params = HolmParams(args.k, args.l)
    curve = curve_from_params(params)
    cache = DivPolyCache(curve)
    n = args.n
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    doc = {"command": "divpoly", "k": str(args.k), "l": str(args.l), "n": n}

    psi = cache.psi(n)
    print(f"psi_{n}  f: {list(psi.f)} g: {list(psi.g)}")
    doc["psi"] = {"f": _coeff_strings(psi.f), "g": _coeff_strings(psi.g)}
    if n >= 1:
        phi = cache.phi(n)
        print(f"phi_{n}  f: {list(phi.f)} g: {list(phi.g)}")
        doc["phi"] = {"f": _coeff_strings(phi.f), "g": _coeff_strings(phi.g)}
    else:
        doc["phi"] = None
    if n >= 2:
        omega = cache.omega(n)
        print(f"omega_{n}  f: {list(omega.f)} g: {list(omega.g)}")
        doc["omega"] = {"f": _coeff_strings(omega.f), "g": _coeff_strings(omega.g)}
    else:
        doc["omega"] = None
    return doc, EXIT_OK


def _applicable_checks(params: HolmParams):
    """Every lemma check applicable to (k, l): lemma 1 when 2 | kl, lemma 2
    for each odd prime factor, lemma 3 for each prime factor >= 5."""
    checks = []
    for q, _ in prime_factorize(params.k * params.l):
        if q == 2:
            checks.append((1, 2))
        else:
            checks.append((2, q))
            if q >= 5:
                checks.append((3, q))
    return checks


def cmd_lemmas(args) -> tuple[dict, int]:
    params = HolmParams(args.k, args.l)
    curve = curve_from_params(params)
    bound = args.bound if args.bound is not None else default_x_bound(curve)
    points = find_integral_points(curve, bound)
    cache = DivPolyCache(curve)

    rows = []
    all_ok = True
    for point in points:
        for lemma_id, q in _applicable_checks(params):
            if lemma_id == 1:
                report = lemma1_check(curve, point)
            elif lemma_id == 2:
                report = lemma2_check(curve, point, q)
            else:
                report = lemma3_check(curve, point, q, cache)
            rows.append(report)
            all_ok = all_ok and report.verdict == CONFIRMED

    print(f"curve: {curve}  (k, l) = ({params.k}, {params.l})  bound = {bound}")
    print(f"{'point':<22} {'lemma':>5} {'witness':>8}  {'valuation':<24} {'verdict':>9}")
    for r in rows:
        observed = (
            f"v_{r.prime}(x({r.tested_multiple}P)) = {r.observed_valuation} "
            f"({r.relation} {r.claimed_bound_or_value})"
        )
        print(
            f"{_point_str(r.point):<22} {r.lemma_id:>5} {r.multiple_used:>7}P  "
            f"{observed:<24} {r.verdict:>9}"
        )
    print(f"{len(points)} integral points, {len(rows)} checks, "
          f"{'all CONFIRMED' if all_ok else 'VIOLATIONS PRESENT'}")

    doc = {
        "command": "lemmas",
        "k": str(args.k),
        "l": str(args.l),
        "bound": str(bound),
        "rows": [
            {
                "point": _epoint_json(r.point),
                "lemma": r.lemma_id,
                "prime": r.prime,
                "multiple": r.multiple_used,
                "observed_valuation": "INFINITE"
                if not isinstance(r.observed_valuation, int)
                else r.observed_valuation,
                "relation": r.relation,
                "claimed": r.claimed_bound_or_value,
                "verdict": r.verdict,
            }
            for r in rows
        ],
        "all_confirmed": all_ok,
    }
    return doc, EXIT_OK if all_ok else EXIT_CONTRADICTION


def _certify_one(k: int, l: int, max_order: int) -> tuple[dict, bool]:
    cert = certify_torsion_free(HolmParams(k, l), max_order=max_order)
    print(f"(k, l) = ({k}, {l}): {cert.conclusion}  "
          f"[{len(cert.candidates)} torsion candidates examined]")
    for ev in cert.candidates:
        r = ev.report
        print(
            f"  {_point_str(ev.point):<18} lemma {r.lemma_id}: "
            f"v_{r.prime}(x({r.tested_multiple}P)) = {r.observed_valuation} "
            f"({r.relation} {r.claimed_bound_or_value} claimed), witness {r.multiple_used}P, "
            f"order scan: {ev.order_found if ev.order_found else 'none <= 12'}, {r.verdict}"
        )
    return cert.to_json_dict(), cert.conclusion == TORSION_FREE_CONFIRMED


def cmd_certify(args) -> tuple[dict, int]:
    if args.range is not None:
        pairs = [
            (k, l)
            for k in range(1, args.range + 1)
            for l in range(1, args.range + 1)
            if _params_valid(k, l)
        ]
        docs = []
        all_ok = True
        for k, l in pairs:
            doc, ok = _certify_one(k, l, args.max_order)
            docs.append(doc)
            all_ok = all_ok and ok
        return (
            {"command": "certify", "range": args.range, "certificates": docs},
            EXIT_OK if all_ok else EXIT_CONTRADICTION,
        )
    if args.k is None or args.l is None:
        raise ValidationError("certify needs k and l (or --range N)")
    doc, ok = _certify_one(args.k, args.l, args.max_order)
    doc = {"command": "certify", **doc}
    return doc, EXIT_OK if ok else EXIT_CONTRADICTION


def _params_valid(k: int, l: int) -> bool:
    try:
        HolmParams(k, l)
        return True
    except ValidationError:
        return False


def cmd_search_integral(args) -> tuple[dict, int]:
    params = HolmParams(args.k, args.l)
    curve = curve_from_params(params)
    bound = args.bound if args.bound is not None else default_x_bound(curve)
    points = find_integral_points(curve, bound)
    for p in points:
        print(_point_str(p))
    print(f"{len(points)} integral points with |x| <= {bound}")
    doc = {
        "command": "search-integral",
        "k": str(args.k),
        "l": str(args.l),
        "bound": str(bound),
        "points": [_epoint_json(p) for p in points],
    }
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holmcurve",
        description="Exact arithmetic on the Holm curve and its Weierstrass model: "
        "isomorphism, group law, division polynomials, torsion-freeness certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kl(p):
        p.add_argument("k", type=int)
        p.add_argument("l", type=int)

    def add_json(p):
        p.add_argument("--json", metavar="PATH", help="also write a JSON document")

    p = sub.add_parser("validate", help="check the parameter constraints on (k, l)")
    add_kl(p)
    add_json(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("map", help="apply the isomorphism or its inverse")
    add_kl(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-e", nargs=2, metavar=("X", "Y"),
                       help="map a Holm-curve point to the Weierstrass curve")
    group.add_argument("--to-h", nargs=2, metavar=("X", "Y"),
                       help="map a Weierstrass point back (use 'inf inf' for infinity)")
    add_json(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("mul", help="scalar multiple of a Weierstrass point")
    add_kl(p)
    p.add_argument("n", type=int)
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--method", choices=["grouplaw", "divpoly", "both"], default="grouplaw")
    add_json(p)
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("divpoly", help="print psi_n, phi_n, omega_n coefficient lists")
    add_kl(p)
    p.add_argument("n", type=int)
    add_json(p)
    p.set_defaults(func=cmd_divpoly)

    p = sub.add_parser("lemmas", help="run every applicable valuation lemma over the integral points")
    add_kl(p)
    p.add_argument("--bound", type=int, default=None, help="integral-point scan half-width")
    add_json(p)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("certify", help="produce a torsion-freeness certificate")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("l", type=int, nargs="?")
    p.add_argument("--range", type=int, metavar="N",
                   help="certify every valid pair with k, l <= N")
    p.add_argument("--max-order", type=int, default=12)
    add_json(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search-integral", help="list integral points on the derived curve")
    add_kl(p)
    p.add_argument("--bound", type=int, default=None)
    add_json(p)
    p.set_defaults(func=cmd_search_integral)

    return parser


# argparse would read "-3/4" as an option string; a leading space keeps it a
# value, and Fraction() tolerates surrounding whitespace.
_NEG_FRACTION = re.compile(r"^-\d+/\d+$")


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = [(" " + tok) if _NEG_FRACTION.match(tok) else tok for tok in argv]
    args = build_parser().parse_args(argv)
    try:
        doc, code = args.func(args)
    except (ValidationError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ContradictionError, TorsionDenominatorError) as exc:
        print(f"contradiction finding: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    _write_json(getattr(args, "json", None), doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
