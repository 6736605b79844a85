"""Command-line interface.  Every command prints one JSON object on stdout.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .criteria import check_structural, classify, mult_order
from .enumeration import ORACLES, count_report, sample_bent
from .gfcore import make_context, standard_field
from .polyring import cyclotomic
from .quadcore import (QuadForm, is_bent_gcd, is_bent_spectral, kernel_dimension,
                       walsh_spectrum)

log = logging.getLogger("quadbent")

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3
AUTO_SPECTRAL_MAX_N = 20


class _Inconsistent(Exception):
    def __init__(self, payload):
        super().__init__("oracles disagree")
        self.payload = payload


def _form_from_args(parser, args) -> QuadForm:
    try:
        coeffs = [int(t, 0) for t in args.coeffs.split(",")]
    except ValueError:
        parser.error(f"--coeffs must be comma-separated integers, got {args.coeffs!r}")
    if args.m % 2 == 0 and len(coeffs) != args.m // 2:
        parser.error(f"--coeffs needs exactly m/2 = {args.m // 2} entries, got {len(coeffs)}")
    bad = [c for c in coeffs if not 0 <= c < 1 << args.e]
    if bad:
        parser.error(f"coefficients {bad} are not in GF(2^{args.e})")
    return QuadForm(make_context(args.e, args.m), tuple(coeffs))


def cmd_verify(parser, args) -> dict:
    f = _form_from_args(parser, args)
    method = args.method
    verdicts = {}
    out = {"e": f.e, "m": f.m, "coeffs": list(f.coeffs)}
    if method in ("auto", "gcd"):
        g = is_bent_gcd(f)
        verdicts["gcd"] = g.bent
        out["gcd_certificate"] = str(g.gcd)
    if method in ("auto", "rank"):
        k = kernel_dimension(f)
        verdicts["rank"] = k == 0
        out["k_f"] = k
    if method == "spectral" or (method == "auto" and f.n <= AUTO_SPECTRAL_MAX_N):
        verdicts["spectral"] = is_bent_spectral(f)
    if method == "structural":
        verdicts["structural"] = check_structural(f)
    out["methods"] = verdicts
    out["bent"] = all(verdicts.values())
    out["consistent"] = len(set(verdicts.values())) == 1
    if not out["consistent"]:
        raise _Inconsistent(out)
    return out


def cmd_spectrum(parser, args) -> dict:
    f = _form_from_args(parser, args)
    return walsh_spectrum(f, cap=args.cap).to_dict()


def cmd_classify(parser, args) -> dict:
    return classify(args.e, args.m).to_dict()


def cmd_enumerate(parser, args) -> dict:
    report = count_report(args.e, args.m, mode=args.mode, oracle=args.oracle, jobs=args.jobs)
    out = report.to_dict()
    if not report.consistent:
        raise _Inconsistent(out)
    return out


def cmd_sample(parser, args) -> dict:
    if args.count < 0:
        parser.error("--count must be non-negative")
    result = sample_bent(args.e, args.m, seed=args.seed, count=args.count)
    return {"e": args.e, "m": args.m, **result.to_dict()}


def cmd_cyclotomic(parser, args) -> dict:
    q = cyclotomic(args.d, standard_field(args.e))
    return {"d": args.d, "e": args.e, "degree": q.degree, "coeffs": str(q)}


def cmd_order(parser, args) -> dict:
    return {"base": args.base, "modulus": args.modulus, "order": mult_order(args.base, args.modulus)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadbent", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    def em(p):
        p.add_argument("--e", type=int, required=True, help="degree of the small field")
        p.add_argument("--m", type=int, required=True, help="even index count, n = e*m")

    p = sub.add_parser("verify", help="bentness verdicts from one or more oracles")
    em(p)
    p.add_argument("--coeffs", required=True, help="c_1,...,c_{m/2} as integers")
    p.add_argument("--method", default="auto", choices=["auto", "gcd", "rank", "spectral", "structural"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="Walsh value multiset")
    em(p)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--cap", type=int, default=24, help="largest n to transform (max 30)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="parameter class of (e, m)")
    em(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="count bent forms")
    em(p)
    p.add_argument("--mode", default="both", choices=["formula", "exhaustive", "both"])
    p.add_argument("--oracle", default="gcd", choices=sorted(ORACLES))
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sample", help="seeded rejection sampling of bent forms")
    em(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("cyclotomic", help="cyclotomic polynomial Q_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, default=1, help="coefficient field degree")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("order", help="multiplicative order of base mod modulus")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--base", type=int, default=2)
    p.set_defaults(func=cmd_order)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        out = args.func(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except _Inconsistent as exc:
        print(json.dumps(exc.payload))
        log.error("internal consistency failure: oracles disagree")
        return EXIT_INCONSISTENT
    except (ValueError, ArithmeticError) as exc:
        log.error("%s", exc)
        print(json.dumps({"error": str(exc)}))
        return EXIT_DOMAIN
    print(json.dumps(out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
