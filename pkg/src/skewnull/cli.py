"""Command-line front end: ``python -m skewnull <command> [flags]``.

Exit status is 0 when every check whose hypothesis holds passes, 1 when
some check fails, and 2 for usage errors and hypothesis violations.
"""

import argparse
import csv
import io
import json
import random
import sys
import time

from .errors import HypothesisViolation, NonEmptyVariety, PolySyntaxError, SkewError
from .ring_core import FiniteField, GaussianRationals, Quaternions
from .sampling import random_cn_instance, random_poly
from .sigma_affine import build_index
from .skew_multi import AffinePoint, multi_eval
from .skew_uni import SigmaAlgebraicSet, gcrd, lclm
from .textio import format_poly, parse_poly, parse_scalar, parse_uni
from .theorems import (LeftIdealMulti, VerificationReport, chevalley_warning_bound,
                       chevalley_warning_check, cn_check, finitesatz_report,
                       one_var_finitesatz_check, skew_ax_bound,
                       skew_ax_check, vanishes_everywhere, vanishing_ideal_normal_form, variety)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_COLUMNS = ["theorem", "params", "hypothesis", "observed", "expected", "pass"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# argument plumbing


def _global_flags():
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("field and output")
    g.add_argument("--ring", choices=["ff", "gaussian", "quaternion"], default="ff",
                   help="coefficient ring (default: finite field)")
    g.add_argument("--p", type=int, default=2, help="characteristic")
    g.add_argument("--m", type=int, default=1, help="degree of F_q over F_p")
    g.add_argument("--k", type=int, default=0, help="sigma = Frob^k")
    g.add_argument("--n", type=int, default=1, help="number of variables")
    g.add_argument("--modulus", help="monic irreducible over F_p, e.g. 'x^2+x+2'")
    g.add_argument("--format", choices=["json", "csv", "text"], default="json")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--jobs", type=int, default=1, help="worker processes for point evaluation")
    g.add_argument("--no-timing", action="store_true",
                   help="report elapsed_ms as null so output is byte-reproducible")
    return common


def build_parser():
    common = _global_flags()
    parser = _Parser(prog="skewnull", description="Skew polynomial zero-set checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    p = add("affine", "enumerate or count the sigma-affine space")
    p.add_argument("action", choices=["enum", "count"])

    p = add("eval", "evaluate a polynomial at an affine point")
    p.add_argument("--poly", required=True)
    p.add_argument("--point", nargs="+", required=True, help="one scalar per coordinate")

    for name in ("minpoly", "rank"):
        p = add(name, f"sigma-{'minimal polynomial' if name == 'minpoly' else 'rank'} of a finite set")
        p.add_argument("--set", nargs="*", required=True, dest="elements")

    for name in ("lclm", "gcrd"):
        p = add(name, f"{name} of two one-variable polynomials")
        p.add_argument("--f", required=True)
        p.add_argument("--g", required=True)

    p = add("cn-check", "combinatorial Nullstellensatz on a grid")
    p.add_argument("--poly", required=True)
    p.add_argument("--set", nargs="+", action="append", required=True, dest="sets",
                   help="elements of A_i; repeat once per variable")
    p.add_argument("--exponent", type=int, nargs="+")

    p = add("cw-check", "Chevalley-Warning count of common zeros")
    p.add_argument("--poly", action="append", required=True)

    p = add("ax-check", "sum of a polynomial over the affine space")
    p.add_argument("--poly", required=True)

    p = add("nf", "normal form modulo the vanishing ideal")
    p.add_argument("--poly", required=True)

    p = add("vanish-check", "does the polynomial vanish on the whole affine space")
    p.add_argument("--poly", required=True)

    p = add("finitesatz-cert", "certificate sum u_i f_i + e = 1 for an empty variety")
    p.add_argument("--poly", action="append", required=True)

    p = add("finitesatz-1v", "gcrd with x^(M+1) - x against the minimal polynomial of the zeros")
    p.add_argument("--poly", required=True)

    p = add("sweep", "randomized checks of one theorem")
    p.add_argument("--theorem", required=True,
                   choices=["cn", "cw", "ax", "nf", "finitesatz", "finitesatz-1v", "roundtrip"])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=3)
    return parser


def make_ring(args):
    if args.ring == "gaussian":
        return GaussianRationals()
    if args.ring == "quaternion":
        return Quaternions()
    modulus = None
    if args.modulus:
        base = FiniteField(args.p)
        poly = parse_uni(args.modulus, base)
        modulus = [c.value for c in poly.coeffs]
    return FiniteField(args.p, args.m, args.k, modulus)


def _params(args, ring):
    params = {"ring": args.ring}
    if isinstance(ring, FiniteField):
        params.update(p=ring.p, m=ring.m, k=ring.k, q=ring.q)
    params["n"] = args.n
    return params


def _poly(text, ring, n):
    return parse_poly(text, ring, n)


def _index(ring, n):
    if not isinstance(ring, FiniteField):
        raise UsageError("this command needs a finite field (--ring ff)")
    return build_index(ring, n)


# ---------------------------------------------------------------------------
# commands; each returns a list of result dicts or VerificationReports


def cmd_affine(args, ring):
    idx = _index(ring, args.n)
    if args.action == "enum":
        return [str(a) for a in idx.points()]
    count = len(idx.points())
    return [{"q": ring.q, "k": ring.k, "n": args.n, "count": count,
             "formula_count": idx.formula_count(), "mod_p_ok": count % ring.p == 0}]


def cmd_eval(args, ring):
    f = _poly(args.poly, ring, args.n)
    if len(args.point) != args.n:
        raise UsageError(f"--point needs {args.n} coordinates")
    point = AffinePoint(ring, [parse_scalar(s, ring) for s in args.point])
    return [{"poly": format_poly(f), "point": str(point), "value": str(multi_eval(f, point))}]


def cmd_minpoly(args, ring):
    A = SigmaAlgebraicSet(ring, [parse_scalar(s, ring) for s in args.elements])
    if args.command == "rank":
        return [{"set": [str(a) for a in A], "rank": A.rank}]
    return [{"set": [str(a) for a in A], "minpoly": str(A.minpoly), "rank": A.rank}]


def cmd_lclm_gcrd(args, ring):
    f, g = parse_uni(args.f, ring), parse_uni(args.g, ring)
    if args.command == "lclm":
        return [{"f": str(f), "g": str(g), "lclm": str(lclm(f, g))}]
    h, u, v = gcrd(f, g)
    return [{"f": str(f), "g": str(g), "gcrd": str(h), "u": str(u), "v": str(v)}]


def cmd_cn(args, ring):
    f = _poly(args.poly, ring, args.n)
    sets = [SigmaAlgebraicSet(ring, [parse_scalar(s, ring) for s in A]) for A in args.sets]
    _, report = cn_check(f, sets, args.exponent)
    return [report]


def cmd_cw(args, ring):
    idx = _index(ring, args.n)
    polys = [_poly(s, ring, args.n) for s in args.poly]
    return [chevalley_warning_check(polys, idx, args.jobs)]


def cmd_ax(args, ring):
    idx = _index(ring, args.n)
    return [skew_ax_check(_poly(args.poly, ring, args.n), idx, args.jobs)]


def cmd_nf(args, ring):
    idx = _index(ring, args.n)
    f = _poly(args.poly, ring, args.n)
    return [{"poly": format_poly(f), "normal_form": format_poly(vanishing_ideal_normal_form(f, idx))}]


def cmd_vanish(args, ring):
    idx = _index(ring, args.n)
    f = _poly(args.poly, ring, args.n)
    return [{"poly": format_poly(f), "vanishes": vanishes_everywhere(f, idx, args.jobs)}]


def cmd_finitesatz(args, ring):
    idx = _index(ring, args.n)
    J = LeftIdealMulti([_poly(s, ring, args.n) for s in args.poly])
    cert, report = finitesatz_report(J, idx)
    report.observed["cofactors"] = [str(u) for u in cert.cofactors]
    report.observed["vanisher"] = str(cert.vanisher)
    return [report]


def cmd_finitesatz_1v(args, ring):
    _index(ring, 1)
    return [one_var_finitesatz_check(parse_uni(args.poly, ring), ring)]


# ---------------------------------------------------------------------------
# sweeps


def _sweep_instances(args, ring, rng):
    """Yield one VerificationReport per random instance."""
    kind, n, deg = args.theorem, args.n, args.max_degree
    if kind == "roundtrip":
        for _ in range(args.count):
            f = random_poly(ring, n, rng, max_degree=deg)
            text = format_poly(f)
            again = format_poly(parse_poly(text, ring, n))
            yield VerificationReport("roundtrip", {"poly": text}, True, again, text, again == text)
        return
    idx = _index(ring, n)
    if kind == "cn":
        for _ in range(args.count):
            f, sets, exp = random_cn_instance(idx, rng, deg)
            yield cn_check(f, sets, exp)[1]
    elif kind == "cw":
        bound = chevalley_warning_bound(ring, n)
        for _ in range(args.count):
            polys = [random_poly(ring, n, rng, max_degree=deg, nonzero=True)
                     for _ in range(rng.randint(1, 2))]
            if sum(f.total_degree for f in polys) >= bound and rng.random() < 0.9:
                polys = [random_poly(ring, n, rng, max_degree=max(int(bound) - 1, 0), nonzero=True)]
            yield chevalley_warning_check(polys, idx, args.jobs)
    elif kind == "ax":
        cap = skew_ax_bound(ring, n) - 1
        for _ in range(args.count):
            yield skew_ax_check(random_poly(ring, n, rng, max_degree=min(deg, cap)), idx, args.jobs)
    elif kind == "nf":
        for _ in range(args.count):
            f = random_poly(ring, n, rng, max_degree=deg)
            nf = vanishing_ideal_normal_form(f, idx)
            rest = vanishes_everywhere(f - nf, idx, args.jobs)
            yield VerificationReport("normal_form", {"poly": format_poly(f)}, True,
                                     {"normal_form": format_poly(nf), "difference_vanishes": rest},
                                     {"difference_vanishes": True}, rest)
    elif kind == "finitesatz":
        made = 0
        while made < args.count:
            gens = [random_poly(ring, n, rng, max_degree=deg, nonzero=True)
                    for _ in range(rng.randint(1, 3))]
            J = LeftIdealMulti(gens)
            if variety(J, idx, args.jobs):
                continue
            made += 1
            yield finitesatz_report(J, idx)[1]
    elif kind == "finitesatz-1v":
        for _ in range(args.count):
            f = random_poly(ring, 1, rng, max_degree=deg, nonzero=True)
            uni = parse_uni(format_poly(f), ring)
            yield one_var_finitesatz_check(uni, ring)


def cmd_sweep(args, ring):
    rng = random.Random(args.seed)
    total = satisfied = failed = 0
    failures = []
    for report in _sweep_instances(args, ring, rng):
        total += 1
        satisfied += report.hypothesis_satisfied
        if report.falsified:
            failed += 1
            if len(failures) < 5:
                failures.append(report.params)
    return [VerificationReport(
        theorem=f"sweep:{args.theorem}",
        params={"seed": args.seed, "count": args.count, "max_degree": args.max_degree},
        hypothesis_satisfied=True,
        observed={"instances": total, "hypothesis_satisfied": satisfied,
                  "failed": failed, "first_failures": failures},
        expected={"failed": 0},
        passed=failed == 0,
    )]


COMMANDS = {
    "affine": cmd_affine, "eval": cmd_eval, "minpoly": cmd_minpoly, "rank": cmd_minpoly,
    "lclm": cmd_lclm_gcrd, "gcrd": cmd_lclm_gcrd, "cn-check": cmd_cn, "cw-check": cmd_cw,
    "ax-check": cmd_ax, "nf": cmd_nf, "vanish-check": cmd_vanish,
    "finitesatz-cert": cmd_finitesatz, "finitesatz-1v": cmd_finitesatz_1v, "sweep": cmd_sweep,
}


# ---------------------------------------------------------------------------
# output


def _plain(result):
    return result.to_dict() if isinstance(result, VerificationReport) else result


def render(command, params, results, elapsed_ms, fmt):
    plain = [_plain(r) for r in results]
    if fmt == "json":
        doc = {"command": command, "params": params, "results": plain, "elapsed_ms": elapsed_ms}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if plain and all(isinstance(r, VerificationReport) for r in results):
            columns = CSV_COLUMNS
        elif plain and isinstance(plain[0], dict):
            columns = list(plain[0])
        else:
            columns = ["value"]
            plain = [{"value": r} for r in plain]
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in plain:
            writer.writerow({c: _cell(row.get(c)) for c in columns})
        return buf.getvalue()
    lines = []
    for r in results:
        if isinstance(r, VerificationReport):
            status = "PASS" if r.passed else "FAIL"
            if not r.hypothesis_satisfied:
                status += " (hypothesis not satisfied)"
            lines.append(f"{r.theorem}: {status} observed={_cell(r.observed)}")
        elif isinstance(r, dict):
            lines.append(" ".join(f"{k}={_cell(v)}" for k, v in r.items()))
        else:
            lines.append(str(r))
    return "\n".join(lines) + "\n"


def _cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


def run_command(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        ring = make_ring(args)
        if args.n < 1:
            raise UsageError("--n must be positive")
        results = COMMANDS[args.command](args, ring)
    except HypothesisViolation as exc:
        print(f"hypothesis violated: {exc}", file=stderr)
        return EXIT_USAGE
    except NonEmptyVariety as exc:
        print(f"the variety is not empty: {exc}", file=stderr)
        return EXIT_USAGE
    except (UsageError, PolySyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except SkewError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_FAIL if isinstance(exc, AssertionError) else EXIT_USAGE
    elapsed = None if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    command = args.command + (f" {args.action}" if args.command == "affine" else "")
    stdout.write(render(command, _params(args, ring), results, elapsed, args.format))
    failed = any(isinstance(r, VerificationReport) and r.falsified for r in results)
    return EXIT_FAIL if failed else EXIT_PASS


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
