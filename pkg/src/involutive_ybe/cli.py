"""Command-line interface.

Exit codes: 0 success, 2 domain-level rejection (not an involution, not a
solution, inadmissible case, self-test disagreement), 1 usage or I/O error.
"""

import argparse
import json
import sys

from . import __version__
from .classify import classify_solution
from .errors import (
    InadmissibleCaseError,
    NotASolutionError,
    NotInvolutionError,
    SingularMatrixError,
    YBEError,
)
from .involution import DEFAULT_TOL, decompose_involution, is_involution
from .matrix_json import dumps_matrix, loads_json, matrix_from_obj, matrix_to_obj, read_matrix
from .qybe import lift_to_pair, qybe_residual
from .selftest import grid_completeness, oracle_agreement
from .solver import (
    Alg1,
    Alg2,
    Alg3,
    SolutionCase,
    Trivial,
    admissibility_rule,
    build_y,
    lift_solution,
    sample_solution,
    verify_solution,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECT = 2

# domain errors map to exit 2, everything else from the library to exit 1
_REJECTIONS = (InadmissibleCaseError, NotASolutionError, NotInvolutionError, SingularMatrixError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num(x):
    return float(format(float(x), ".17g"))


def _dump(obj):
    return json.dumps(obj, indent=2)


def _report_dict(report):
    return {
        "ybe_residual": _num(report.ybe_residual),
        "involution_residual": _num(report.involution_residual),
        "trace_gap": _num(report.trace_gap),
        "max_block_identity_residual": _num(report.max_block_identity_residual),
    }


def _emit_matrix(m, output):
    text = dumps_matrix(m) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def params_to_obj(params):
    if isinstance(params, Trivial):
        return {"case": "trivial"}
    out = {"case": params.case.value}
    if isinstance(params, Alg1):
        out["params"] = {"Y2": matrix_to_obj(params.y2)}
    elif isinstance(params, Alg2):
        out["params"] = {"P1": matrix_to_obj(params.p1), "B2": matrix_to_obj(params.b2)}
    else:
        out["r"] = params.r
        out["params"] = {
            "P1": matrix_to_obj(params.p1),
            "P4": matrix_to_obj(params.p4),
            "F1": matrix_to_obj(params.f1),
        }
    return out


def params_from_obj(obj, case, r=None):
    """Build solver parameters from a JSON object.

    Accepts ``{"Y2": ...}`` style objects as well as the output of ``classify``.
    """
    if not isinstance(obj, dict):
        raise YBEError("params file must hold a JSON object")
    if "params" in obj and isinstance(obj["params"], dict):
        r = obj.get("r", r)
        obj = obj["params"]

    def get(key):
        if key not in obj:
            raise YBEError(f"params file is missing {key!r} for case {case.value}")
        return matrix_from_obj(obj[key], key)

    if case is SolutionCase.TRIVIAL:
        return Trivial()
    if case is SolutionCase.ALG1:
        return Alg1(get("Y2"))
    if case is SolutionCase.ALG2:
        return Alg2(get("P1"), get("B2"))
    f1 = get("F1")
    if r is None:
        r = f1.shape[0]
    return Alg3(get("P1"), get("P4"), f1, int(r))


def cmd_check(args):
    a = read_matrix(args.matrix)
    ok, residual = is_involution(a, args.tol)
    print(_dump({"involution_residual": _num(residual), "involutory": bool(ok)}))
    return EXIT_OK if ok else EXIT_REJECT


def cmd_solve(args):
    a = read_matrix(args.matrix)
    dec = decompose_involution(a, args.tol)
    case = SolutionCase(args.case)
    if args.params:
        with open(args.params, encoding="utf-8") as fh:
            params = params_from_obj(loads_json(fh.read(), args.params), case, args.r)
        if dec.trivial_case is not None and case is not SolutionCase.TRIVIAL:
            raise InadmissibleCaseError("A = +-I admits only the trivial solution")
        if dec.trivial_case is not None:
            x = dec.a
        else:
            rule = admissibility_rule(case, dec.n, dec.p, getattr(params, "r", None))
            if rule is not None:
                raise InadmissibleCaseError(rule)
            x = lift_solution(dec, build_y(dec.n, dec.p, params))
    else:
        params, x = sample_solution(dec, case, args.seed, args.r)
    report = verify_solution(a, x, args.tol, dec=dec)
    sys.stderr.write(_dump({"case": params.case.value, **_report_dict(report)}) + "\n")
    _emit_matrix(x, args.output)
    return EXIT_OK if report.passes(args.tol) else EXIT_REJECT


def cmd_verify(args):
    a = read_matrix(args.a)
    x = read_matrix(args.x)
    report = verify_solution(a, x, args.tol)
    ok = report.passes(args.tol)
    print(_dump({**_report_dict(report), "solution": ok}))
    return EXIT_OK if ok else EXIT_REJECT


def cmd_classify(args):
    a = read_matrix(args.a)
    x = read_matrix(args.x)
    dec = decompose_involution(a, args.tol)
    params = classify_solution(dec, x, args.tol)
    print(json.dumps(params_to_obj(params)))
    return EXIT_OK


def cmd_qybe(args):
    z = read_matrix(args.matrix)
    residual = qybe_residual(z, args.m)
    ok = residual <= args.tol
    print(_dump({"qybe_residual": _num(residual), "satisfied": ok}))
    if ok and args.lift:
        a, x = lift_to_pair(z, args.m, args.tol)
        with open(args.lift, "w", encoding="utf-8") as fh:
            fh.write(_dump({"A": matrix_to_obj(a), "X": matrix_to_obj(x)}) + "\n")
    return EXIT_OK if ok else EXIT_REJECT


def cmd_selftest(args):
    hits, rejected = grid_completeness(args.grid_step)
    print(f"grid: {len(hits)} solutions found, {len(rejected)} outside {{D}} u K")
    agreement = oracle_agreement(args.trials, args.seed)
    print(
        f"oracle: {agreement.positives} solutions, {agreement.negatives} non-solutions, "
        f"{len(agreement.disagreements)} disagreements"
    )
    for line in agreement.disagreements:
        print(f"  {line}")
    return EXIT_OK if agreement.ok and not rejected else EXIT_REJECT


def build_parser():
    parser = _Parser(
        prog="involutive-ybe",
        description="Involutive solutions X of A X A = X A X for an involutory matrix A.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def tol_arg(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="residual tolerance (default 1e-8)")

    p = sub.add_parser("check", help="test whether a matrix is an involution")
    p.add_argument("matrix")
    tol_arg(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="construct an involutive solution X for A")
    p.add_argument("matrix", help="JSON file holding A")
    p.add_argument("--case", choices=[c.value for c in SolutionCase], required=True)
    p.add_argument("--r", type=int, default=None, help="rank parameter for alg3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--params", default=None, help="JSON file with parameter matrices")
    p.add_argument("--output", default=None, help="write X here instead of stdout")
    tol_arg(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="residuals of A X A = X A X and X^2 = I")
    p.add_argument("a")
    p.add_argument("x")
    tol_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="recover the solution case and parameters of X")
    p.add_argument("a")
    p.add_argument("x")
    tol_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("qybe", help="quantum Yang-Baxter residual of Z on C^m (x) C^m")
    p.add_argument("matrix")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lift", default=None, help="write the pair (I (x) Z, Z (x) I) here")
    tol_arg(p)
    p.set_defaults(func=cmd_qybe)

    p = sub.add_parser("selftest", help="run the brute-force oracle cross-checks")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-step", type=float, default=0.05)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _REJECTIONS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECT
    except (OSError, YBEError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
