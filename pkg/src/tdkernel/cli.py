"""``tdk``: JSON in, JSON out front end.

Exit codes: 0 success, 1 malformed input, 2 spec rejected, 3 indeterminate
verdict, 4 a worked example failed its checks, 64 usage error.
"""

import argparse
import json
import sys

import numpy as np

from . import aluthge, classify, shimorin, windows
from .errors import NonzeroViolation, NotLeftInvertible, NotTruncated
from .spec import KernelSpec, validate_spec
from .verdict import Outcome
from .worked import EXAMPLES

EXIT_OK, EXIT_MALFORMED, EXIT_REJECTED, EXIT_INDETERMINATE, EXIT_EXAMPLE, EXIT_USAGE = 0, 1, 2, 3, 4, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Malformed(Exception):
    pass


def _load_spec(path):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _Malformed(str(exc)) from exc
    try:
        return KernelSpec.from_json(data)
    except NonzeroViolation:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise _Malformed(f"not a kernel spec: {exc}") from exc


def _pretty(name, mat):
    with np.printoptions(precision=6, suppress=True, linewidth=160):
        print(f"{name} =", file=sys.stderr)
        print(np.asarray(mat), file=sys.stderr)


def _undecided(*verdicts):
    return any(v is not None and v.value is Outcome.INDETERMINATE for v in verdicts)


def cmd_validate(args):
    spec = _load_spec(args.spec)
    return validate_spec(spec).to_json(), False


def cmd_matrix(args):
    spec = _load_spec(args.spec)
    if args.op == "mz":
        win = windows.mz_window(spec, args.dim)
    elif args.op == "l":
        win = windows.left_inverse_window(spec, args.dim)
    else:
        win = windows.lp_window(spec, args.p, args.dim)
    if args.pretty:
        _pretty(win.source, win.entries)
    return win.to_json(), False


def cmd_shimorin(args):
    spec = _load_spec(args.spec)
    dual, table = shimorin.shimorin_tridiagonal_verdict(spec, args.max)
    if table.max_index > args.max:
        table = shimorin.CoefficientTable(table.X[: args.max + 1, : args.max + 1])
    if args.pretty:
        _pretty("X", table.X)
    out = table.to_json()
    out["verdict"] = dual.to_json()
    return out, _undecided(dual.criterion, dual.numeric)


def cmd_aluthge(args):
    spec = _load_spec(args.spec)
    if args.kernel == "shimorin":
        table = aluthge.shimorin_aluthge_coeffs(spec, args.max)
    else:
        table = aluthge.standard_aluthge_coeffs(spec, args.max)
    verdict = table.tridiagonal_verdict()
    if args.pretty:
        _pretty("X~" if args.kernel == "shimorin" else "alpha", table.X)
    return table.to_json(verdict), _undecided(verdict)


def cmd_classify(args):
    spec = _load_spec(args.spec)
    if args.test == "quasinormal":
        res = classify.quasinormal_test(spec, args.dim)
        dual = res.verdict
        out = res.to_json()
    elif args.test == "positive":
        P = windows.modulus_window(spec, args.power, args.dim)
        dual = classify.positive_kernel_criterion(P, spec)
        out = {"operator": P.source, **dual.to_json()}
        if args.pretty:
            _pretty(P.source, P.entries)
    else:
        res = classify.truncated_sa_criterion(spec)
        dual = res.verdict
        out = res.to_json()
        if args.pretty:
            _pretty("A", res.block)
    return out, _undecided(dual.criterion, dual.numeric)


def cmd_examples(args):
    rep = EXAMPLES[args.name]()
    return rep.to_json(), None if rep.ok else "failed"


def build_parser():
    p = _Parser(prog="tdk", description="Shifts on tridiagonal kernel spaces.")
    p.add_argument("--pretty", action="store_true", help="print matrices to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def spec_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("spec", help="kernel spec JSON file, or - for stdin")
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(func=func)
        return sp

    spec_cmd("validate", cmd_validate, "check the standing hypotheses")
    sp = spec_cmd("matrix", cmd_matrix, "closed-form operator window")
    sp.add_argument("--op", choices=("mz", "l", "lp"), default="mz")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--dim", type=int, default=8)
    sp = spec_cmd("shimorin", cmd_shimorin, "Shimorin kernel coefficients")
    sp.add_argument("--max", type=int, default=8)
    sp = spec_cmd("aluthge", cmd_aluthge, "Aluthge kernel coefficients")
    sp.add_argument("--kernel", choices=("shimorin", "standard"), default="shimorin")
    sp.add_argument("--max", type=int, default=8)
    sp = spec_cmd("classify", cmd_classify, "classification tests")
    sp.add_argument("--test", choices=("quasinormal", "positive", "truncated"), required=True)
    sp.add_argument("--dim", type=int, default=16)
    sp.add_argument("--power", type=float, default=-1.0,
                    help="positive test uses |M_z|^power (default -1)")

    ex = sub.add_parser("examples", help="regenerate and check a worked example")
    ex.add_argument("--name", choices=tuple(EXAMPLES), required=True)
    ex.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    ex.set_defaults(func=cmd_examples)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out, flag = args.func(args)
    except _Malformed as exc:
        print(f"tdk: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (NonzeroViolation, NotLeftInvertible, NotTruncated) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_REJECTED
    print(json.dumps(out))
    if flag == "failed":
        return EXIT_EXAMPLE
    if flag is True:
        return EXIT_INDETERMINATE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
