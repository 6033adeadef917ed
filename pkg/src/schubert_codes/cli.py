"""Command-line front end.

Exit codes: 0 ok, 1 assertion or identity failure, 2 invalid input,
3 budget refusal, 4 I/O error. Errors print one line to stderr:
``error: <Kind>: <message>``.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import codes, formulas
from .errors import EnumerationBudgetExceeded, InvalidInput, SchubertError
from .field import make_field
from .geometry import DEFAULT_POINT_BUDGET, enumerate_schubert_points
from .tuples import IndexTuple, delta, enumerate_all, parse_tuple

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET, EXIT_IO = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message.replace("\n", " "))


def _q_list(text):
    values = [v for v in (x.strip() for x in text.split(",")) if v]
    if not values:
        raise InvalidInput("empty q list")
    try:
        return [int(v) for v in values]
    except ValueError:
        raise InvalidInput(f"cannot parse q list {text!r}") from None


def _single_q(args):
    qs = _q_list(args.q or "2")
    if len(qs) != 1:
        raise InvalidInput("this command takes a single q")
    return qs[0]


def _alpha(args):
    if args.alpha is None:
        raise InvalidInput("--alpha is required")
    if args.m is None:
        raise InvalidInput("--m is required")
    alpha = parse_tuple(args.alpha, args.m)
    if args.l is not None and args.l != alpha.ell:
        raise InvalidInput(f"--l {args.l} does not match alpha of length {alpha.ell}")
    return alpha


def _emit(args, text):
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise _IOFailure(f"{args.out}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)


class _IOFailure(Exception):
    pass


def _csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj):
    return json.dumps(obj, indent=2) + "\n"


# --- commands ---------------------------------------------------------------

def cmd_params(args):
    alpha = _alpha(args)
    q = _single_q(args)
    make_field(q)
    bundle = formulas.parameter_bundle(alpha, q)
    data = bundle.to_dict()
    if args.format == "text":
        lines = [f"alpha={data['alpha']} l={data['l']} m={data['m']} q={q} delta={data['delta']}"]
        lines += [f"n[{key}]={val}" for key, val in data["n"].items()]
        lines += [f"k[{key}]={'NA' if val is None else val}" for key, val in data["k"].items()]
        lines.append(f"bounds=[{data['bounds']['gv_lower']}, {data['bounds']['mdc_upper']}]")
        lines.append("agree=" + " ".join(f"{key}:{val}" for key, val in data["agree"].items()))
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json(data))
    return EXIT_OK if all(data["agree"].values()) else EXIT_FAIL


IDENTITY_HEADER = ["q", "ell", "m", "alpha", "n_cells", "n_na2", "n_gv", "k_det", "k_limit", "k_downset", "k_ap", "agree"]


def _identity_row(alpha, q):
    b = formulas.parameter_bundle(alpha, q)
    k_ap = b.k["arith_progression"]
    ok = b.n_agree and b.k_agree
    row = [q, alpha.ell, alpha.m, str(alpha), b.n["cells"], b.n["nested"], b.n["gv"],
           b.k["determinant"], b.k["limit"], b.k["downset"], "NA" if k_ap is None else k_ap, int(ok)]
    return row, ok


def cmd_identities(args):
    qs = _q_list("2,3,4,5" if args.q is None else args.q)
    for q in qs:
        make_field(q)
    if args.alpha is not None:
        tuples = [_alpha(args)]
    else:
        l_max = 4 if args.l is None else args.l
        m_max = 7 if args.m is None else args.m
        if l_max < 1 or m_max < 1:
            raise InvalidInput("--l and --m must be positive")
        # the parameters of α do not depend on m, so I(ℓ, m_max) covers all m <= m_max
        tuples = [a for ell in range(1, min(l_max, m_max) + 1) for a in enumerate_all(ell, m_max)]
    rows = []
    failures = 0
    for q in qs:
        for alpha in tuples:
            row, ok = _identity_row(alpha, q)
            rows.append(row)
            if not ok:
                failures += 1
                print(f"error: IdentityFailure: alpha={alpha} q={q}", file=sys.stderr)
    if args.format == "json":
        _emit(args, _json({"checked": len(rows), "failures": failures, "rows": [dict(zip(IDENTITY_HEADER, r)) for r in rows]}))
    else:
        _emit(args, _csv(IDENTITY_HEADER, rows))
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _workers(args):
    return args.workers if args.workers else (os.cpu_count() or 1)


def _check_budgets(alpha, q, r_max, args):
    n = formulas.length_via_cells(alpha, q)
    if n > args.budget_points:
        raise EnumerationBudgetExceeded(f"points of Omega{alpha}", n, args.budget_points)
    k = formulas.dimension_via_determinant(alpha)
    hyperplanes = codes.hyperplane_count(q, k)
    if hyperplanes > args.budget_subspaces:
        raise EnumerationBudgetExceeded("hyperplanes", hyperplanes, args.budget_subspaces)
    if r_max < 1 or r_max > k:
        raise InvalidInput(f"--r-max must satisfy 1 <= r <= k={k}")
    for r in range(2, r_max + 1):
        count = codes.codim_subspace_count(q, k, r)
        if count > args.budget_subspaces:
            raise EnumerationBudgetExceeded(f"codimension-{r} subspaces", count, args.budget_subspaces)


def _distance(args, distribution):
    alpha = _alpha(args)
    q = _single_q(args)
    spec = make_field(q)
    r_max = args.r_max
    _check_budgets(alpha, q, r_max, args)
    gen = codes.build_schubert_code(alpha, spec, args.budget_points)
    report = codes.weight_report(gen, r_max, distribution, args.budget_subspaces, _workers(args))
    data = report.to_dict(timing=args.timing)
    upper = q ** delta(alpha)
    data["conjecture"] = {"q_delta": upper, "holds": report.d[0] == upper}
    _emit(args, _json(data))
    if args.assert_conjecture and report.d[0] != upper:
        print(f"error: ConjectureFailure: d={report.d[0]} != q^delta={upper} for alpha={alpha} q={q}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_distance(args):
    return _distance(args, distribution=False)


def cmd_weights(args):
    return _distance(args, distribution=True)


def cmd_matrix(args):
    alpha = _alpha(args)
    spec = make_field(_single_q(args))
    gen = codes.build_schubert_code(alpha, spec, args.budget_points)
    _emit(args, gen.to_text())
    return EXIT_OK


def cmd_enumerate(args):
    alpha = _alpha(args)
    spec = make_field(_single_q(args))
    points = enumerate_schubert_points(alpha, spec, args.budget_points)
    _emit(args, "".join(",".join(str(int(x)) for x in row) + "\n" for row in points))
    return EXIT_OK


TABLE_HEADER = ["q", "ell", "m", "alpha", "delta", "n_cells", "n_na2", "n_gv", "k_det", "k_limit", "k_ap", "gv_lower", "mdc_upper"]


def cmd_table(args):
    qs = _q_list(args.q or "2")
    specs = [make_field(q) for q in qs]
    if args.l is None or args.m is None:
        raise InvalidInput("--l and --m are required")
    tuples = [_alpha(args)] if args.alpha else enumerate_all(args.l, args.m)
    header = TABLE_HEADER + (["d_measured", "mdc_holds"] if args.measure else [])
    rows = []
    for spec in specs:
        q = spec.q
        for alpha in tuples:
            b = formulas.parameter_bundle(alpha, q)
            k_ap = b.k["arith_progression"]
            row = [q, alpha.ell, alpha.m, str(alpha), b.delta, b.n["cells"], b.n["nested"], b.n["gv"],
                   b.k["determinant"], b.k["limit"], "NA" if k_ap is None else k_ap,
                   formulas.fraction_str(b.gv_lower), b.mdc_upper]
            if args.measure:
                _check_budgets(alpha, q, 1, args)
                gen = codes.build_schubert_code(alpha, spec, args.budget_points)
                d = codes.min_distance_bruteforce(gen, args.budget_subspaces)
                row += [d, int(d == b.mdc_upper)]
            rows.append(row)
    if args.format == "json":
        _emit(args, _json([dict(zip(header, r)) for r in rows]))
    else:
        _emit(args, _csv(header, rows))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", help="field size, comma-separated for sweeps (default 2; identities: 2,3,4,5)")
    common.add_argument("--l", type=int, help="subspace dimension (max for sweeps)")
    common.add_argument("--m", type=int, help="ambient dimension (max for sweeps)")
    common.add_argument("--alpha", help="index tuple, e.g. 2,4")
    common.add_argument("--r-max", type=int, default=1, dest="r_max")
    common.add_argument("--budget-points", type=int, default=DEFAULT_POINT_BUDGET, dest="budget_points")
    common.add_argument("--budget-subspaces", type=int, default=codes.DEFAULT_SUBSPACE_BUDGET, dest="budget_subspaces")
    common.add_argument("--workers", type=int, default=0, help="process count (0: all CPUs)")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--assert-conjecture", action="store_true", dest="assert_conjecture")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in reports")
    common.add_argument("--measure", action="store_true", help="table: brute-force d for every row")

    parser = _Parser(prog="schubert-codes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    commands = {
        "params": (cmd_params, "json", "all parameter formulas for one tuple"),
        "identities": (cmd_identities, "csv", "sweep the length and dimension identities"),
        "distance": (cmd_distance, "json", "brute-force d_1..d_r"),
        "weights": (cmd_weights, "json", "brute-force d_1..d_r plus the weight distribution"),
        "matrix": (cmd_matrix, "text", "write the generator matrix"),
        "enumerate": (cmd_enumerate, "text", "dump the Plücker points"),
        "table": (cmd_table, "csv", "parameter table over I(l, m)"),
    }
    for name, (func, fmt, help_text) in commands.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--format", choices=["json", "csv", "text"], default=fmt)
        p.set_defaults(func=func)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.budget_points < 1 or args.budget_subspaces < 1:
            raise InvalidInput("budgets must be positive")
        if args.workers < 0:
            raise InvalidInput("--workers must be >= 0")
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnumerationBudgetExceeded as exc:
        print(f"error: BudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except _IOFailure as exc:
        print(f"error: IOError: {exc}", file=sys.stderr)
        return EXIT_IO
    except SchubertError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
