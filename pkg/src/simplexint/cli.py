"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .arith import format_rational, to_rational
from .bench import (
    DEFAULT_TIME_LIMIT,
    BenchConfig,
    TimeLimitExceeded,
    count_forms_csv,
    run_bench,
    summary,
    time_limit,
    to_csv,
)
from .clique import DEFAULT_EXPANSION_LIMIT, Graph, brute_force_clique, clique_estimate, sweep
from .errors import InputError, SimplexIntError
from .generate import DEFAULT_BOX, random_instance
from .integrate import MethodChoice, PowerOfLinearForm, integrate
from .polynomial import LinearForm, SparsePolynomial
from .simplex import Simplex

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for computation errors here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_json_arg(value: str):
    """A JSON document given inline or as a path to a file."""
    text = value.strip()
    if not text.startswith(("[", "{")) and os.path.exists(value):
        with open(value, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON (and not a readable file): {value!r}: {exc}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _rational_matrix(data) -> list[list]:
    if not isinstance(data, list) or not all(isinstance(v, list) for v in data):
        raise InputError("vertices must be a list of coordinate lists")
    try:
        return [[to_rational(x) for x in v] for v in data]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad vertex coordinate: {exc}") from exc


def _build_polynomial(args, request: dict, n: int):
    sources = [("expr", args.expr or request.get("expr")),
               ("sparse", args.sparse or request.get("sparse")),
               ("linear_power", args.linear_power or request.get("linear_power"))]
    given = [(k, v) for k, v in sources if v is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --expr, --sparse, --linear-power")
    kind, value = given[0]
    if kind == "expr":
        return value
    data = load_json_arg(value) if isinstance(value, str) else value
    try:
        if kind == "sparse":
            return SparsePolynomial.from_json(data, n)
        form = LinearForm(to_rational(x) for x in data["form"])
        exponent = int(data["exponent"])
        if exponent < 0:
            raise InputError("exponent must be nonnegative")
        return PowerOfLinearForm(form, exponent, to_rational(data.get("coefficient", 1)))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad {kind.replace('_', '-')} description: {exc}") from exc


def cmd_integrate(args) -> dict:
    request = load_json_arg(args.request) if args.request else {}
    if not isinstance(request, dict):
        raise InputError("a request must be a JSON object")
    vertices = args.vertices or request.get("vertices")
    if vertices is None:
        raise UsageError("--vertices is required")
    if isinstance(vertices, str):
        vertices = load_json_arg(vertices)
    simplex = Simplex(_rational_matrix(vertices))
    f = _build_polynomial(args, request, simplex.ambient_dimension)
    method = args.method or request.get("method", "auto")
    try:
        method = MethodChoice(method)
    except ValueError as exc:
        raise UsageError(f"unknown method {method!r}") from exc
    start = time.perf_counter()
    with time_limit(args.time_limit):
        value, used = integrate(simplex, f, method)
    elapsed = (time.perf_counter() - start) * 1000
    return {"integral": format_rational(value), "method": used, "elapsed_ms": round(elapsed, 3)}


def cmd_random_instance(args) -> dict:
    box = (args.box[0], args.box[1])
    if box[0] > box[1]:
        raise UsageError("--box LO HI needs LO <= HI")
    req = random_instance(args.seed, args.n, args.degree, args.generator, args.d, box, args.method)
    return req.to_json()


def cmd_bench(args):
    if args.table == "count-forms":
        return count_forms_csv(args.dims, args.degrees)
    if not args.dims or not args.degrees:
        raise UsageError("bench needs --dims and --degrees")
    try:
        config = BenchConfig(args.dims, args.degrees, args.instances, args.generator, args.seed,
                             args.time_limit, args.methods.split(","))
        for m in config.methods:
            MethodChoice(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = run_bench(config)
    if args.output == "csv":
        return to_csv(result)
    return summary(result)


def cmd_clique(args) -> dict:
    graph = Graph.from_json(load_json_arg(args.graph))
    if args.p == "sweep":
        res = sweep(graph, max_p=args.max_p, limit=args.limit)
        out = res.to_json()
        out["history"] = [list(h) for h in res.history]
        return out
    try:
        p = int(args.p)
    except ValueError as exc:
        raise UsageError("--p takes a positive integer or 'sweep'") from exc
    if p < 1:
        raise UsageError("--p takes a positive integer or 'sweep'")
    est = clique_estimate(graph, p, args.limit)
    omega = brute_force_clique(graph)
    return {"estimate": est, "p_used": p, "brute_force": omega, "match": est == omega}


def cmd_count_forms(args) -> str:
    return count_forms_csv(args.dims, args.degrees)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="simplexint", description="Exact integration of polynomials over rational simplices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("integrate", help="integrate one polynomial over one simplex")
    p.add_argument("--vertices", help="vertex list as inline JSON or a file, e.g. [[0,0],[1,0],[0,1]]")
    p.add_argument("--expr", help="fully parenthesized expression, e.g. '(x1*x2)'")
    p.add_argument("--sparse", help='term list (file or inline JSON): [{"coef":"p/q","exps":[...]}]')
    p.add_argument("--linear-power", dest="linear_power",
                   help='linear form power (file or inline JSON): {"form":[...],"exponent":M}')
    p.add_argument("--request", help="a full request JSON as written by random-instance")
    p.add_argument("--method", choices=[m.value for m in MethodChoice])
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("random-instance", help="print a seeded random request")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--d", type=int, default=None, help="simplex dimension (default n)")
    p.add_argument("--generator", default="monomial", help="monomial | dense-homogeneous | few-effective(D)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--box", type=int, nargs=2, metavar=("LO", "HI"), default=list(DEFAULT_BOX))
    p.add_argument("--method", default="auto", choices=[m.value for m in MethodChoice])
    p.set_defaults(func=cmd_random_instance)

    p = sub.add_parser("bench", help="timing table over random instances")
    p.add_argument("--dims", type=_int_list, default=None)
    p.add_argument("--degrees", type=_int_list, default=None)
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--generator", default="monomial")
    p.add_argument("--methods", default="waring,duality,laurent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    p.add_argument("--output", choices=["csv", "json"], default="csv")
    p.add_argument("--table", choices=["timings", "count-forms"], default="timings")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("clique", help="clique number from integrals of the Motzkin-Straus form")
    p.add_argument("--graph", required=True, help='graph JSON (file or inline): {"n":4,"edges":[[1,2]]}')
    p.add_argument("--p", default="sweep", help="a positive integer, or 'sweep'")
    p.add_argument("--max-p", type=int, default=1000)
    p.add_argument("--limit", type=int, default=DEFAULT_EXPANSION_LIMIT, help="multinomial term limit")
    p.set_defaults(func=cmd_clique)

    p = sub.add_parser("count-forms", help="table of primitive linear form counts F(n, M)")
    p.add_argument("--dims", type=_int_list, default=None)
    p.add_argument("--degrees", type=_int_list, default=None)
    p.set_defaults(func=cmd_count_forms)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (UsageError, InputError) as exc:
        print(f"simplexint: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SimplexIntError, TimeLimitExceeded) as exc:
        print(f"simplexint: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"simplexint: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        print(json.dumps(out, sort_keys=True))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
