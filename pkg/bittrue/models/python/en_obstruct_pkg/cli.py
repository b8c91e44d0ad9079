###################################################################################################
# Copyright (c) 2024 Enclustra GmbH, Switzerland (info@enclustra.com)
# 
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software
# and associated documentation files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
# 
# The above copyright notice and this permission notice shall be included in all copies or
# substantial portions of the Software.
# 
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING
# BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

###################################################################################################
# Description:
#
# Command-line front end. Sub-commands: flag, resolve, cohomology, obstruction, difference, toda,
# verify. Reports are JSON on stdout (or a table rendered from the same JSON).
#
# Exit codes:
#   0 = success
#   1 = mathematical refusal, nonvanishing class with --expect-zero, or failed verification
#   2 = usage, parse or data error
###################################################################################################

import argparse
import sys
from os import environ
from concurrent.futures import ThreadPoolExecutor

from .en_obstruct_types import *
from .rational_matrix import *
from .flag_complex import *
from .graded_lie import *
from .simplicial_cw import *
from .aq_cohomology import *
from .ladder_toda import *
from .json_interface import *

EXIT_SUCCESS = 0
EXIT_REFUSAL = 1
EXIT_USAGE = 2

###################################################################################################
# Argument parsing
###################################################################################################

def _env_int(name : str, fallback : int) -> int:
    return int(environ[name]) if name in environ else fallback

def _add_common(p, need_input=True):
    p.add_argument(
        "--in",
        dest="in_path",
        required=need_input,
        default=None,
        help="Input file (presentation JSON, or chain complex data for toda)",
    )
    p.add_argument(
        "-N",
        type=int,
        default=_env_int("EN_OBSTRUCT_LEVELS", 3),
        help="Level cutoff (default: $EN_OBSTRUCT_LEVELS or 3)",
    )
    p.add_argument(
        "-D",
        type=int,
        default=_env_int("EN_OBSTRUCT_DEGREE", 6),
        help="Internal degree cutoff (default: $EN_OBSTRUCT_DEGREE or 6)",
    )
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=False, help="JSON output (default)")
    fmt.add_argument("--table", action="store_true", default=False, help="Table output")
    p.add_argument(
        "--jobs",
        type=int,
        default=_env_int("EN_OBSTRUCT_JOBS", 1),
        help="Worker threads for per-degree computations (default: $EN_OBSTRUCT_JOBS or 1)",
    )
    p.add_argument(
        "--descending",
        action="store_true",
        default=False,
        help="Offer complement candidates in descending order when resolving",
    )
    p.add_argument("-v", "--verbose", action="store_true", default=False, help="Progress on stderr")

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="en_obstruct",
                                     description="Obstruction theory computations for graded Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flag", help="Flag complex statistics and sphere checks")
    _add_common(p, need_input=False)
    p.add_argument("--indices", required=True, help="Comma-separated flag indices, e.g. 0,1")
    p.add_argument("-n", "--n", type=int, required=True, help="Ambient simplicial dimension")

    p = sub.add_parser("resolve", help="Free CW resolution dump")
    _add_common(p)

    p = sub.add_parser("cohomology", help="Andre-Quillen cohomology dimensions H^n(Lambda; Omega^(n-2) Lambda)")
    _add_common(p)
    p.add_argument("-n", "--n", type=int, required=True, help="Cohomological dimension (>= 2)")
    p.add_argument("-d", "--degree", type=int, default=None, help="Single internal degree")
    p.add_argument("--expect-zero", action="store_true", default=False, help="Exit 1 if any dimension is nonzero")

    p = sub.add_parser("obstruction", help="Existence obstruction and k-invariant at level n+2")
    _add_common(p)
    p.add_argument("-n", "--n", type=int, required=True, help="Shift n (>= 0)")
    p.add_argument("--attach", default=None, help="JSON file {generator: expression} replacing level-(n+2) attaching values")
    p.add_argument("--expect-zero", action="store_true", default=False, help="Exit 1 if the obstruction class is nonzero")

    p = sub.add_parser("difference", help="Difference class of two attaching maps at level n+2")
    _add_common(p)
    p.add_argument("-n", "--n", type=int, required=True, help="Shift n (>= 0)")
    p.add_argument("--attach", default=None, help="JSON file {generator: expression} for the second attaching map")
    p.add_argument("--expect-zero", action="store_true", default=False, help="Exit 1 if the difference class is nonzero")

    p = sub.add_parser("toda", help="Long Toda bracket of a tower of chain maps")
    _add_common(p)
    p.add_argument("--oracle", action="store_true", default=False, help="Cross-check by exhaustive enumeration")
    p.add_argument("--expect-zero", action="store_true", default=False, help="Exit 1 if 0 is not in the bracket")

    p = sub.add_parser("verify", help="Check the ladder / obstruction class correspondences at shift n")
    _add_common(p)
    p.add_argument("-n", "--n", type=int, required=True, help="Shift n (>= 0)")
    p.add_argument("--attach", "--attach-json", dest="attach", default=None,
                   help="JSON file {generator: expression}: the candidate attaching map checked against the resolution's own")
    return parser

def config_from_args(args) -> RunConfig:
    return RunConfig(args.command, args.in_path, args.N, args.D,
                     OutputFormat.Table_s if args.table else OutputFormat.Json_s,
                     args.verbose, args.jobs)

###################################################################################################
# Helpers
###################################################################################################

def _progress(config : RunConfig, msg : str):
    if config.verbose:
        print(msg, file=sys.stderr, flush=True)

def _fan_out(config : RunConfig, fn, items):
    """
    fn over items, in order. Shared caches must be warm before the call.
    """
    items = list(items)
    if config.jobs == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(fn, items))

def _pivot(args) -> PivotOrder:
    return PivotOrder.Descending_s if args.descending else PivotOrder.Ascending_s

def _resolution(config : RunConfig, args, N : int, D : int) -> TruncatedCWObject:
    algebra = read_presentation(config.in_path, D, _pivot(args))
    _progress(config, f"Resolving through level {N}, degree {D}")
    return resolve(algebra, N, D, _pivot(args))

def _homotopy(config : RunConfig, X : TruncatedCWObject):
    for n in range(X.N + 1):
        for d in range(1, X.D + 1):
            X.moore(n, d)
    result = {}
    for n in range(X.N + 1):
        _progress(config, f"pi_{n}")
        result[n] = _fan_out(config, lambda d: HomotopyGroupData(X, n, d).dim, range(1, X.D + 1))
    return result

def _warm_complex(cx : AQCochainComplex, n : int, degrees):
    """
    Fills the attaching matrices and coefficient dimensions cohomology_dim reads, so that worker
    threads only read shared caches.
    """
    for d in degrees:
        for level in (n - 1, n, n + 1):
            cx.cochain_shape(level, d)
        for level in (n, n + 1):
            if 1 <= level <= cx.N:
                cx.A(level, d)

def _emit(config : RunConfig, data, out):
    if config.fmt == OutputFormat.Table_s:
        print(render_table(data), file=out)
    else:
        print(dumps_report(data), file=out)

def _own_attach(X : TruncatedCWObject, level : int):
    return {g.name: X.attach_value(g) for g in X.basis[level]}

def _read_attach(X : TruncatedCWObject, level : int, path):
    if path is None:
        return _own_attach(X, level)
    return attach_from_dict(X, level, read_json(path))

###################################################################################################
# Commands
###################################################################################################

def cmd_flag(config : RunConfig, args):
    try:
        indices = [int(x) for x in args.indices.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"Malformed flag indices '{args.indices}'")
    report = flag_report(Flag(args.n, indices))
    return report, EXIT_SUCCESS

def cmd_resolve(config : RunConfig, args):
    X = _resolution(config, args, config.N, config.D)
    homotopy = _homotopy(config, X)
    report = resolution_to_dict(X, homotopy)
    report["higher_homotopy_zero"] = all(all(x == 0 for x in dims) for n, dims in homotopy.items() if 0 < n < X.N)
    report["identities"] = check_simplicial_identities(X)
    if X.N >= 1:
        report["aq_homology"] = {str(n): dims for n, dims in aq_homology_dims(X).items()}
    return report, EXIT_SUCCESS

def cmd_cohomology(config : RunConfig, args):
    n = args.n
    if n < 2:
        raise ValueError(f"Cohomology is exposed for n >= 2, got {n}")
    D = config.D if args.degree is None else max(config.D, args.degree)
    X = _resolution(config, args, max(config.N, n + 1), D)
    module = loop_module(X.presentation, n - 2, D)
    cx = build_aq_complex(X, module)
    degrees = range(1, cx.D + 1) if args.degree is None else [args.degree]
    _warm_complex(cx, n, degrees)
    dims = _fan_out(config, lambda d: cohomology_dim(cx, n, d), degrees)
    report = [{"n": n, "degree": d, "dim": dim} for d, dim in zip(degrees, dims)]
    if args.degree is not None:
        report = report[0]
    code = EXIT_REFUSAL if args.expect_zero and any(x != 0 for x in dims) else EXIT_SUCCESS
    return report, code

def cmd_obstruction(config : RunConfig, args):
    n = args.n
    X = _resolution(config, args, max(config.N, n + 2), config.D)
    attach = _read_attach(X, n + 2, args.attach)
    beta = beta_obstruction(X, n, attach)
    witness = is_coboundary(beta)
    report = {"n": n, "module": beta.complex.module.label(), "cochain": beta.to_dict(),
              "zero": beta.is_zero_cochain(), "correctable": beta.data.correctable,
              "coboundary": witness.found, "witness": witness_to_dict(witness)}
    kinv = k_invariant_cocycle(X, n, attach)
    report["k_invariant"] = {"module": kinv.complex.module.label(), "cochain": kinv.to_dict(),
                             "cocycle": kinv.is_cocycle(), "zero": kinv.is_zero_cochain()}
    code = EXIT_REFUSAL if args.expect_zero and not beta.is_zero_cochain() else EXIT_SUCCESS
    return report, code

def cmd_difference(config : RunConfig, args):
    n = args.n
    X = _resolution(config, args, max(config.N, n + 2), config.D)
    a = _own_attach(X, n + 2)
    b = _read_attach(X, n + 2, args.attach)
    delta = delta_difference(X, n, a, b)
    witness = is_coboundary(delta)
    report = {"n": n, "module": delta.complex.module.label(), "cochain": delta.to_dict(),
              "zero": witness.found, "zero_cochain": delta.is_zero_cochain(),
              "witness": witness_to_dict(witness)}
    code = EXIT_REFUSAL if args.expect_zero and not witness.found else EXIT_SUCCESS
    return report, code

def cmd_toda(config : RunConfig, args):
    maps = read_toda_input(config.in_path)
    bracket = toda_bracket(maps, oracle=args.oracle)
    report = bracket.to_dict()
    report["contains_zero"] = bracket.is_zero()
    if args.oracle:
        report["oracle_agrees"] = oracle_agrees(bracket)
        report["oracle_count"] = len(bracket.oracle_classes)
    failed = (args.oracle and not report["oracle_agrees"]) or (args.expect_zero and not bracket.is_zero())
    return report, EXIT_REFUSAL if failed else EXIT_SUCCESS

def cmd_verify(config : RunConfig, args):
    n = args.n
    X = _resolution(config, args, max(config.N, n + 2), config.D)
    own = _own_attach(X, n + 2)
    candidate = _read_attach(X, n + 2, args.attach)
    existence = verify_existence_correspondence(X, n, candidate)
    difference = None
    if is_cycle_valued(X, n + 1, candidate.values()):
        difference = verify_difference_correspondence(X, n, own, candidate)
    report = {"n": n, "existence": existence, "difference": difference,
              "pass": existence["pass"] and (difference is None or difference["pass"])}
    return report, EXIT_SUCCESS if report["pass"] else EXIT_REFUSAL

COMMANDS = {
    "flag": cmd_flag,
    "resolve": cmd_resolve,
    "cohomology": cmd_cohomology,
    "obstruction": cmd_obstruction,
    "difference": cmd_difference,
    "toda": cmd_toda,
    "verify": cmd_verify,
}

###################################################################################################
# Entry point
###################################################################################################

def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_SUCCESS if e.code == 0 else EXIT_USAGE
    try:
        config = config_from_args(args)
    except AssertionError as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report, code = COMMANDS[config.command](config, args)
    except RefusalError as e:
        print(f"REFUSED: {e}", file=sys.stderr)
        if e.certificate is not None:
            print(dumps_report(_certificate_json(e.certificate)), file=out)
        return EXIT_REFUSAL
    except (ValueError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(config, report, out)
    return code

def _certificate_json(x):
    if isinstance(x, dict):
        return {str(k): _certificate_json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_certificate_json(v) for v in x]
    if hasattr(x, "shape"):
        return matrix_to_lists(x) if len(x.shape) == 2 else [fraction_str(v) for v in x]
    if isinstance(x, (int, bool, str)) or x is None:
        return x
    return fraction_str(x)

if __name__ == "__main__":
    sys.exit(main())
