"""
rescale - decide whether matrices are rescalings of one another.

Results are JSON on stdout (or the -o file); log lines go to stderr.
Exit codes: 0 accepted or equal, 1 rejected with a counterexample,
2 usage or input error.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from . import config, export, generators, geometry, minors, rescaling, util
from .bifunction import diagnose
from .settings import __version__

EXIT_ACCEPTED = 0
EXIT_REJECTED = 1
EXIT_ERROR = 2

KINDS = [kind.value for kind in rescaling.RescalingKind]
GROUPS = [group.value for group in rescaling.GroupTag]
VARIANTS = [variant.value for variant in rescaling.TripleVariant]


def _add_max_card(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-card",
        type=int,
        metavar="k",
        help="Largest subset cardinality to scan (default: all).",
    )


def _add_output(parser: argparse.ArgumentParser, nargs: Optional[str] = None) -> None:
    parser.add_argument(
        "-o",
        metavar="path",
        nargs=nargs,
        help="Write the JSON result to a file instead of stdout.",
    )


def get_args() -> argparse.ArgumentParser:
    """Get the script arguments."""
    description = "rescale - decide rescalings, compare minors, recover isometries"
    arg = argparse.ArgumentParser(prog="rescale", description=description)

    arg.add_argument("-v", action="store_true", help='Print "rescale" version.')
    arg.add_argument("-q", action="store_true", help="Quiet mode, don't log anything.")
    arg.add_argument("--debug", action="store_true", help="Log debug messages.")
    arg.add_argument(
        "--tolerance",
        type=float,
        metavar="tau",
        help="Zero-test tolerance for float matrices (default: 1e-9).",
    )
    arg.add_argument(
        "--workers",
        type=int,
        metavar="N",
        help="Worker threads for minor scans.",
    )

    commands = arg.add_subparsers(dest="command", metavar="command")

    sub = commands.add_parser("minors", help="List principal minors of a matrix.")
    sub.add_argument("matrix")
    _add_max_card(sub)
    _add_output(sub)

    sub = commands.add_parser("compare-minors", help="Compare principal minors.")
    sub.add_argument("L")
    sub.add_argument("M")
    _add_max_card(sub)
    _add_output(sub)

    sub = commands.add_parser("decide", help="Decide whether M is a rescaling of L.")
    sub.add_argument("L")
    sub.add_argument("M")
    sub.add_argument("--kind", choices=KINDS, default="general")
    sub.add_argument(
        "--via-minors",
        action="store_true",
        help="Decide pm1 or symmetric kinds from principal minors.",
    )
    sub.add_argument(
        "--no-radius-bound",
        action="store_true",
        help="With --via-minors --kind pm1, scan every cardinality.",
    )
    sub.add_argument("--group", choices=GROUPS, help="Require f and g in a group.")
    _add_output(sub)

    sub = commands.add_parser("gen", help="Generate a matrix family.")
    sub.add_argument("--family", required=True, metavar="family")
    sub.add_argument("--n", type=int)
    sub.add_argument("--sign", choices=["plus", "minus"])
    sub.add_argument("--big-n", type=int, dest="big_n", metavar="N")
    sub.add_argument("--set", metavar="2,3,...", help="Comma separated subset A.")
    sub.add_argument("--points", metavar="x1,x2,...")
    sub.add_argument("--step", type=float)
    sub.add_argument("--variant", choices=["polynomial", "szego"])
    sub.add_argument("--density", type=float)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--kind", choices=KINDS)
    sub.add_argument(
        "--disconnected",
        action="store_true",
        help="Do not force a connected random pattern.",
    )
    _add_output(sub, nargs="+")

    sub = commands.add_parser("volumes", help="List face volumes of a vector set.")
    sub.add_argument("vectors")
    _add_max_card(sub)
    _add_output(sub)

    sub = commands.add_parser("recover-isometry", help="Recover T and signs.")
    sub.add_argument("V")
    sub.add_argument("W")
    _add_max_card(sub)
    _add_output(sub)

    sub = commands.add_parser("scaled-isometry", help="Recover g and T.")
    sub.add_argument("V")
    sub.add_argument("W")
    _add_output(sub)

    sub = commands.add_parser("diagnose", help="Diagonal and structure flags.")
    sub.add_argument("matrix")
    _add_output(sub)

    sub = commands.add_parser("triple", help="Check a triple-product identity.")
    sub.add_argument("L")
    sub.add_argument("M")
    sub.add_argument("--variant", choices=VARIANTS, default="star")
    _add_output(sub)

    sub = commands.add_parser("multiplicative", help="Is det_M / det_L multiplicative?")
    sub.add_argument("L")
    sub.add_argument("M")
    _add_output(sub)

    commands.add_parser("families", help="List matrix families.")

    return arg


def parse_args_exit(parser: argparse.ArgumentParser, argv: Optional[List[str]]) -> argparse.Namespace:
    """Process args that exit."""
    args = parser.parse_args(argv)

    if args.v:
        parser.exit(0, f"rescale {__version__}\n")

    if not args.command:
        parser.print_help(sys.stderr)
        sys.exit(EXIT_ERROR)

    if args.command == "families":
        sys.stdout.write("\n".join(generators.list_families()) + "\n")
        sys.exit(EXIT_ACCEPTED)

    if getattr(args, "max_card", None) is not None and args.max_card < 0:
        parser.error("--max-card must be nonnegative")

    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be positive")

    if args.command == "decide":
        if args.via_minors and args.kind not in ("pm1", "symmetric"):
            parser.error("--via-minors needs --kind pm1 or --kind symmetric")
        if args.group and (args.via_minors or args.kind != "general"):
            parser.error("--group works with --kind general only")

    return args


def setup_logging(args: argparse.Namespace) -> None:
    """Configure logging, or silence it with -q."""
    util.setup_logging(logging.DEBUG if args.debug else logging.INFO)
    logging.getLogger().disabled = args.q


def emit(data: Any, output: Optional[str]) -> None:
    if output:
        export.save(data, output)
        logging.info(f"Wrote {output}")
    else:
        sys.stdout.write(export.dumps(data) + "\n")


def emit_lines(lines: List[Dict[str, Any]], output: Optional[str]) -> None:
    text = "".join(export.dumps_line(line) + "\n" for line in lines)
    if output:
        util.save_file(text, output)
        logging.info(f"Wrote {output}")
    else:
        sys.stdout.write(text)


def _exit_code(decision) -> int:
    if isinstance(decision, rescaling.Counterexample):
        return EXIT_REJECTED
    return EXIT_ACCEPTED


def _decision_document(decision, labels) -> Dict[str, Any]:
    if isinstance(decision, rescaling.Counterexample):
        return {"accepted": False, "counterexample": export.counterexample(decision, labels)}
    if isinstance(decision, rescaling.RescalingCertificate):
        return {"accepted": True, "certificate": export.certificate(decision, labels)}
    if isinstance(decision, geometry.ScaledIsometry):
        return {"accepted": True, "certificate": export.scaled_isometry(decision)}
    return {"accepted": True, "witness": export.witness(decision)}


def _split(text: Optional[str], kind=float) -> Optional[List[Any]]:
    if text is None:
        return None
    return [kind(part) for part in text.split(",") if part.strip()]


def gen_parameters(args: argparse.Namespace) -> Dict[str, Any]:
    """Family parameters from the flags that were given."""
    values = {
        "n": args.n,
        "sign": args.sign,
        "N": args.big_n,
        "A": _split(args.set, int),
        "points": _split(args.points),
        "step": args.step,
        "variant": args.variant,
        "density": args.density,
        "seed": args.seed,
        "kind": args.kind,
        "connected": False if args.disconnected else None,
    }
    return {name: value for name, value in values.items() if value is not None}


def run_gen(args: argparse.Namespace) -> int:
    spec = generators.FamilySpec(args.family, gen_parameters(args))
    result = generators.generate(spec)
    outputs = args.o or []

    if isinstance(result, tuple):
        if outputs and len(outputs) != 2:
            raise util.ParameterError(f"Family '{args.family}' writes two files, -o L.json M.json")
        if outputs:
            for matrix, path in zip(result, outputs):
                emit(export.matrix(matrix), path)
        else:
            emit({"L": export.matrix(result[0]), "M": export.matrix(result[1])}, None)
        return EXIT_ACCEPTED

    if len(outputs) > 1:
        raise util.ParameterError(f"Family '{args.family}' writes one file")
    emit(export.matrix(result), outputs[0] if outputs else None)
    return EXIT_ACCEPTED


def run_decide(args: argparse.Namespace, tolerance: float) -> int:
    L, M = config.load_matrix(args.L), config.load_matrix(args.M)

    if args.group:
        decision = rescaling.decide_gamma_rescaling(L, M, args.group, tolerance)
    elif args.via_minors and args.kind == "pm1":
        decision = rescaling.decide_pm1_via_minors(
            L, M, not args.no_radius_bound, tolerance, args.workers
        )
    elif args.via_minors:
        decision = rescaling.decide_symmetric_via_minors(L, M, tolerance)
    else:
        decision = rescaling.decide_rescaling(L, M, args.kind, tolerance)

    emit(_decision_document(decision, L.labels), args.o)
    return _exit_code(decision)


def run(args: argparse.Namespace) -> int:
    """Run one subcommand and return its exit code."""
    tolerance = config.get_tolerance(args.tolerance)
    command = args.command

    if command == "gen":
        return run_gen(args)

    if command == "decide":
        return run_decide(args, tolerance)

    if command == "minors":
        L = config.load_matrix(args.matrix)
        lines = [
            export.minor_line(minor, L.labels)
            for minor in minors.all_minors(L, args.max_card)
        ]
        emit_lines(lines, args.o)
        return EXIT_ACCEPTED

    if command == "compare-minors":
        L, M = config.load_matrix(args.L), config.load_matrix(args.M)
        result = minors.compare_minors(L, M, args.max_card, tolerance, args.workers)
        emit(export.comparison(result, L.labels), args.o)
        return EXIT_ACCEPTED if result.equal else EXIT_REJECTED

    if command == "volumes":
        V = config.load_vector_set(args.vectors)
        max_card = V.k if args.max_card is None else args.max_card
        if max_card > V.k:
            raise util.IndexRangeError(f"max_card must lie in [0, {V.k}]")
        lines = [
            {
                "subset": export.label_list(V.labels, subset),
                "volume": export.number(geometry.volume(V, subset)),
            }
            for subset in minors.iter_subsets(V.k, max_card)
        ]
        emit_lines(lines, args.o)
        return EXIT_ACCEPTED

    if command == "recover-isometry":
        V, W = config.load_vector_set(args.V), config.load_vector_set(args.W)
        result = geometry.recover_isometry(V, W, args.max_card, tolerance, args.workers)
        emit(_decision_document(result, V.labels), args.o)
        return _exit_code(result)

    if command == "scaled-isometry":
        V, W = config.load_vector_set(args.V), config.load_vector_set(args.W)
        result = geometry.scaled_isometry_test(V, W, tolerance, args.workers)
        emit(_decision_document(result, V.labels), args.o)
        return _exit_code(result)

    if command == "diagnose":
        L = config.load_matrix(args.matrix)
        emit(export.diagnosis(diagnose(L, tolerance), L.labels), args.o)
        return EXIT_ACCEPTED

    if command == "triple":
        L, M = config.load_matrix(args.L), config.load_matrix(args.M)
        result = rescaling.triple_condition(L, M, args.variant, tolerance)
        emit(export.triple(result, L.labels), args.o)
        return EXIT_ACCEPTED if result.holds else EXIT_REJECTED

    if command == "multiplicative":
        L, M = config.load_matrix(args.L), config.load_matrix(args.M)
        result = minors.multiplicativity_test(L, M, tolerance)
        emit(export.multiplicativity(result, L.labels), args.o)
        return EXIT_ACCEPTED if result.multiplicative else EXIT_REJECTED

    raise util.ParameterError(f"Unknown command '{command}'")


def main(argv: Optional[List[str]] = None) -> None:
    """Main script function."""
    parser = get_args()
    args = parse_args_exit(parser, argv)
    setup_logging(args)

    try:
        code = run(args)
    except (util.RescalingsError, OSError, json.JSONDecodeError, ValueError) as e:
        logging.error(str(e))
        code = EXIT_ERROR

    sys.exit(code)


if __name__ == "__main__":
    main()
