"""Command-line front end: ``ccsymbol <command> --ring R ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .checks import DEFAULT_PHI, DEFAULT_TAU, SUITES, SuiteNotApplicable, SuiteOptions, run_all, run_suite
from .errors import CCError
from .laurent import winding_number
from .parsing import parse_ring_spec, parse_series
from .symbol import NormContext, cc_symbol, norm_map, required_pos_bound, residue_symbol
from .witt import witt_decompose

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_NORM_PREC = 10


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, help='coefficient ring, e.g. "Q", "F7", "Z/9", "Q[e]/e^2"')
    common.add_argument("--json", action="store_true", help="emit a single JSON object")

    parser = _Parser(prog="ccsymbol", description="Exact Contou-Carrere symbols over artinian local rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("symbol", parents=[common], help="the symbol <f, g>")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--pos-bound", type=int, help="override the automatic parameter bound (exploration only)")

    p = sub.add_parser("witt", parents=[common], help="Witt-parameter decomposition of f")
    p.add_argument("--f", required=True)
    p.add_argument("--pos-bound", type=int, help="number of positive parameters (default: as needed for <f, f>)")

    p = sub.add_parser("winding", parents=[common], help="winding number of f")
    p.add_argument("--f", required=True)

    p = sub.add_parser("norm", parents=[common], help="norm of f along t -> phi")
    p.add_argument("--f", required=True)
    p.add_argument("--phi", required=True)
    p.add_argument("--prec", type=int, default=DEFAULT_NORM_PREC, help="highest exponent to compute")

    p = sub.add_parser("residue-symbol", parents=[common], help="exp(Res(log f dg/g)) for f in 1 + m((t))")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    p = sub.add_parser("check", parents=[common], help="seeded verification suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--phi", help=f"phi for the adjunction suite (default {DEFAULT_PHI!r})")
    p.add_argument("--tau", help=f"reparameterization for the reparam suite (default {DEFAULT_TAU!r})")
    return parser


def _emit(args, result_json, text: str, witness=None) -> None:
    if args.json:
        obj = {"ring": args.ring, "command": args.command, "result": result_json, "witness": witness}
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _cmd_symbol(args, ring) -> int:
    f, g = parse_series(args.f, ring), parse_series(args.g, ring)
    value = cc_symbol(f, g, args.pos_bound)
    _emit(args, value.to_json(), str(value))
    return EXIT_OK


def _cmd_witt(args, ring) -> int:
    f = parse_series(args.f, ring)
    k = args.pos_bound if args.pos_bound is not None else required_pos_bound(f, f)
    d = witt_decompose(f, k)
    _emit(args, d.to_json(), str(d))
    return EXIT_OK


def _cmd_winding(args, ring) -> int:
    w = winding_number(parse_series(args.f, ring))
    _emit(args, w, str(w))
    return EXIT_OK


def _cmd_norm(args, ring) -> int:
    f, phi = parse_series(args.f, ring), parse_series(args.phi, ring)
    result = norm_map(NormContext.from_phi(phi), f, args.prec)
    _emit(args, result.to_json(), str(result))
    return EXIT_OK


def _cmd_residue(args, ring) -> int:
    value = residue_symbol(parse_series(args.f, ring), parse_series(args.g, ring))
    _emit(args, value.to_json(), str(value))
    return EXIT_OK


def _cmd_check(args, ring) -> int:
    extra = []
    opts = SuiteOptions()
    if args.phi is not None:
        opts.phi = parse_series(args.phi, ring)
        extra += ["--phi", args.phi]
    if args.tau is not None:
        opts.tau = parse_series(args.tau, ring)
        extra += ["--tau", args.tau]
    opts.extra_args = extra
    if args.suite == "all":
        results = run_all(ring, args.trials, args.seed, opts)
    else:
        results = [run_suite(args.suite, ring, args.trials, args.seed, opts)]
    failed = [r for r in results if not r.ok]
    witness = None
    if failed:
        first = failed[0]
        witness = {"suite": first.name, **first.witness, "reproduce": first.reproduce}
    if args.json:
        _emit(args, [r.to_json() for r in results], "", witness)
    else:
        lines = [r.summary() for r in results]
        for r in failed:
            lines.append(f"witness ({r.name}):")
            lines.extend(f"  {k} = {v}" for k, v in r.witness.items())
            lines.append(f"reproduce: {r.reproduce}")
        print("\n".join(lines))
    return EXIT_FAIL if failed else EXIT_OK


_COMMANDS = {
    "symbol": _cmd_symbol,
    "witt": _cmd_witt,
    "winding": _cmd_winding,
    "norm": _cmd_norm,
    "residue-symbol": _cmd_residue,
    "check": _cmd_check,
}


def run(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        ring = parse_ring_spec(args.ring)
        return _COMMANDS[args.command](args, ring)
    except (CCError, SuiteNotApplicable) as exc:
        print(f"ccsymbol: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
