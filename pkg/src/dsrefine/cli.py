"""Command-line interface.

Exit codes: 0 success, 1 verification or check failed, 2 invalid input,
3 internal assertion failure.
"""

import argparse
import sys

from . import io, selftest
from .errors import InputError, InternalError
from .field import FieldSpec
from .gen import GenSpec, planted_instance, random_instance
from .oracle import parity_obstruction_check
from .refine import theorem_refine, verify_certificate

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_refine(args):
    inst = io.parse_instance(_read(args.instance))
    cert = theorem_refine(inst)
    _write(io.dumps(io.certificate_to_json(inst, cert)), args.out)
    return EXIT_OK


def cmd_verify(args):
    inst = io.parse_instance(_read(args.instance))
    cert = io.parse_certificate(_read(args.certificate), inst)
    if verify_certificate(inst, cert):
        print("verified", file=sys.stderr)
        return EXIT_OK
    print("certificate does NOT verify", file=sys.stderr)
    return EXIT_FAILED


def cmd_gen(args):
    field = FieldSpec.from_cli(args.field)
    spec = GenSpec(args.seed, field, args.dim, args.blocks1, args.blocks2)
    if args.planted is not None:
        if len(args.planted) != 2:
            raise InputError("--planted expects j,i")
        inst = planted_instance(spec, args.planted[0], args.planted[1])
    else:
        inst = random_instance(spec)
    _write(io.dumps(io.instance_to_json(inst)), args.out)
    return EXIT_OK


def cmd_selftest(args):
    all_ok = True
    for name, ok, detail, seconds in selftest.run(args.trials, args.oracle_max_dim):
        all_ok &= ok
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail} ({seconds:.2f}s)")
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_obstruction(args):
    ok = parity_obstruction_check(args.dim_a, args.dim_b, args.block_dim, args.max_blocks)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(prog="dsrefine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refine", help="compute a refinement certificate")
    p.add_argument("instance")
    p.add_argument("--out")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    p.add_argument("instance")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--field", required=True, help="a prime p, or Q")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--blocks1", type=_int_list, required=True)
    p.add_argument("--blocks2", type=_int_list, required=True)
    p.add_argument("--planted", type=_int_list, help="j,i: planted support sizes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="run the brute-force oracle checks")
    p.add_argument("--oracle-max-dim", type=int, default=4)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("obstruction", help="parity obstruction for odd/even distinguished dims")
    p.add_argument("--dim-a", type=int, required=True)
    p.add_argument("--dim-b", type=int, required=True)
    p.add_argument("--block-dim", type=int, default=2)
    p.add_argument("--max-blocks", type=int, default=10)
    p.set_defaults(func=cmd_obstruction)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
