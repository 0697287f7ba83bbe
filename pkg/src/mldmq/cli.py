"""Command-line driver tying generators, reductions, oracles, and formats.

Exit codes: 0 for success (or a yes decision), 1 for a no decision (or a
failed verification), 2 for any error including oracle budget refusals.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats, generators, mld_to_mq, mq_to_mld, normalize, oracles
from .boolpoly import MqInstance, mq_size
from .gf2 import BitVector
from .mld_to_mq import MldInstance, mld_size
from .normalize import StandardFormSystem, extend_witness, to_standard_form
from .oracles import BudgetExceeded

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def _load_instance(path: str):
    return formats.parse_any(_read(path))


def _print_meta(meta: dict[str, object]) -> None:
    sys.stdout.write(formats.serialize_metadata(meta))


def _cmd_gen_mld(args) -> int:
    spec = generators.GenSpec(args.seed, args.n, args.m, args.t, args.planted)
    inst, _plant = generators.gen_mld(spec)
    _write_output(formats.serialize_mld(inst), args.output)
    return EXIT_YES


def _cmd_gen_mq(args) -> int:
    spec = generators.GenSpec(args.seed, args.n, args.m, planted=args.planted)
    inst, _plant = generators.gen_mq(spec)
    _write_output(formats.serialize_mq(inst), args.output)
    return EXIT_YES


def _cmd_alpha(args) -> int:
    inst = _load_instance(args.instance)
    if not isinstance(inst, MldInstance):
        raise CliError("alpha expects an MLD instance file")
    reduction = mld_to_mq.reduce_mld_to_mq(inst)
    _write_output(formats.serialize_mq(reduction.mq), args.output)
    meta = formats.serialize_metadata(reduction.metadata())
    if args.meta:
        Path(args.meta).write_text(meta, encoding="ascii")
    else:
        sys.stderr.write(meta)
    return EXIT_YES


def _cmd_beta(args) -> int:
    inst = _load_instance(args.instance)
    if isinstance(inst, MqInstance):
        reduction = mq_to_mld.reduce_mq_to_mld(inst, injective=args.injective)
    elif isinstance(inst, StandardFormSystem):
        if args.injective:
            raise CliError("injective mode needs the original MQ instance")
        reduction = mq_to_mld.reduce_standard_form(inst)
    else:
        raise CliError("beta expects an MQ or SF instance file")
    _write_output(formats.serialize_mld(reduction.mld), args.output)
    meta = formats.serialize_metadata(reduction.metadata())
    if args.meta:
        Path(args.meta).write_text(meta, encoding="ascii")
    else:
        sys.stderr.write(meta)
    return EXIT_YES


def _cmd_std_form(args) -> int:
    inst = _load_instance(args.instance)
    if not isinstance(inst, MqInstance):
        raise CliError("std-form expects an MQ instance file")
    _write_output(formats.serialize_standard_form(to_standard_form(inst)), args.output)
    return EXIT_YES


def _cmd_quadratize(args) -> int:
    inst = _load_instance(args.instance)
    if not isinstance(inst, MqInstance):
        raise CliError("quadratize expects an MQ instance file")
    registry = inst.registry.clone() if inst.registry else None
    out_eqs: list = []
    for eq in inst.equations:
        eqs, _log = normalize.quadratize(eq, registry)
        out_eqs.extend(eqs)
    result = MqInstance(len(registry), tuple(out_eqs), registry)
    _write_output(formats.serialize_mq(result), args.output)
    return EXIT_YES


def _solve(obj) -> oracles.SolveReport:
    if isinstance(obj, MldInstance):
        return oracles.solve_mld_exhaustive(obj)
    if isinstance(obj, MqInstance):
        return oracles.solve_mq_exhaustive(obj)
    if isinstance(obj, StandardFormSystem):
        return oracles.solve_mq_exhaustive(obj.to_mq_instance())
    raise CliError("solve expects an MLD, MQ, or SF instance file")


def _cmd_solve(args) -> int:
    report = _solve(_load_instance(args.instance))
    print(f"decision {'yes' if report.decision else 'no'}")
    print(f"explored {report.explored}")
    if report.witness is not None:
        text = formats.serialize_witness(report.witness)
        if args.witness_out:
            Path(args.witness_out).write_text(text, encoding="ascii")
        else:
            sys.stdout.write(text)
    return EXIT_YES if report.decision else EXIT_NO


def _cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    witness = formats.parse_witness(_read(args.witness))
    if isinstance(inst, MldInstance):
        ok = oracles.verify_mld(inst, witness)
    elif isinstance(inst, MqInstance):
        ok = oracles.verify_mq(inst, witness)
    elif isinstance(inst, StandardFormSystem):
        ok = inst.satisfies(witness)
    else:
        raise CliError("verify expects an MLD, MQ, or SF instance file")
    print("valid" if ok else "invalid")
    return EXIT_YES if ok else EXIT_NO


def _rebuild_reduction(args):
    inst = _load_instance(args.instance)
    if args.dir == "alpha":
        if not isinstance(inst, MldInstance):
            raise CliError("--dir alpha expects the original MLD instance")
        return mld_to_mq.reduce_mld_to_mq(inst)
    if not isinstance(inst, MqInstance):
        raise CliError("--dir beta expects the original MQ instance")
    return mq_to_mld.reduce_mq_to_mld(inst, injective=args.injective)


def _cmd_lift(args) -> int:
    reduction = _rebuild_reduction(args)
    witness = formats.parse_witness(_read(args.witness))
    if args.dir == "alpha":
        lifted = mld_to_mq.lift_witness(reduction, witness)
    else:
        full = extend_witness(reduction.sf.log, witness)
        if not reduction.sf.satisfies(full):
            raise CliError("assignment does not satisfy the source system")
        lifted = mq_to_mld.lift_witness(reduction, full)
    _write_output(formats.serialize_witness(lifted), args.output)
    return EXIT_YES


def _cmd_project(args) -> int:
    reduction = _rebuild_reduction(args)
    witness = formats.parse_witness(_read(args.witness))
    if args.dir == "alpha":
        projected = mld_to_mq.project_witness(reduction, witness)
    else:
        projected = mq_to_mld.pull_back_mld_witness(reduction, witness)
    _write_output(formats.serialize_witness(projected), args.output)
    return EXIT_YES


def _cmd_roundtrip(args) -> int:
    if args.dir == "alpha":
        if args.t is None:
            raise CliError("--dir alpha needs --t")
        spec = generators.GenSpec(args.seed, args.n, args.m, args.t, args.planted)
        inst, _ = generators.gen_mld(spec)
        reduction = mld_to_mq.reduce_mld_to_mq(inst)
        source = oracles.solve_mld_exhaustive(inst)
        target = oracles.solve_mq_exhaustive(reduction.mq)
        print(f"source-decision {'yes' if source.decision else 'no'}")
        print(f"target-decision {'yes' if target.decision else 'no'}")
        if source.decision != target.decision:
            raise CliError("decision mismatch between the two sides")
        if source.decision:
            back = mld_to_mq.project_witness(reduction, target.witness)
            if not oracles.verify_mld(inst, back):
                raise CliError("projected witness fails the source instance")
            lifted = mld_to_mq.lift_witness(reduction, source.witness)
            if not oracles.verify_mq(reduction.mq, lifted):
                raise CliError("lifted witness fails the reduced instance")
            print("witness-transport ok")
        print("decisions agree")
        return EXIT_YES
    spec = generators.GenSpec(args.seed, args.n, args.m, planted=args.planted)
    inst, _ = generators.gen_mq(spec)
    reduction = mq_to_mld.reduce_mq_to_mld(inst)
    source = oracles.solve_mq_exhaustive(inst)
    target = oracles.solve_mld_exhaustive(reduction.mld)
    print(f"source-decision {'yes' if source.decision else 'no'}")
    print(f"target-decision {'yes' if target.decision else 'no'}")
    if source.decision != target.decision:
        raise CliError("decision mismatch between the two sides")
    if source.decision:
        back = mq_to_mld.pull_back_mld_witness(reduction, target.witness)
        if not oracles.verify_mq(inst, back):
            raise CliError("pulled-back witness fails the source instance")
        full = extend_witness(reduction.sf.log, source.witness)
        lifted = mq_to_mld.lift_witness(reduction, full)
        if not oracles.verify_mld(reduction.mld, lifted):
            raise CliError("lifted witness fails the reduced instance")
        print("witness-transport ok")
    print("decisions agree")
    return EXIT_YES


def _cmd_info(args) -> int:
    inst = _load_instance(args.instance)
    if isinstance(inst, MldInstance):
        meta = {"kind": "MLD", "n": inst.n, "m": inst.m, "t": inst.t,
                "size-bits": mld_size(inst)}
    elif isinstance(inst, MqInstance):
        meta = {"kind": "MQ", "n": inst.nvars, "m": inst.m,
                "size-bits": mq_size(inst)}
    elif isinstance(inst, StandardFormSystem):
        meta = {"kind": "SF", "q": inst.q, "lambda": inst.lam,
                "vars": inst.nvars, "padding": inst.padding_count}
    else:
        meta = {"kind": "WITNESS", "len": inst.n, "weight": inst.weight()}
    _print_meta(meta)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mldmq",
        description="Reductions between syndrome decoding and quadratic Boolean systems")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-mld", help="generate a random decoding instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--planted", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen_mld)

    p = sub.add_parser("gen-mq", help="generate a random quadratic system")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--planted", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen_mq)

    p = sub.add_parser("alpha", help="reduce a decoding instance to a quadratic system")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.add_argument("--meta")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("beta", help="reduce a quadratic system to a decoding instance")
    p.add_argument("instance")
    p.add_argument("--injective", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--meta")
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser("std-form", help="convert a quadratic system to disjoint form")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_std_form)

    p = sub.add_parser("quadratize", help="rewrite equations to degree <= 2")
    p.add_argument("instance")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_quadratize)

    p = sub.add_parser("solve", help="decide an instance by exhaustive search")
    p.add_argument("instance")
    p.add_argument("--witness-out")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a witness against an instance")
    p.add_argument("instance")
    p.add_argument("witness")
    p.set_defaults(func=_cmd_verify)

    for name, func in (("lift", _cmd_lift), ("project", _cmd_project)):
        p = sub.add_parser(name, help=f"{name} a witness across a stored reduction")
        p.add_argument("--dir", choices=("alpha", "beta"), required=True)
        p.add_argument("--injective", action="store_true")
        p.add_argument("instance", help="the original instance the reduction was run on")
        p.add_argument("witness")
        p.add_argument("-o", "--output")
        p.set_defaults(func=func)

    p = sub.add_parser("roundtrip", help="generate, reduce, solve both sides, compare")
    p.add_argument("--dir", choices=("alpha", "beta"), required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--planted", action="store_true")
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("info", help="report sizes and complexity parameters")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_info)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else EXIT_YES
    try:
        return args.func(args)
    except (CliError, BudgetExceeded, formats.ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
