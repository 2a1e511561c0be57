"""Command-line interface.

Subcommands: classify, enumerate, verify-paper, generate, ncf-matrix,
pncf-census. Exit codes: 0 success, 1 verification or detector-agreement
failure, 2 usage/parse error. Output is deterministic for identical
invocations regardless of --parallel.
"""

import argparse
import json
import sys

from . import kernels
from .core import parse_truth_table
from .generation import enumerate_canalizing, generate_canalizing_next
from .kmap import kmap_witnesses, oracle_witnesses
from .ncf import ncf_decompose, ncf_matrix
from .pncf import ConstantTail, FullyNested, pncf_census, pncf_classify
from .verification import run_verification

CONVENTION = "variables: x1 toggles fastest; x_i reads bit i-1 of the truth index"


class SystemExit2(Exception):
    """Usage-level error; mapped to exit code 2."""


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _table_text(f):
    # hex is compact for wide tables; binary matches small worked examples
    return f.to_hex() if f.n >= 4 else f.to_binary()


def _layers_payload(layers):
    return [
        {"variable": l.variable, "input": l.input, "output": l.output}
        for l in layers
    ]


def _classify_payload(text, n):
    f = parse_truth_table(text, n)
    oracle = sorted(oracle_witnesses(f))
    agree = True
    if f.n >= 2:
        agree = sorted(kmap_witnesses(f)) == oracle
    decomposition = ncf_decompose(f)
    payload = {
        "input": text,
        "encoding": "hex" if text.strip().lower().startswith("0x") else "binary",
        "n": f.n,
        "canalizing": bool(oracle),
        "witnesses": _layers_payload(oracle),
        "detectors_agree": agree,
        "essential_variables": sorted(f.essential_variables()),
        "ncf_distance": f.ncf_distance(),
        "ncf": None,
        "pncf": None,
    }
    if decomposition is not None:
        payload["ncf"] = {
            "layers": _layers_payload(decomposition.layers),
            "final_complement": decomposition.final_complement,
        }
    if f.n >= 2 and (f.is_constant() or oracle):
        cls = pncf_classify(f)
        tail = {"kind": cls.tail.kind}
        if isinstance(cls.tail, ConstantTail):
            tail["value"] = cls.tail.value
        elif isinstance(cls.tail, FullyNested):
            tail["final_complement"] = cls.tail.final_complement
        else:
            tail["table"] = _table_text(cls.tail.residual)
            tail["variables"] = cls.tail.residual.n
        payload["pncf"] = {
            "depth": cls.depth,
            "census_bucket": cls.census_bucket,
            "layers": _layers_payload(cls.layers),
            "tail": tail,
        }
    return payload


def _classify_table(payload):
    lines = [CONVENTION]
    lines.append(f"input {payload['input']} (n={payload['n']}, {payload['encoding']})")
    lines.append(f"canalizing: {'yes' if payload['canalizing'] else 'no'}")
    if payload["witnesses"]:
        wit = ", ".join(
            f"(x{w['variable']}={w['input']} -> {w['output']})" for w in payload["witnesses"]
        )
        lines.append(f"witnesses: {wit}")
    lines.append(f"detectors agree: {'yes' if payload['detectors_agree'] else 'NO'}")
    lines.append(f"essential variables: {payload['essential_variables']}")
    lines.append(f"distance to nearest constant: {payload['ncf_distance']}")
    if payload["ncf"]:
        chain = "; ".join(
            f"x{l['variable']}={l['input']} -> {l['output']}" for l in payload["ncf"]["layers"]
        )
        lines.append(f"nested: yes [{chain}; else {payload['ncf']['final_complement']}]")
    else:
        lines.append("nested: no")
    if payload["pncf"]:
        p = payload["pncf"]
        lines.append(f"depth: {p['depth']} (census bucket {p['census_bucket']}, tail {p['tail']['kind']})")
    return "\n".join(lines) + "\n"


def cmd_classify(args):
    payload = _classify_payload(args.table, args.n)
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(_classify_table(payload), args.out)
    return 0 if payload["detectors_agree"] else 1


def cmd_enumerate(args):
    if not 2 <= args.n <= 4:
        raise SystemExit2(f"exhaustive enumeration covers 2 to 4 variables, got {args.n}")
    funcs = kernels.all_packed(args.n)
    masks = kernels.oracle_masks(funcs, args.n, workers=args.parallel)
    canal = int((masks != 0).sum())
    census = pncf_census(args.n)
    depths = {
        k: v["total"] for k, v in sorted(census.items()) if k not in ("fully_nested", "total")
    }
    payload = {
        "n": args.n,
        "total": int(funcs.size),
        "canalizing": canal,
        "non_canalizing": int(funcs.size) - canal,
        "nested_canalizing": census["fully_nested"],
        "partially_nested_by_depth": depths,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        lines = [CONVENTION, f"n = {args.n}: {payload['total']} functions"]
        lines.append(f"canalizing:      {payload['canalizing']}")
        lines.append(f"non-canalizing:  {payload['non_canalizing']}")
        lines.append(f"nested (NCF):    {payload['nested_canalizing']}")
        for d, v in depths.items():
            lines.append(f"depth {d}:         {v}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_generate(args):
    if args.from_n not in (2, 3, 4):
        raise SystemExit2("--from-n must be 2, 3, or 4")
    report = generate_canalizing_next(enumerate_canalizing(args.from_n), workers=args.parallel)
    payload = {
        "from_n": report.n_source,
        "produced": len(report.produced),
        "detector_invocations": report.detector_invocations,
        "budget": report.budget,
        "category_tallies": report.category_tallies,
    }
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [f"generated {payload['produced']} canalizing functions on {args.from_n + 1} variables"]
        lines.append(f"detector invocations: {payload['detector_invocations']} (budget {payload['budget']})")
        for k, v in payload["category_tallies"].items():
            lines.append(f"  {k}: {v}")
        text = "\n".join(lines) + "\n"
    if args.emit_set:
        text += "".join(f.to_hex() + "\n" for f in report.produced)
    _emit(text, args.out)
    return 0


def cmd_ncf_matrix(args):
    matrix = ncf_matrix(args.n)
    if args.format == "json":
        payload = {"n": args.n, "cells": [list(r) for r in matrix.cells], "total_ncf": matrix.n_c}
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        width = max(len(str(v)) for row in matrix.cells for v in row)
        lines = [" ".join(f"{v:>{width}}" for v in row) for row in matrix.cells]
        lines.append(f"total NCF = 4 x {sum(sum(r) for r in matrix.cells)} = {matrix.n_c}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_pncf_census(args):
    if args.n > 4:
        raise SystemExit2(f"census is capped at 4 variables, got {args.n}")
    census = pncf_census(args.n)
    if args.format == "json":
        _emit(json.dumps(census, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = []
        for key in sorted(k for k in census if k not in ("fully_nested", "total")):
            sub = census[key]
            lines.append(
                f"depth {key}: {sub['total']} ({sub['constant']} constant tail, "
                f"{sub['non_canalizing']} non-canalizing tail)"
            )
        lines.append(f"fully nested: {census['fully_nested']}")
        lines.append(f"total canalizing: {census['total']}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify_paper(args):
    if args.format == "json":
        result = run_verification(workers=args.parallel)
        _emit(json.dumps(result.to_dict(), indent=2) + "\n", args.out)
    else:
        import io

        buf = io.StringIO()
        result = run_verification(workers=args.parallel, stream=buf)
        _emit(buf.getvalue(), args.out)
    return 0 if result.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="canalizer",
        description="classify, enumerate, generate, and verify canalizing Boolean function classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parallel=False):
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--out", default=None, help="also write the output to this file")
        if parallel:
            p.add_argument("--parallel", type=int, default=1, metavar="N",
                           help="worker threads for bulk scans (deterministic merge)")

    p = sub.add_parser("classify", help="full report for one truth table")
    p.add_argument("table", help="binary string or 0x-prefixed hex truth table")
    p.add_argument("--n", type=int, default=None, help="expected variable count")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="class counts for all functions on n variables")
    p.add_argument("--n", type=int, required=True)
    common(p, parallel=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="generate the canalizing class on n+1 variables")
    p.add_argument("--from-n", dest="from_n", type=int, required=True)
    p.add_argument("--emit-set", action="store_true", help="print the produced class, one hex table per line")
    common(p, parallel=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("ncf-matrix", help="census matrix and NCF total")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_ncf_matrix)

    p = sub.add_parser("pncf-census", help="depth census of the canalizing class")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_pncf_census)

    p = sub.add_parser("verify-paper", help="recompute every published reference count")
    common(p, parallel=True)
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "parallel"):
        args.parallel = 1
    try:
        return args.func(args)
    except (ValueError, SystemExit2) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
