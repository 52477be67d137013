"""Command line interface: root data tables, gamma words, relation dumps, verify runs."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import fateev
from .gammaword import brace_str
from .numeric import DEFAULT_DIGITS, PrecisionContext
from .prover import Relation, relations_for
from .rootsys import FAMILIES, RANK_RANGE, RootSystem, RootSystemId, build

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Infinite families stop here unless the user narrows the range explicitly.
DEFAULT_RANK_CAP = 12


def dumps_canonical(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace; byte-stable across runs."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class RunConfig:
    """Resolved parameters of one verify run."""

    families: Tuple[str, ...]
    rank_min: Optional[int]
    rank_max: Optional[int]
    variants: Tuple[str, ...]
    mode: str
    digits: int
    fmt: str
    output: Optional[str]

    def systems(self) -> List[RootSystem]:
        out = []
        for family in self.families:
            lo, hi = RANK_RANGE[family]
            if hi is None:
                hi = DEFAULT_RANK_CAP
            lo = max(lo, self.rank_min) if self.rank_min else lo
            hi = min(hi, self.rank_max) if self.rank_max else hi
            for rank in range(lo, hi + 1):
                out.append(build(RootSystemId(family, rank)))
        return out


def _emit(payload: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)


def _relation_text(relation: Relation, n: int) -> str:
    factors = []
    for j, e in relation.vector:
        factors.append(f"gamma({j}/{n})" if e == 1 else f"gamma({j}/{n})^({e})")
    return f"{relation.tag}: {'*'.join(factors)} = {relation.value}"


def cmd_table(args) -> int:
    system = build(RootSystemId(args.family, args.rank))
    if args.format == "json":
        _emit(dumps_canonical(system.to_json_obj()), None)
        return EXIT_OK
    lines = [
        f"{system.ident}: rank {system.rank}, {len(system.positive_roots)} positive roots",
        f"mark sum h = {system.coxeter_number}, comark sum = {system.comark_sum}, "
        f"simply laced: {'yes' if system.simply_laced else 'no'}",
        f"marks (node 0 first): {' '.join(str(m) for m in system.marks)}",
        f"comarks: {' '.join(str(c) for c in system.comarks)}",
        f"double comarks: {' '.join(str(c) for c in system.double_comarks)}",
        f"rho = ({', '.join(str(x) for x in system.rho)})",
        f"rho_check = ({', '.join(str(x) for x in system.rho_check)})",
        "simple roots:",
    ]
    for i, root in enumerate(system.simple_roots, start=1):
        lines.append(f"  alpha_{i} = ({', '.join(str(x) for x in root)})")
    lines.append("positive roots (by height):")
    for root in system.positive_roots:
        lines.append(
            f"  height {system.height(root):2d}: ({', '.join(str(x) for x in root)})"
        )
    _emit("\n".join(lines), None)
    return EXIT_OK


def cmd_word(args) -> int:
    system = build(RootSystemId(args.family, args.rank))
    word = fateev.lhs_word(system, args.index, args.variant)
    if args.format == "json":
        _emit(dumps_canonical(word.to_json_obj()), None)
        return EXIT_OK
    _emit(
        f"{system.ident} alpha_{args.index} {args.variant}: {brace_str(word)}   "
        f"(grid denominator {word.denominator})",
        None,
    )
    return EXIT_OK


def cmd_relations(args) -> int:
    relations = relations_for(args.denominator)
    if args.format == "json":
        payload = [
            {
                "tag": r.tag,
                "vector": [{"j": j, "exponent": e} for j, e in r.vector],
                "value": r.value.to_json_obj(),
            }
            for r in relations
        ]
        _emit(dumps_canonical(payload), None)
        return EXIT_OK
    lines = [f"{len(relations)} relations on the 1/{args.denominator} grid"]
    lines.extend(_relation_text(r, args.denominator) for r in relations)
    _emit("\n".join(lines), None)
    return EXIT_OK


def cmd_verify(args) -> int:
    families = tuple(dict.fromkeys(args.family)) if args.family else FAMILIES
    if args.rank is not None and (args.rank_min or args.rank_max):
        raise ValueError("--rank excludes --rank-min/--rank-max")
    rank_min = args.rank if args.rank is not None else args.rank_min
    rank_max = args.rank if args.rank is not None else args.rank_max
    config = RunConfig(
        families=families,
        rank_min=rank_min,
        rank_max=rank_max,
        variants=tuple(dict.fromkeys(args.variant)) if args.variant else fateev.VARIANTS,
        mode=args.mode,
        digits=args.digits,
        fmt=args.format,
        output=args.output,
    )
    ctx = PrecisionContext.for_digits(config.digits)
    summary = fateev.verify_all(config.systems(), config.variants, config.mode, ctx)
    if config.fmt == "json":
        payload = summary.to_json_obj()
        payload["mode"] = config.mode
        payload["digits"] = config.digits
        _emit(dumps_canonical(payload), config.output)
    else:
        lines = [r.text_line() for r in summary.reports]
        counts = ", ".join(f"{k}: {v}" for k, v in summary.counts.items()) or "nothing to check"
        lines.append(
            f"{len(summary.reports)} checks ({counts}) -> "
            f"{'PASS' if summary.all_passed else 'FAIL'}"
        )
        _emit("\n".join(lines), config.output)
    return EXIT_OK if summary.all_passed else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammaroots",
        description="Exact verification of Gamma-product identities on root systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_table = sub.add_parser("table", help="print the root data of one system")
    p_table.add_argument("family", choices=FAMILIES)
    p_table.add_argument("rank", type=int)
    add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_word = sub.add_parser("word", help="print one left-side gamma word")
    p_word.add_argument("family", choices=FAMILIES)
    p_word.add_argument("rank", type=int)
    p_word.add_argument("index", type=int)
    p_word.add_argument("variant", choices=fateev.VARIANTS)
    add_format(p_word)
    p_word.set_defaults(func=cmd_word)

    p_rel = sub.add_parser("relations", help="dump the relation lattice of one grid")
    p_rel.add_argument("denominator", type=int)
    add_format(p_rel)
    p_rel.set_defaults(func=cmd_relations)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--family", action="append", choices=FAMILIES)
    p_verify.add_argument("--rank", type=int)
    p_verify.add_argument("--rank-min", type=int, dest="rank_min")
    p_verify.add_argument("--rank-max", type=int, dest="rank_max")
    p_verify.add_argument("--variant", action="append", choices=fateev.VARIANTS)
    p_verify.add_argument("--mode", choices=fateev.MODES, default="both")
    p_verify.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p_verify.add_argument("--output", help="write the report here instead of stdout")
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
