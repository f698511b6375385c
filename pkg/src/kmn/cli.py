"""Command-line entry point: ``kmn expand | convert | hookwords | eg | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .actions import cyclic_interval
from .correspondences import (
    BoundedPartition,
    Core,
    GeneratorWord,
    k_conjugate,
    p_inverse,
    p_map,
    phi,
    s_map,
)
from .hookwords import eg_tableau, enumerate_words, classify, reading_word
from .mnrule import mn_expand, oracle_expand
from .shapes import Partition, residue_grid


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_kr(k: int, r: int | None = None) -> None:
    if k < 1:
        raise UsageError("k must be at least 1")
    if r is not None and not 1 <= r <= k:
        raise UsageError(f"r={r} outside [1, {k}]")


def _bounded(text: str, k: int) -> BoundedPartition:
    try:
        return BoundedPartition(k, _partition(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _word(text: str, k: int) -> GeneratorWord:
    try:
        return GeneratorWord.parse(text, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_expand(args, out) -> int:
    _check_kr(args.k, args.r)
    lam = _bounded(args.lam, args.k)
    exp = mn_expand(args.k, args.r, lam, args.variant)
    out.write((exp.to_json() if args.format == "json" else exp.to_text()) + "\n")
    return 0


def cmd_convert(args, out) -> int:
    _check_kr(args.k)
    k = args.k
    try:
        if args.source == "bounded":
            lam = _bounded(args.value, k)
        elif args.source == "core":
            lam = p_map(Core(_partition(args.value), k + 1))
        else:
            lam = p_map(s_map(_word(args.value, k)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.target == "bounded":
        shown = lam.parts
    elif args.target == "core":
        shown = p_inverse(lam).parts
    elif args.target == "word":
        shown = phi(lam)
    else:
        shown = k_conjugate(lam).parts
    out.write(f"{shown}\n")
    if args.grid:
        out.write(residue_grid(p_inverse(lam).parts, k + 1) + "\n")
    return 0


def cmd_hookwords(args, out) -> int:
    _check_kr(args.k, args.r)
    try:
        words = enumerate_words(args.k, args.r, args.type, args.asc, args.con, args.side)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for w in sorted(words):
        c = classify(w)
        u_min = "-" if c.u_min is None else str(c.u_min)
        rows.append((str(w), c.hook_type.value, str(c.asc), c.connectivity.value, c.side.value, u_min))
    header = ("word", "type", "asc", "con", "side", "u_min")
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]
    for row in [header] + rows:
        out.write("  ".join(f"{v:<{w}}" for v, w in zip(row, widths)).rstrip() + "\n")
    out.write(f"{len(rows)} words\n")
    return 0


def cmd_eg(args, out) -> int:
    _check_kr(args.k)
    word = _word(args.word, args.k)
    try:
        order = cyclic_interval(word.support, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    P = eg_tableau(word, order)
    out.write(f"order  {order}\n")
    out.write(f"rows   {P}\n")
    out.write(f"rho    {','.join(map(str, reading_word(P)))}\n")
    return 0


def _read_batch(path: str) -> list[tuple[int, int, Partition, str]]:
    instances = []
    with open(path) as fh:
        for n, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            bits = line.split()
            if len(bits) == 3:
                # an empty lambda may be left out entirely
                bits = [bits[0], bits[1], "", bits[2]]
            if len(bits) != 4:
                raise UsageError(f"{path}:{n}: expected 'k r lambda variant'")
            try:
                k, r = int(bits[0]), int(bits[1])
            except ValueError:
                raise UsageError(f"{path}:{n}: k and r must be integers") from None
            lam = bits[2].strip('"')
            instances.append((k, r, _partition(lam), bits[3]))
    return instances


def _grid_instances(kmax: int, sizemax: int, variants: Sequence[str]):
    from .shapes import partitions_up_to

    for k in range(1, kmax + 1):
        for lam in partitions_up_to(sizemax, max_part=k):
            for r in range(1, k + 1):
                for v in variants:
                    yield k, r, lam, v


def cmd_verify(args, out) -> int:
    variants = [v.strip() for v in args.variants.split(",") if v.strip()]
    bad = [v for v in variants if v not in ("K", "S")]
    if bad or not variants:
        raise UsageError(f"variants must be drawn from K,S (got {args.variants!r})")
    if args.batch:
        instances = _read_batch(args.batch)
    else:
        _check_kr(args.kmax)
        if args.sizemax < 0:
            raise UsageError("sizemax must be non-negative")
        instances = list(_grid_instances(args.kmax, args.sizemax, variants))

    counts: dict[tuple[int, str], int] = {}
    for k, r, lam, v in instances:
        _check_kr(k, r)
        if v not in ("K", "S"):
            raise UsageError(f"unknown variant {v!r}")
        if lam and lam[0] > k:
            raise UsageError(f"{tuple(lam)} is not {k}-bounded")
        rule = mn_expand(k, r, lam, v)
        oracle = oracle_expand(k, r, lam, v)
        if not rule.same_terms(oracle):
            out.write(f"MISMATCH k={k} r={r} lambda=({lam}) variant={v}\n")
            out.write("rule:\n" + rule.to_text() + "\n")
            out.write("oracle:\n" + oracle.to_text() + "\n")
            return 1
        counts[k, v] = counts.get((k, v), 0) + 1

    ks = sorted({k for k, _ in counts})
    cols = sorted({v for _, v in counts})
    out.write("k  " + "  ".join(f"{v:>6}" for v in cols) + "\n")
    for k in ks:
        out.write(f"{k:<2} " + "  ".join(f"{counts.get((k, v), 0):>6}" for v in cols) + "\n")
    out.write(f"all {sum(counts.values())} instances match\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kmn", description="Murnaghan-Nakayama rules for K-k-Schur and k-Schur functions")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("expand", help="p_r times a basis element")
    p.add_argument("--variant", choices=("K", "S"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help='comma-separated parts; "" for the empty partition')
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("convert", help="move between bounded partitions, cores and words")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--from", dest="source", choices=("bounded", "core", "word"), required=True)
    p.add_argument("--to", dest="target", choices=("bounded", "core", "word", "kconj"), required=True)
    p.add_argument("--grid", action="store_true", help="also print the residues of the core")
    p.add_argument("value")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("hookwords", help="list weak hook words of length r")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--type", choices=("V", "U"))
    p.add_argument("--asc", type=int)
    p.add_argument("--con", choices=("c", "notc", "wc", "notwc"))
    p.add_argument("--side", choices=("left", "right"))
    p.set_defaults(func=cmd_hookwords)

    p = sub.add_parser("eg", help="Edelman-Greene tableau of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_eg)

    p = sub.add_parser("verify", help="compare the rule with the brute-force oracle")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--sizemax", type=int, default=5)
    p.add_argument("--variants", default="K,S")
    p.add_argument("--batch", help="file of 'k r lambda variant' lines")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"kmn: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"kmn: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
