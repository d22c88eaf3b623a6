"""Command-line interface: exact counts, distributions, generating
functions, and cross-verification for standard Young tableaux.

Exit codes are a stable contract: 0 success, 1 usage error, 2 verification
mismatch, 3 enumeration-cap refusal. Counts are serialized as decimal
strings in JSON so arbitrary precision survives every consumer.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import formulas, oracle, qpoly, recurrences, verify
from .oracle import DEFAULT_MAX_CELLS, SizeCapExceeded
from .qpoly import QPolynomial
from .tableaux import (Shape, ShapeError, TableauError, UnsupportedShapeError,
                       is_hook, is_three_row_one, is_two_row, syt_count)
from .tables import CountTable, RefinedKey

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3


class CLIError(Exception):
    """Carries a message and the exit code to report it with."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage problems; the CLI contract
    # reserves 2 for verification mismatches and uses 1 for usage.
    def error(self, message):
        raise CLIError(f"{self.prog}: error: {message}", EXIT_USAGE)


@dataclass(frozen=True)
class OutputDocument:
    """One table of exact counts, ready for text, CSV, or JSON rendering."""

    shape: str
    statistic: str          # count | des | maj | refined
    method: str             # formula | recursion | oracle | stanley
    key_fields: tuple[str, ...]
    rows: tuple[tuple[tuple[int, ...], str], ...]
    total: str

    @classmethod
    def from_count_table(cls, table: CountTable, statistic: str, method: str) -> "OutputDocument":
        rows = tuple((key.values(), str(count)) for key, count in table.sorted_items())
        return cls(str(table.shape), statistic, method, table.key_fields,
                   rows, str(table.total()))

    @classmethod
    def from_polynomial(cls, shape: Shape, poly: QPolynomial, method: str) -> "OutputDocument":
        rows = tuple(((e,), str(c)) for e, c in enumerate(poly.coeffs) if c)
        return cls(str(shape), "maj", method, ("maj",), rows, str(poly(1)))

    @classmethod
    def from_total(cls, shape: Shape, count: int) -> "OutputDocument":
        return cls(str(shape), "count", "formula", (), (((), str(count)),), str(count))

    def to_dict(self) -> dict:
        return {
            "shape": self.shape,
            "statistic": self.statistic,
            "method": self.method,
            "key_fields": list(self.key_fields),
            "rows": [
                {**dict(zip(self.key_fields, key)), "count": count}
                for key, count in self.rows
            ],
            "total": self.total,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "OutputDocument":
        fields = tuple(doc["key_fields"])
        rows = tuple(
            (tuple(int(row[f]) for f in fields), row["count"]) for row in doc["rows"]
        )
        return cls(doc["shape"], doc["statistic"], doc["method"], fields,
                   rows, doc["total"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        if not self.key_fields:
            return self.total + "\n"
        lines = []
        for key, count in self.rows:
            label = ",".join(f"{f}={v}" for f, v in zip(self.key_fields, key))
            lines.append(f"{label}\t{count}")
        lines.append(f"total\t{self.total}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([*self.key_fields, "count"])
        for key, count in self.rows:
            writer.writerow([*key, count])
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _parse_shape(text: str) -> Shape:
    return Shape.from_string(text)


def _des_document(shape: Shape, method: str, memo, max_cells: int) -> OutputDocument:
    parts = shape.parts
    if method in ("auto", "formula"):
        if is_hook(shape):
            table = formulas.hook_distribution(parts[0], len(parts) - 1)
            return OutputDocument.from_count_table(table, "des", "formula")
        if is_two_row(shape):
            table = formulas.two_row_distribution(parts[0], parts[1])
            return OutputDocument.from_count_table(table, "des", "formula")
        if method == "formula":
            raise UnsupportedShapeError(
                f"no closed form implemented for shape ({shape}); closed forms"
                " cover hook shapes (n,1,...,1) and two-row shapes (n,m)"
            )
    if method in ("auto", "recursion"):
        if is_two_row(shape) and parts[0] == parts[1]:
            n = parts[0]
            table = CountTable(shape, {
                RefinedKey(d): sum(
                    recurrences.square_refined_count(n, d, k, memo)
                    for k in range(n, 2 * n)
                )
                for d in range(1, n + 1)
            })
            return OutputDocument.from_count_table(table, "des", "recursion")
        if is_three_row_one(shape):
            table = recurrences.three_row_distribution(parts[0], parts[1], memo)
            return OutputDocument.from_count_table(table, "des", "recursion")
        if method == "recursion":
            raise UnsupportedShapeError(
                f"no recursion implemented for shape ({shape}); recursions"
                " cover two-row squares (n,n) and three-row shapes (n,m,1)"
            )
    table = oracle.descent_distribution(shape, max_cells=max_cells)
    return OutputDocument.from_count_table(table, "des", "oracle")


def _maj_document(shape: Shape, method: str, max_cells: int) -> OutputDocument:
    if method in ("auto", "formula"):
        return OutputDocument.from_polynomial(shape, qpoly.major_index_gf(shape), "stanley")
    if method == "recursion":
        raise UnsupportedShapeError(
            "the major index has no recursion method; use formula or oracle"
        )
    poly = oracle.major_index_gf(shape, max_cells=max_cells)
    return OutputDocument.from_polynomial(shape, poly, "oracle")


def _load_memo(args):
    if getattr(args, "no_memo", False):
        return False
    if getattr(args, "memo_load", None):
        return recurrences.MemoTable.load(args.memo_load)
    return recurrences.MemoTable()


def _dump_memo(args, memo) -> None:
    if getattr(args, "memo_dump", None) and isinstance(memo, recurrences.MemoTable):
        memo.dump(args.memo_dump)


def cmd_count(args) -> int:
    shape = _parse_shape(args.shape)
    doc = OutputDocument.from_total(shape, syt_count(shape))
    sys.stdout.write(doc.render(args.format))
    return EXIT_OK


def cmd_distribution(args) -> int:
    shape = _parse_shape(args.shape)
    memo = _load_memo(args)
    if args.stat == "des":
        doc = _des_document(shape, args.method, memo, args.max_cells)
    else:
        doc = _maj_document(shape, args.method, args.max_cells)
    code = EXIT_OK
    if args.check and doc.method != "oracle":
        if shape.n > args.max_cells:
            sys.stderr.write(
                f"syt: check skipped: shape ({shape}) exceeds the enumeration"
                f" cap of {args.max_cells}\n"
            )
        else:
            if args.stat == "des":
                reference = _des_document(shape, "oracle", memo, args.max_cells)
            else:
                reference = _maj_document(shape, "oracle", args.max_cells)
            if reference.rows != doc.rows or reference.total != doc.total:
                sys.stderr.write(
                    f"mismatch against oracle for shape ({shape}):\n"
                    f"  {doc.method}: {doc.rows}\n  oracle: {reference.rows}\n"
                )
                code = EXIT_MISMATCH
    sys.stdout.write(doc.render(args.format))
    _dump_memo(args, memo)
    return code


def cmd_maj_gf(args) -> int:
    shape = _parse_shape(args.shape)
    poly = qpoly.major_index_gf(shape)
    code = EXIT_OK
    if args.check:
        if shape.n > args.max_cells:
            sys.stderr.write(
                f"syt: check skipped: shape ({shape}) exceeds the enumeration"
                f" cap of {args.max_cells}\n"
            )
        else:
            brute = oracle.major_index_gf(shape, max_cells=args.max_cells)
            if brute != poly:
                sys.stderr.write(
                    f"mismatch against oracle for shape ({shape}):\n"
                    f"  hook-length product: {poly}\n  oracle: {brute}\n"
                )
                code = EXIT_MISMATCH
    if args.format == "json":
        doc = {"shape": str(shape), "method": "stanley",
               "coefficients": poly.to_decimal_strings()}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(OutputDocument.from_polynomial(shape, poly, "stanley").to_csv())
    else:
        sys.stdout.write(str(poly) + "\n")
    return code


def cmd_verify(args) -> int:
    if args.format == "csv":
        raise CLIError("verify reports support text and json output only")
    memo = _load_memo(args)
    report = verify.run(args.family, args.max_cells,
                        memo if memo is not False else None)
    if args.format == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.to_text())
    _dump_memo(args, memo)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def _add_common(parser, *, check=False, memo=False, cap=None):
    parser.add_argument("--format", choices=("text", "csv", "json"),
                        default="text", help="output format (default text)")
    if cap is not None:
        parser.add_argument("--max-cells", type=int, default=cap,
                            metavar="N",
                            help=f"enumeration cap override (default {cap})")
    if check:
        parser.add_argument("--check", action="store_true",
                            help="cross-validate against the enumeration oracle")
    if memo:
        parser.add_argument("--memo-load", metavar="FILE",
                            help="warm-start recursions from a JSON memo dump")
        parser.add_argument("--memo-dump", metavar="FILE",
                            help="dump the recursion memo table to FILE")
        parser.add_argument("--no-memo", action="store_true",
                            help="disable memoization (differential testing)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="syt",
                     description="Exact descent and major-index statistics"
                                 " of standard Young tableaux.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="number of standard tableaux")
    p_count.add_argument("shape", help="partition, e.g. 4,2,1")
    _add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_dist = sub.add_parser("distribution", help="descent or major-index distribution")
    p_dist.add_argument("shape")
    p_dist.add_argument("--stat", choices=("des", "maj"), default="des")
    p_dist.add_argument("--method", choices=("auto", "formula", "recursion", "oracle"),
                        default="auto")
    _add_common(p_dist, check=True, memo=True, cap=DEFAULT_MAX_CELLS)
    p_dist.set_defaults(func=cmd_distribution)

    p_gf = sub.add_parser("maj-gf", help="major-index generating function")
    p_gf.add_argument("shape")
    _add_common(p_gf, check=True, cap=DEFAULT_MAX_CELLS)
    p_gf.set_defaults(func=cmd_maj_gf)

    p_verify = sub.add_parser("verify", help="run the cross-check sweeps")
    p_verify.add_argument("family", choices=verify.FAMILIES)
    # sweeps walk every shape up to the bound, so the default is
    # smaller than the plain enumeration cap
    _add_common(p_verify, memo=True, cap=10)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CLIError as exc:
        sys.stderr.write(f"{exc}\n")
        return exc.code
    except SizeCapExceeded as exc:
        sys.stderr.write(f"syt: {exc}\n")
        return EXIT_CAP
    except (ShapeError, TableauError, UnsupportedShapeError, ValueError, OSError) as exc:
        sys.stderr.write(f"syt: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
