"""Command-line surface for closed forms, tables, the oracle, and sweeps.

Usage:
    hurwitz closed-form --kind monotone --mu 3,3 --format json
    hurwitz eval --kind simple --mu 5 --genus 2
    hurwitz table --kind simple --mu 5 --genus-max 3 --format csv
    hurwitz oracle --kind monotone --mu 3 --genus 1
    hurwitz verify --kind simple --mu 3 --genus-max 1
    hurwitz checks --kind simple --d-max 6
    hurwitz asymptotics --kind monotone --mu 5,3

Exit codes: 0 success, 1 usage or guard error, 2 verification mismatch.
Rationals always print exactly as "p/q"; decimals appear only as a
display-only column in tables.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import closedform, oracle
from .closedform import GenusClosedForm
from .exactarith import format_rational
from .partitions import Partition, partitions_of

__all__ = ["main", "entry"]

ENGINE_MAX_DEGREE = 12

_FORMATS = ("text", "json", "csv")
_KINDS = ("simple", "monotone")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_mu(text: str) -> Partition:
    try:
        parts = [int(piece) for piece in text.split(",") if piece.strip() != ""]
        if not parts:
            raise ValueError
        return Partition.canonical(parts)
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None


def _closed_form(kind: str, mu: Partition, force: bool) -> GenusClosedForm:
    if mu.size > ENGINE_MAX_DEGREE and not force:
        raise ValueError(
            f"engine guard: |mu| = {mu.size} > {ENGINE_MAX_DEGREE} (use --force)"
        )
    if kind == "monotone":
        return closedform.monotone_closed_form(mu)
    return closedform.simple_closed_form(mu)


def _decimal_string(value: Fraction, digits: int = 6) -> str:
    """Display-only rendering to a fixed number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _mu_text(mu: Partition) -> str:
    return ",".join(str(p) for p in mu.parts)


def _emit(document: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)


def _csv_document(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_document(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_closed_form(args) -> int:
    mu = _parse_mu(args.mu)
    form = _closed_form(args.kind, mu, args.force)
    if args.format == "json":
        document = _json_document(closedform.to_json_dict(form))
    elif args.format == "csv":
        document = _csv_document(
            ["k", "i", "coeff"], [list(row) for row in closedform.csv_rows(form)]
        )
    else:
        lines = [
            f"kind: {form.kind}",
            f"mu: {_mu_text(mu)}",
            f"b = 2g + {form.b_offset}",
            f"normalization: {format_rational(form.normalization)}",
            "terms (coeff * b^(i-1) * k^b):",
        ]
        lines += [
            f"  k={k} i={i} coeff={format_rational(c)}" for k, i, c in form.terms
        ]
        document = "\n".join(lines) + "\n"
    _emit(document, args.output)
    return 0


def _cmd_eval(args) -> int:
    mu = _parse_mu(args.mu)
    form = _closed_form(args.kind, mu, args.force)
    value = closedform.evaluate(form, args.genus)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "mu": list(mu.parts),
            "genus": args.genus,
            "b": 2 * args.genus + form.b_offset,
            "value": format_rational(value),
        }
        document = _json_document(payload)
    elif args.format == "csv":
        document = _csv_document(
            ["kind", "mu", "genus", "value"],
            [[args.kind, _mu_text(mu), str(args.genus), format_rational(value)]],
        )
    else:
        document = format_rational(value) + "\n"
    _emit(document, args.output)
    return 0


def _table_rows(kind: str, mu: Partition, genus_max: int, force: bool):
    form = _closed_form(kind, mu, force)
    rows = []
    for g in range(genus_max + 1):
        value = closedform.evaluate(form, g)
        rows.append((g, 2 * g + form.b_offset, value))
    return rows


def _cmd_table(args) -> int:
    mu = _parse_mu(args.mu)
    rows = _table_rows(args.kind, mu, args.genus_max, args.force)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "mu": list(mu.parts),
            "rows": [
                {
                    "g": g,
                    "b": b,
                    "value": format_rational(v),
                    "decimal": _decimal_string(v),
                }
                for g, b, v in rows
            ],
        }
        document = _json_document(payload)
    elif args.format == "csv":
        document = _csv_document(
            ["g", "b", "value", "decimal"],
            [
                [str(g), str(b), format_rational(v), _decimal_string(v)]
                for g, b, v in rows
            ],
        )
    else:
        lines = [f"kind: {args.kind}", f"mu: {_mu_text(mu)}", "g  b  value  decimal"]
        lines += [
            f"{g}  {b}  {format_rational(v)}  {_decimal_string(v)}"
            for g, b, v in rows
        ]
        document = "\n".join(lines) + "\n"
    _emit(document, args.output)
    return 0


def _cmd_oracle(args) -> int:
    mu = _parse_mu(args.mu)
    b = 2 * args.genus - 2 + mu.size + mu.length
    if b < 0:
        raise ValueError("2g - 2 + d + l must be >= 0")
    count = oracle.count_constellations(
        oracle.ConstellationQuery(mu, b, args.kind == "monotone"), force=args.force
    )
    value = oracle.oracle_hurwitz(mu, args.genus, args.kind, force=args.force)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "mu": list(mu.parts),
            "genus": args.genus,
            "b": b,
            "count": count,
            "hurwitz": format_rational(value),
        }
        document = _json_document(payload)
    elif args.format == "csv":
        document = _csv_document(
            ["kind", "mu", "genus", "b", "count", "hurwitz"],
            [
                [
                    args.kind,
                    _mu_text(mu),
                    str(args.genus),
                    str(b),
                    str(count),
                    format_rational(value),
                ]
            ],
        )
    else:
        document = (
            f"mu={_mu_text(mu)} kind={args.kind} genus={args.genus} b={b} "
            f"count={count} hurwitz={format_rational(value)}\n"
        )
    _emit(document, args.output)
    return 0


def _cmd_verify(args) -> int:
    mu = _parse_mu(args.mu)
    form = _closed_form(args.kind, mu, args.force)
    rows = []
    matches = 0
    for g in range(args.genus_max + 1):
        lhs = closedform.evaluate(form, g)
        rhs = oracle.oracle_hurwitz(mu, g, args.kind, force=args.force)
        ok = lhs == rhs
        matches += ok
        rows.append((g, lhs, rhs, ok))
    total = args.genus_max + 1
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "mu": list(mu.parts),
            "rows": [
                {
                    "g": g,
                    "closed_form": format_rational(lhs),
                    "oracle": format_rational(rhs),
                    "match": ok,
                }
                for g, lhs, rhs, ok in rows
            ],
            "matches": matches,
            "total": total,
        }
        document = _json_document(payload)
    elif args.format == "csv":
        document = _csv_document(
            ["g", "closed_form", "oracle", "match"],
            [
                [str(g), format_rational(lhs), format_rational(rhs), str(ok).lower()]
                for g, lhs, rhs, ok in rows
            ],
        )
    else:
        lines = [f"mu={_mu_text(mu)} kind={args.kind}"]
        lines += [
            f"g={g} closed-form={format_rational(lhs)} oracle={format_rational(rhs)} "
            + ("match" if ok else "MISMATCH")
            for g, lhs, rhs, ok in rows
        ]
        lines.append(f"{matches}/{total} genera match")
        document = "\n".join(lines) + "\n"
    _emit(document, args.output)
    return 0 if matches == total else 2


def _cmd_checks(args) -> int:
    rows = []
    all_ok = True
    for d in range(2, args.d_max + 1):
        for mu in partitions_of(d):
            form = _closed_form(args.kind, mu, args.force)
            report = closedform.structure_checks(form)
            integral = all(c.denominator == 1 for _, _, c in form.terms)
            ok = report.passed and (args.kind == "monotone" or integral)
            all_ok = all_ok and ok
            rows.append((d, mu, report, ok))
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "d_max": args.d_max,
            "rows": [
                {
                    "d": d,
                    "mu": list(mu.parts),
                    "top": format_rational(report.top_coefficient),
                    "expected_top": format_rational(report.expected_top),
                    "gap_all_zero": report.gap_all_zero,
                    "second": None
                    if report.second_coefficient is None
                    else format_rational(report.second_coefficient),
                    "expected_second": None
                    if report.expected_second is None
                    else format_rational(report.expected_second),
                    "pass": ok,
                }
                for d, mu, report, ok in rows
            ],
            "all_pass": all_ok,
        }
        document = _json_document(payload)
    elif args.format == "csv":
        document = _csv_document(
            ["d", "mu", "top", "gap_all_zero", "second", "pass"],
            [
                [
                    str(d),
                    _mu_text(mu),
                    format_rational(report.top_coefficient),
                    str(report.gap_all_zero).lower(),
                    ""
                    if report.second_coefficient is None
                    else format_rational(report.second_coefficient),
                    str(ok).lower(),
                ]
                for d, mu, report, ok in rows
            ],
        )
    else:
        lines = [f"kind: {args.kind}"]
        for d, mu, report, ok in rows:
            second = (
                "-"
                if report.second_coefficient is None
                else format_rational(report.second_coefficient)
            )
            lines.append(
                f"d={d} mu={_mu_text(mu)} top={format_rational(report.top_coefficient)}"
                f" gap={'ok' if report.gap_all_zero else 'BAD'} second={second} "
                + ("pass" if ok else "FAIL")
            )
        lines.append(
            f"{sum(1 for *_r, ok in rows if ok)}/{len(rows)} partitions conform"
        )
        document = "\n".join(lines) + "\n"
    _emit(document, args.output)
    return 0 if all_ok else 2


def _cmd_asymptotics(args) -> int:
    mu = _parse_mu(args.mu)
    form = _closed_form(args.kind, mu, args.force)
    terms = closedform.asymptotics(form)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "mu": list(mu.parts),
            "b_offset": form.b_offset,
            "terms": [
                {
                    "k": t.k,
                    "i": t.i,
                    "coeff": format_rational(t.coeff),
                    "leading": t.leading,
                }
                for t in terms
            ],
        }
        document = _json_document(payload)
    elif args.format == "csv":
        document = _csv_document(
            ["k", "i", "coeff", "leading"],
            [
                [str(t.k), str(t.i), format_rational(t.coeff), str(t.leading).lower()]
                for t in terms
            ],
        )
    else:
        lines = [f"kind: {args.kind}", f"mu: {_mu_text(mu)}", "terms by dominance:"]
        lines += [
            f"  k={t.k} i={t.i} coeff={format_rational(t.coeff)}"
            + (" [leading]" if t.leading else "")
            for t in terms
        ]
        document = "\n".join(lines) + "\n"
    _emit(document, args.output)
    return 0


def _add_common(sub: argparse.ArgumentParser, mu_required: bool = True) -> None:
    sub.add_argument("--kind", choices=_KINDS, required=True)
    if mu_required:
        sub.add_argument("--mu", required=True, help="partition, e.g. 3,2,1")
    sub.add_argument("--format", choices=_FORMATS, default="text")
    sub.add_argument("--force", action="store_true", help="override guard limits")
    sub.add_argument("--output", default=None, help="write the document to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hurwitz", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("closed-form", parents=[], help="emit a closed form")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_closed_form)

    sub = commands.add_parser("eval", help="evaluate a closed form at one genus")
    _add_common(sub)
    sub.add_argument("--genus", type=int, required=True)
    sub.set_defaults(handler=_cmd_eval)

    sub = commands.add_parser("table", help="tabulate values for g = 0..genus-max")
    _add_common(sub)
    sub.add_argument("--genus-max", type=int, required=True)
    sub.set_defaults(handler=_cmd_table)

    sub = commands.add_parser("oracle", help="brute-force count and Hurwitz value")
    _add_common(sub)
    sub.add_argument("--genus", type=int, required=True)
    sub.set_defaults(handler=_cmd_oracle)

    sub = commands.add_parser("verify", help="closed form vs oracle, per genus")
    _add_common(sub)
    sub.add_argument("--genus-max", type=int, required=True)
    sub.set_defaults(handler=_cmd_verify)

    sub = commands.add_parser("checks", help="structure-theorem sweep over d <= d-max")
    _add_common(sub, mu_required=False)
    sub.add_argument("--d-max", type=int, required=True)
    sub.set_defaults(handler=_cmd_checks)

    sub = commands.add_parser("asymptotics", help="terms in dominance order")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_asymptotics)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "genus_max", 0) < 0:
            raise ValueError("--genus-max must be >= 0")
        if getattr(args, "d_max", 2) < 2:
            raise ValueError("--d-max must be >= 2")
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
