"""Command-line interface: ``qrsubsets {count,table,verify,charsums}``.

Exit codes: 0 ok, 2 invalid field or flags, 3 oracle budget exceeded,
4 internal defect (non-integer or inconsistent closed form), 5 verify mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterable

from . import charsums, counting, oracle
from .errors import BudgetExceeded, CapExceeded, ConsistencyError, FieldError, NonIntegerResult, QRSubsetError
from .exact_ring import format_quad
from .finite_field import (
    FieldSpec,
    build_field,
    enumerate_elements,
    format_element,
    parse_element,
    quadratic_character,
)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL, EXIT_MISMATCH = 0, 2, 3, 4, 5

COLUMNS = ("p", "s", "q", "k", "b", "count", "method", "branch", "match")


def _field_from_args(args) -> FieldSpec:
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.split(",")]
    return build_field(args.p, args.s, modulus)


def make_record(F: FieldSpec, k: int, b, count: int, method: str, branch: str, match=None) -> dict:
    rec = {
        "p": F.p,
        "s": F.s,
        "q": F.q,
        "k": k,
        "b": format_element(b),
        "count": str(count),
        "method": method,
        "branch": branch,
    }
    if method == "both":
        rec["match"] = match
    return rec


class Emitter:
    """Collects records and prints them as JSON lines or an aligned table."""

    def __init__(self, as_json: bool, out=None):
        self.as_json = as_json
        self.out = out or sys.stdout
        self.rows: list[dict] = []

    def emit(self, rec: dict) -> None:
        if self.as_json:
            print(json.dumps(rec), file=self.out)
        else:
            self.rows.append(rec)

    def note(self, rec: dict, text: str) -> None:
        if self.as_json:
            print(json.dumps(rec), file=self.out)
        else:
            self.flush()
            print(text, file=self.out)

    def flush(self) -> None:
        if not self.rows:
            return
        cols = [c for c in COLUMNS if any(c in r for r in self.rows)]
        cells = [[_cell(r.get(c)) for c in cols] for r in self.rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        print("  ".join(c.rjust(w) for c, w in zip(cols, widths)), file=self.out)
        for row in cells:
            print("  ".join(v.rjust(w) for v, w in zip(row, widths)), file=self.out)
        self.rows = []


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "yes" if v else "NO"
    return str(v)


# -- quantities ---------------------------------------------------------------

def _closed(quantity: str, F: FieldSpec, k: int, b, coeffs=None) -> counting.CountResult:
    if quantity == "subset":
        return counting.n_H(k, b, F)
    if quantity == "distinct":
        return counting.n_tilde_star(k, b, F)
    return counting.n_star(coeffs, b, F)


def _oracle(quantity: str, F: FieldSpec, k: int, b, budget, coeffs=None) -> int:
    if quantity == "subset":
        return oracle.oracle_subset_sum(k, b, F, budget)
    if quantity == "distinct":
        return oracle.oracle_distinct_tuples(k, b, F, budget)
    return oracle.oracle_diagonal(coeffs, b, F, budget)


def _evaluate(quantity, F, k, b, method, budget, coeffs=None) -> dict:
    if method == "oracle":
        return make_record(F, k, b, _oracle(quantity, F, k, b, budget, coeffs), "oracle", "enumeration")
    res = _closed(quantity, F, k, b, coeffs)
    if method == "closed_form":
        return make_record(F, k, b, res.value, "closed_form", res.provenance)
    truth = _oracle(quantity, F, k, b, budget, coeffs)
    return make_record(F, k, b, res.value, "both", res.provenance, res.value == truth)


def cmd_count(args) -> int:
    F = _field_from_args(args)
    b = parse_element(args.b, F)
    coeffs = None
    k = args.k
    if args.quantity == "diagonal":
        if not args.coeffs:
            raise FieldError("--quantity diagonal needs --coeffs")
        coeffs = [parse_element(c, F) for c in args.coeffs]
        k = len(coeffs)
    elif k is None:
        raise FieldError("--k is required")
    rec = _evaluate(args.quantity, F, k, b, args.method, oracle.OracleBudget(args.budget), coeffs)
    out = Emitter(args.json)
    out.emit(rec)
    out.flush()
    return EXIT_OK if rec.get("match", True) else EXIT_MISMATCH


def cmd_table(args) -> int:
    F = _field_from_args(args)
    budget = oracle.OracleBudget(args.budget)
    out = Emitter(args.json)
    total = 0
    ok = True
    for b in enumerate_elements(F):
        rec = _evaluate("subset", F, args.k, b, args.method, budget)
        total += int(rec["count"])
        ok = ok and rec.get("match", True)
        out.emit(rec)
    expected = math.comb(F.half, args.k)
    summary = {"summary": True, "total": str(total), "expected": str(expected), "match": total == expected}
    out.note(summary, f"sum = {total}, C({F.half},{args.k}) = {expected}: {'ok' if total == expected else 'MISMATCH'}")
    return EXIT_OK if ok and total == expected else EXIT_MISMATCH


def cmd_verify(args) -> int:
    F = _field_from_args(args)
    budget = oracle.OracleBudget(args.budget)
    out = Emitter(args.json)
    max_k = min(args.max_k, F.half)
    failures = 0
    for k in range(max_k + 1):
        truth = oracle.oracle_subset_table(k, F, budget)
        for b, expected in truth.items():
            res = counting.n_H(k, b, F)
            match = res.value == expected
            out.emit(make_record(F, k, b, res.value, "both", res.provenance, match))
            if not match:
                failures += 1
                print(
                    f"MISMATCH k={k} b={format_element(b)} branch={res.provenance} "
                    f"closed={res.value} oracle={expected}",
                    file=sys.stderr,
                )
    checked = (max_k + 1) * F.q
    out.note(
        {"summary": True, "checked": checked, "failures": failures, "match": failures == 0},
        f"{checked} (k, b) pairs checked over {F}, {failures} mismatches",
    )
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def cmd_charsums(args) -> int:
    F = _field_from_args(args)
    out = Emitter(args.json)
    if args.which == "gauss":
        value, case = charsums.gauss_closed(F)
        a = parse_element(args.a, F)
        rec = {"p": F.p, "s": F.s, "q": F.q, "sum": "gauss", "a": format_element(a), "case": case}
        if a:
            # G_a = chi(a) G_1 for a != 0
            value = value * quadratic_character(a)
            rec["closed"] = format_quad(value)
        else:
            rec["closed"] = "0"
        approx = complex(value) if a else 0j
        rec["approx"] = f"{approx.real:.10g}{approx.imag:+.10g}i"
        try:
            direct = charsums.gauss_direct(a, F)
            rec["direct"] = f"{direct.real:.10g}{direct.imag:+.10g}i"
            rec["match"] = abs(direct - approx) < 1e-6
        except CapExceeded:
            rec["direct"] = None
        _print_kv(out, rec)
        return EXIT_OK if rec.get("match", True) else EXIT_MISMATCH
    variant = charsums.JacobiVariant(args.variant)
    slots = [charsums.CharSlot.TRIVIAL] * args.trivial + [charsums.CharSlot.QUADRATIC] * args.e
    closed = charsums.prop22_specialize(slots, variant, F)
    rec = {
        "p": F.p, "s": F.s, "q": F.q, "sum": "jacobi", "variant": variant.value,
        "quadratic": args.e, "trivial": args.trivial, "closed": str(closed),
    }
    try:
        direct = charsums.jacobi_direct(slots, variant, F)
        rec["direct"] = str(direct)
        rec["match"] = direct == closed
    except CapExceeded:
        rec["direct"] = None
    _print_kv(out, rec)
    return EXIT_OK if rec.get("match", True) else EXIT_MISMATCH


def _print_kv(out: Emitter, rec: dict) -> None:
    if out.as_json:
        print(json.dumps(rec), file=out.out)
        return
    width = max(len(k) for k in rec)
    for key, val in rec.items():
        print(f"{key.ljust(width)}  {_cell(val)}", file=out.out)


# -- argument parsing ----------------------------------------------------------

def _add_field_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("--s", type=int, default=1, help="extension degree (default 1)")
    sp.add_argument("--modulus", help="monic modulus coefficients c0,...,c_s (constant first)")
    sp.add_argument("--json", action="store_true", help="emit JSON lines")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrsubsets",
        description="Exact subset-sum counts over the quadratic residues of F_{p^s}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", help="one count")
    _add_field_args(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--b", required=True, help='target element: "5" or "c0,c1,..."')
    sp.add_argument("--quantity", choices=("subset", "distinct", "diagonal"), default="subset")
    sp.add_argument("--coeffs", nargs="+", help="diagonal coefficients a_1 ... a_n")
    sp.add_argument("--method", choices=("closed_form", "oracle", "both"), default="closed_form")
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET.max_states)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("table", help="subset counts for every b")
    _add_field_args(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--method", choices=("closed_form", "oracle", "both"), default="closed_form")
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET.max_states)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="closed form vs brute force for all b, k <= max-k")
    _add_field_args(sp)
    sp.add_argument("--max-k", type=int, default=6)
    sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET.max_states)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("charsums", help="Gauss and Jacobi-type sums")
    sp.add_argument("which", choices=("gauss", "jacobi"))
    _add_field_args(sp)
    sp.add_argument("--a", default="1", help="Gauss sum parameter (default 1)")
    sp.add_argument("--e", type=int, default=2, help="number of quadratic slots")
    sp.add_argument("--trivial", type=int, default=0, help="number of trivial slots")
    sp.add_argument("--variant", choices=[v.value for v in charsums.JacobiVariant], default="J")
    sp.set_defaults(func=cmd_charsums)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NonIntegerResult as exc:
        print(f"internal error: {exc}; ring value {format_quad(exc.value)}", file=sys.stderr)
        return EXIT_INTERNAL
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (QRSubsetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
