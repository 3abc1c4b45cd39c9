"""Command-line interface: ``order``, ``table``, ``verify`` and ``board``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .boards import (
    Board,
    abel_board,
    board_from_word,
    jump_board,
    laguerre_board,
    lah_board,
    rectangle,
    staircase,
)
from .coeffring import Poly
from .numbers import combinatorial_normal_form, family_row
from .placements import PlacementError, StaticPlacement, classify_static
from .rewriter import NormalForm, equal_normal_forms, normal_order
from .suites import run_suite
from .words import WordSyntaxError, parse_word

MAX_WORD_LEN = 14
MAX_CELLS = 40

TABLE_FAMILIES = {
    # name: (r, fixed s or None)
    "ore-stirling": (1, 1),
    "ore-lah": (2, 1),
    "ore-scherk": (None, 1),
    "poly-stirling": (1, None),
    "poly-lah": (2, None),
    "poly-scherk": (None, None),
}

BOARD_FAMILIES = ("staircase", "lah", "jump", "rectangle", "abel", "laguerre")


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# specialisation


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _specialization(args, s: int):
    q = _rational(args.q) if args.q is not None else None
    alphas = None
    if args.alpha is not None:
        alphas = [_rational(a) for a in args.alpha.split(",")]
        if len(alphas) != s + 1:
            raise UsageError(f"--alpha needs {s + 1} values for s={s}, got {len(alphas)}")
    return q, alphas


def _specialize_poly(p: Poly, q, alphas):
    """Integer values stay symbolic-shaped Polys; full rational values become Fractions."""
    values = ([q] if q is not None else []) + (alphas or [])
    if all(v.denominator == 1 for v in values):
        amap = {j: int(a) for j, a in enumerate(alphas)} if alphas else None
        return p.substitute(q=int(q) if q is not None else None, alphas=amap)
    if q is None or alphas is None:
        raise UsageError("non-integer values need both --q and --alpha")
    return p.evaluate(q, alphas)


def _coeff_text(c, fmt: str, names=None) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return c.pretty(names) if fmt == "pretty" else str(c)


def _coeff_json(c):
    if isinstance(c, Fraction):
        return [{"q": 0, "alpha": [], "c": str(c)}]
    return c.to_json()


# --------------------------------------------------------------------------
# order


def _render_nf(nf: NormalForm, word: str, fmt: str, q, alphas) -> str:
    items = [(k, _specialize_poly(v, q, alphas) if (q is not None or alphas) else v) for k, v in nf.items()]
    items = [(k, v) for k, v in items if v]
    if fmt == "json":
        payload = {
            "word": word,
            "s": nf.s,
            "terms": [{"y": j, "x": x, "coeff": _coeff_json(c)} for (j, x), c in items],
        }
        return json.dumps(payload)
    if fmt == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["y", "x", "coefficient"])
        for (j, x), c in items:
            wr.writerow([j, x, _coeff_text(c, "csv")])
        return buf.getvalue().rstrip("\n")
    if not items:
        return "0"
    parts = []
    for (j, x), c in items:
        mono = (f"Y^{j}" if j > 1 else "Y" * j) + (f"X^{x}" if x > 1 else "X" * x)
        text = _coeff_text(c, "pretty")
        if not mono:
            parts.append(text)
        elif text == "1":
            parts.append(mono)
        elif " " in text or text.startswith("-"):
            parts.append(f"({text}) {mono}")
        else:
            parts.append(f"{text} {mono}")
    return " + ".join(parts)


def cmd_order(args) -> int:
    word = parse_word(args.word)
    if len(word) > args.max_len and not args.unsafe_limits:
        raise UsageError(
            f"word has length {len(word)} > limit {args.max_len}; pass --unsafe-limits to proceed"
        )
    if args.engine != "dp":
        cells = board_from_word(word).cell_count
        if cells > MAX_CELLS and not args.unsafe_limits:
            raise UsageError(f"board has {cells} cells > limit {MAX_CELLS} for enumeration engines")
    s = args.s
    q, alphas = _specialization(args, s)
    nf = combinatorial_normal_form(word, s, engine=args.engine)
    out = _render_nf(nf, word.letters, args.format, q, alphas)
    if not args.check:
        print(out)
        return 0
    oracle = normal_order(word, s)
    cmp = equal_normal_forms(nf, oracle)
    if args.format == "json":
        print(json.dumps({
            "combinatorial": json.loads(out),
            "oracle": json.loads(_render_nf(oracle, word.letters, "json", q, alphas)),
            "equal": cmp.equal,
            "report": cmp.report(),
        }))
    else:
        print(f"combinatorial: {out}")
        print(f"oracle:        {_render_nf(oracle, word.letters, args.format, q, alphas)}")
        print(f"verdict:       {cmp.report()}")
    return 0 if cmp.equal else 1


# --------------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    if args.family not in TABLE_FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(TABLE_FAMILIES)}")
    r, fixed_s = TABLE_FAMILIES[args.family]
    if r is None:
        r = args.r
    if r < 1:
        raise UsageError("--r must be at least 1")
    s = fixed_s if fixed_s is not None else args.s
    q, alphas = _specialization(args, s)
    rows = []
    for n in range(args.n + 1):
        row = family_row(r, s, n)
        for (j, k) in sorted(row, key=lambda jk: (jk[0], jk[1])):
            c = row[(j, k)]
            if q is not None or alphas:
                c = _specialize_poly(c, q, alphas)
            if c:
                rows.append((n, j, k, c))
    if args.format == "json":
        print(json.dumps({
            "family": args.family,
            "r": r,
            "s": s,
            "entries": [{"n": n, "j": j, "k": k, "coeff": _coeff_json(c)} for n, j, k, c in rows],
        }))
    elif args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["n", "j", "k", "coefficient"])
        for n, j, k, c in rows:
            wr.writerow([n, j, k, _coeff_text(c, "csv")])
        print(buf.getvalue().rstrip("\n"))
    else:
        for n, j, k, c in rows:
            print(f"({n},{j},{k}) {_coeff_text(c, 'pretty')}")
    return 0


# --------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if not args.unsafe_limits:
        if args.max_len is not None and args.max_len > MAX_WORD_LEN:
            raise UsageError(f"--max-len {args.max_len} exceeds limit {MAX_WORD_LEN}")
        if args.max_cells is not None and args.max_cells > MAX_CELLS:
            raise UsageError(f"--max-cells {args.max_cells} exceeds limit {MAX_CELLS}")
    results = run_suite(
        args.suite,
        max_len=args.max_len,
        max_s=args.s,
        max_cells=args.max_cells,
        seed=args.seed,
    )
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({
            "ok": ok,
            "suites": [
                {"name": r.name, "passed": r.passed, "failed": len(r.failures),
                 "first_failure": str(r.failures[0]) if r.failures else None, "info": r.info}
                for r in results
            ],
        }))
    else:
        for r in results:
            print(r.summary())
            for line in r.info:
                print(f"  info: {line}")
        print("all suites passed" if ok else "verification FAILED")
    return 0 if ok else 1


# --------------------------------------------------------------------------
# board


def _cells(text: str | None):
    if not text:
        return []
    out = []
    for part in text.split(","):
        try:
            c, r = part.split(":")
            out.append((int(c), int(r)))
        except ValueError:
            raise UsageError(f"cells are given as column:row, got {part!r}") from None
    return out


def _family_board(args) -> Board:
    fam, n = args.family, args.n
    if fam == "staircase":
        return staircase(n)
    if fam == "lah":
        return lah_board(n)
    if fam == "jump":
        return jump_board(n, args.m)
    if fam == "rectangle":
        return rectangle(args.m, n)
    if fam == "abel":
        return abel_board(n, args.r)
    if fam == "laguerre":
        return laguerre_board(n, args.r)
    raise UsageError(f"unknown board family {fam!r}; choose from {', '.join(BOARD_FAMILIES)}")


def cmd_board(args) -> int:
    given = [x is not None for x in (args.word, args.family, args.heights)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --word, --family, --heights")
    if args.word is not None:
        board = board_from_word(parse_word(args.word))
    elif args.family is not None:
        board = _family_board(args)
    else:
        try:
            board = Board(tuple(int(h) for h in args.heights.split(",") if h.strip()))
        except ValueError as e:
            raise UsageError(f"bad --heights: {e}") from None
    if board.cell_count > args.max_cells and not args.unsafe_limits:
        raise UsageError(f"board has {board.cell_count} cells > limit {args.max_cells}")
    labels = None
    payload = {"heights": list(board.heights), "ferrers": board.is_ferrers}
    if args.rooks or args.files:
        placement = StaticPlacement(_cells(args.rooks), _cells(args.files))
        try:
            cls = classify_static(board, placement)
        except PlacementError as e:
            raise UsageError(str(e)) from None
        labels = cls.tokens()
        payload.update(
            cancelled=cls.count("cancelled"), empty=cls.empty_count, weight=str(cls.weight)
        )
    if args.format == "json":
        print(json.dumps(payload))
        return 0
    print(f"heights (left to right): {' '.join(map(str, board.left_to_right))}")
    art = board.render(labels)
    if art:
        print(art)
    if labels is not None:
        print(f"cancelled: {payload['cancelled']}, empty: {payload['empty']}, weight: {payload['weight']}")
    return 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qweyl",
        description="Normal ordering in XY - qYX = alpha_0 + alpha_1 Y + ... + alpha_s Y^s.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def spec_flags(sp):
        sp.add_argument("--q", help="specialise q (rational)")
        sp.add_argument("--alpha", help="comma-separated values for alpha_0..alpha_s")
        sp.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    o = sub.add_parser("order", help="normal-order a word")
    o.add_argument("--word", required=True)
    o.add_argument("--s", type=int, default=1)
    o.add_argument("--check", action="store_true", help="also run the rewriting oracle and compare")
    o.add_argument("--engine", choices=("dp", "sequential", "static"), default="dp")
    o.add_argument("--max-len", type=int, default=MAX_WORD_LEN)
    o.add_argument("--unsafe-limits", action="store_true")
    spec_flags(o)
    o.set_defaults(func=cmd_order)

    t = sub.add_parser("table", help="print a triangular number table")
    t.add_argument("--family", required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--s", type=int, default=1)
    t.add_argument("--r", type=int, default=1)
    spec_flags(t)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all",
                   choices=("oracle", "engines", "recurrences", "closed-forms", "binomial", "classical", "all"))
    v.add_argument("--max-len", type=int)
    v.add_argument("--max-cells", type=int)
    v.add_argument("--s", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("pretty", "json"), default="pretty")
    v.add_argument("--unsafe-limits", action="store_true")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("board", help="render a board, optionally with a placement")
    b.add_argument("--word")
    b.add_argument("--family")
    b.add_argument("--heights", help="comma-separated heights, rightmost column first")
    b.add_argument("--n", type=int, default=3)
    b.add_argument("--m", type=int, default=1)
    b.add_argument("--r", type=int, default=1)
    b.add_argument("--rooks", help="column:row cells, column 0 rightmost, row 1 top")
    b.add_argument("--files", help="column:row cells")
    b.add_argument("--format", choices=("pretty", "json"), default="pretty")
    b.add_argument("--max-cells", type=int, default=MAX_CELLS)
    b.add_argument("--unsafe-limits", action="store_true")
    b.set_defaults(func=cmd_board)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordSyntaxError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
