"""Command-line entry point: ``skewschubert <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Optional, Sequence

from .bracket import rewrite_search, skew_element
from .nilcox import theorem2_constants
from .parsing import (parse_composition, parse_partition,
                      parse_permutation, parse_polynomial, parse_word)
from .perm import Permutation, all_permutations, bruhat_leq
from .poly import Polynomial, eta
from .schubert import constants_by_product, reduce_mod_ideal, schubert_poly
from .skewdiff import constants_by_skew, skew_apply
from .skewkey import key_polynomial, skew_key, skew_schubert
from .symfunc import lr_coefficients, skew_schur_jt, skew_schur_ssyt
from .sweep import SUITES, SweepParams, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm_str(w: Permutation, n: Optional[int] = None) -> str:
    window = w.padded(max(n or 0, w.n, 1))
    return "".join(map(str, window)) if len(window) < 10 else ",".join(map(str, window))


def _emit(fmt: str, text: str, data: Any, rows: list[list[Any]]) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(data, sort_keys=True, indent=1) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(text + "\n")


def _poly_rows(f: Polynomial) -> list[list[Any]]:
    return [["exponents", "coefficient"]] + [
        [" ".join(map(str, e)), c] for e, c in f.sorted_terms()]


def _emit_poly(args, f: Polynomial, extra: Optional[dict] = None, n: Optional[int] = None) -> None:
    data: dict[str, Any] = {"polynomial": f.to_records(), "text": str(f)}
    text = str(f)
    if n is not None:
        red = reduce_mod_ideal(f, n)
        data["reduced"] = red.to_records()
        data["reduced_text"] = str(red)
        text += f"\nmod I_{n}: {red}"
    data.update(extra or {})
    _emit(args.format, text, data, _poly_rows(f))


def _check_below(v: Permutation, w: Permutation) -> None:
    if not bruhat_leq(v, w):
        raise UsageError(f"{_perm_str(v)} is not below {_perm_str(w)} in Bruhat order")


# -- subcommands -------------------------------------------------------------

def cmd_schubert(args) -> int:
    w = parse_permutation(args.w)
    _emit_poly(args, schubert_poly(w), {"permutation": list(w.padded(max(w.n, 1)))})
    return EXIT_OK


def cmd_skew_apply(args) -> int:
    w, v = parse_permutation(args.w), parse_permutation(args.v)
    f = parse_polynomial(args.poly)
    _check_below(v, w)
    word = parse_word(args.word) if args.word else None
    out = skew_apply(w, v, f, word)
    n = args.reduce or max(w.n, v.n, f.nvars(), out.nvars())
    _emit_poly(args, out, n=n)
    return EXIT_OK


def cmd_skew_schubert(args) -> int:
    w, v = parse_permutation(args.w), parse_permutation(args.v)
    n = args.n
    if max(w.n, v.n) > n:
        raise UsageError(f"permutations do not fit in S_{n}")
    _check_below(v, w)
    _emit_poly(args, skew_schubert(w, v, n), n=n)
    return EXIT_OK


def _constants_table(route: str, u: Permutation, v: Permutation, n: int) -> dict[Permutation, int]:
    if route == "product":
        return dict(constants_by_product(u, v, n).items())
    out = {}
    if route == "skew":
        for w in all_permutations(n):
            if bruhat_leq(v, w):
                c = eta(constants_by_skew(u, v, w))
                if c:
                    out[w] = c
        return out
    for w in all_permutations(n):
        if bruhat_leq(u, w):
            c = theorem2_constants(w, u, n)[v]
            if c:
                out[w] = c
    return out


def cmd_constants(args) -> int:
    u, v, n = parse_permutation(args.u), parse_permutation(args.v), args.n
    if max(u.n, v.n) > n:
        raise UsageError(f"permutations do not fit in S_{n}")
    routes = ["product", "skew", "paths"] if args.route == "all" else [args.route]
    tables = {r: _constants_table(r, u, v, n) for r in routes}
    agree = all(t == tables[routes[0]] for t in tables.values())
    lines, rows, data = [], [["route", "w", "coefficient"]], {}
    for r in routes:
        lines.append(f"route {r}:")
        entries = sorted(tables[r].items())
        for w, c in entries:
            lines.append(f"  {_perm_str(w, n)}  {c}")
            rows.append([r, _perm_str(w, n), c])
        if not entries:
            lines.append("  (none)")
        data[r] = {_perm_str(w, n): c for w, c in entries}
    if len(routes) > 1:
        lines.append("routes agree" if agree else "ROUTES DISAGREE")
    _emit(args.format, "\n".join(lines), {"tables": data, "agree": agree}, rows)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_bracket(args) -> int:
    w, v = parse_permutation(args.w), parse_permutation(args.v)
    _check_below(v, w)
    e = skew_element(w, v, parse_word(args.word) if args.word else None)
    data: dict[str, Any] = {"element": str(e)}
    lines = [str(e)]
    status = EXIT_OK
    if args.search is not None:
        res = rewrite_search(e, args.search, args.nodes)
        data["search"] = {"found": None if res.exhausted else str(res.found),
                          "steps": res.steps, "explored": res.explored,
                          "path": [str(p) for p in res.path]}
        if res.exhausted:
            lines.append(f"no nonnegative form within {args.search} rewrites "
                         f"({res.explored} expressions expanded)")
        else:
            lines.append(f"nonnegative form after {res.steps} rewrites: {res.found}")
    rows = [["element"], [str(e)]]
    if "search" in data:
        rows = [["element", "nonnegative_form", "steps"],
                [str(e), data["search"]["found"] or "", data["search"]["steps"]]]
    _emit(args.format, "\n".join(lines), data, rows)
    return status


def cmd_key(args) -> int:
    alpha = parse_composition(args.alpha)
    if args.skew:
        v = parse_permutation(args.skew)
        w = alpha.sorting_permutation()
        _check_below(v, w)
        f = skew_key(alpha, v, parse_word(args.word) if args.word else None)
    else:
        f = key_polynomial(alpha)
    _emit_poly(args, f, {"composition": list(alpha.parts)})
    return EXIT_OK


def cmd_schur(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu) if args.mu else ()
    if args.route == "lr":
        try:
            coeffs = lr_coefficients(lam, mu)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        entries = sorted(coeffs.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))
        text = "\n".join(f"{','.join(map(str, nu)) or '0'}  {c}" for nu, c in entries) or "0"
        data = {"lr": [{"nu": list(nu), "coefficient": c} for nu, c in entries]}
        _emit(args.format, text, data,
              [["nu", "coefficient"]] + [[",".join(map(str, nu)), c] for nu, c in entries])
        return EXIT_OK
    n = args.n if args.n is not None else max(len(lam), 1)
    fn = skew_schur_jt if args.route == "jt" else skew_schur_ssyt
    try:
        f = fn(lam, mu, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit_poly(args, f)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = SweepParams(args.suite, args.n, depth=args.budget, nodes=args.nodes,
                         trials=args.trials)
    try:
        report = run_sweep(params, jobs=args.jobs, cache=args.cache, only=args.only)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    summary = report.summary()
    print(f"{params.suite}: {summary['total']} instances in {report.elapsed:.2f}s"
          + (" (cached)" if report.from_cache else ""), file=sys.stderr)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "status", "detail"])
        for r in report.records:
            w.writerow([r["id"], r["status"],
                        json.dumps(r["detail"], sort_keys=True) if "detail" in r else ""])
        sys.stdout.write(buf.getvalue())
    else:
        lines = [f"{params.suite} ({' '.join(f'{k}={v}' for k, v in params.relevant().items())})"]
        lines.append("  ".join(f"{k}: {summary[k]}" for k in ("total", "pass", "fail",
                                                               "budget-exhausted")))
        for r in report.records:
            if r["status"] != "pass":
                lines.append(f"{r['status']} {r['id']} {json.dumps(r.get('detail', {}), sort_keys=True)}")
                if "reproducer" in r:
                    lines.append(f"  reproduce: {r['reproducer']}")
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p = argparse.ArgumentParser(prog="skewschubert",
                                description="Schubert calculus with skew divided differences.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("schubert", parents=[common], help="Schubert polynomial S_w")
    s.add_argument("w")
    s.set_defaults(func=cmd_schubert)

    s = sub.add_parser("skew-apply", parents=[common], help="apply the skew operator w/v to a polynomial")
    s.add_argument("w")
    s.add_argument("v")
    s.add_argument("poly")
    s.add_argument("--word", help="reduced word of w, e.g. w:2,1,3,2,1")
    s.add_argument("--reduce", type=int, metavar="N", help="reduce modulo I_N (default: smallest fitting N)")
    s.set_defaults(func=cmd_skew_apply)

    s = sub.add_parser("skew-schubert", parents=[common], help="skew Schubert polynomial S_{w/v}")
    s.add_argument("w")
    s.add_argument("v")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_skew_schubert)

    s = sub.add_parser("constants", parents=[common], help="structure constants c^w_{uv}")
    s.add_argument("u")
    s.add_argument("v")
    s.add_argument("n", type=int)
    s.add_argument("--route", choices=("product", "skew", "paths", "all"), default="product")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("bracket", parents=[common], help="bracket element [w/v]")
    s.add_argument("w")
    s.add_argument("v")
    s.add_argument("--word", help="reduced word of w")
    s.add_argument("--search", type=int, metavar="DEPTH", help="look for a nonnegative form")
    s.add_argument("--nodes", type=int, default=20000, help="expansion budget for --search")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("key", parents=[common], help="key or skew key polynomial")
    s.add_argument("alpha", help="composition, e.g. c:0,1,2")
    s.add_argument("--skew", metavar="V")
    s.add_argument("--word", help="reduced word of w(alpha) for --skew")
    s.set_defaults(func=cmd_key)

    s = sub.add_parser("schur", parents=[common], help="skew Schur polynomial or LR coefficients")
    s.add_argument("lam", help="partition, e.g. p:3,2,1")
    s.add_argument("--mu")
    s.add_argument("--n", type=int, help="number of variables (default: rows of lambda)")
    s.add_argument("--route", choices=("jt", "ssyt", "lr"), default="jt")
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--cache", help="cache directory (default: $SKEWSCHUBERT_CACHE, else none)")
    s.add_argument("--only", metavar="ID", help="rerun a single instance")
    s.add_argument("--budget", type=int, default=8, help="rewrite depth for conjecture2")
    s.add_argument("--nodes", type=int, default=20000, help="expansion budget for conjecture2")
    s.add_argument("--trials", type=int, default=100, help="random trials per identity")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        # ParseError, NotBruhatBelow and bad reduced words all land here
        print(f"skewschubert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
