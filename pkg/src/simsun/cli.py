"""Command-line front end.

Subcommands: triangle, enumerate, verify, bijection, roots, series.
Everything is deterministic; output formats are text, csv and json.
Exit codes: 0 success, 1 identity violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bijections, classes, perms, series, triangles, verify
from .poly import Poly

ENUM_CLASSES = {
    # cli name -> (internal class, listing bound)
    "simsun1": ("RS", 10),
    "simsun2": ("SS", 10),
    "snakes": ("SNAKE", 8),
    "alternating": ("ALT", 10),
    "cud": ("CUD", 9),
}

ROOT_SUITES = (
    "roots-nonpositive",
    "roots-successive",
    "roots-interlacing",
    "roots-positive-q",
)


class UsageError(Exception):
    pass


def _emit_json(command: str, params: dict, results: list) -> None:
    print(json.dumps({"command": command, "params": params, "results": results}))


def _poly_json(p: Poly):
    """Coefficient array (decimal strings, increasing degree) when the
    polynomial is univariate in x; canonical text otherwise."""
    if not p.variables() - {"x"}:
        return [str(c) for c in p.x_coeffs()]
    return p.text()


def parse_perm(text: str):
    """Parse --perm input: a word as digits (n <= 9) or comma-separated
    values, or a cycle form like (1,4,3)(2).  Returns a Word or Cycles."""
    text = text.strip()
    if text.startswith("("):
        cycles = []
        for part in text.replace(")(", ")|(").split("|"):
            if not (part.startswith("(") and part.endswith(")")):
                raise UsageError(f"bad cycle syntax: {text!r}")
            body = part[1:-1]
            try:
                cycles.append(tuple(int(v) for v in body.split(",") if v != ""))
            except ValueError:
                raise UsageError(f"bad cycle syntax: {text!r}") from None
        try:
            return perms.standardize(tuple(cycles))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        if "," in text:
            word = tuple(int(v) for v in text.split(","))
        else:
            word = tuple(int(ch) for ch in text)
    except ValueError:
        raise UsageError(f"bad permutation: {text!r}") from None
    try:
        return perms.check_word(word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- subcommands -----------------------------------------------------------------


def cmd_triangle(args) -> int:
    if args.family not in triangles.FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    polys = triangles.family_polys(args.family, args.n)
    if args.format == "csv":
        for p in polys:
            if p.variables() - {"x"}:
                raise UsageError(f"family {args.family} is not univariate; csv unavailable")
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["family", "n", "k", "value"])
        for n, p in enumerate(polys):
            for k, c in enumerate(p.x_coeffs()):
                writer.writerow([args.family, n, k, c])
        sys.stdout.write(out.getvalue())
    elif args.format == "json":
        _emit_json(
            "triangle",
            {"family": args.family, "n": args.n},
            [{"n": n, "poly": _poly_json(p)} for n, p in enumerate(polys)],
        )
    else:
        for n, p in enumerate(polys):
            print(f"{args.family}_{n} = {p.text()}")
    return 0


def cmd_enumerate(args) -> int:
    if args.cls not in ENUM_CLASSES:
        raise UsageError(f"unknown class {args.cls!r}")
    internal, bound = ENUM_CLASSES[args.cls]
    if not 0 <= args.n <= bound:
        raise UsageError(f"n={args.n} out of range for {args.cls} (max {bound})")
    rows = []
    if args.cls == "simsun2":
        for c in sorted(classes.gen_simsun_second(args.n)):
            rec = perms.cycle_stats(perms.from_cycles(c))
            rows.append(
                {
                    "perm": "".join(f"({','.join(map(str, cyc))})" for cyc in c),
                    "exc": rec.exc,
                    "fix": rec.fix,
                    "cyc": rec.cyc,
                }
            )
    elif args.cls == "snakes":
        for w in perms.snakes(args.n):
            rows.append({"perm": ",".join(map(str, w))})
    elif args.cls == "cud":
        for w in classes.class_members("CUD", args.n):
            c = perms.to_cycles(w)
            rows.append(
                {
                    "perm": "".join(f"({','.join(map(str, cyc))})" for cyc in c),
                    "cyc": len(c),
                }
            )
    else:
        members = sorted(classes.class_members(internal, args.n))
        for w in members:
            rec = perms.word_stats(w)
            rows.append(
                {
                    "perm": ",".join(map(str, w)),
                    "des": rec.des,
                    "lpk": rec.lpk,
                    "pk": rec.pk,
                    "uprun": rec.uprun,
                }
            )
    if args.format == "json":
        _emit_json(
            "enumerate", {"class": args.cls, "n": args.n}, rows + [{"count": len(rows)}]
        )
    elif args.format == "csv":
        out = io.StringIO()
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
        sys.stdout.write(out.getvalue())
        print(f"count,{len(rows)}")
    else:
        for row in rows:
            print("  ".join(f"{k}={v}" for k, v in row.items()))
        print(f"count {len(rows)}")
    return 0


def cmd_verify(args) -> int:
    if args.identity == "all":
        reports = verify.run_all(args.n_max)
    else:
        if args.identity not in verify.REGISTRY:
            raise UsageError(f"unknown identity {args.identity!r}")
        reports = [verify.run(args.identity, args.n_max)]
    results = [
        {"identity": r.identity, "bound": r.bound, "ok": r.ok, "detail": r.detail}
        for r in reports
    ]
    if args.format == "json":
        _emit_json(
            "verify", {"identity": args.identity, "n_max": args.n_max}, results
        )
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=["identity", "bound", "ok", "detail"])
        writer.writeheader()
        writer.writerows(results)
        sys.stdout.write(out.getvalue())
    else:
        for r in reports:
            verdict = "pass" if r.ok else f"FAIL ({r.detail})"
            print(f"{r.identity}: bound {r.bound}: {verdict}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_bijection(args) -> int:
    if args.perm is None and args.n is None:
        raise UsageError("bijection needs --perm or --n")
    if args.n is not None:
        limit = 8 if args.map == "phi" else 9
        if not 1 <= args.n <= limit:
            raise UsageError(f"n={args.n} out of range for {args.map} (max {limit})")
        report = (
            bijections.verify_phi(args.n)
            if args.map == "phi"
            else bijections.verify_psi(args.n)
        )
        if args.format == "json":
            _emit_json(
                "bijection",
                {"map": args.map, "n": args.n},
                [{"ok": report.ok, "detail": report.detail, "counts": report.counts}],
            )
        else:
            verdict = "pass" if report.ok else f"FAIL ({report.detail})"
            print(f"{args.map} exhaustive check at n={args.n}: {verdict}")
        return 0 if report.ok else 1

    obj = parse_perm(args.perm)
    if args.map == "phi":
        if isinstance(obj[0] if obj else 0, tuple):
            raise UsageError("the block correspondence takes a word, not cycles")
        try:
            block = bijections.phi_forward(obj)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        source = classes.format_labeled_word(obj)
        images = ["".join(map(str, w)) if len(w) <= 9 else ",".join(map(str, w))
                  for w in block]
        if args.format == "json":
            _emit_json("bijection", {"map": "phi", "perm": args.perm},
                       [{"source": source, "images": images}])
        else:
            print(f"source: {source}")
            for img in images:
                print(f"image:  {img}")
    else:
        if obj and isinstance(obj[0], tuple):
            try:
                word = bijections.psi_inverse(obj)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            source = classes.format_labeled_cycles(obj)
            image = classes.format_labeled_word(word)
        else:
            try:
                cycles = bijections.psi_forward(obj)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            source = classes.format_labeled_word(obj)
            image = classes.format_labeled_cycles(cycles)
        if args.format == "json":
            _emit_json("bijection", {"map": "psi", "perm": args.perm},
                       [{"source": source, "image": image}])
        else:
            print(f"source: {source}")
            print(f"image:  {image}")
    return 0


def cmd_roots(args) -> int:
    if args.suite == "all":
        suites = ROOT_SUITES
    elif args.suite in ROOT_SUITES:
        suites = (args.suite,)
    else:
        raise UsageError(f"unknown suite {args.suite!r}")
    reports = [verify.run(s, args.n_max) for s in suites]
    if args.format == "json":
        _emit_json(
            "roots",
            {"suite": args.suite, "n_max": args.n_max},
            [
                {"suite": r.identity, "bound": r.bound, "ok": r.ok, "detail": r.detail}
                for r in reports
            ],
        )
    else:
        for r in reports:
            verdict = "pass" if r.ok else f"FAIL ({r.detail})"
            print(f"{r.identity}: bound {r.bound}: {verdict}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_series(args) -> int:
    if args.name not in series.BUILDERS:
        raise UsageError(f"unknown series {args.name!r}")
    if not 0 <= args.order <= 24:
        raise UsageError(f"order={args.order} out of range (max 24)")
    f = series.build(args.name, args.order)
    rows = [(n, f.egf_coeff(n)) for n in range(args.order + 1)]
    if args.format == "json":
        _emit_json(
            "series",
            {"name": args.name, "order": args.order},
            [{"n": n, "poly": _poly_json(p)} for n, p in rows],
        )
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["n", "value"])
        for n, p in rows:
            writer.writerow([n, p.text()])
        sys.stdout.write(out.getvalue())
    else:
        for n, p in rows:
            print(f"{n}: {p.text()}")
    return 0


# -- argument parsing --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simsun",
        description="Exact enumeration and verification for simsun permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("triangle", help="print rows of a polynomial family")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("enumerate", help="list the members of a class with statistics")
    p.add_argument("cls", metavar="class")
    p.add_argument("--n", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run identity checks (an id or 'all')")
    p.add_argument("identity")
    p.add_argument("--n-max", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="apply or exhaustively check a bijection")
    p.add_argument("map", choices=("phi", "psi"))
    p.add_argument("--perm", default=None)
    p.add_argument("--n", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("roots", help="run root-location suites")
    p.add_argument("suite")
    p.add_argument("--n-max", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("series", help="print EGF coefficient tables")
    p.add_argument("name")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    add_format(p)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 0:
        print("error: n must be nonnegative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
