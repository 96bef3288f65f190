"""Command line interface.

Subcommands: validate, invariant, family, verify, render.
Exit codes: 0 all pass, 1 any fail, 2 any inconclusive without a fail.
"""

from __future__ import annotations

import argparse
import sys

from .diagram import from_text, orient_all, validate
from .harness import SUITES, Budgets, generate_family, render_svg, run_suite
from .invariants.alexander import alexander_fox, alexander_seifert
from .invariants.bracket import jones
from .moves import simplify
from .presentations import bundled_presentations, get_presentation, underlying_knot


def _load_diagram(args):
    if args.input:
        with open(args.input) as fh:
            return from_text(fh.read())
    if args.preset:
        return underlying_knot(get_presentation(args.preset))
    raise SystemExit("need --input FILE or --preset NAME")


def _parse_range(spec: str) -> tuple[int, ...]:
    if not spec:
        return ()
    if ":" in spec:
        lo, hi = spec.split(":")
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(x) for x in spec.split(","))


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="annulet")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input")
        p.add_argument("--preset")
        p.add_argument("--effort", type=int, default=60)
        p.add_argument("--width-budget", type=int, default=28)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("json", "md"), default="md")
        p.add_argument("--out")

    p = sub.add_parser("validate", help="check a diagram's invariants")
    common(p)

    p = sub.add_parser("invariant", help="jones and alexander of a diagram")
    common(p)

    p = sub.add_parser("family", help="twist families of a preset")
    common(p)
    p.add_argument("--n-range", default="")
    p.add_argument("--m-range", default="")

    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")

    p = sub.add_parser("render", help="draw a diagram as SVG")
    common(p)

    args = ap.parse_args(argv)
    out_lines: list[str] = []
    exit_code = 0

    if args.command == "validate":
        d = _load_diagram(args)
        report = validate(d)
        if report.ok:
            out_lines.append("ok")
        else:
            out_lines.extend(report.violations)
            exit_code = 1

    elif args.command == "invariant":
        d = orient_all(_load_diagram(args))
        s = simplify(d, effort=args.effort, seed=args.seed)
        out_lines.append(f"crossings: {d.crossing_count()} -> {s.crossing_count()}")
        out_lines.append(f"jones: {jones(s, width_budget=args.width_budget).format('t', 2)}")
        af = alexander_fox(s)
        out_lines.append(f"alexander (fox): {af.format()}")
        out_lines.append(f"alexander (seifert): {alexander_seifert(s).format()}")

    elif args.command == "family":
        budgets = Budgets(args.effort, args.width_budget, args.seed)
        rows = generate_family(
            args.preset or "nine42",
            _parse_range(args.n_range),
            _parse_range(args.m_range),
            budgets,
        )
        for row in rows:
            d = row["diagram"]
            out_lines.append(
                f"{row['path']}: {row['crossings_raw']} -> {row['crossings']} crossings, "
                f"jones {jones(d, width_budget=args.width_budget).format('t', 2)}"
            )

    elif args.command == "verify":
        budgets = Budgets(args.effort, args.width_budget, args.seed)
        suites = SUITES if args.suite == "all" else (args.suite,)
        presets = (args.preset,) if args.preset else ("nine42",)
        any_fail = any_inconclusive = False
        for preset in presets:
            for suite in suites:
                rep = run_suite(suite, preset, budgets)
                if args.format == "json":
                    out_lines.append(rep.to_json())
                else:
                    out_lines.append(rep.to_markdown())
                any_fail |= rep.verdict == "fail"
                any_inconclusive |= rep.verdict == "inconclusive"
        exit_code = 1 if any_fail else (2 if any_inconclusive else 0)

    elif args.command == "render":
        d = _load_diagram(args)
        out_lines.append(render_svg(d, seed=args.seed))

    text = "\n".join(out_lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + ("\n" if not text.endswith("\n") else ""))
    else:
        sys.stdout.write(text + ("\n" if text and not text.endswith("\n") else ""))
    return exit_code


if __name__ == "__main__":
    raise SystemExit(main())
