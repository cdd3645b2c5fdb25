"""Replay the bundled transcripts end to end: run, evaluate and analyze, then print a summary.

    python3 scripts/replay_fixtures.py --output replay-out
    python3 scripts/replay_fixtures.py --supplementary --per-domain-protocol restrict-all
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from pathlib import Path

from zsdst import resources
from zsdst.cli import main as zsdst


def quietly(argv: list[str]) -> int:
    with contextlib.redirect_stdout(io.StringIO()):
        return zsdst(argv)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--output", default="replay-out")
    parser.add_argument("--supplementary", action="store_true",
                        help="include the supplementary error excerpts alongside the 9 bundled dialogues")
    parser.add_argument("--per-domain-protocol", choices=("restrict-filter", "restrict-all"),
                        default="restrict-filter")
    args = parser.parse_args(argv)

    config = resources.SUPPLEMENTARY_CONFIG if args.supplementary else resources.DEFAULT_CONFIG
    common = ["--config", str(config), "--output", args.output]
    for step in (["run"], ["evaluate", "--per-domain-protocol", args.per_domain_protocol], ["analyze"]):
        code = quietly(step + common)
        if code:
            print(f"{step[0]} failed with exit code {code}", file=sys.stderr)
            return code

    out = Path(args.output)
    print((out / "comparison.md").read_text(encoding="utf-8"))
    report = json.loads((out / "report.json").read_text(encoding="utf-8"))
    print("error categories (count / denominator):")
    for name, cat in report["categories"].items():
        rate = "undefined" if cat["rate"] is None else f"{100 * cat['rate']:.1f}%"
        print(f"  {name:28s} {cat['count']:4d} / {cat['denominator']:<4d} {rate}")
    print(f"\nfull outputs in {out.resolve()}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
