#!/usr/bin/env python3
"""Produce the full verification report in both formats.

Writes report.json and report.md into --out-dir (default: the current
directory) and prints the summary line.
"""

import argparse
from pathlib import Path

from trisect.checks import run_verify
from trisect.report import render_json, render_markdown
from trisect.torsion import DEFAULT_LEVEL


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--torsion-level", type=int, default=DEFAULT_LEVEL,
                        help="working torsion level, a multiple of 6")
    parser.add_argument("--out-dir", type=Path, default=Path("."),
                        help="directory for report.json and report.md")
    args = parser.parse_args()

    report = run_verify(("all",), args.torsion_level)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "report.json").write_text(render_json(report),
                                              encoding="utf-8")
    (args.out_dir / "report.md").write_text(render_markdown(report),
                                            encoding="utf-8")
    summary = report.summary
    print(f"torsion level {report.torsion_level}: {summary['pass']} passed,"
          f" {summary['fail']} failed, {summary['skip']} skipped"
          f" -> {args.out_dir / 'report.json'}")
    raise SystemExit(1 if report.failed else 0)


if __name__ == "__main__":
    main()
