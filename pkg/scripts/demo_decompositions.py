"""Run the calculator over the sample descriptors and tabulate results.

Usage:
    python3 scripts/demo_decompositions.py            # summary table
    python3 scripts/demo_decompositions.py --full     # full report per file
"""

import argparse
from pathlib import Path

from susp5.cli import build_report, parse_descriptor_text, render_human

HERE = Path(__file__).resolve().parent


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--dir", type=Path, default=HERE / "descriptors",
        help="directory of descriptor files (default: scripts/descriptors)",
    )
    parser.add_argument(
        "--full", action="store_true",
        help="print the complete report for every descriptor",
    )
    args = parser.parse_args(argv)

    paths = sorted(args.dir.glob("*.txt"))
    if not paths:
        parser.error(f"no descriptor files in {args.dir}")

    reports = []
    for path in paths:
        desc = parse_descriptor_text(path.read_text(), source=str(path))
        reports.append((path.name, build_report(desc, mode="single")))

    if args.full:
        for name, report in reports:
            print(f"== {name} ==")
            print(render_human(report))
        return 0

    name_w = max(len(name) for name, _ in reports)
    case_w = max(len(r["case"]["tag"]) for _, r in reports)
    pi3_w = max(len(r["invariants"]["pi3"]) for _, r in reports)
    print(f"{'file':<{name_w}}  {'case':<{case_w}}  {'pi^3':<{pi3_w}}  suspension")
    for name, report in reports:
        print(
            f"{name:<{name_w}}  {report['case']['tag']:<{case_w}}  "
            f"{report['invariants']['pi3']:<{pi3_w}}  {report['single_suspension']}"
        )
    verdicts = {
        verdict
        for _, report in reports
        for verdict in report["checks"].values()
    }
    bad = {v for v in verdicts if v.startswith("fail")}
    print()
    print(f"checks: {'all ok' if not bad else ', '.join(sorted(bad))}")
    return 0 if not bad else 1


if __name__ == "__main__":
    raise SystemExit(main())
