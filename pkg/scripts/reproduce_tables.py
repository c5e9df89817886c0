"""Print the splitting tables for WW-bar and Star, plus GHZ and W for contrast.

    python scripts/reproduce_tables.py [--format table|csv|json]
"""

import argparse

from splitlink import __version__, build_profile, classify, construct_canonical
from splitlink.classify import consistency_check
from splitlink.io import ReportDocument, render_report
from splitlink.links import standard_models


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", default="table", choices=("table", "csv", "json"))
    parser.add_argument("states", nargs="*", default=["wwbar", "star", "ghz", "w"])
    args = parser.parse_args()

    for name in args.states:
        profile = build_profile(construct_canonical(name), name)
        result = classify(profile)
        print(render_report(ReportDocument(name, profile, result, __version__), args.format))
        if args.format != "table":
            continue
        for semantics in ("possibilistic", "necessitarian"):
            ok = [m.title for m in standard_models() if consistency_check(profile, m, None, semantics).consistent]
            print(f"  {semantics:>13}: {', '.join(ok) or 'no standard model'}")
        print()


if __name__ == "__main__":
    main()
