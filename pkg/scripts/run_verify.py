"""Run the oracle-equivalence suites and print a one-line summary per suite.

    python3 scripts/run_verify.py [scope] [max_n] [--json out.json]
"""

import argparse
import json
import sys

from cographs.io import dumps
from cographs.verify import SUITES, verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("scope", nargs="?", default="all", choices=["all", *SUITES])
    ap.add_argument("max_n", nargs="?", type=int, default=7)
    ap.add_argument("--json", help="also write the full report (with counterexamples) here")
    args = ap.parse_args()

    report = verify(args.scope, args.max_n)
    for s in report["suites"]:
        tag = "ref " if s["reference"] else "    "
        print(f"{tag}{s['suite']:<24} n<={s['max_n']:<3} {s['instances']:>7} instances  {s['disagreements']:>5} disagreements")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps(report))
    print("passed" if report["passed"] else f"FAILED ({report['disagreements']} disagreements)")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
