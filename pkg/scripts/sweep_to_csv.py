"""Run every method over a parameter sweep and write one CSV row per (tuple, method).

    python scripts/sweep_to_csv.py --max-n 14 --max-m 6 --out sweep.csv
"""

import argparse
import sys

from iscwiener.report import compute_report, reports_to_csv, sweep_params


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--max-m", type=int, default=6)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    reports = [compute_report(p) for p in sweep_params(args.max_n, args.max_m)]
    text = reports_to_csv(reports)
    disagree = [r.params for r in reports if not r.agree]
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(f"{len(reports)} tuples, {len(disagree)} disagreements", file=sys.stderr)
    return 1 if disagree else 0


if __name__ == "__main__":
    sys.exit(main())
