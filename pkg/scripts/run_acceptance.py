"""Run the eight acceptance criteria and print one PASS/FAIL line each.

    python3 scripts/run_acceptance.py            # all
    python3 scripts/run_acceptance.py 5 8        # a subset
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

import test_acceptance as acc  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("criteria", nargs="*", type=int, default=list(range(1, 9)))
    args = ap.parse_args()
    for n in args.criteria:
        acc.CRITERIA[n - 1]()
    print("\n".join(acc.format_results()))
    return 0 if all(p for _, p, _ in acc.RESULTS.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
