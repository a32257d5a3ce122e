"""Smallest height of a + b*theta over small rationals, per root-of-unity order.

Writes one JSON line per order, then an overall line.
"""

import argparse
import json
import time

from lacunary_pit.cli import prop1_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", default="5,7,11,13,17")
    ap.add_argument("--max-num", type=int, default=10)
    args = ap.parse_args()
    orders = [int(x) for x in args.orders.split(",")]
    for n in orders:
        start = time.perf_counter()
        row = prop1_sweep([n], args.max_num)
        row["seconds"] = round(time.perf_counter() - start, 2)
        print(json.dumps(row))
    overall = prop1_sweep(orders, args.max_num)
    overall["constant"] = 5 ** (1 / 12)
    print(json.dumps(overall))


if __name__ == "__main__":
    main()
