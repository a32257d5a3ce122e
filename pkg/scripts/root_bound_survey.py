"""Distinct real roots of random two-to-five-term expressions, by t.

Reports the maximum root count seen for each t next to 6t-4 and 6(t+1)-4,
and prints the first instance that exceeds 6t-4.
"""

import argparse
import json
import random

from lacunary_pit.generators import random_expression, random_pair
from lacunary_pit.oracle import expand_to_sparse, real_root_count


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--exp-max", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    worst, example = {}, None
    done = 0
    while done < args.n:
        a, b = random_pair(rng)
        if not b:
            continue
        e = random_expression(rng, t_max=4, exp_max=args.exp_max, coef_bound=20,
                              pair=(a, b), t_min=1)
        poly = expand_to_sparse(e)
        if poly.is_zero():
            continue
        done += 1
        r = real_root_count(poly)
        worst[e.t] = max(worst.get(e.t, 0), r)
        if example is None and r > 6 * e.t - 4:
            example = {"roots": r, "expression": e.to_document()}
    for t in sorted(worst):
        print(json.dumps({"t": t, "max_roots": worst[t], "6t-4": 6 * t - 4,
                          "6(t+1)-4": 6 * (t + 1) - 4}))
    if example:
        print(json.dumps({"first_violation_of_6t-4": example}))


if __name__ == "__main__":
    main()
