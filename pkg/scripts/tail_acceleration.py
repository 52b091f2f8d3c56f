#!/usr/bin/env python3
"""What the closing tail estimate buys over a plain truncation.

Cutting the flattened sec-tan stream at depth 4m+5 is algebraically the same
as unrolling the nested recursion through level m and closing it with the
constant 4m+5.  The nested evaluator instead closes with 4m+5 - x/2, a
first-order estimate of the dropped tail.  This script measures how much
accuracy that single correction term is worth at each level.

Usage:
    python scripts/tail_acceleration.py [--x 1.0] [--levels 8]
"""

import argparse
import math

from cfrac import eval_backward, halved_value, sec_tan_spec


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--x", type=float, default=1.0)
    parser.add_argument("--levels", type=int, default=8)
    args = parser.parse_args()

    x = args.x
    reference = (1 + math.sin(x)) / math.cos(x)
    flat = sec_tan_spec()

    print(f"sec({x}) + tan({x}) = {reference!r}")
    print(f"{'level':>5}  {'flat depth':>10}  {'plain cut err':>14}  {'tail est err':>14}  {'gain':>8}")
    for m in range(args.levels + 1):
        depth = 4 * m + 5
        plain = abs(eval_backward(flat, x, depth) - reference)
        with_tail = abs(1 + x / halved_value(0, x, m) - reference)
        gain = plain / with_tail if with_tail else float("inf")
        print(f"{m:>5}  {depth:>10}  {plain:>14.3e}  {with_tail:>14.3e}  {gain:>8.1f}")


if __name__ == "__main__":
    main()
