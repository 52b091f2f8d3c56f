#!/usr/bin/env python3
"""Worst-case truncation error versus depth for both term streams.

For each depth the script reports the largest absolute error over a grid of
evaluation points, using the adaptive evaluator at a tighter tolerance as
the reference.  The error should shrink geometrically until it hits the
floating-point floor.

Usage:
    python scripts/convergence_study.py [--max-depth 48] [--points 29]
"""

import argparse
import math

from cfrac import eval_adaptive, eval_backward, sec_tan_spec, xcot_spec


def worst_errors(spec, grid, depths):
    references = {x: eval_adaptive(spec, x, 1e-14).value for x in grid}
    rows = []
    for depth in depths:
        worst = max(abs(eval_backward(spec, x, depth) - references[x]) for x in grid)
        rows.append((depth, worst))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-depth", type=int, default=48)
    parser.add_argument("--points", type=int, default=29, help="grid size per stream")
    args = parser.parse_args()

    half = (args.points - 1) // 2
    sec_tan_grid = [1.4 * i / half for i in range(-half, half + 1)]
    xcot_grid = [3.0 * (i + 1) / args.points for i in range(args.points)]
    xcot_grid = [x for x in xcot_grid if abs(x - math.pi) >= 0.05]

    depths = []
    depth = 1
    while depth <= args.max_depth:
        depths.append(depth)
        depth *= 2

    for name, spec, grid in (
        ("sec(x)+tan(x)", sec_tan_spec(), sec_tan_grid),
        ("x*cot(x)", xcot_spec(), xcot_grid),
    ):
        print(f"\n{name}  ({len(grid)} points, |x| <= {max(abs(x) for x in grid):.2f})")
        print(f"{'depth':>6}  {'worst abs err':>14}")
        for depth, worst in worst_errors(spec, grid, depths):
            print(f"{depth:>6}  {worst:>14.3e}")


if __name__ == "__main__":
    main()
