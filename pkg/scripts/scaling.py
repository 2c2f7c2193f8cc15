"""Timing of the four methods as the configuration grows.

Scales ISC(p, q, m, n) = ISC(s, 2s, s, 4s) by s and reports wall time per method.
BFS is quadratic in |V| and is skipped past --bfs-limit vertices.

    python scripts/scaling.py --steps 2 4 8 16 32 64
"""

import argparse
import time

from iscwiener.lattice import vertex_count
from iscwiener.params import validate_params
from iscwiener.report import wiener_by_method


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, nargs="+", default=[2, 4, 8, 16, 32])
    ap.add_argument("--bfs-limit", type=int, default=6000)
    args = ap.parse_args()

    print("p,q,m,n,N,method,W,seconds")
    for s in args.steps:
        params = validate_params(s, 2 * s, s, 4 * s)
        N = vertex_count(params)
        for method in ("bfs", "cuts", "tables", "closed"):
            if method == "bfs" and N > args.bfs_limit:
                continue
            start = time.perf_counter()
            w = wiener_by_method(method, params, None)
            dt = time.perf_counter() - start
            print(f"{s},{2 * s},{s},{4 * s},{N},{method},{w},{dt:.6f}")


if __name__ == "__main__":
    main()
