#!/usr/bin/env python3
"""Sweep the cut construction over a range of dimensions and validate it.

For every 2 <= n <= --max-n and 0 <= k <= n-2: build the isolated substar,
check |T| = |F| = (k+1)!(n-k-1), the substar isomorphism, both cut verdicts,
and the unique-neighbor property.

    python scripts/validate_constructions.py --max-n 8
"""

import argparse
import sys
import time
from math import factorial

from starcut import (
    StarGraph,
    cut_size_formula,
    is_k_edge_cut,
    is_k_vertex_cut,
    substar_iso_ok,
    substar_isolating_cut,
    unique_neighbor_report,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()

    failures = 0
    for n in range(2, args.max_n + 1):
        t0 = time.time()
        g = StarGraph(n)
        for k in range(0, n - 1):
            cut = substar_isolating_cut(n, k, graph=g)
            checks = {
                "sizes": len(cut.t) == len(cut.f) == cut_size_formula(n, k)
                and len(cut.x) == factorial(k + 1),
                "substar": substar_iso_ok(g, cut.x, k),
                "vertex-cut": is_k_vertex_cut(g, cut.t, k).valid,
                "edge-cut": is_k_edge_cut(g, cut.f, k).valid,
                "unique-neighbor": unique_neighbor_report(g, cut.x).ok,
            }
            ok = all(checks.values())
            failures += 0 if ok else 1
            detail = " ".join(f"{name}={'ok' if v else 'FAIL'}"
                              for name, v in checks.items())
            print(f"{'PASS' if ok else 'FAIL'} n={n} k={k} "
                  f"|T|={len(cut.t)} {detail}")
        print(f"  n={n} done in {time.time() - t0:.1f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
