#!/usr/bin/env python3
"""Time the compiled and pure kernel lanes on identical root-count workloads.

Three workloads mirror the verification scans: brute-force residue tables,
prime-power formula tables, and combined tables for composite moduli. Run
after building the extension (pip install -e . --no-build-isolation):

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --limit 30000 --mmax 1500
"""

from __future__ import annotations

import argparse
import time

from romanoff import arith, quadroots
from romanoff._native import load_backend


def _workloads(limit: int, m_max: int):
    prime_powers = quadroots.prime_power_pairs(limit)
    composites = [
        (m, arith.factorize(m).factors) for m in range(2, m_max + 1) if len(arith.factorize(m).factors) > 1
    ]
    return {
        "bruteforce_tables": lambda lane: [
            lane.bruteforce_root_counts(p**e) for p, e in prime_powers
        ],
        "prime_power_tables": lambda lane: [
            lane.prime_power_root_counts(p, e) for p, e in prime_powers
        ],
        "combined_tables": lambda lane: [
            lane.combined_root_counts(m, f) for m, f in composites
        ],
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=20000, help="prime powers up to this bound")
    parser.add_argument("--mmax", type=int, default=1200, help="composite moduli up to this bound")
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = parser.parse_args()

    lanes = {}
    lanes["pure"] = load_backend("pure")
    try:
        lanes["cython"] = load_backend("cython")
    except ImportError:
        print("compiled lane not built; timing the pure lane only")

    workloads = _workloads(args.limit, args.mmax)
    print(f"workload: prime powers <= {args.limit}, composites <= {args.mmax}, best of {args.repeat}")
    print(f"{'kernel':<22}{'backend':<10}{'seconds':>10}{'speedup':>10}")
    for name, run in workloads.items():
        base = None
        for lane_name, lane in lanes.items():
            best = min(_time_one(run, lane) for _ in range(args.repeat))
            if lane_name == "pure":
                base = best
            speedup = f"{base / best:8.1f}x" if base and lane_name != "pure" else ""
            print(f"{name:<22}{lane_name:<10}{best:>10.3f}{speedup:>10}")
    return 0


def _time_one(run, lane) -> float:
    t0 = time.perf_counter()
    run(lane)
    return time.perf_counter() - t0


if __name__ == "__main__":
    raise SystemExit(main())
