#!/usr/bin/env python3
"""Compare the numba kernels with the pure-numpy fallback.

Each backend runs in its own interpreter because the choice is made at
import time from QRAMP_DISABLE_NUMBA.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import numpy as np
from qramp import _accel, linalg
from qramp.access import AccessStructure
from qramp.optimizer import build_ip, solve_ip, solution_to_assignment
from qramp.codes import build_scheme
from qramp.verify import derive_quantum_access

REPEAT = {repeat}
rng = np.random.default_rng(0)
mats = [rng.integers(0, 31, size=(24, 40)) for _ in range(200)]
structures = [
    AccessStructure(4, [[1, 2], [1, 3], [1, 4], [2, 3, 4]]),
    AccessStructure(5, [[1, 2], [1, 3], [2, 3]]),
    AccessStructure(5, [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 4, 5], [3, 4, 5]]),
]

def rref_batch():
    for M in mats:
        linalg.rank(M, 31)

def solve_batch():
    for A in structures:
        solve_ip(build_ip(A, 2))

def verify_batch():
    for A in structures:
        sol = solve_ip(build_ip(A, 2))
        scheme = build_scheme(solution_to_assignment(sol, A.n), sol, 2)
        derive_quantum_access(scheme)

out = {{"backend": _accel.backend()}}
for name, fn in [("rref 200x(24x40) GF(31)", rref_batch), ("solve_ip 3 structures L=2", solve_batch), ("verify 3 schemes L=2", verify_batch)]:
    fn()  # warm-up (includes JIT compilation)
    best = float("inf")
    for _ in range(REPEAT):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    out[name] = best
print(json.dumps(out))
"""


def run_backend(disable, repeat):
    env = dict(os.environ, QRAMP_DISABLE_NUMBA="1" if disable else "0")
    res = subprocess.run(
        [sys.executable, "-c", WORKLOAD.format(repeat=repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    fast = run_backend(False, args.repeat)
    slow = run_backend(True, args.repeat)
    print(f"{'workload':32s} {fast['backend']:>10s} {slow['backend']:>10s} {'speedup':>8s}")
    for key in fast:
        if key == "backend":
            continue
        a, b = fast[key], slow[key]
        print(f"{key:32s} {a * 1e3:8.2f}ms {b * 1e3:8.2f}ms {b / a:7.1f}x")


if __name__ == "__main__":
    main()
