"""Compare the numba kernels with their pure-numpy counterparts.

Part 1 times each kernel pair in-process on identical inputs and checks
that both return the same answer.  Part 2 runs one end-to-end workload in
two subprocesses, one with NTFKIT_DISABLE_NUMBA=1, to show what the switch
costs a user.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from ntfkit import kernels
from ntfkit.graphs import cover_ideal, cycle_graph
from ntfkit.ideal import power


def best_of(fn, repeat):
    fn()  # warm-up (triggers JIT compilation for the numba variant)
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def degree_sorted(a):
    return a[np.argsort(a.sum(axis=1), kind="stable")]


def workloads():
    J7 = cover_ideal(cycle_graph(7))
    J5 = cover_ideal(cycle_graph(5))
    # unminimised product rows: the input minimal_rows sees when computing J^3
    J7sq = power(J7, 2).array
    raw = degree_sorted(kernels.pairwise_sum(J7sq, J7.array))
    rng = np.random.default_rng(0)
    noise = degree_sorted(rng.integers(0, 4, size=(3000, 8)).astype(np.int64))
    J5cube = power(J5, 3).array
    big = power(J7, 2).array
    probe = np.array([1, 2, 1, 2, 1, 2, 1], dtype=np.int64)
    return [
        ("minimal_mask  J(C7)^2 * J(C7) rows",
         lambda: kernels._minimal_mask_nb(raw), lambda: kernels._minimal_mask_np(raw)),
        ("minimal_mask  3000 random rows",
         lambda: kernels._minimal_mask_nb(noise), lambda: kernels._minimal_mask_np(noise)),
        ("colon_prime_scan  J(C5)^3 box",
         lambda: kernels._colon_prime_scan_nb(J5cube, J5cube.max(axis=0)),
         lambda: kernels._colon_prime_scan_np(J5cube, J5cube.max(axis=0))),
        ("any_divides  J(C7)^2",
         lambda: kernels._any_divides_nb(big, probe), lambda: kernels._any_divides_np(big, probe)),
    ]


def same(x, y):
    if isinstance(x, tuple):
        return all(np.array_equal(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


E2E = (
    "from ntfkit.graphs import cover_ideal, cycle_graph\n"
    "from ntfkit.decomposition import ass_witness_oracle\n"
    "from ntfkit.ideal import power\n"
    "from ntfkit.ntf import is_ntf_up_to\n"
    "import time\n"
    "J = cover_ideal(cycle_graph(7)); P = power(J, 3)\n"
    "ass_witness_oracle(power(J, 2))\n"
    "t = time.perf_counter(); ass_witness_oracle(P); is_ntf_up_to(J, 4)\n"
    "print(time.perf_counter() - t)\n"
)


def end_to_end():
    out = {}
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, NTFKIT_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True,
                             text=True, check=True)
        out[label] = float(res.stdout.strip().splitlines()[-1])
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args(argv)
    if not kernels.USE_NUMBA:
        sys.exit("numba is disabled in this process; unset NTFKIT_DISABLE_NUMBA to compare")

    print(f"{'kernel':40s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}  agree")
    for name, nb, npf in workloads():
        agree = same(nb(), npf())
        t_nb = best_of(nb, args.repeat)
        t_np = best_of(npf, args.repeat)
        print(f"{name:40s} {t_nb * 1e3:10.3f} {t_np * 1e3:10.3f} {t_np / t_nb:8.1f}  {agree}")
    if not args.skip_e2e:
        e2e = end_to_end()
        print(f"\nend to end (oracle on J(C7)^3 plus NTF of J(C7) up to 4), seconds: "
              f"numba {e2e['numba']:.3f}, numpy {e2e['numpy']:.3f}")


if __name__ == "__main__":
    main()
