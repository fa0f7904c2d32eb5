"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--nmax 14] [--repeat 3]

Each kernel is timed over every partition up to ``nmax`` at a few slopes; the
last block times a whole equidistribution campaign under each backend in a
fresh interpreter (the backend is fixed at import).
"""
import argparse
import os
import subprocess
import sys
import timeit

from corespan import _kernels_py
from corespan.multigraph import canonical_k
from corespan.partition import partitions_up_to

try:
    from corespan import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

CONFIGS = [(1, 1, 1), (3, 2, 2), (2, 1, 3), (1, 3, 4)]

CAMPAIGN = ("from corespan.verify import verify_equidistribution as v; "
            "r = v({nmax}, (1, 2, 3, 4)); assert r.ok; print(f'{{r.wall_time:.3f}}')")


def workload(nmax):
    out = []
    for r, s, c in CONFIGS:
        for lam in partitions_up_to(nmax):
            out.append((tuple(lam), r, s, c, canonical_k(lam, r, s, c)))
    return out


def time_kernel(impl, name, jobs, repeat):
    fn = getattr(impl, name)
    if name == "cell_counts":
        call = lambda: [fn(p, r, s, c) for p, r, s, c, _ in jobs]
    else:
        call = lambda: [fn(p, r, s, c, k) for p, r, s, c, k in jobs]
    return min(timeit.repeat(call, number=1, repeat=repeat))


def time_campaign(nmax, pure):
    env = dict(os.environ)
    env.pop("CORESPAN_PURE_PYTHON", None)
    if pure:
        env["CORESPAN_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", CAMPAIGN.format(nmax=nmax)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=14)
    parser.add_argument("--campaign-nmax", type=int, default=16)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    if _compiled is None:
        print("compiled kernels are not built; only the fallback can be timed")
    jobs = workload(args.nmax)
    print(f"{len(jobs)} kernel calls per pass (partitions up to {args.nmax}, {len(CONFIGS)} slopes)")
    print(f"{'kernel':<16}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name in ("cell_counts", "involute_parts", "arrival_counts"):
        py = time_kernel(_kernels_py, name, jobs, args.repeat)
        if _compiled is None:
            print(f"{name:<16}{py:>10.3f}{'-':>10}{'-':>9}")
            continue
        cy = time_kernel(_compiled, name, jobs, args.repeat)
        print(f"{name:<16}{py:>10.3f}{cy:>10.3f}{py / cy:>8.1f}x")

    n = args.campaign_nmax
    py = time_campaign(n, pure=True)
    line = f"{'equidistribution':<16}{py:>10.3f}"
    if _compiled is not None:
        cy = time_campaign(n, pure=False)
        line += f"{cy:>10.3f}{py / cy:>8.1f}x"
    print(line + f"   (n <= {n}, c = 1..4)")


if __name__ == "__main__":
    main()
