"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--rows 2000] [--features 13] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from cfaudit import _kernels_py

try:
    from cfaudit import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None


def _inputs(rows, features, elite, seed=0):
    rng = np.random.default_rng(seed)
    is_cat = (np.arange(features) % 3 == 0).astype(np.uint8)
    G = rng.normal(size=(rows, features))
    G[:, is_cat == 1] = rng.integers(0, 5, size=(rows, int(is_cat.sum())))
    inv_mad = 1.0 / rng.uniform(0.5, 2.0, size=features)
    return G, G[0].copy(), G[:elite].copy(), inv_mad, is_cat, rng.integers(0, 2, 100).astype(np.int8)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=2000)
    ap.add_argument("--features", type=int, default=13)
    ap.add_argument("--elite", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    G, x, E, inv_mad, is_cat, fv = _inputs(args.rows, args.features, args.elite)
    cases = {
        "mad_distances": lambda k: k.mad_distances(G, x, inv_mad, is_cat),
        "mean_distance_to_set": lambda k: k.mean_distance_to_set(G, E, inv_mad, is_cat),
        "dccf(100)": lambda k: k.dccf(fv),
    }
    backends = {"numpy": _kernels_py}
    if _kernels_c is not None:
        backends["cython"] = _kernels_c
    print(f"rows={args.rows} features={args.features} elite={args.elite}")
    print(f"{'kernel':<22}" + "".join(f"{b:>14}" for b in backends) + ("      speed-up" if len(backends) > 1 else ""))
    for name, fn in cases.items():
        times = {}
        for b, k in backends.items():
            n = 3 if name == "mean_distance_to_set" else 50
            times[b] = min(timeit.repeat(lambda: fn(k), number=n, repeat=args.repeat)) / n
        line = f"{name:<22}" + "".join(f"{t * 1e3:>11.3f} ms" for t in times.values())
        if len(times) > 1:
            line += f"{times['numpy'] / times['cython']:>13.1f}x"
        print(line)
    if _kernels_c is None:
        print("compiled extension not available; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
