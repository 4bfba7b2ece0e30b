"""Compare the compiled and pure-Python kernels on the main operations.

    python benchmarks/bench_backends.py --sizes 16 64 128 256 --repeat 20
"""
import argparse
import random
import statistics
import time

import symplectic_index as si
from symplectic_index import _backend


def _median(fn, args_list):
    times = []
    for args in args_list:
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def bench(n, repeat, rnd, with_n4):
    order = si.sp_order(n)
    indices = [rnd.randrange(order) for _ in range(repeat)]
    mats = [si.symplectic_n3(n, i) for i in indices]
    facts = [si.transvection_factorization(g) for g in mats]
    ident = si.SympMatrix.identity(n)
    rows = {
        "symplectic_n3": _median(si.symplectic_n3, [(n, i) for i in indices]),
        "symplectic_inverse": _median(si.symplectic_inverse, [(n, g) for g in mats]),
        "factorization": _median(si.transvection_factorization, [(g,) for g in mats]),
        "apply_seq_to_matrix": _median(si.apply_seq_to_matrix, [(f, ident) for f in facts]),
        "mat_mul": _median(si.mat_mul, list(zip(mats, reversed(mats)))),
        "is_symplectic": _median(si.is_symplectic, [(g,) for g in mats]),
    }
    if with_n4:
        rows["symplectic_n4"] = _median(si.symplectic_n4, [(n, i) for i in indices[:3]])
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 128, 256])
    parser.add_argument("--repeat", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--n4-max", type=int, default=64, help="skip symplectic_n4 above this n")
    args = parser.parse_args(argv)

    backends = _backend.available_backends()
    results = {}
    for name in backends:
        old = _backend.set_backend(name)
        try:
            for n in args.sizes:
                rnd = random.Random(args.seed + n)
                results[name, n] = bench(n, args.repeat, rnd, n <= args.n4_max)
        finally:
            _backend.set_backend(old)

    header = f"{'operation':<22}{'n':>6}" + "".join(f"{b + ' (ms)':>16}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        for op in results[backends[0], n]:
            cells = [results[b, n][op] * 1e3 for b in backends]
            line = f"{op:<22}{n:>6}" + "".join(f"{c:>16.3f}" for c in cells)
            if len(backends) > 1:
                fast = results["cython", n][op]
                line += f"{results['python', n][op] / fast:>9.1f}x"
            print(line)
    return results


if __name__ == "__main__":
    main()
