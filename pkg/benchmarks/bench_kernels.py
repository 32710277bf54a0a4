"""Compiled vs pure-Python multiplication kernel, plus the operation-count ladders.

    python3 benchmarks/bench_kernels.py [--sizes 64:2048] [--repeats 3]
"""

import argparse

from isokit import _kernels, bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="64:2048")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    sizes = bench.parse_ladder(args.sizes)

    timings = bench.backend_timings(sizes, args.repeats)
    names = sorted(timings)
    print(f"polynomial multiplication mod 2^61-1 (best of {args.repeats}), active backend: {_kernels.BACKEND}")
    print("n".rjust(6) + "".join(f"{name:>14}" for name in names) + ("   speedup" if len(names) == 2 else ""))
    for i, n in enumerate(sizes):
        row = [timings[name][i][1] for name in names]
        line = f"{n:6d}" + "".join(f"{t * 1e3:12.3f}ms" for t in row)
        if len(names) == 2:
            line += f"{timings['python'][i][1] / timings['compiled'][i][1]:9.1f}x"
        print(line)

    print()
    print("base-field multiplication counts")
    print("op".ljust(6) + "n".rjust(6) + "count".rjust(12) + "  / M(n)")
    for op in bench.OPERATIONS:
        rows = bench.ladder(op, sizes[:5])
        for r in rows:
            print(f"{op:6}{r.n:6d}{r.count:12d}{r.ratio:8.2f}")
        if op == "mul":
            e = bench.fit_exponent([r.n for r in rows], [r.count for r in rows])
            print(f"  fitted exponent {e:.3f}: {bench.verdict(e)}")


if __name__ == "__main__":
    main()
