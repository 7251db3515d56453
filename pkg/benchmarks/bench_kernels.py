"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--max-n 9] [--repeat 3]

Times cycle enumeration and all-pairs BFS for each tree size and prints a
table with the speed-up of the compiled core.
"""
import argparse
import time

from kakimizu import _kernels
from kakimizu.complex import build_ms_complex
from kakimizu.metric import one_skeleton_graph
from kakimizu.orientation import lex_rank_table


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--python-max-n", type=int, default=9,
                        help="skip the pure-Python backend above this n")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--threads", type=int, default=None)
    args = parser.parse_args()

    impls = _kernels.implementations()
    if "compiled" not in impls:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'kernel':<8} {'n':>3} {'size':>9} " + " ".join(f"{k:>12}" for k in impls) + "  speed-up")
    for n in range(2, args.max_n + 1):
        rank = lex_rank_table(n)
        row = {}
        size = None
        for name, impl in impls.items():
            if name == "python" and n > args.python_max_n:
                continue
            row[name] = best_of(
                lambda: _kernels.cycle_arrays(n, rank, impl=impl, threads=args.threads),
                args.repeat,
            )
            size = len(_kernels.cycle_arrays(n, rank, impl=impl)[0])
        _print_row("cycles", n, size, impls, row)

    for n in range(2, min(args.max_n, 10) + 1):
        g = one_skeleton_graph(build_ms_complex(n))
        indptr, indices = g.csr()
        row = {}
        for name, impl in impls.items():
            if name == "python" and n > args.python_max_n:
                continue
            row[name] = best_of(
                lambda: _kernels.all_pairs_distances(indptr, indices, impl=impl,
                                                     threads=args.threads),
                args.repeat,
            )
        _print_row("bfs", n, len(g.edges), impls, row)


def _print_row(kernel, n, size, impls, row):
    cells = " ".join(f"{row[k]:>11.5f}s" if k in row else f"{'-':>12}" for k in impls)
    speed = ""
    if "compiled" in row and "python" in row and row["compiled"] > 0:
        speed = f"  x{row['python'] / row['compiled']:.1f}"
    print(f"{kernel:<8} {n:>3} {size:>9} {cells}{speed}")


if __name__ == "__main__":
    main()
