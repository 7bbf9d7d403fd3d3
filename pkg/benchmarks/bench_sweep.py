"""Time the compiled and pure-Python sweep kernels degree by degree.

    python3 benchmarks/bench_sweep.py            # compiled 3..11, Python 3..9
    python3 benchmarks/bench_sweep.py --python-max 11

Both backends must produce identical scans wherever both run.
"""

import argparse
import sys
import time

from chisini_audit import kernel
from chisini_audit.sweep import DEFAULT_MAX_DEGREE


def timed(m, impl, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = kernel.scan(m, impl=impl)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--m-min", type=int, default=3)
    p.add_argument("--m-max", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--python-max", type=int, default=9, help="largest m for the Python fallback")
    p.add_argument("--repeat", type=int, default=3, help="best of N for the compiled kernel")
    args = p.parse_args(argv)

    compiled = kernel.compiled_backend
    if compiled is None:
        print("compiled kernel not built; timing the Python fallback only", file=sys.stderr)

    print(f"{'m':>3} {'tuples':>10} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    tot_c = tot_p = 0.0
    for m in range(args.m_min, args.m_max + 1):
        tc = tp = None
        rc = rp = None
        if compiled is not None:
            tc, rc = timed(m, compiled, args.repeat)
            tot_c += tc
        if m <= args.python_max:
            tp, rp = timed(m, kernel.python_backend, 1)
            tot_p += tp
        if rc is not None and rp is not None and rc != rp:
            print(f"backends disagree at m={m}", file=sys.stderr)
            return 1
        n = (rc or rp).examined
        speed = f"{tp / tc:8.0f}x" if tc and tp else f"{'-':>9}"
        print(f"{m:>3} {n:>10} {tc if tc is not None else float('nan'):>11.4f} "
              f"{tp if tp is not None else float('nan'):>10.3f} {speed}")
    print(f"total compiled {tot_c:.3f} s, python {tot_p:.2f} s (m <= {args.python_max})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
