#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python fallback.

Each case runs the same counting entry point through both backends and
checks that the results agree, so this doubles as a consistency check.
The default set keeps the pure-Python side under a minute in total; pass
--full for larger cases where the fallback takes several minutes.
"""

import argparse
import time

from covercount import _pykernels

try:
    from covercount import _ckernels
except ImportError:
    _ckernels = None

# (label, entry point name, args)
CASES = [
    ("free:2 n=5 count", "count_relation_tuples", (_pykernels.REL_FREE, 2, 5)),
    ("free:2 n=6 count", "count_relation_tuples", (_pykernels.REL_FREE, 2, 6)),
    ("orient:2 n=4 count", "count_relation_tuples", (_pykernels.REL_COMMUTATOR, 4, 4)),
    ("nonorient:3 n=4 count", "count_relation_tuples", (_pykernels.REL_SQUARES, 3, 4)),
    ("free:2 n=5 orbits", "count_transitive_orbits", (_pykernels.REL_FREE, 2, 5)),
    ("orient:2 n=3 orbits", "count_transitive_orbits", (_pykernels.REL_COMMUTATOR, 4, 3)),
    ("nonorient:2 n=6 split", "count_orientation_split", (2, 6)),
]

FULL_CASES = [
    ("free:2 n=7 count", "count_relation_tuples", (_pykernels.REL_FREE, 2, 7)),
    ("free:2 n=6 orbits", "count_transitive_orbits", (_pykernels.REL_FREE, 2, 6)),
    ("nonorient:3 n=5 split", "count_orientation_split", (3, 5)),
]


def run_case(module, entry, args):
    start = time.perf_counter()
    result = getattr(module, entry)(*args)
    return result, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the larger cases")
    options = parser.parse_args()

    cases = CASES + (FULL_CASES if options.full else [])
    if _ckernels is None:
        print("compiled kernels not available; timing the pure-Python fallback only")
    print(f"{'case':26} {'python':>10} {'cython':>10} {'speedup':>9}  result")
    for label, entry, args in cases:
        py_result, py_time = run_case(_pykernels, entry, args)
        if _ckernels is None:
            print(f"{label:26} {py_time:9.3f}s {'-':>10} {'-':>9}  {py_result}")
            continue
        c_result, c_time = run_case(_ckernels, entry, args)
        if py_result != c_result:
            raise SystemExit(f"backend mismatch on {label}: {py_result} != {c_result}")
        speedup = py_time / c_time if c_time > 0 else float("inf")
        print(f"{label:26} {py_time:9.3f}s {c_time:9.3f}s {speedup:8.1f}x  {py_result}")


if __name__ == "__main__":
    main()
