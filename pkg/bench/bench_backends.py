#!/usr/bin/env python3
"""Compare the two rational backends (gmpy2.mpq vs fractions.Fraction) on
the hot paths: Groebner construction, characteristic polynomials and the
full claim suite.

The backend is fixed at import time, so each measurement runs in a fresh
subprocess; FLOERCAS_PURE=1 forces the stdlib fallback.
"""

import os
import subprocess
import sys

CASES = {
    "groebner_r6": (
        "from floercas.groebner import QuotientRing; "
        "from floercas.floer import relations; "
        "QuotientRing.from_generators(relations('R', 6).generators()).mult_matrix('alpha')"
    ),
    "charpoly_F5": (
        "from floercas.groebner import QuotientRing, char_poly; "
        "from floercas.floer import relations; "
        "r = QuotientRing.from_generators(relations('R', 5).generators()); "
        "char_poly(r.mult_matrix('alpha'))"
    ),
    "wedge_kernel_g4": (
        "from floercas.floer import primitive_dim_exact; "
        "[primitive_dim_exact(4, k) for k in range(5)]"
    ),
    "check_suite_g3": (
        "from floercas.checks import run_all; "
        "assert all(r.passed for r in run_all(3))"
    ),
}


def measure(stmt: str, pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["FLOERCAS_PURE"] = "1"
    else:
        env.pop("FLOERCAS_PURE", None)
    code = (
        "import time\n"
        f"t0 = time.perf_counter()\n{stmt}\n"
        "print(time.perf_counter() - t0)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip().splitlines()[-1])


def main():
    try:
        import gmpy2  # noqa: F401
        have_gmpy2 = True
    except ImportError:
        have_gmpy2 = False
    print(f"{'case':<18} {'fraction':>10} {'gmpy2':>10} {'speedup':>9}")
    for name, stmt in CASES.items():
        slow = measure(stmt, pure=True)
        if have_gmpy2:
            fast = measure(stmt, pure=False)
            print(f"{name:<18} {slow:>9.3f}s {fast:>9.3f}s {slow / fast:>8.1f}x")
        else:
            print(f"{name:<18} {slow:>9.3f}s {'n/a':>10} {'n/a':>9}")


if __name__ == "__main__":
    main()
