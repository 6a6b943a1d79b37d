#!/usr/bin/env python3
"""Verify by brute force that the default link search box is sufficient.

The nefness bound caps the coefficient b/a of a contracted class, so the
default box [1..20] should already be exhaustive; this re-runs the whole
enumeration with a box of 1000 and diffs the outputs.
"""

import sys
import time

from fano3.sarkisov import enumerate_links


def main() -> int:
    ok = True
    for center in ("line", "conic", "point"):
        t0 = time.perf_counter()
        small = enumerate_links(center, range(5, 41), search_bound=20)
        t1 = time.perf_counter()
        large = enumerate_links(center, range(5, 41), search_bound=1000)
        t2 = time.perf_counter()
        same = small == large
        ok = ok and same
        print(
            f"{center:<6s} candidates={len(small):<3d} "
            f"box20={t1 - t0:.3f}s box1000={t2 - t1:.3f}s equal={same}"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
