#!/usr/bin/env python3
"""Brute-force integer scans, independent of the library.

pairs N [BOUND]   integer pairs a <= b completing [1..N] to nu = 0
curve N [BOX]     integer points of nu(w_N; a, b) = 0 in [-BOX, BOX]^2
"""

import sys


def nu_pairs(n, bound):
    t = n * (n + 1) // 2
    c = t * t
    out = []
    for a in range(1, bound + 1):
        for b in range(a, bound + 1):
            if (t + a + b) ** 2 == c + a**3 + b**3:
                out.append((a, b))
    return sorted(out)


def curve_points(n, box):
    # w_n = {1..n} with an extra 2: nu0 = 2(n^2 + n - 2), c = n(n+1)/2 + 2
    nu0 = 2 * (n * n + n - 2)
    c = n * (n + 1) // 2 + 2
    out = []
    for a in range(-box, box + 1):
        for b in range(-box, box + 1):
            if nu0 + 2 * c * (a + b) + (a + b) ** 2 - a**3 - b**3 == 0:
                out.append((a, b))
    return sorted(out)


def main(argv):
    if len(argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    mode = argv[0]
    n = int(argv[1])
    if mode == "pairs":
        bound = int(argv[2]) if len(argv) > 2 else n * n + n + 2
        for a, b in nu_pairs(n, bound):
            print(f"{a},{b}")
        return 0
    if mode == "curve":
        box = int(argv[2]) if len(argv) > 2 else 20
        for a, b in curve_points(n, box):
            print(f"{a},{b}")
        return 0
    print(f"unknown mode: {mode}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
