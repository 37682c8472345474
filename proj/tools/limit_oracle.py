#!/usr/bin/env python3
"""Integer-arithmetic probe of the root-difference limits.

Roots come from quadratics with integer data, evaluated at scale 10^DIGITS
via math.isqrt, so no floating point is involved.

equal R [K] [DIGITS]       order-R differences of the rightmost root on (k,..,k)
truncation R [M] [DIGITS]  first differences on shapes (m-1, r-1)
rescaled [M] [DIGITS]      first differences of the rescaled larger root
"""

import math
import sys
from fractions import Fraction


def sqrt_fixed(v: Fraction, digits: int) -> int:
    """floor(sqrt(v) * 10^digits) for nonnegative rational v."""
    scale = 10**digits
    return math.isqrt((v.numerator * scale * scale) // v.denominator)


def rightmost_root_fixed(alphas, digits):
    # f(t) = t^2 + f1 t + f0 for the shape; root = (-f1 + sqrt(f1^2 - 4 f0)) / 2
    ms = [a + 1 for a in alphas]
    n = math.prod(ms)
    f1 = Fraction(-n) + 3 * math.prod(Fraction(m + 1, 2) for m in ms)
    f0 = -2 * math.prod(Fraction(m * (m + 1), 2) for m in ms) + 3 * math.prod(
        Fraction((m + 1) * (2 * m + 1), 6) for m in ms
    )
    disc = f1 * f1 - 4 * f0
    s = sqrt_fixed(disc, digits)
    scale = 10**digits
    return (-f1 * scale + s) / 2  # Fraction with ~digits correct decimals, times scale


def differences(vals, order):
    for _ in range(order):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def show(label, value, digits):
    scale = 10**digits
    print(f"{label} {float(value / scale):.12f}")


def main(argv):
    if not argv:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    mode = argv[0]
    digits = 40
    if mode == "equal":
        r = int(argv[1])
        k_max = int(argv[2]) if len(argv) > 2 else 2000
        roots = [rightmost_root_fixed([k] * r, digits) for k in range(k_max - 5, k_max + 1)]
        d = differences(roots, r)
        show(f"order-{r} difference at k={k_max}:", d[-1], digits)
        targets = {2: "(3+sqrt(105))/12", 3: "(15+sqrt(545))/8"}
        if r in targets:
            print(f"target {targets[r]}")
        return 0
    if mode == "truncation":
        r = int(argv[1])
        m_max = int(argv[2]) if len(argv) > 2 else 2000
        roots = [rightmost_root_fixed([m - 1, r - 1], digits) for m in (m_max - 1, m_max)]
        show(f"first difference at m={m_max}:", roots[1] - roots[0], digits)
        return 0
    if mode == "rescaled":
        m_max = int(argv[1]) if len(argv) > 1 else 200
        digits = int(argv[2]) if len(argv) > 2 else 40
        scale = 10**digits

        def root(m):
            # 2(m+1) x^2 - (m-2)(m+1)/2 x - m(m+1)(m+2)/3, larger root
            a = Fraction(2 * (m + 1))
            b = Fraction(-(m - 2) * (m + 1), 2)
            c = Fraction(-m * (m + 1) * (m + 2), 3)
            disc = b * b - 4 * a * c
            return (-b * scale + sqrt_fixed(disc, digits)) / (2 * a)

        d = root(m_max) - root(m_max - 1)
        show(f"first difference at m={m_max}:", d, digits)
        print("target (3+sqrt(105))/24")
        return 0
    print(f"unknown mode: {mode}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
