#!/usr/bin/env python3
"""Period-doubling Pell solver used to cross-check the C++ one.

pell D [COUNT]    solutions of x^2 - D y^2 = 1
rep M [COUNT]     integer shifts for the M-fold repeated initial segment
gap [COUNT]       (j, r, m) with (4j+3)^2 - 8 r^2 = -7, m = j + r
"""

import math
import sys


def cf_sqrt(d):
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError("perfect square")
    m, den, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        period.append(a)
    return a0, period


def fundamental(d):
    a0, period = cf_sqrt(d)
    terms = [a0] + period * 2
    p_prev, p = 1, terms[0]
    q_prev, q = 0, 1
    for a in terms[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        if p * p - d * q * q == 1:
            return p, q
    raise AssertionError("no fundamental solution found")


def solutions(d, count):
    x1, y1 = fundamental(d)
    x, y = x1, y1
    out = []
    for _ in range(count):
        out.append((x, y))
        x, y = x1 * x + d * y1 * y, x1 * y + y1 * x
    return out


def repetition(m, count):
    d = m * m - 1
    out = []
    for x, y in solutions(d, count):
        n = y
        u = m - 1
        # nu of the shifted repeated segment factors through t^2 - (un-1)t - ...,
        # with integer roots ((un - 1) +- x) / 2
        t_pos = (u * n - 1 + x) // 2
        t_neg = (u * n - 1 - x) // 2
        assert (u * n - 1 + x) % 2 == 0
        out.append((n, u, x, t_pos, t_neg))
    return out


def gap(count):
    # x^2 - 8 y^2 = -7 splits into two unit orbits; keep x = 4j + 3
    sols = []
    for seed in ((1, 1), (5, 2)):
        x, y = seed
        for _ in range(count + 4):
            if x % 4 == 3:
                j = (x - 3) // 4
                if j >= 1:
                    sols.append((j, y, j + y))
            x, y = 3 * x + 8 * y, x + 3 * y
    return sorted(set(sols))[:count]


def main(argv):
    if not argv:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    mode = argv[0]
    if mode == "pell":
        d = int(argv[1])
        count = int(argv[2]) if len(argv) > 2 else 5
        for x, y in solutions(d, count):
            print(f"{x},{y}")
        return 0
    if mode == "rep":
        m = int(argv[1])
        count = int(argv[2]) if len(argv) > 2 else 5
        for n, u, x, tp, tn in repetition(m, count):
            print(f"n={n} u={u} x={x} t={tp},{tn}")
        return 0
    if mode == "gap":
        count = int(argv[1]) if len(argv) > 1 else 4
        for j, r, m in gap(count):
            assert (4 * j + 3) ** 2 - 8 * r * r == -7
            print(f"{j},{r},{m}")
        return 0
    print(f"unknown mode: {mode}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
