#pragma once

#include <utility>
#include <vector>

#include "nico/poly.hpp"
#include "nico/surd.hpp"

namespace nico {

/// Continued fraction of sqrt(d): [a0; period...].
struct CFExpansion {
    Int a0;
    std::vector<Int> period;
};

/// Throws std::invalid_argument when d <= 0 or d is a perfect square.
CFExpansion sqrt_continued_fraction(const Int& d);

/// Solution of x^2 - d*y^2 = 1 with index k (1 = fundamental).
struct PellSolution {
    Int x, y;
    Int d;
    long k;
};

PellSolution pell_fundamental(const Int& d);
std::vector<PellSolution> pell_solutions(const Int& d, long count);

/// Translation offsets t making the m-fold repetition of {1+t, ..., n+t}
/// sum-cube balanced.  Both offsets per admissible n are integers.
struct RepetitionEntry {
    Int n;
    long u;  // extra copies adjoined: m = u + 1 total
    Int t_pos, t_neg;
};

std::vector<RepetitionEntry> repetition_family(long m, long count);

/// nu of the (u+1)-fold repetition of {1+t, ..., n+t}, in closed form.
Int repetition_nu(const Int& n, long u, const Int& t);

/// (j, r, m) with the block {1..j+1} followed by 2j copies of m balanced;
/// j + r = m and (4j+3)^2 - 8r^2 = -7.
struct GapSolution {
    Int j, r, m;
};

std::vector<GapSolution> gap_family_solutions(long count);

/// Ordinary generating functions whose coefficient of x^(k-1) is the k-th
/// gap-family j (resp. m).
struct RationalGF {
    RatPolynomial num, den;
};

RationalGF gap_j_generating_function();
RationalGF gap_m_generating_function();

/// Pairs {a, b} with nu({1..n} adjoin {a, b}) = 0 and a, b >= 1, via the
/// quadratic-form model s^2 + 3t^2 = 4(n^2 + n + 1); sorted, a <= b.
std::vector<std::pair<Int, Int>> adjoin_form_solutions(long n);

/// Same pairs found by direct search over 1 <= a <= b <= bound.
std::vector<std::pair<Int, Int>> adjoin_form_box_scan(long n, const Int& bound);

/// Search bound sufficient for every solution: n^2 + n + 2.
Int adjoin_form_default_bound(long n);

}  // namespace nico
