#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nico/poly.hpp"
#include "nico/sequence.hpp"
#include "nico/surd.hpp"

namespace nico {

/// Chain of single-element adjunctions preserving nu = 0.  The running sum
/// is cached so each extension is constant-cost.
struct ChainState {
    QuadSurd base_sum;
    std::vector<QuadSurd> adjoined;
    QuadSurd total;

    static ChainState start(const Sequence& base);
    /// x^2 - x - 2*total; defined while the running sum stays rational.
    RatPolynomial step_quadratic() const;
};

/// Both admissible next values (roots of the step quadratic) with their
/// extended states.
struct ChainBranches {
    QuadSurd plus_value, minus_value;
    ChainState plus, minus;
};

/// Throws std::domain_error when no real extension exists in the working field.
ChainBranches chain_extend(const ChainState& state);

/// Extend `steps` times.  The first step takes the +/- branch as requested;
/// later steps are forced to x+1 because x = 0 and x = -previous are
/// excluded.  Throws std::domain_error when every branch is excluded.
ChainState run_chain(const Sequence& base, long steps, bool first_plus);

/// base plus the first j adjoined values.
Sequence chain_prefix(const Sequence& base, const ChainState& chain, std::size_t j);

/// Sextic with roots at x2 - 1/2 for chains over {1} join m copies of h.
RatPolynomial p_sextic(long h, long m);
/// Cubic eliminant in u = (x2 - 1/2)^2 derived from the actual sums of the
/// base {1} join m copies of h under the two-step system.
RatPolynomial chain_eliminant(long h, long m);
/// The sextic is the eliminant composed with x^2, and rebuilding 8*nu of the
/// extension x1 = x2(x2-1)/2 - c, x2 = y + 1/2, x3 = x2 + 1 from the base
/// sums reproduces it coefficient by coefficient.
bool chain_root_identity_check(long h, long m);
/// P(h,m,x) - P(m,h,x) is the constant 8hm(h-m)(h+m).
bool p_sextic_swap_check(long h, long m);

/// nu of join(n copies of n, AP(a, s, n)) as a cubic in a, split into the
/// forced linear factor and its cofactor.
struct APExtension {
    RatPolynomial nu_poly;
    RatPolynomial linear_factor;
    RatPolynomial quadratic_factor;
    Rat disc;  // of the quadratic factor
};

APExtension ap_extension(long n, long s);

/// Positive integer root of the quadratic factor, when one exists.
std::optional<Int> ap_integer_extension(long n, long s);

Int fibonacci(long k);

/// s = 2 specialization: valid iff 5n^2 + 4 is a perfect square, i.e. n is
/// an even-indexed Fibonacci number; then a = (2 - n + sqrt(5n^2+4))/2.
struct FibonacciExtension {
    bool valid = false;
    Int a;
};

FibonacciExtension fibonacci_extension(long n);

/// Block constructions over F_{2n}: the repeated block A, then A with
/// successively shifted copies of the odd-step progression S.
std::vector<Sequence> fibonacci_block_family(long n, long m);

/// {1..n} with m removed and the closed-form rational pair adjoined.
struct RationalAdjoinPair {
    long n = 0, m = 0;
    Rat a, b;
    Sequence seq;
};

RationalAdjoinPair omit_adjoin(long n, long m);

/// p(n) = (1+n)(1+2n+5n^2+n^3) and q(n) = (1+2n)(1+n+n^2) from the m = 1
/// family; p(n) - p(-(n+1)) = (1+2n)^3.
Rat omit_p(const Rat& n);
Rat omit_q(const Rat& n);

/// The base identity on {1..7n-12} with {8n-12, 3n-3}, its 5n-8
/// replacement, and the three nearby identities with theirs.
bool eleven_family_check(long n);

/// Difference of the two identity sides after replacing 7n by tn, in t.
RatPolynomial t_replacement_poly(long n);
/// Closed form n(t-7)(11n-15)(n(t+7)-23) of that difference.
RatPolynomial t_replacement_target(long n);
/// Each side satisfies f(7) = f(23/n - 7).
bool t_replacement_functional_check(long n);

}  // namespace nico
