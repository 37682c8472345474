#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nico/surd.hpp"

namespace nico {

/// Finite multiset of exact scalars.  Storage keeps insertion order; every
/// observable result (comparison, printing, selector resolution) goes through
/// the sorted view.  Irrational elements must all share one radicand d.
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<QuadSurd> elems);
    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static Sequence range(long lo, long hi);

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<QuadSurd>& elements() const { return elems_; }
    std::vector<QuadSurd> sorted() const;
    /// Shared radicand of the irrational elements, 0 if none.
    const Int& field_d() const { return d_; }

    /// Multiset equality.
    friend bool operator==(const Sequence& a, const Sequence& b);
    friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }

    /// "{e1, e2, ...}" in sorted order.
    std::string str() const;

private:
    std::vector<QuadSurd> elems_;
    Int d_ = 0;
};

/// Element picker: explicit 1-based indices into the sorted view, or the
/// elements whose value is an integer congruent to r mod m.
class Selector {
public:
    static Selector indices(std::vector<std::size_t> idx);
    static Selector mod(long m, long r);

    bool is_mod() const { return is_mod_; }
    const std::vector<std::size_t>& index_list() const { return idx_; }
    long modulus() const { return m_; }
    long residue() const { return r_; }

    /// 0-based positions into s.sorted(); throws std::out_of_range for bad indices.
    std::vector<std::size_t> resolve(const Sequence& s) const;

    std::string str() const;

private:
    bool is_mod_ = false;
    std::vector<std::size_t> idx_;
    long m_ = 0, r_ = 0;
};

QuadSurd sum(const Sequence& s);
QuadSurd cube_sum(const Sequence& s);
/// (sum)^2 - (cube sum), exactly.
QuadSurd nu(const Sequence& s);

Sequence translate(const Sequence& s, const QuadSurd& t);
Sequence translate_subset(const Sequence& s, const Selector& sel, const QuadSurd& t);
Sequence scale_subset(const Sequence& s, const Selector& sel, const QuadSurd& x);
/// All pairwise products a_i * b_j.
Sequence bag_product(const Sequence& a, const Sequence& b);
/// k-fold bag product, k >= 1.
Sequence bag_power(const Sequence& a, long k);
/// Each element repeated u+1 times.
Sequence repeat_all(const Sequence& s, long u);
Sequence join(const Sequence& a, const Sequence& b);
Sequence adjoin(const Sequence& s, const std::vector<QuadSurd>& extra);
/// Removes exactly one occurrence; throws std::invalid_argument when absent.
Sequence remove_one(const Sequence& s, const QuadSurd& v);
/// Divisor-count multiset {(a1+1)...(ar+1) : 0 <= ai <= alpha_i}.
Sequence divisor_tau_sequence(const std::vector<long>& alphas);

}  // namespace nico
