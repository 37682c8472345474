#include "nico/sequence.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nico {

namespace {

Int joined_field(const Int& a, const Int& b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw std::invalid_argument("sequence: mixed fields sqrt(" + a.get_str() + ") and sqrt(" + b.get_str() + ")");
}

}  // namespace

Sequence::Sequence(std::vector<QuadSurd> elems) : elems_(std::move(elems)) {
    for (const auto& e : elems_) d_ = joined_field(d_, e.d());
}

Sequence Sequence::range(long lo, long hi) {
    std::vector<QuadSurd> v;
    if (hi >= lo) v.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long i = lo; i <= hi; ++i) v.emplace_back(i);
    return Sequence(std::move(v));
}

std::vector<QuadSurd> Sequence::sorted() const {
    std::vector<QuadSurd> v = elems_;
    std::sort(v.begin(), v.end());
    return v;
}

bool operator==(const Sequence& a, const Sequence& b) {
    return a.size() == b.size() && a.sorted() == b.sorted();
}

std::string Sequence::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : sorted()) {
        if (!first) os << ", ";
        os << e.str();
        first = false;
    }
    os << "}";
    return os.str();
}

Selector Selector::indices(std::vector<std::size_t> idx) {
    Selector s;
    s.idx_ = std::move(idx);
    return s;
}

Selector Selector::mod(long m, long r) {
    if (m <= 0) throw std::invalid_argument("selector: modulus must be positive");
    Selector s;
    s.is_mod_ = true;
    s.m_ = m;
    s.r_ = ((r % m) + m) % m;
    return s;
}

std::vector<std::size_t> Selector::resolve(const Sequence& s) const {
    std::vector<std::size_t> out;
    if (is_mod_) {
        auto sorted = s.sorted();
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const auto& e = sorted[i];
            if (!e.is_integer()) continue;
            Int rem = e.p() % m_;
            if (rem < 0) rem += m_;
            if (rem == r_) out.push_back(i);
        }
        return out;
    }
    for (std::size_t i : idx_) {
        if (i < 1 || i > s.size()) throw std::out_of_range("selector: index " + std::to_string(i) + " out of range for length " + std::to_string(s.size()));
        out.push_back(i - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string Selector::str() const {
    if (is_mod_) return "mod(" + std::to_string(m_) + "," + std::to_string(r_) + ")";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < idx_.size(); ++i) os << (i ? "," : "") << idx_[i];
    os << "}";
    return os.str();
}

namespace {

// Accumulating in Int or Rat when the elements allow it skips the surd
// normalization work entirely; large integer sequences hit this path.
enum class Tier { integer, rational, surd };

Tier classify(const Sequence& s) {
    Tier t = Tier::integer;
    for (const auto& e : s.elements()) {
        if (!e.is_rational()) return Tier::surd;
        if (!e.is_integer()) t = Tier::rational;
    }
    return t;
}

}  // namespace

QuadSurd sum(const Sequence& s) {
    switch (classify(s)) {
        case Tier::integer: {
            Int acc = 0;
            for (const auto& e : s.elements()) acc += e.p();
            return QuadSurd(acc);
        }
        case Tier::rational: {
            Rat acc = 0;
            for (const auto& e : s.elements()) acc += e.rational();
            return QuadSurd(acc);
        }
        default: {
            QuadSurd acc;
            for (const auto& e : s.elements()) acc += e;
            return acc;
        }
    }
}

QuadSurd cube_sum(const Sequence& s) {
    switch (classify(s)) {
        case Tier::integer: {
            Int acc = 0;
            for (const auto& e : s.elements()) acc += e.p() * e.p() * e.p();
            return QuadSurd(acc);
        }
        case Tier::rational: {
            Rat acc = 0;
            for (const auto& e : s.elements()) {
                Rat v = e.rational();
                acc += v * v * v;
            }
            return QuadSurd(acc);
        }
        default: {
            QuadSurd acc;
            for (const auto& e : s.elements()) acc += e * e * e;
            return acc;
        }
    }
}

QuadSurd nu(const Sequence& s) {
    switch (classify(s)) {
        case Tier::integer: {
            Int s1 = 0, s3 = 0;
            for (const auto& e : s.elements()) {
                s1 += e.p();
                s3 += e.p() * e.p() * e.p();
            }
            Int v = s1 * s1 - s3;
            return QuadSurd(v);
        }
        case Tier::rational: {
            Rat s1 = 0, s3 = 0;
            for (const auto& e : s.elements()) {
                Rat v = e.rational();
                s1 += v;
                s3 += v * v * v;
            }
            return QuadSurd(s1 * s1 - s3);
        }
        default: {
            QuadSurd t, c;
            for (const auto& e : s.elements()) {
                t += e;
                c += e * e * e;
            }
            return t * t - c;
        }
    }
}

Sequence translate(const Sequence& s, const QuadSurd& t) {
    std::vector<QuadSurd> v;
    v.reserve(s.size());
    for (const auto& e : s.elements()) v.push_back(e + t);
    return Sequence(std::move(v));
}

namespace {

Sequence map_subset(const Sequence& s, const Selector& sel, const std::function<QuadSurd(const QuadSurd&)>& f) {
    auto elems = s.sorted();
    for (std::size_t i : sel.resolve(s)) elems[i] = f(elems[i]);
    return Sequence(std::move(elems));
}

}  // namespace

Sequence translate_subset(const Sequence& s, const Selector& sel, const QuadSurd& t) {
    return map_subset(s, sel, [&](const QuadSurd& e) { return e + t; });
}

Sequence scale_subset(const Sequence& s, const Selector& sel, const QuadSurd& x) {
    return map_subset(s, sel, [&](const QuadSurd& e) { return e * x; });
}

Sequence bag_product(const Sequence& a, const Sequence& b) {
    std::vector<QuadSurd> v;
    v.reserve(a.size() * b.size());
    for (const auto& x : a.elements())
        for (const auto& y : b.elements()) v.push_back(x * y);
    return Sequence(std::move(v));
}

Sequence bag_power(const Sequence& a, long k) {
    if (k < 1) throw std::invalid_argument("bag_power: exponent must be >= 1");
    Sequence out = a;
    for (long i = 1; i < k; ++i) out = bag_product(out, a);
    return out;
}

Sequence repeat_all(const Sequence& s, long u) {
    if (u < 0) throw std::invalid_argument("repeat_all: negative repetition count");
    std::vector<QuadSurd> v;
    v.reserve(s.size() * static_cast<std::size_t>(u + 1));
    for (const auto& e : s.elements())
        for (long i = 0; i <= u; ++i) v.push_back(e);
    return Sequence(std::move(v));
}

Sequence join(const Sequence& a, const Sequence& b) {
    std::vector<QuadSurd> v = a.elements();
    v.insert(v.end(), b.elements().begin(), b.elements().end());
    return Sequence(std::move(v));
}

Sequence adjoin(const Sequence& s, const std::vector<QuadSurd>& extra) {
    return join(s, Sequence(extra));
}

Sequence remove_one(const Sequence& s, const QuadSurd& v) {
    std::vector<QuadSurd> out = s.elements();
    auto it = std::find(out.begin(), out.end(), v);
    if (it == out.end()) throw std::invalid_argument("remove_one: value " + v.str() + " not present");
    out.erase(it);
    return Sequence(std::move(out));
}

Sequence divisor_tau_sequence(const std::vector<long>& alphas) {
    std::vector<QuadSurd> v{QuadSurd(1)};
    for (long a : alphas) {
        if (a < 0) throw std::invalid_argument("divisor_tau_sequence: negative exponent");
        std::vector<QuadSurd> next;
        next.reserve(v.size() * static_cast<std::size_t>(a + 1));
        for (const auto& e : v)
            for (long i = 1; i <= a + 1; ++i) next.push_back(e * QuadSurd(i));
        v = std::move(next);
    }
    return Sequence(std::move(v));
}

}  // namespace nico
