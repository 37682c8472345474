#include "nico/surd.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nico {

QuadSurd::QuadSurd(Int p, Int q, Int d, Int r) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {
    normalize();
}

void QuadSurd::normalize() {
    if (r_ == 0) throw std::invalid_argument("surd: zero denominator");
    if (d_ < 0) throw std::invalid_argument("surd: negative radicand");
    if (r_ < 0) { r_ = -r_; p_ = -p_; q_ = -q_; }
    if (q_ != 0 && d_ > 1) {
        auto split = squarefree_split(d_);
        if (split.root != 1) { q_ *= split.root; d_ = split.core; }
    }
    if (d_ == 1) { p_ += q_; q_ = 0; }
    if (q_ == 0 || d_ == 0) { q_ = 0; d_ = 0; }
    Int g = gcd(gcd(p_, q_), r_);
    if (g > 1) { p_ /= g; q_ /= g; r_ /= g; }
}

Rat QuadSurd::rational() const {
    if (!is_rational()) throw std::domain_error("surd: not rational: " + str());
    Rat v(p_, r_);
    v.canonicalize();
    return v;
}

int QuadSurd::sign() const {
    if (q_ == 0) return sgn(p_);
    if (p_ >= 0 && q_ > 0) return 1;
    if (p_ <= 0 && q_ < 0) return -1;
    // p and q of opposite signs: compare p^2 with q^2 d.
    Int lhs = p_ * p_, rhs = q_ * q_ * d_;
    int c = cmp(lhs, rhs);
    return p_ > 0 ? c : -c;
}

Rat QuadSurd::norm() const {
    Rat v(p_ * p_ - q_ * q_ * d_, r_ * r_);
    v.canonicalize();
    return v;
}

namespace {

const Int& check_field(const QuadSurd& a, const QuadSurd& b) {
    if (a.d() == 0) return b.d();
    if (b.d() == 0 || a.d() == b.d()) return a.d();
    throw std::invalid_argument("surd: mixed fields sqrt(" + a.d().get_str() + ") and sqrt(" + b.d().get_str() + ")");
}

}  // namespace

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
    Int d = check_field(*this, o);
    *this = QuadSurd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, d, r_ * o.r_);
    return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) { return *this += -o; }

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
    Int d = check_field(*this, o);
    *this = QuadSurd(p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_, d, r_ * o.r_);
    return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
    if (o.is_zero()) throw std::domain_error("surd: division by zero");
    check_field(*this, o);
    // 1/((p+q*sqrt(d))/r) = r*(p-q*sqrt(d)) / (p^2-q^2 d)
    Int n = o.p_ * o.p_ - o.q_ * o.q_ * o.d_;
    QuadSurd inv(o.r_ * o.p_, -o.r_ * o.q_, o.d_, n);
    return *this *= inv;
}

int QuadSurd::compare(const QuadSurd& a, const QuadSurd& b) {
    if (a == b) return 0;
    return (a - b).sign();
}

SquarefreeSplit squarefree_split(const Int& n) {
    if (n < 0) throw std::invalid_argument("squarefree_split: negative");
    SquarefreeSplit out{1, n};
    if (n <= 1) return out;
    Int m = n;
    auto strip = [&](const Int& f) {
        Int f2 = f * f;
        while (mpz_divisible_p(m.get_mpz_t(), f2.get_mpz_t())) { m /= f2; out.root *= f; }
    };
    strip(2);
    strip(3);
    for (Int f = 5; f * f <= m; f += (mpz_fdiv_ui(f.get_mpz_t(), 6) == 5) ? 2 : 4) strip(f);
    out.core = m;
    return out;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

QuadSurd QuadSurd::make(const Rat& a, const Rat& b, const Int& d) {
    Int den = a.get_den() * b.get_den();
    return QuadSurd(a.get_num() * b.get_den(), b.get_num() * a.get_den(), d, den);
}

std::optional<QuadSurd> QuadSurd::sqrt(const QuadSurd& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return QuadSurd();
    if (x.is_rational()) {
        // sqrt(p/r) = sqrt(p*r)/r
        auto split = squarefree_split(x.p_ * x.r_);
        return QuadSurd(0, split.root, split.core, x.r_);
    }
    // Solve (e + f*sqrt(d))^2 = A + B*sqrt(d) with rational e, f:
    // e^2 + f^2 d = A, 2ef = B  =>  e^2 = (A +- sqrt(A^2 - B^2 d)) / 2.
    Rat A(x.p_, x.r_), B(x.q_, x.r_);
    A.canonicalize();
    B.canonicalize();
    auto ns = exact_sqrt(x.norm());
    if (!ns) return std::nullopt;
    for (int branch = 0; branch < 2; ++branch) {
        Rat e2 = (A + (branch == 0 ? *ns : -*ns)) / 2;
        auto e = exact_sqrt(e2);
        if (!e || *e == 0) continue;
        Rat f = B / (2 * *e);
        QuadSurd root = make(*e, f, x.d_);
        if (root * root == x) return root.sign() >= 0 ? root : -root;
    }
    return std::nullopt;
}

std::string QuadSurd::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << p_;
        if (r_ != 1) os << "/" << r_;
    } else {
        os << "(" << p_ << (q_ < 0 ? "-" : "+") << abs(q_) << "*sqrt(" << d_ << "))/" << r_;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadSurd& s) { return os << s.str(); }

}  // namespace nico
