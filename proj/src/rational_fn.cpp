#include "lgft/rational_fn.hpp"

#include <stdexcept>

namespace lgft {

namespace {

// Polynomial remainder; both arguments must have min_exp >= 0.
Laurent poly_rem(Laurent a, const Laurent& b) {
    while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
        a -= Laurent::term(a.leading_coeff() / b.leading_coeff(),
                           a.max_exp() - b.max_exp()) * b;
    }
    return a;
}

// Drop the t-power factor and make the leading coefficient 1.
Laurent normalize(const Laurent& p) {
    if (p.is_zero()) return p;
    Laurent q = p * Laurent::t(-p.min_exp());
    return q * Laurent(Rat(1) / q.leading_coeff());
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    Laurent x = normalize(a), y = normalize(b);
    while (!y.is_zero()) {
        Laurent r = poly_rem(x, y);
        x = y;
        y = normalize(r);
    }
    return x;
}

RationalFn::RationalFn(const Laurent& num, const Laurent& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    Laurent g = laurent_gcd(num_, den_);
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
    // Push the denominator's t-power and leading scalar into the numerator.
    Laurent unit = Laurent::term(den_.leading_coeff(), den_.min_exp());
    num_ = *num_.divide_exact(unit);
    den_ = *den_.divide_exact(unit);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw std::invalid_argument("RationalFn: division by zero");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::invalid_argument("RationalFn: inverse of zero");
    return RationalFn(den_, num_);
}

std::optional<Rat> RationalFn::eval_at_one() const {
    Rat d = den_.eval_at_one();
    if (d == 0) return std::nullopt;
    return num_.eval_at_one() / d;
}

std::string RationalFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace lgft
