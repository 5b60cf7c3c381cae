#include "lgft/hseries.hpp"

#include <sstream>
#include <stdexcept>

namespace lgft {

namespace {

void check_orders(const HSeries& a, const HSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("HSeries: mismatched truncation orders");
}

}  // namespace

HSeries HSeries::operator+(const HSeries& o) const {
    check_orders(*this, o);
    HSeries r = *this;
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] += o.coeffs_[k];
    return r;
}

HSeries HSeries::operator-(const HSeries& o) const {
    check_orders(*this, o);
    HSeries r = *this;
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] -= o.coeffs_[k];
    return r;
}

HSeries HSeries::operator*(const HSeries& o) const {
    check_orders(*this, o);
    HSeries r(order());
    for (int i = 0; i <= order(); ++i)
        for (int j = 0; i + j <= order(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    return r;
}

std::string HSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        Rat a = coeffs_[k];
        if (a == 0) continue;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "h";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

HSeries h_expand(const Laurent& p, int order) {
    HSeries out(order);
    for (const auto& [n, c] : p.terms()) {
        // t^n = exp(n h / 4): accumulate (n/4)^k / k! term by term.
        Rat pow(1);
        Rat fact(1);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                pow *= Rat(n) / 4;
                fact *= k;
            }
            out.coeff(k) += c * pow / fact;
        }
    }
    return out;
}

}  // namespace lgft
