#pragma once

#include <map>
#include <optional>
#include <string>

#include "lgft/rational.hpp"

namespace lgft {

// Laurent polynomial in one formal variable t with rational coefficients.
// Terms are kept in a sorted exponent->coefficient map with no stored zeros,
// so equality is structural and printing is canonical (ascending exponent).
class Laurent {
public:
    Laurent() = default;
    Laurent(const Rat& c) {  // NOLINT: implicit constant embedding is intended
        if (c != 0) terms_[0] = c;
    }
    Laurent(long c) : Laurent(Rat(c)) {}

    // c * t^n
    static Laurent term(const Rat& c, long n);
    static Laurent t(long n = 1) { return term(1, n); }

    const std::map<long, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long min_exp() const;  // requires nonzero
    long max_exp() const;
    Rat coeff(long n) const;
    Rat leading_coeff() const;  // coefficient of max_exp

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return terms_ != o.terms_; }
    bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

    Laurent pow(long n) const;  // n >= 0

    // Exact division; nullopt if o does not divide *this in the Laurent ring.
    std::optional<Laurent> divide_exact(const Laurent& o) const;

    // Substitute t = 1.
    Rat eval_at_one() const;
    // Substitute t -> t^k (k may be negative, giving the bar involution for -1).
    Laurent substitute_power(long k) const;

    // Canonical rendering, e.g. "-1/2*t^-2 + 3 + t^4"; "0" for the zero poly.
    std::string to_string() const;
    static Laurent parse(const std::string& text);  // throws std::runtime_error

private:
    std::map<long, Rat> terms_;
    void strip_zero(long n) {
        auto it = terms_.find(n);
        if (it != terms_.end() && it->second == 0) terms_.erase(it);
    }
};

}  // namespace lgft
