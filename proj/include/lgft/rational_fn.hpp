#pragma once

#include <optional>
#include <string>

#include "lgft/laurent.hpp"

namespace lgft {

// Quotient of Laurent polynomials, kept in a canonical reduced form:
//  - num/den share no polynomial factor,
//  - den is an honest polynomial with nonzero constant term,
//  - den has leading coefficient 1 (t-powers and scalars absorbed into num).
// With that normalization two equal fractions are structurally equal.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(const Laurent& num) : num_(num), den_(1) {}  // NOLINT
    RationalFn(const Rat& c) : num_(c), den_(1) {}          // NOLINT
    RationalFn(long c) : num_(Rat(c)), den_(1) {}           // NOLINT
    RationalFn(const Laurent& num, const Laurent& den);     // throws on den == 0

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Laurent(1); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;  // throws on zero divisor
    RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
    RationalFn& operator-=(const RationalFn& o) { *this = *this - o; return *this; }
    RationalFn& operator*=(const RationalFn& o) { *this = *this * o; return *this; }
    RationalFn& operator/=(const RationalFn& o) { *this = *this / o; return *this; }
    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn inverse() const;  // throws on zero

    // nullopt when the denominator vanishes at t = 1.
    std::optional<Rat> eval_at_one() const;

    std::string to_string() const;

private:
    Laurent num_;       // default: zero
    Laurent den_{1};
    void reduce();
};

// Monic gcd of two Laurent polynomials, ignoring t-power factors; gcd(0,0) = 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

}  // namespace lgft
