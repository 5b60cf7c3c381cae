#pragma once

#include <string>
#include <vector>

#include "lgft/laurent.hpp"

namespace lgft {

// Truncated power series in a formal variable h, exact rational coefficients.
// All series in one expression must share the same truncation order.
class HSeries {
public:
    explicit HSeries(int order) : coeffs_(order + 1, Rat(0)) {}
    HSeries(int order, const Rat& c) : HSeries(order) { coeffs_[0] = c; }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int k) const { return coeffs_.at(k); }
    Rat& coeff(int k) { return coeffs_.at(k); }

    HSeries operator+(const HSeries& o) const;
    HSeries operator-(const HSeries& o) const;
    HSeries operator*(const HSeries& o) const;  // truncates past order
    bool operator==(const HSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const HSeries& o) const { return coeffs_ != o.coeffs_; }

    std::string to_string() const;  // e.g. "2 + 1/4*h^2"

private:
    std::vector<Rat> coeffs_;
};

// Expansion of a Laurent polynomial under t = exp(h/4), truncated at h^order.
// The constant coefficient is the t = 1 value.
HSeries h_expand(const Laurent& p, int order);

}  // namespace lgft
