#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgft/errors.hpp"
#include "lgft/rational_fn.hpp"

namespace lgft {

// PBW monomial F^f K^k E^e; f, e >= 0, k may be negative.
struct UqMono {
    long f = 0, k = 0, e = 0;
    auto operator<=>(const UqMono&) const = default;
};

// Element of the quantized enveloping algebra of sl2 over rational functions
// in t (q = t^2), stored in PBW normal form with no zero terms.
class UqElement {
public:
    UqElement() = default;

    static UqElement zero() { return {}; }
    static UqElement one();
    static UqElement E();
    static UqElement F();
    static UqElement K(long power = 1);
    static UqElement mono(const UqMono& m, const RationalFn& c);

    const std::map<UqMono, RationalFn>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UqElement operator+(const UqElement& o) const;
    UqElement operator-(const UqElement& o) const;
    UqElement operator*(const UqElement& o) const;  // PBW-normalized product
    UqElement scaled(const RationalFn& c) const;
    bool operator==(const UqElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;
    // Products of E, F, K, K^-1 (or K^<n>, E^<n>, F^<n>) with parenthesized
    // Laurent coefficients, e.g. "(t^2)*K*E + F - 2*K^-1".
    static UqElement parse(const std::string& text);

    void add_term(const UqMono& m, const RationalFn& c);

private:
    std::map<UqMono, RationalFn> terms_;
};

RationalFn uq_counit(const UqElement& x);
UqElement uq_antipode(const UqElement& x);

// Tensor power element with PBW monomial keys per slot.
using UqTensor = std::map<std::vector<UqMono>, RationalFn>;

UqTensor uq_coproduct_power(const UqElement& x, int m);  // m >= 1

// Dense matrices over the Laurent ring.
using LMat = std::vector<std::vector<Laurent>>;

LMat lmat_id(size_t n);
LMat lmat_zero(size_t rows, size_t cols);
LMat lmat_mul(const LMat& a, const LMat& b);
LMat lmat_add(const LMat& a, const LMat& b);
LMat lmat_scale(const LMat& a, const Laurent& c);
LMat lmat_tensor(const LMat& a, const LMat& b);
Laurent lmat_trace(const LMat& a);
bool lmat_eq(const LMat& a, const LMat& b);

// The trace antipode on 2x2 matrices: [[a,b],[c,d]] -> [[d,-t^2 b],[-t^2 c,a]].
// It preserves the trace and closes the quantum Cayley-Hamilton identity; it
// is a trace device, not the algebra antipode pushed through the
// representation (those agree on K and E but not on F).
LMat mat_antipode(const LMat& m);

// The algebra antipode pushed through the representation:
// [[a,b],[c,d]] -> [[d, -q b],[-q^-1 c, a]] with q = t^2. Anti-multiplicative;
// agrees with mat_antipode except on the lower off-diagonal entry.
LMat rep_antipode(const LMat& m);

// The two-dimensional representation and its braiding data.
struct FundRep {
    LMat E, F, K, Kinv;   // 2x2 generator images
    LMat charm, charm_inv;  // rho(k): S^2 conjugator and quantum-trace twist
    LMat R, Rinv;         // 4x4
    Laurent theta, theta_inv;  // ribbon scalar: t^-3 and t^3
};

// Built and validated once (QYBE, inverses, ribbon/charm identities); throws
// NamedError("RepInconsistent", ...) if any pinned identity fails.
const FundRep& fundamental_rep();

// (rho^{tensor m} o Delta^{m-1})(x). Throws
// NamedError("DenominatorNotClearing", ...) when a coefficient denominator
// survives the representation image.
LMat fundamental_tensor(const UqElement& x, int m);

// tr(Z rho(k)): quantum trace; the identity matrix gives t^2 + t^-2.
Laurent quantum_trace(const LMat& z);

// t tr(ZW) + t^-1 tr(S(Z)W) - sum_i tr(s_i Z) tr(t_i W) with S the
// representation antipode; identically zero on all 2x2 matrices.
Laurent quantum_ch_residual(const LMat& z, const LMat& w);

}  // namespace lgft
