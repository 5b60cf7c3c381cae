#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgft/rng.hpp"
#include "lgft/uq_sl2.hpp"

using namespace lgft;

namespace {

RationalFn qdenom() { return RationalFn(Laurent::t(2) - Laurent::t(-2)); }

UqElement random_element(Rng& rng) {
    UqElement x;
    int nterms = static_cast<int>(rng.range(1, 4));
    for (int i = 0; i < nterms; ++i) {
        UqMono m{rng.range(0, 2), rng.range(-1, 2), rng.range(0, 2)};
        long c = rng.range(-3, 4);
        if (c == 0) c = 1;
        x.add_term(m, RationalFn(Rat(c)));
    }
    return x;
}

// Slotwise product of two-slot tensors, used as a direct statement of
// coproduct multiplicativity without going through the representation.
UqTensor tensor2_mul(const UqTensor& a, const UqTensor& b) {
    UqTensor out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            UqElement left = UqElement::mono(ka[0], RationalFn(1)) *
                             UqElement::mono(kb[0], RationalFn(1));
            UqElement right = UqElement::mono(ka[1], RationalFn(1)) *
                              UqElement::mono(kb[1], RationalFn(1));
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms()) {
                    std::vector<UqMono> key{lm, rm};
                    auto [it, fresh] = out.emplace(key, ca * cb * lc * rc);
                    if (!fresh) {
                        it->second += ca * cb * lc * rc;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
        }
    return out;
}

LMat flip4() {
    LMat p = lmat_zero(4, 4);
    for (size_t a = 0; a < 2; ++a)
        for (size_t c = 0; c < 2; ++c) p[2 * c + a][2 * a + c] = Laurent(1);
    return p;
}

LMat random_mat(Rng& rng) {
    LMat z = lmat_zero(2, 2);
    for (auto& row : z)
        for (auto& x : row)
            x = Laurent::term(Rat(rng.range(-3, 4)), rng.range(-2, 3));
    return z;
}

}  // namespace

TEST_CASE("products land in normal form") {
    CHECK(UqElement::one() * UqElement::one() == UqElement::one());

    UqElement ef = UqElement::E() * UqElement::F();
    UqElement want = UqElement::F() * UqElement::E() +
                     (UqElement::K(1) - UqElement::K(-1)).scaled(qdenom().inverse());
    CHECK(ef == want);

    UqElement conj = UqElement::K(1) * UqElement::E() * UqElement::K(-1);
    CHECK(conj == UqElement::E().scaled(RationalFn(Laurent::t(4))));
}

TEST_CASE("multiplication is associative on random words") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        UqElement u = random_element(rng), v = random_element(rng), w = random_element(rng);
        CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("the coproduct is grouplike on K and trivial at power one") {
    UqTensor dk = uq_coproduct_power(UqElement::K(1), 2);
    REQUIRE(dk.size() == 1);
    CHECK(dk.begin()->first == std::vector<UqMono>{{0, 1, 0}, {0, 1, 0}});
    CHECK(dk.begin()->second == RationalFn(1));

    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        UqElement x = random_element(rng);
        UqTensor one_slot = uq_coproduct_power(x, 1);
        UqElement back;
        for (const auto& [k, c] : one_slot) back.add_term(k[0], c);
        CHECK(back == x);
    }
}

TEST_CASE("counit and antipode axioms hold exactly") {
    Rng rng(17);
    for (int i = 0; i < 10; ++i) {
        UqElement x = random_element(rng);
        UqTensor dx = uq_coproduct_power(x, 2);

        UqElement counit_side, antipode_side;
        for (const auto& [k, c] : dx) {
            counit_side =
                counit_side +
                UqElement::mono(k[1], c * uq_counit(UqElement::mono(k[0], RationalFn(1))));
            UqElement piece =
                uq_antipode(UqElement::mono(k[0], RationalFn(1))) *
                UqElement::mono(k[1], RationalFn(1));
            antipode_side = antipode_side + piece.scaled(c);
        }
        CHECK(counit_side == x);
        CHECK(antipode_side == UqElement::one().scaled(uq_counit(x)));
    }
}

TEST_CASE("the coproduct is an algebra map and the antipode reverses products") {
    Rng rng(19);
    for (int i = 0; i < 10; ++i) {
        UqElement x = random_element(rng), y = random_element(rng);
        CHECK(uq_coproduct_power(x * y, 2) ==
              tensor2_mul(uq_coproduct_power(x, 2), uq_coproduct_power(y, 2)));
        CHECK(uq_antipode(x * y) == uq_antipode(y) * uq_antipode(x));
    }
    CHECK(uq_antipode(UqElement::one()) == UqElement::one());
    CHECK(uq_antipode(UqElement::K(1)) == UqElement::K(-1));
}

TEST_CASE("generator images in the fundamental representation") {
    LMat e = fundamental_tensor(UqElement::E(), 1);
    CHECK(lmat_eq(e, LMat{{Laurent(), Laurent(1)}, {Laurent(), Laurent()}}));
    CHECK(lmat_eq(fundamental_tensor(UqElement::one(), 2), lmat_id(4)));

    LMat k2 = fundamental_tensor(UqElement::K(1), 2);
    LMat want = lmat_zero(4, 4);
    want[0][0] = Laurent::t(4);
    want[1][1] = Laurent(1);
    want[2][2] = Laurent(1);
    want[3][3] = Laurent::t(-4);
    CHECK(lmat_eq(k2, want));

    // EF has a quantum-integer coefficient in its normal form, but the image
    // is plain matrix arithmetic.
    LMat ef = fundamental_tensor(UqElement::E() * UqElement::F(), 1);
    CHECK(lmat_eq(ef, LMat{{Laurent(1), Laurent()}, {Laurent(), Laurent()}}));
}

TEST_CASE("a bare quantum-integer denominator is rejected by the representation") {
    UqElement x = UqElement::one().scaled(qdenom().inverse());
    try {
        fundamental_tensor(x, 1);
        FAIL("expected a denominator error");
    } catch (const NamedError& e) {
        CHECK(e.kind() == "DenominatorNotClearing");
    }
}

TEST_CASE("the matrix antipode preserves traces and matches the algebra on K and E") {
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        LMat z = random_mat(rng);
        CHECK(lmat_trace(mat_antipode(z)) == lmat_trace(z));
    }
    for (const UqElement& g : {UqElement::K(1), UqElement::E()}) {
        CHECK(lmat_eq(fundamental_tensor(uq_antipode(g), 1),
                      mat_antipode(fundamental_tensor(g, 1))));
    }
    // The representation antipode matches the algebra on all generators.
    for (const UqElement& g : {UqElement::K(1), UqElement::E(), UqElement::F()}) {
        CHECK(lmat_eq(fundamental_tensor(uq_antipode(g), 1),
                      rep_antipode(fundamental_tensor(g, 1))));
    }
}

TEST_CASE("braiding data of the fundamental representation") {
    const FundRep& r = fundamental_rep();
    CHECK(lmat_eq(lmat_mul(r.R, r.Rinv), lmat_id(4)));

    LMat r12 = lmat_tensor(r.R, lmat_id(2));
    LMat r23 = lmat_tensor(lmat_id(2), r.R);
    LMat p23 = lmat_zero(8, 8);
    for (size_t a = 0; a < 2; ++a)
        for (size_t b = 0; b < 2; ++b)
            for (size_t c = 0; c < 2; ++c)
                p23[4 * a + 2 * c + b][4 * a + 2 * b + c] = Laurent(1);
    LMat r13 = lmat_mul(lmat_mul(p23, r12), p23);
    CHECK(lmat_eq(lmat_mul(lmat_mul(r12, r13), r23),
                  lmat_mul(lmat_mul(r23, r13), r12)));

    LMat p = flip4();
    for (const UqElement& g : {UqElement::E(), UqElement::F(), UqElement::K(1)}) {
        LMat d = fundamental_tensor(g, 2);
        LMat dop = lmat_mul(lmat_mul(p, d), p);
        CHECK(lmat_eq(lmat_mul(r.R, d), lmat_mul(dop, r.R)));
    }

    CHECK(r.theta == Laurent::t(-3));
    CHECK(r.theta_inv == Laurent::t(3));
    CHECK(lmat_eq(r.charm, fundamental_tensor(UqElement::K(1), 1)));
}

TEST_CASE("the squared antipode is conjugation by the charm in the representation") {
    const FundRep& r = fundamental_rep();
    Rng rng(29);
    for (int i = 0; i < 10; ++i) {
        UqElement x = random_element(rng);
        LMat lhs = fundamental_tensor(uq_antipode(uq_antipode(x)), 1);
        LMat rhs = lmat_mul(lmat_mul(r.charm, fundamental_tensor(x, 1)), r.charm_inv);
        CHECK(lmat_eq(lhs, rhs));
    }
}

TEST_CASE("quantum trace of the identity is the loop value") {
    CHECK(quantum_trace(lmat_id(2)) == Laurent::t(2) + Laurent::t(-2));
}

TEST_CASE("the fundamental trace identity holds for all matrices") {
    const FundRep& r = fundamental_rep();

    // Both sides at Z = W = I are 2t + 2t^-1.
    Laurent both = Laurent::term(2, 1) + Laurent::term(2, -1);
    CHECK(lmat_trace(r.R) == both);
    CHECK(Laurent::t(1) * lmat_trace(lmat_id(2)) +
              Laurent::t(-1) * lmat_trace(mat_antipode(lmat_id(2))) ==
          both);
    CHECK(quantum_ch_residual(lmat_id(2), lmat_id(2)).is_zero());

    // The classical shadow at t = 1: tr(ZW) + tr(Z^-1 W) = tr(Z) tr(W),
    // here 3 + 1 = 2 * 2.
    LMat z{{Laurent(1), Laurent(1)}, {Laurent(), Laurent(1)}};
    LMat w{{Laurent(1), Laurent()}, {Laurent(1), Laurent(1)}};
    CHECK(lmat_trace(lmat_mul(z, w)).eval_at_one() == 3);
    CHECK(lmat_trace(lmat_mul(mat_antipode(z), w)).eval_at_one() == 1);
    CHECK(quantum_ch_residual(z, w).is_zero());

    Rng rng(31);
    for (int i = 0; i < 100; ++i)
        CHECK(quantum_ch_residual(random_mat(rng), random_mat(rng)).is_zero());
}

TEST_CASE("element syntax round trips through the parser") {
    UqElement want = (UqElement::K(1) * UqElement::E()).scaled(RationalFn(Laurent::t(2))) +
                     UqElement::F() - UqElement::K(-1).scaled(RationalFn(Rat(2)));
    CHECK(UqElement::parse("(t^2)*K*E + F - 2*K^-1") == want);
    CHECK(UqElement::parse("E*F") == UqElement::E() * UqElement::F());
    CHECK(UqElement::parse("K^2*E^2") == UqElement::K(2) * UqElement::E() * UqElement::E());
    CHECK(UqElement::parse("K*E*K^-1") ==
          UqElement::E().scaled(RationalFn(Laurent::t(4))));
    CHECK_THROWS_AS(UqElement::parse(""), NamedError);
}
