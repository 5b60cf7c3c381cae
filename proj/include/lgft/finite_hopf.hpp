#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgft/group_table.hpp"
#include "lgft/rational.hpp"

namespace lgft {

// Sparse element of the backend algebra: basis index -> coefficient.
using HElt = std::map<int, Rat>;
// Sparse tensor over several algebra legs: index tuple -> coefficient.
using HKey = std::vector<int>;
using HTensor = std::map<HKey, Rat>;

// Finite-dimensional ribbon Hopf algebra given by structure constants,
// together with the braiding R, ribbon element theta and charmed element k.
struct FiniteHopf {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;

    std::map<std::pair<int, int>, HElt> prod;  // basis products, zeros omitted
    std::vector<HTensor> coprod;               // rank-2 image of each basis element
    std::vector<Rat> counit_vec;
    std::vector<HElt> antipode_vec;
    HElt one;
    HTensor R, Rinv;
    HElt theta, theta_inv, charm, charm_inv;

    // Element operations.
    HElt scalar(const Rat& c) const;
    HElt mul(const HElt& a, const HElt& b) const;
    HElt S(const HElt& x) const;
    Rat eps(const HElt& x) const;
    HTensor coproduct_power(const HElt& x, int m) const;  // rank m, m >= 1
    HElt inverse(const HElt& x) const;  // throws NamedError("NotInvertible")
    Rat trace_regular(const HElt& x) const;  // trace in the left regular action
    std::string to_string(const HElt& x) const;

    // Tensor utilities shared with the connection engine.
    HTensor tensor_of(const HElt& x) const;  // rank 1
    HTensor tensor_product(const HTensor& a, const HTensor& b) const;
    HTensor tensor_mul(const HTensor& a, const HTensor& b) const;  // legwise
    // perm[i] = which leg of the input feeds output leg i.
    HTensor permute_legs(const HTensor& t, const std::vector<int>& perm) const;
    HTensor leg_lmul(const HTensor& t, int leg, const HElt& a) const;
    HTensor leg_rmul(const HTensor& t, int leg, const HElt& a) const;
    HTensor leg_S(const HTensor& t, int leg) const;
    HTensor leg_coproduct(const HTensor& t, int leg) const;  // rank grows by 1
    HTensor embed(const HTensor& t, const std::vector<int>& legs, int rank) const;

    // Drinfeld element u = sum S(t_i) s_i of the braiding.
    HElt drinfeld_u() const;
};

FiniteHopf build_group_algebra(const GroupTable& g);
FiniteHopf build_drinfeld_double(const GroupTable& g);

struct AxiomCheck {
    std::string identity;
    bool passed = false;
    std::string witness;  // offending basis label(s) when failed
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.passed) out.push_back(c.identity + " [" + c.witness + "]");
        return out;
    }
};

AxiomReport verify_ribbon_axioms(const FiniteHopf& h);

}  // namespace lgft
