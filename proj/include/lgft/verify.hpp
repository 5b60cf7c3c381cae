#pragma once

#include <cstdint>

#include "lgft/moves.hpp"
#include "lgft/skein.hpp"

namespace lgft {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // first failing input, empty when passing
};

struct Suite {
    std::string name;
    std::vector<CheckResult> checks;
    bool ok() const;
};

// Named ribbon backends exercised by the identity suites: the group algebras
// k[Z/3], k[S3] and the doubles D(Z/2), D(Z/3), D(S3).
std::vector<FiniteHopf> standard_backends();

// Ribbon Hopf axioms on every standard backend.
Suite suite_axioms();

// Full move catalogue: exhaustively over D(Z/2), sampled over D(S3).
Suite suite_moves(uint64_t seed, int samples);

// Coassociativity and counit deletion of the comultiplication multitangle on
// every lattice with at most 3 edges and 2 vertices (up to relabeling), over
// k[S3] and D(Z/2), all basis connections.
Suite suite_coalgebra();

// Push moves: holonomy spreading over a group backend and invisibility to
// projected observables.
Suite suite_push(uint64_t seed, int samples);

// Quantum Cayley-Hamilton residual on random Laurent matrix pairs and its
// t = 1 trace identity on random determinant-one rational pairs.
Suite suite_ch(uint64_t seed, int samples);

// Bracket reduction against direct evaluation (zeta_compare) on seeded
// diagrams with at most 3 crossings. Surface: "annulus", "punctured-torus"
// or "both".
Suite suite_zeta(uint64_t seed, int samples, const std::string& surface = "both");

// Plain-text or JSON report with a seed/samples header; byte-identical for
// identical inputs.
std::string render_report(const std::vector<Suite>& suites, uint64_t seed,
                          int samples, bool json);

}  // namespace lgft
