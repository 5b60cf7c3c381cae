#pragma once

#include "lgft/wilson.hpp"

namespace lgft {

// Free-homotopy class of a closed curve on the fattened lattice: cyclic edge
// word with spanning-tree letters removed, freely reduced, then minimized over
// rotation and reversal. Empty means contractible (the envelope has boundary,
// so its fundamental group is free and this test is exact).
using CurveClass = std::vector<EdgeId>;
CurveClass curve_class(const Lattice& lat, const std::vector<EdgeId>& word);

// Formal sum of crossingless, contractible-free multicurves over the Laurent
// ring. Keys are sorted lists of curve classes; `witness` keeps one raw edge
// word per curve from the reduction that produced the term, for re-embedding.
struct SkeinElement {
    struct Term {
        Laurent coeff;
        std::vector<std::vector<EdgeId>> witness;
    };
    std::map<std::vector<CurveClass>, Term> terms;

    void add(const std::vector<CurveClass>& key, const Laurent& c,
             const std::vector<std::vector<EdgeId>>& witness);
    SkeinElement scaled(const Laurent& c) const;
    SkeinElement operator+(const SkeinElement& o) const;
    // Structural equality of keys and coefficients; witnesses are ignored.
    bool equals(const SkeinElement& o) const;
    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;

    static SkeinElement empty_diagram();  // the unit: 1 * (no curves)
};

// Kauffman bracket resolution: each crossing is replaced by
// -t * (A-smoothing) - t^-1 * (B-smoothing) and every contractible component
// is removed with a factor -(t^2 + t^-2). Crossings resolve in list order
// (skein_reduce) or in the given permutation of crossing indices; the result
// is order-independent. The diagram must have closed components only; throws
// NamedError("MalformedTangle", ...).
SkeinElement skein_reduce(const Lattice& lat, const QTangle& diagram);
SkeinElement skein_reduce_ordered(const Lattice& lat, const QTangle& diagram,
                                  const std::vector<size_t>& order);

// A crossingless embedded diagram with the given component words, searched
// over rotations and reversals of each word until one compiles. Throws
// NamedError("Unrealizable", ...) when no representative embeds.
QTangle realize_term(const Lattice& lat,
                     const std::vector<std::vector<EdgeId>>& words);

// Stacks every term of b over every term of a (via stack_product's geometry)
// and reduces.
SkeinElement skein_product(const Lattice& lat, const SkeinElement& a,
                           const SkeinElement& b);

// The observable a skein element maps to: sum of coeff * (-1)^{#curves} times
// the fundamental-representation Wilson value of an embedded representative.
Laurent zeta_eval(const Lattice& lat, const SkeinElement& a,
                  const std::map<EdgeId, UqElement>& conn);

// Dual-path check of one diagram: direct Wilson evaluation with the link sign
// against reduce-then-evaluate term by term.
struct ZetaReport {
    bool equal = false;
    Laurent direct, reduced;
    std::string witness;  // diagram text when the paths disagree
};
ZetaReport zeta_compare(const Lattice& lat, const QTangle& diagram,
                        const std::map<EdgeId, UqElement>& conn);

}  // namespace lgft
