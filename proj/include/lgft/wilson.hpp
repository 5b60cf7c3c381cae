#pragma once

#include "lgft/connection.hpp"
#include "lgft/observable.hpp"
#include "lgft/uq_sl2.hpp"

namespace lgft {

// One strand of a loop diagram drawn on the fattened lattice. The word lists
// directed edges in traversal order; passes[i] numbers which parallel copy of
// the edge the i-th letter runs along (1-based; 0 = assign automatically in
// traversal order).
struct TangleComponent {
    std::string name;
    bool closed = true;
    std::vector<EdgeId> word;
    std::vector<int> passes;
};

// A crossing inside a vertex disk between two cilially adjacent darts of the
// refined (copy-split, reoriented) lattice; applied in listed order.
struct TangleCrossing {
    std::string vertex;
    int sign = 1;
    EdgeId a, b;
};

struct QTangle {
    std::vector<TangleComponent> components;
    std::vector<TangleCrossing> crossings;
    std::map<std::string, std::string> colors;  // default "regular"

    const TangleComponent* find(const std::string& name) const;

    // Line format:
    //   component <name> closed|open : <directed edge word, optional @pass>
    //   vertex <v>: cross <+|-> <dartA> <dartB>
    //   color <component> <label>
    static QTangle parse(const std::string& text);
    std::string to_string() const;
};

// Compiled form: the copy-splitting, reorientation, in-vertex crossings and
// strand fusions as one machine program, plus the final strand closures kept
// aside so the per-component trace can be colored.
struct TraceProgram {
    Lattice domain;
    MultitangleIR ir;
    struct Closure {
        std::string component;
        EdgeId a, b;  // the surviving involutive pair of the fused strand
    };
    std::vector<Closure> closures;
    std::map<std::string, std::string> colors;
    // base oriented edge -> parallel copy names in cilial order at its source
    std::vector<std::pair<EdgeId, std::vector<EdgeId>>> splits;
};

// Throws NamedError("MalformedTangle", ...) when the words do not trace
// connected strands or the crossing list cannot be applied in order.
TraceProgram compile_qtangle(const Lattice& lat, const QTangle& L);

// Finite-backend evaluation on a basis connection. Colors: "regular" uses the
// backend trace twisted by the charm; "chi:<c0,c1,...>" contracts against the
// listed basis functional. Throws NamedError("ColorMismatch", ...) otherwise.
Rat eval_wilson(const TraceProgram& p, const ConnectionState& x);

// The induced observable: value of eval_wilson on every basis connection.
GaugeField wilson_field(const FiniteHopf& h, const Lattice& lat, const QTangle& L);

// Fundamental-representation evaluation with symbolic edge elements (absent
// edges carry 1). All closed components must be colored "fundamental" (or be
// uncolored). Exact Laurent output.
Laurent eval_wilson_uq(const TraceProgram& p, const std::map<EdgeId, UqElement>& conn);

// Lays b over a: b's strands run along fresh parallel copies right of a's and
// cross over a's strands inside vertices. Inputs may not both carry explicit
// crossings at a shared vertex.
QTangle stack_product(const Lattice& lat, const QTangle& a, const QTangle& b);

// Reverses the traversal direction of one component.
QTangle reverse_component(const QTangle& L, const std::string& component);

// Symbolic traversal word per closed component: the trace argument as a
// space-separated product of edge letters (x<n>, with copy primes), charm
// insertions k, reversed-pass factors S(.. k) and crossing legs s<i>/t<i>
// numbered in listing order. The final charm of the trace, when present, is
// the trailing k.
std::map<std::string, std::string> holonomy_words(const Lattice& lat, const QTangle& L);

}  // namespace lgft
