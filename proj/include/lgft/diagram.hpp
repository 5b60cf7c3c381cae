#pragma once

#include <string>
#include <vector>

#include "lgft/lattice.hpp"

namespace lgft {

// One elementary event of a multitangle. Parameters name edges and vertices
// of the lattice the event acts on; derived symbols get prime suffixes
// (triad e -> e', e'') or composite names (cap fusion).
struct ElementaryDiagram {
    enum class Kind { Identity, Crossing, Twist, Triad, Cap, Cup, Stump, Switch, Cut };
    Kind kind = Kind::Identity;
    int sign = 0;       // crossing/twist: +1 or -1
    EdgeId a, b;        // crossing/cap: adjacent pair; triad/stump/switch: a; cup: new edge a
    std::string vertex;  // cut/cup target
    int position = 0;   // cut: split point; cup: insertion index

    static ElementaryDiagram identity() { return {}; }
    static ElementaryDiagram crossing(int sign, EdgeId left, EdgeId right);
    static ElementaryDiagram twist(int sign, EdgeId strand);
    static ElementaryDiagram triad(EdgeId e);
    static ElementaryDiagram cap(EdgeId left, EdgeId right);
    static ElementaryDiagram cup(std::string vertex, int position, EdgeId fresh);
    static ElementaryDiagram stump(EdgeId e);
    static ElementaryDiagram switch_edge(EdgeId e);
    static ElementaryDiagram cut(std::string vertex, int position);

    std::string to_string() const;
    // One step per line, e.g. `triad e1`, `cross + e2 e4`, `cut v1 2`.
    static ElementaryDiagram parse_line(const std::string& line);

    bool operator==(const ElementaryDiagram& o) const = default;
};

// Names of the derived edges a triad on d introduces.
EdgeId triad_prime(const EdgeId& d);
EdgeId triad_double_prime(const EdgeId& d);

// The range lattice of one event. Throws NamedError("InvalidParameters", ...)
// when the event does not apply.
Lattice diagram_signature(const Lattice& lat, const ElementaryDiagram& d);

struct MultitangleIR {
    Lattice domain;
    std::vector<ElementaryDiagram> steps;
    std::vector<Lattice> chain;  // chain[i] = lattice after steps[i]

    const Lattice& range() const { return chain.empty() ? domain : chain.back(); }
};

// Validates the chain step by step; throws NamedError("ChainBreak", "<index>: ...")
// at the first step whose parameters do not fit its intermediate lattice.
MultitangleIR compose_multitangle(const Lattice& domain,
                                  const std::vector<ElementaryDiagram>& steps);

std::vector<ElementaryDiagram> parse_multitangle(const std::string& text);

}  // namespace lgft
