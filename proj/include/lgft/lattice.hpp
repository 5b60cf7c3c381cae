#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgft/errors.hpp"

namespace lgft {

// An edge symbol names one of the two directed sides of a geometric edge.
// The partner carries a leading '-': edge_inv("e1") == "-e1".
using EdgeId = std::string;

inline bool edge_is_neg(const EdgeId& e) { return !e.empty() && e[0] == '-'; }
inline EdgeId edge_inv(const EdgeId& e) {
    return edge_is_neg(e) ? e.substr(1) : "-" + e;
}
inline EdgeId edge_base(const EdgeId& e) { return edge_is_neg(e) ? e.substr(1) : e; }

struct Vertex {
    std::string name;
    std::vector<EdgeId> order;  // ciliation: linear order starting at the cilium
};

// Combinatorial lattice: edge symbols with a fixed-point-free involution,
// ciliated vertices partitioning the symbols, and an orientation picking one
// symbol per involution orbit.
struct Lattice {
    std::vector<Vertex> vertices;
    std::map<EdgeId, EdgeId> involution;
    std::set<EdgeId> orientation;

    // Fills the involution from the '-' naming convention over the symbols
    // present in the vertex lists.
    void derive_involution();

    std::vector<EdgeId> all_edges() const;  // in vertex/position order

    // (vertex index, position); throws if absent.
    std::pair<int, int> locate(const EdgeId& e) const;
    bool has_edge(const EdgeId& e) const;
    const Vertex& vertex(const std::string& name) const;
    int vertex_index(const std::string& name) const;  // -1 if absent

    // Throws NamedError with kind FixedPointInvolution, NotAPartition or
    // BadOrientation, naming the offending symbol.
    void validate() const;

    bool operator==(const Lattice& o) const;

    std::string to_string() const;
    // Line format: `vertex <name>: <edge list>` / `orient <edge list>`.
    static Lattice parse(const std::string& text);
};

struct EnvelopeStats {
    long boundary_count = 0;
    long euler_characteristic = 0;
    long genus = 0;
    long components = 0;

    bool operator==(const EnvelopeStats& o) const = default;
};

// Boundary arcs traced on the fattened graph; genus recovered from the Euler
// characteristic. Requires a valid lattice.
EnvelopeStats envelope_stats(const Lattice& lat);

}  // namespace lgft
