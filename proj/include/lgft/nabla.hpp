#pragma once

#include <optional>
#include <set>

#include "lgft/connection.hpp"

namespace lgft {

// Crossing sign used when a double-prime strand passes over a prime strand
// in the comultiplication multitangle. Pinned by the coalgebra-morphism
// property of the switch over a noncocommutative backend.
inline constexpr int kDoublePrimeOverSign = 1;

// The comultiplication multitangle: per vertex, triads on every edge, prime
// strands moved left of double-prime strands (double-prime crossing over),
// then a cut separating the copies. Restricting to a vertex subset comultiplies
// only edges incident to those vertices (used for iterating on one copy).
MultitangleIR nabla(const Lattice& lat,
                    const std::optional<std::set<std::string>>& vertices = std::nullopt);

// Renames edges and vertices (pure bookkeeping, no induced map).
ConnectionState relabel_connection(const ConnectionState& x,
                                   const std::map<EdgeId, EdgeId>& edge_map,
                                   const std::map<std::string, std::string>& vertex_map);
Lattice relabel_lattice(const Lattice& lat, const std::map<EdgeId, EdgeId>& edge_map,
                        const std::map<std::string, std::string>& vertex_map);

}  // namespace lgft
