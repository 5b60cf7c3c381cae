#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgft/diagram.hpp"
#include "lgft/finite_hopf.hpp"
#include "lgft/lattice.hpp"

namespace lgft {

// Element of the tensor power of the backend algebra with one leg per
// oriented edge of the lattice. `index[l]` names the oriented symbol whose
// factor is tensor leg l; leg order is bookkeeping, not data.
struct ConnectionState {
    const FiniteHopf* backend = nullptr;
    Lattice lattice;
    std::vector<EdgeId> index;
    HTensor tensor;

    static ConnectionState from_assignment(const FiniteHopf& h, const Lattice& lat,
                                           const std::map<EdgeId, HElt>& factors);
    static ConnectionState unit(const FiniteHopf& h, const Lattice& lat);

    int leg_of(const EdgeId& oriented) const;  // -1 if absent
    ConnectionState canonical() const;         // legs sorted by symbol
    bool equals(const ConnectionState& o) const;
    std::string to_string() const;
};

// Gauge algebra element: one leg per vertex of the lattice.
struct GaugeElement {
    const FiniteHopf* backend = nullptr;
    std::vector<std::string> vertices;
    HTensor tensor;

    static GaugeElement from_assignment(const FiniteHopf& h, const Lattice& lat,
                                        const std::map<std::string, HElt>& factors);
    static GaugeElement unit(const FiniteHopf& h, const Lattice& lat);
    int leg_of(const std::string& vertex) const;
};

// Left action of the gauge algebra: each edge factor is multiplied on the
// left by the Sweedler leg at its initial vertex and on the right by S of
// the leg at its terminal vertex, legs taken in cilial order.
ConnectionState gauge_act(const GaugeElement& y, const ConnectionState& x);

// How a multitangle transports gauge data: each domain vertex maps to an
// ordered list of range vertices (empty = counit, length > 1 = iterated
// coproduct distributed across the pieces).
using GaugeMap = std::map<std::string, std::vector<std::string>>;

GaugeElement apply_gauge_map(const GaugeMap& gm, const Lattice& range,
                             const GaugeElement& y);

struct EvalResult {
    ConnectionState state;
    GaugeMap gauge_map;
};

// Applies each elementary action in order over a finite backend.
EvalResult evaluate_multitangle(const MultitangleIR& mt, const ConnectionState& x);

// All basis connection states of the lattice, in lexicographic leg order.
std::vector<ConnectionState> basis_connections(const FiniteHopf& h, const Lattice& lat);

}  // namespace lgft
