#pragma once

#include <functional>

#include "lgft/connection.hpp"

namespace lgft {

// Linear functional on connection states, stored by its values on the basis
// connections. `index` is the oriented edge set in sorted order; a basis key
// lists one backend basis label per edge in that order.
struct GaugeField {
    const FiniteHopf* backend = nullptr;
    Lattice lattice;
    std::vector<EdgeId> index;
    std::map<HKey, Rat> values;

    static GaugeField zero(const FiniteHopf& h, const Lattice& lat);
    // Samples fn on every basis connection.
    static GaugeField from_function(const FiniteHopf& h, const Lattice& lat,
                                    const std::function<Rat(const ConnectionState&)>& fn);

    Rat eval(const ConnectionState& x) const;
    bool equals(const GaugeField& o) const;

    GaugeField operator+(const GaugeField& o) const;
    GaugeField operator-(const GaugeField& o) const;
    GaugeField scaled(const Rat& c) const;
};

// Normalized left integral of the backend (two-sided for the built-in
// backends); throws HaarNotFound when the counit vanishes on the integral
// space.
HElt haar_integral(const FiniteHopf& h);

// The counit field x -> product of counits of the edge factors.
GaugeField epsilon_field(const FiniteHopf& h, const Lattice& lat);

// f is gauge invariant: f(y.x) = eps(y) f(x) for all gauge y.
bool is_observable(const GaugeField& f);

// Averages over the gauge action with one integral per vertex. Idempotent,
// lands on observables, fixes them.
GaugeField project_observable(const GaugeField& f);

// Convolution against the comultiplication multitangle: (f*g)(x) applies f to
// the first copy and g to the second.
GaugeField star(const GaugeField& f, const GaugeField& g);

// x - y lies in the span of { y.b - eps(y) b } over basis gauge elements
// supported at a single vertex.
bool gauge_equivalent(const ConnectionState& x, const ConnectionState& y);

}  // namespace lgft
