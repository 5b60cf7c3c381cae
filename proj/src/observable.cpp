#include "lgft/observable.hpp"

#include <algorithm>

#include "lgft/linalg.hpp"
#include "lgft/nabla.hpp"

namespace lgft {

namespace {

std::vector<EdgeId> sorted_index(const Lattice& lat) {
    return {lat.orientation.begin(), lat.orientation.end()};
}

size_t flat_size(int dim, size_t rank) {
    size_t n = 1;
    for (size_t i = 0; i < rank; ++i) n *= static_cast<size_t>(dim);
    return n;
}

size_t flat_pos(int dim, const HKey& k) {
    size_t pos = 0;
    for (size_t i = k.size(); i-- > 0;)
        pos = pos * static_cast<size_t>(dim) + static_cast<size_t>(k[i]);
    return pos;
}

std::vector<Rat> flatten(const ConnectionState& s) {
    ConnectionState c = s.canonical();
    std::vector<Rat> v(flat_size(s.backend->dim, c.index.size()), Rat(0));
    for (const auto& [k, coeff] : c.tensor) v[flat_pos(s.backend->dim, k)] += coeff;
    return v;
}

}  // namespace

GaugeField GaugeField::zero(const FiniteHopf& h, const Lattice& lat) {
    GaugeField f;
    f.backend = &h;
    f.lattice = lat;
    f.index = sorted_index(lat);
    return f;
}

GaugeField GaugeField::from_function(
    const FiniteHopf& h, const Lattice& lat,
    const std::function<Rat(const ConnectionState&)>& fn) {
    GaugeField f = zero(h, lat);
    for (const auto& b : basis_connections(h, lat)) {
        Rat v = fn(b);
        if (v != 0) f.values[b.tensor.begin()->first] = v;
    }
    return f;
}

Rat GaugeField::eval(const ConnectionState& x) const {
    ConnectionState c = x.canonical();
    if (x.backend != backend || c.index != index)
        throw NamedError("LatticeMismatch", "field evaluated off its lattice");
    Rat out(0);
    for (const auto& [k, coeff] : c.tensor) {
        auto it = values.find(k);
        if (it != values.end()) out += coeff * it->second;
    }
    return out;
}

bool GaugeField::equals(const GaugeField& o) const {
    return backend == o.backend && index == o.index && values == o.values;
}

GaugeField GaugeField::operator+(const GaugeField& o) const {
    GaugeField f = *this;
    for (const auto& [k, v] : o.values) {
        f.values[k] += v;
        if (f.values[k] == 0) f.values.erase(k);
    }
    return f;
}

GaugeField GaugeField::operator-(const GaugeField& o) const {
    return *this + o.scaled(Rat(-1));
}

GaugeField GaugeField::scaled(const Rat& c) const {
    GaugeField f = zero(*backend, lattice);
    if (c == 0) return f;
    for (const auto& [k, v] : values) f.values[k] = v * c;
    return f;
}

HElt haar_integral(const FiniteHopf& h) {
    size_t d = static_cast<size_t>(h.dim);
    // Rows: coefficient of basis i in  e_b * x - eps(e_b) x  for each b, i.
    RatMatrix a(d * d, std::vector<Rat>(d, Rat(0)));
    for (int b = 0; b < h.dim; ++b) {
        Rat eb = h.counit_vec[static_cast<size_t>(b)];
        for (int j = 0; j < h.dim; ++j) {
            HElt col = h.mul(HElt{{b, Rat(1)}}, HElt{{j, Rat(1)}});
            for (const auto& [i, c] : col)
                a[static_cast<size_t>(b) * d + static_cast<size_t>(i)]
                 [static_cast<size_t>(j)] += c;
            a[static_cast<size_t>(b) * d + static_cast<size_t>(j)]
             [static_cast<size_t>(j)] -= eb;
        }
    }
    for (const auto& vec : nullspace(a)) {
        HElt cand;
        for (size_t j = 0; j < d; ++j)
            if (vec[j] != 0) cand[static_cast<int>(j)] = vec[j];
        Rat e = h.eps(cand);
        if (e != 0) {
            HElt out;
            for (auto& [j, c] : cand) out[j] = c / e;
            return out;
        }
    }
    throw NamedError("HaarNotFound", h.name);
}

GaugeField epsilon_field(const FiniteHopf& h, const Lattice& lat) {
    return GaugeField::from_function(h, lat, [&](const ConnectionState& b) {
        Rat v(1);
        for (int i : b.tensor.begin()->first) v *= h.counit_vec[static_cast<size_t>(i)];
        return v;
    });
}

bool is_observable(const GaugeField& f) {
    const FiniteHopf& h = *f.backend;
    auto basis = basis_connections(h, f.lattice);
    for (const Vertex& v : f.lattice.vertices)
        for (int i = 0; i < h.dim; ++i) {
            GaugeElement y = GaugeElement::from_assignment(h, f.lattice,
                                                           {{v.name, HElt{{i, Rat(1)}}}});
            Rat ey = h.counit_vec[static_cast<size_t>(i)];
            for (const auto& b : basis)
                if (f.eval(gauge_act(y, b)) != ey * f.eval(b)) return false;
        }
    return true;
}

GaugeField project_observable(const GaugeField& f) {
    const FiniteHopf& h = *f.backend;
    HElt lam = haar_integral(h);
    std::map<std::string, HElt> assign;
    for (const Vertex& v : f.lattice.vertices) assign[v.name] = lam;
    GaugeElement y = GaugeElement::from_assignment(h, f.lattice, assign);
    return GaugeField::from_function(h, f.lattice, [&](const ConnectionState& b) {
        return f.eval(gauge_act(y, b));
    });
}

GaugeField star(const GaugeField& f, const GaugeField& g) {
    const FiniteHopf& h = *f.backend;
    if (g.backend != f.backend || g.index != f.index)
        throw NamedError("LatticeMismatch", "star factors live on different lattices");
    MultitangleIR mt = nabla(f.lattice);
    GaugeField out = GaugeField::zero(h, f.lattice);
    size_t n = f.index.size();
    for (const auto& b : basis_connections(h, f.lattice)) {
        EvalResult res = evaluate_multitangle(mt, b);
        std::vector<int> fleg(n), gleg(n);
        for (size_t i = 0; i < n; ++i) {
            fleg[i] = res.state.leg_of(triad_prime(f.index[i]));
            gleg[i] = res.state.leg_of(triad_double_prime(f.index[i]));
        }
        Rat acc(0);
        for (const auto& [k, c] : res.state.tensor) {
            HKey fk(n), gk(n);
            for (size_t i = 0; i < n; ++i) {
                fk[i] = k[static_cast<size_t>(fleg[i])];
                gk[i] = k[static_cast<size_t>(gleg[i])];
            }
            auto fit = f.values.find(fk);
            if (fit == f.values.end()) continue;
            auto git = g.values.find(gk);
            if (git == g.values.end()) continue;
            acc += c * fit->second * git->second;
        }
        if (acc != 0) out.values[b.tensor.begin()->first] = acc;
    }
    return out;
}

bool gauge_equivalent(const ConnectionState& x, const ConnectionState& y) {
    const FiniteHopf& h = *x.backend;
    if (y.backend != x.backend || !(y.lattice == x.lattice))
        throw NamedError("LatticeMismatch", "states live on different lattices");
    std::vector<Rat> rhs = flatten(x);
    {
        std::vector<Rat> ry = flatten(y);
        for (size_t i = 0; i < rhs.size(); ++i) rhs[i] -= ry[i];
    }
    std::vector<std::vector<Rat>> cols;
    auto basis = basis_connections(h, x.lattice);
    for (const Vertex& v : x.lattice.vertices)
        for (int i = 0; i < h.dim; ++i) {
            GaugeElement g = GaugeElement::from_assignment(h, x.lattice,
                                                           {{v.name, HElt{{i, Rat(1)}}}});
            Rat eg = h.counit_vec[static_cast<size_t>(i)];
            for (const auto& b : basis) {
                std::vector<Rat> col = flatten(gauge_act(g, b));
                std::vector<Rat> cb = flatten(b);
                bool nonzero = false;
                for (size_t r = 0; r < col.size(); ++r) {
                    col[r] -= eg * cb[r];
                    if (col[r] != 0) nonzero = true;
                }
                if (nonzero) cols.push_back(std::move(col));
            }
        }
    size_t rows = rhs.size();
    RatMatrix a(rows, std::vector<Rat>(cols.size(), Rat(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < rows; ++r) a[r][c] = cols[c][r];
    return solve_linear(std::move(a), std::move(rhs)).has_value();
}

}  // namespace lgft
