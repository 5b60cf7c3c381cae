#include "lgft/connection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lgft {

namespace {

void add_term(HTensor& t, const HKey& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

// Caps re-pair orphaned symbols, so partner lookup must use the lattice
// involution rather than the '-' naming convention.
EdgeId oriented_symbol(const Lattice& lat, const EdgeId& d) {
    if (lat.orientation.count(d)) return d;
    EdgeId f = lat.involution.at(d);
    if (lat.orientation.count(f)) return f;
    throw NamedError("UnknownEdge", d);
}

// Contract leg with a linear functional on basis elements.
template <typename Fn>
HTensor contract_leg(const HTensor& t, int leg, Fn&& weight) {
    HTensor out;
    for (const auto& [k, c] : t) {
        Rat w = weight(k[static_cast<size_t>(leg)]);
        if (w == 0) continue;
        HKey nk;
        nk.reserve(k.size() - 1);
        for (size_t i = 0; i < k.size(); ++i)
            if (static_cast<int>(i) != leg) nk.push_back(k[i]);
        add_term(out, nk, c * w);
    }
    return out;
}

// Merge legs la and lb into la via a basis-pair product.
template <typename Fn>
HTensor merge_legs(const FiniteHopf& h, const HTensor& t, int la, int lb, Fn&& product) {
    HTensor out;
    for (const auto& [k, c] : t) {
        HElt fused = product(k[static_cast<size_t>(la)], k[static_cast<size_t>(lb)]);
        HKey nk;
        nk.reserve(k.size() - 1);
        for (size_t i = 0; i < k.size(); ++i)
            if (static_cast<int>(i) != lb) nk.push_back(k[i]);
        size_t pa = static_cast<size_t>(la < lb ? la : la - 1);
        for (const auto& [j, cf] : fused) {
            HKey fk = nk;
            fk[pa] = j;
            add_term(out, fk, c * cf);
        }
    }
    (void)h;
    return out;
}

}  // namespace

ConnectionState ConnectionState::from_assignment(const FiniteHopf& h, const Lattice& lat,
                                                 const std::map<EdgeId, HElt>& factors) {
    ConnectionState st;
    st.backend = &h;
    st.lattice = lat;
    st.tensor = HTensor{{HKey{}, Rat(1)}};
    for (const EdgeId& e : lat.orientation) {
        st.index.push_back(e);
        auto it = factors.find(e);
        const HElt& f = it != factors.end() ? it->second : h.one;
        st.tensor = h.tensor_product(st.tensor, h.tensor_of(f));
    }
    return st;
}

ConnectionState ConnectionState::unit(const FiniteHopf& h, const Lattice& lat) {
    return from_assignment(h, lat, {});
}

int ConnectionState::leg_of(const EdgeId& oriented) const {
    auto it = std::find(index.begin(), index.end(), oriented);
    return it == index.end() ? -1 : static_cast<int>(it - index.begin());
}

ConnectionState ConnectionState::canonical() const {
    std::vector<size_t> order(index.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return index[a] < index[b]; });
    ConnectionState out = *this;
    out.tensor.clear();
    for (size_t i = 0; i < order.size(); ++i) out.index[i] = index[order[i]];
    for (const auto& [k, c] : tensor) {
        HKey nk(k.size());
        for (size_t i = 0; i < order.size(); ++i) nk[i] = k[order[i]];
        add_term(out.tensor, nk, c);
    }
    return out;
}

bool ConnectionState::equals(const ConnectionState& o) const {
    if (backend != o.backend) return false;
    ConnectionState a = canonical(), b = o.canonical();
    return a.index == b.index && a.tensor == b.tensor;
}

std::string ConnectionState::to_string() const {
    ConnectionState c = canonical();
    std::ostringstream os;
    if (c.tensor.empty()) return "0";
    bool first = true;
    for (const auto& [k, coeff] : c.tensor) {
        if (!first) os << " + ";
        first = false;
        os << coeff.get_str() << "*(";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << " , ";
            os << c.index[i] << ":" << backend->labels[static_cast<size_t>(k[i])];
        }
        os << ")";
    }
    return os.str();
}

GaugeElement GaugeElement::from_assignment(const FiniteHopf& h, const Lattice& lat,
                                           const std::map<std::string, HElt>& factors) {
    GaugeElement g;
    g.backend = &h;
    g.tensor = HTensor{{HKey{}, Rat(1)}};
    for (const auto& v : lat.vertices) {
        g.vertices.push_back(v.name);
        auto it = factors.find(v.name);
        const HElt& f = it != factors.end() ? it->second : h.one;
        g.tensor = h.tensor_product(g.tensor, h.tensor_of(f));
    }
    return g;
}

GaugeElement GaugeElement::unit(const FiniteHopf& h, const Lattice& lat) {
    return from_assignment(h, lat, {});
}

int GaugeElement::leg_of(const std::string& vertex) const {
    auto it = std::find(vertices.begin(), vertices.end(), vertex);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

ConnectionState gauge_act(const GaugeElement& y, const ConnectionState& x) {
    const FiniteHopf& h = *x.backend;
    if (y.backend != x.backend) throw NamedError("LatticeMismatch", "different backends");
    const Lattice& lat = x.lattice;
    if (y.vertices.size() != lat.vertices.size())
        throw NamedError("LatticeMismatch", "vertex count");

    ConnectionState out = x;
    out.tensor.clear();
    for (const auto& [gkey, gc] : y.tensor) {
        // Expand every vertex factor into one Sweedler leg per dart.
        HTensor expanded{{HKey{}, gc}};
        for (const auto& v : lat.vertices) {
            int leg = -1;
            for (size_t i = 0; i < y.vertices.size(); ++i)
                if (y.vertices[i] == v.name) leg = static_cast<int>(i);
            if (leg < 0) throw NamedError("LatticeMismatch", v.name);
            HElt factor{{gkey[static_cast<size_t>(leg)], Rat(1)}};
            int n = static_cast<int>(v.order.size());
            if (n == 0) {
                Rat e = h.eps(factor);
                HTensor scaled;
                for (const auto& [k, c] : expanded) add_term(scaled, k, c * e);
                expanded = std::move(scaled);
            } else {
                expanded = h.tensor_product(expanded, h.coproduct_power(factor, n));
            }
        }
        for (const auto& [ekey, ec] : expanded) {
            HTensor t;
            for (const auto& [k, c] : x.tensor) add_term(t, k, c * ec);
            size_t pos = 0;
            for (const auto& v : lat.vertices)
                for (const EdgeId& d : v.order) {
                    HElt leg_elt{{ekey[pos], Rat(1)}};
                    ++pos;
                    int l = out.leg_of(oriented_symbol(lat, d));
                    if (lat.orientation.count(d))
                        t = h.leg_lmul(t, l, leg_elt);
                    else
                        t = h.leg_rmul(t, l, h.S(leg_elt));
                }
            for (const auto& [k, c] : t) add_term(out.tensor, k, c);
        }
    }
    return out;
}

GaugeElement apply_gauge_map(const GaugeMap& gm, const Lattice& range,
                             const GaugeElement& y) {
    const FiniteHopf& h = *y.backend;
    GaugeElement out;
    out.backend = y.backend;
    for (const auto& v : range.vertices) out.vertices.push_back(v.name);

    for (const auto& [gkey, gc] : y.tensor) {
        // targets[i] = output leg fed by expanded leg i, built per domain vertex.
        std::vector<int> targets;
        HTensor expanded{{HKey{}, gc}};
        for (size_t vi = 0; vi < y.vertices.size(); ++vi) {
            auto it = gm.find(y.vertices[vi]);
            const std::vector<std::string> dests =
                it != gm.end() ? it->second : std::vector<std::string>{y.vertices[vi]};
            HElt factor{{gkey[vi], Rat(1)}};
            if (dests.empty()) {
                Rat e = h.eps(factor);
                HTensor scaled;
                for (const auto& [k, c] : expanded) add_term(scaled, k, c * e);
                expanded = std::move(scaled);
            } else {
                expanded = h.tensor_product(
                    expanded, h.coproduct_power(factor, static_cast<int>(dests.size())));
                for (const auto& name : dests) {
                    int l = -1;
                    for (size_t i = 0; i < out.vertices.size(); ++i)
                        if (out.vertices[i] == name) l = static_cast<int>(i);
                    if (l < 0) throw NamedError("LatticeMismatch", name);
                    targets.push_back(l);
                }
            }
        }
        for (const auto& [ekey, ec] : expanded) {
            HKey nk(out.vertices.size(), -1);
            for (size_t i = 0; i < ekey.size(); ++i) nk[static_cast<size_t>(targets[i])] = ekey[i];
            bool full = true;
            for (int v : nk)
                if (v < 0) full = false;
            if (!full) throw NamedError("LatticeMismatch", "uncovered range vertex");
            add_term(out.tensor, nk, ec);
        }
    }
    return out;
}

namespace {

void apply_crossing_leg(const FiniteHopf& h, HTensor& t, const Lattice& lat,
                        const EdgeId& dart, int leg, const HElt& r_leg) {
    if (lat.orientation.count(dart))
        t = h.leg_lmul(t, leg, r_leg);
    else
        t = h.leg_rmul(t, leg, h.S(r_leg));
}

}  // namespace

EvalResult evaluate_multitangle(const MultitangleIR& mt, const ConnectionState& x) {
    const FiniteHopf& h = *x.backend;
    if (!(mt.domain == x.lattice)) throw NamedError("LatticeMismatch", "domain");

    ConnectionState cur = x;
    GaugeMap gm;
    for (const auto& v : mt.domain.vertices) gm[v.name] = {v.name};

    for (size_t si = 0; si < mt.steps.size(); ++si) {
        const ElementaryDiagram& d = mt.steps[si];
        const Lattice& next = mt.chain[si];
        const Lattice& lat = cur.lattice;

        switch (d.kind) {
            case ElementaryDiagram::Kind::Identity:
                break;

            case ElementaryDiagram::Kind::Cut:
                for (auto& [dom, dests] : gm)
                    for (size_t i = 0; i < dests.size(); ++i)
                        if (dests[i] == d.vertex) {
                            dests[i] = d.vertex + "'";
                            dests.insert(dests.begin() + static_cast<long>(i) + 1,
                                         d.vertex + "''");
                            break;
                        }
                break;

            case ElementaryDiagram::Kind::Crossing: {
                int l1 = cur.leg_of(oriented_symbol(lat, d.a));
                int l2 = cur.leg_of(oriented_symbol(lat, d.b));
                HTensor out;
                for (const auto& [rk, rc] : h.R) {
                    HElt first{{rk[0], Rat(1)}}, second{{rk[1], Rat(1)}};
                    HElt left_leg = d.sign > 0 ? first : second;
                    HElt right_leg = d.sign > 0 ? second : h.S(first);
                    HTensor t;
                    for (const auto& [k, c] : cur.tensor) add_term(t, k, c * rc);
                    apply_crossing_leg(h, t, lat, d.a, l1, left_leg);
                    apply_crossing_leg(h, t, lat, d.b, l2, right_leg);
                    for (const auto& [k, c] : t) add_term(out, k, c);
                }
                cur.tensor = std::move(out);
                break;
            }

            case ElementaryDiagram::Kind::Twist: {
                // A curl beads the ribbon scalar onto the strand: theta^-1 for a
                // positive crossing, theta for a negative one.
                int l = cur.leg_of(oriented_symbol(lat, d.a));
                const HElt& bead = d.sign > 0 ? h.theta_inv : h.theta;
                apply_crossing_leg(h, cur.tensor, lat, d.a, l, bead);
                break;
            }

            case ElementaryDiagram::Kind::Triad: {
                if (!lat.orientation.count(d.a))
                    throw NamedError("InvalidParameters",
                                     "triad acts on an oriented symbol: " + d.a);
                int l = cur.leg_of(d.a);
                cur.tensor = h.leg_coproduct(cur.tensor, l);
                cur.index[static_cast<size_t>(l)] = triad_prime(d.a);
                cur.index.insert(cur.index.begin() + l + 1, triad_double_prime(d.a));
                break;
            }

            case ElementaryDiagram::Kind::Cap: {
                if (d.b == lat.involution.at(d.a)) {
                    EdgeId o = oriented_symbol(lat, d.a);
                    int l = cur.leg_of(o);
                    if (lat.orientation.count(d.a))  // pair (e, -e): tr(x k)
                        cur.tensor = h.leg_rmul(cur.tensor, l, h.charm);
                    cur.tensor = contract_leg(cur.tensor, l, [&](int i) {
                        return h.trace_regular(HElt{{i, Rat(1)}});
                    });
                    cur.index.erase(cur.index.begin() + l);
                } else {
                    int l1 = cur.leg_of(oriented_symbol(lat, d.a));
                    int l2 = cur.leg_of(oriented_symbol(lat, d.b));
                    bool left_up = !lat.orientation.count(d.a);
                    if (left_up) {
                        // left strand runs through upward: fused factor x y
                        cur.tensor = merge_legs(h, cur.tensor, l1, l2, [&](int i, int j) {
                            return h.mul(HElt{{i, Rat(1)}}, HElt{{j, Rat(1)}});
                        });
                    } else {
                        // downward through-strand: fused factor y k x
                        cur.tensor = merge_legs(h, cur.tensor, l1, l2, [&](int i, int j) {
                            return h.mul(h.mul(HElt{{j, Rat(1)}}, h.charm),
                                         HElt{{i, Rat(1)}});
                        });
                    }
                    EdgeId ia = lat.involution.at(d.a), ib = lat.involution.at(d.b);
                    EdgeId fused = next.orientation.count(ia) ? ia : ib;
                    size_t pa = static_cast<size_t>(l1 < l2 ? l1 : l1 - 1);
                    cur.index.erase(cur.index.begin() + l2);
                    cur.index[pa] = fused;
                }
                break;
            }

            case ElementaryDiagram::Kind::Cup: {
                const HElt& value = edge_is_neg(d.a) ? h.charm_inv : h.one;
                cur.tensor = h.tensor_product(cur.tensor, h.tensor_of(value));
                cur.index.push_back(edge_base(d.a));
                break;
            }

            case ElementaryDiagram::Kind::Stump: {
                int l = cur.leg_of(oriented_symbol(lat, d.a));
                cur.tensor = contract_leg(cur.tensor, l, [&](int i) {
                    return h.counit_vec[static_cast<size_t>(i)];
                });
                cur.index.erase(cur.index.begin() + l);
                break;
            }

            case ElementaryDiagram::Kind::Switch: {
                if (!lat.orientation.count(d.a))
                    throw NamedError("InvalidParameters",
                                     "switch acts on an oriented symbol: " + d.a);
                int l = cur.leg_of(d.a);
                cur.tensor = h.leg_rmul(cur.tensor, l, h.charm);
                cur.tensor = h.leg_S(cur.tensor, l);
                cur.index[static_cast<size_t>(l)] = lat.involution.at(d.a);
                break;
            }
        }

        // Vertices that vanished from the lattice act by the counit.
        for (auto& [dom, dests] : gm)
            std::erase_if(dests, [&](const std::string& name) {
                return next.vertex_index(name) < 0;
            });
        cur.lattice = next;
    }
    return {cur, gm};
}

std::vector<ConnectionState> basis_connections(const FiniteHopf& h, const Lattice& lat) {
    size_t rank = lat.orientation.size();
    std::vector<ConnectionState> out;
    std::vector<int> tuple(rank, 0);
    while (true) {
        ConnectionState st;
        st.backend = &h;
        st.lattice = lat;
        for (const EdgeId& e : lat.orientation) st.index.push_back(e);
        HKey k(tuple.begin(), tuple.end());
        st.tensor[k] = Rat(1);
        out.push_back(std::move(st));
        size_t i = 0;
        for (; i < rank; ++i) {
            if (++tuple[i] < h.dim) break;
            tuple[i] = 0;
        }
        if (i == rank) break;
    }
    if (rank == 0 && out.empty()) out.push_back(ConnectionState::unit(h, lat));
    return out;
}

}  // namespace lgft
