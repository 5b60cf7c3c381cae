#include "lgft/wilson.hpp"

#include <algorithm>
#include <cctype>
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

EdgeId oriented_symbol(const Lattice& lat, const EdgeId& d) {
    if (lat.orientation.count(d)) return d;
    EdgeId f = lat.involution.at(d);
    if (lat.orientation.count(f)) return f;
    throw NamedError("UnknownEdge", d);
}

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

// The parallel copies a multiply-traversed edge splits into, in cilial order
// at the source end; matches iterated splitting of the second output.
std::vector<EdgeId> make_copies(const EdgeId& o, int m) {
    std::vector<EdgeId> out;
    if (m == 1) return {o};
    EdgeId rem = o;
    for (int j = 1; j < m; ++j) {
        out.push_back(triad_prime(rem));
        rem = triad_double_prime(rem);
    }
    out.push_back(rem);
    return out;
}

struct Resolved {
    std::map<EdgeId, int> mult;             // oriented base -> pass count
    std::vector<std::vector<int>> passes;   // per component, per letter
};

EdgeId base_oriented(const Lattice& lat, const EdgeId& d) {
    if (!lat.has_edge(d)) throw NamedError("MalformedTangle", "unknown edge " + d);
    return oriented_symbol(lat, d);
}

Resolved resolve_passes(const Lattice& lat, const QTangle& L) {
    Resolved r;
    std::map<EdgeId, std::set<int>> used;
    for (const auto& c : L.components) {
        if (!c.passes.empty() && c.passes.size() != c.word.size())
            throw NamedError("MalformedTangle", c.name + ": pass list length");
        for (size_t i = 0; i < c.word.size(); ++i) {
            EdgeId o = base_oriented(lat, c.word[i]);
            ++r.mult[o];
            int p = c.passes.empty() ? 0 : c.passes[i];
            if (p > 0 && !used[o].insert(p).second)
                throw NamedError("MalformedTangle",
                                 "pass " + std::to_string(p) + " of " + o + " reused");
        }
    }
    for (const auto& c : L.components) {
        std::vector<int> ps;
        for (size_t i = 0; i < c.word.size(); ++i) {
            EdgeId o = base_oriented(lat, c.word[i]);
            int p = c.passes.empty() ? 0 : c.passes[i];
            if (p == 0) {
                p = 1;
                while (used[o].count(p)) ++p;
                used[o].insert(p);
            }
            if (p > r.mult[o])
                throw NamedError("MalformedTangle",
                                 "pass " + std::to_string(p) + " of " + o + " out of range");
            ps.push_back(p);
        }
        r.passes.push_back(std::move(ps));
    }
    return r;
}

struct StrandPair {
    EdgeId a, b;  // arrival dart at the shared vertex, then departure dart
    std::string component;
};

}  // namespace

const TangleComponent* QTangle::find(const std::string& name) const {
    for (const auto& c : components)
        if (c.name == name) return &c;
    return nullptr;
}

QTangle QTangle::parse(const std::string& text) {
    QTangle out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "component") {
            TangleComponent c;
            std::string kind, colon;
            if (!(ls >> c.name >> kind >> colon) || colon != ":" ||
                (kind != "closed" && kind != "open"))
                throw NamedError("ParseError", "component line: " + line);
            c.closed = kind == "closed";
            std::string tok;
            while (ls >> tok) {
                auto at = tok.find('@');
                int p = 0;
                if (at != std::string::npos) {
                    p = std::stoi(tok.substr(at + 1));
                    tok = tok.substr(0, at);
                }
                c.word.push_back(tok);
                c.passes.push_back(p);
            }
            if (c.word.empty()) throw NamedError("ParseError", "empty component: " + line);
            if (std::all_of(c.passes.begin(), c.passes.end(), [](int p) { return p == 0; }))
                c.passes.clear();
            out.components.push_back(std::move(c));
        } else if (word == "vertex") {
            TangleCrossing x;
            std::string v, cross, sign;
            if (!(ls >> v >> cross >> sign >> x.a >> x.b) || cross != "cross" ||
                (sign != "+" && sign != "-"))
                throw NamedError("ParseError", "vertex line: " + line);
            if (v.empty() || v.back() != ':')
                throw NamedError("ParseError", "vertex line: " + line);
            x.vertex = v.substr(0, v.size() - 1);
            x.sign = sign == "+" ? 1 : -1;
            out.crossings.push_back(std::move(x));
        } else if (word == "color") {
            std::string comp, label;
            if (!(ls >> comp >> label)) throw NamedError("ParseError", "color line: " + line);
            out.colors[comp] = label;
        } else {
            throw NamedError("ParseError", "unknown tangle line: " + word);
        }
    }
    return out;
}

std::string QTangle::to_string() const {
    std::ostringstream os;
    for (const auto& c : components) {
        os << "component " << c.name << (c.closed ? " closed" : " open") << " :";
        for (size_t i = 0; i < c.word.size(); ++i) {
            os << " " << c.word[i];
            if (!c.passes.empty() && c.passes[i] > 0) os << "@" << c.passes[i];
        }
        os << "\n";
    }
    for (const auto& x : crossings)
        os << "vertex " << x.vertex << ": cross " << (x.sign > 0 ? "+" : "-") << " "
           << x.a << " " << x.b << "\n";
    for (const auto& [comp, label] : colors) os << "color " << comp << " " << label << "\n";
    return os.str();
}

TraceProgram compile_qtangle(const Lattice& lat, const QTangle& L) {
    lat.validate();
    Resolved rs = resolve_passes(lat, L);

    // Consecutive passes must chain through a shared vertex.
    for (const auto& c : L.components) {
        size_t n = c.word.size();
        size_t last = c.closed ? n : n - 1;
        for (size_t i = 0; i < last; ++i) {
            const EdgeId& d1 = c.word[i];
            const EdgeId& d2 = c.word[(i + 1) % n];
            auto [v1, p1] = lat.locate(edge_inv(d1));
            auto [v2, p2] = lat.locate(d2);
            if (v1 != v2)
                throw NamedError("MalformedTangle",
                                 c.name + ": " + d1 + " does not reach " + d2);
        }
    }

    std::vector<ElementaryDiagram> steps;
    Lattice cur = lat;
    auto emit = [&](const ElementaryDiagram& d) {
        cur = diagram_signature(cur, d);
        steps.push_back(d);
    };

    // Split multiply-traversed edges into parallel copies.
    TraceProgram prog;
    std::map<EdgeId, std::vector<EdgeId>> copies;
    for (const auto& [o, m] : rs.mult) {
        copies[o] = make_copies(o, m);
        prog.splits.emplace_back(o, copies[o]);
        EdgeId rem = o;
        for (int j = 1; j < m; ++j) {
            emit(ElementaryDiagram::triad(rem));
            rem = triad_double_prime(rem);
        }
    }

    // Reorient copies run against the lattice orientation, so every strand
    // core points along its traversal.
    std::vector<std::vector<EdgeId>> dirs(L.components.size());
    for (size_t ci = 0; ci < L.components.size(); ++ci) {
        const auto& c = L.components[ci];
        for (size_t i = 0; i < c.word.size(); ++i) {
            EdgeId o = base_oriented(lat, c.word[i]);
            EdgeId copy = copies[o][static_cast<size_t>(rs.passes[ci][i] - 1)];
            if (c.word[i] == o) {
                dirs[ci].push_back(copy);
            } else {
                emit(ElementaryDiagram::switch_edge(copy));
                dirs[ci].push_back(edge_inv(copy));
            }
        }
    }

    // Each vertex passage pairs the arrival dart with the departure dart.
    std::vector<StrandPair> pending;
    for (size_t ci = 0; ci < L.components.size(); ++ci) {
        const auto& c = L.components[ci];
        size_t n = c.word.size();
        size_t last = c.closed ? n : n - 1;
        for (size_t i = 0; i < last; ++i)
            pending.push_back({edge_inv(dirs[ci][i]), dirs[ci][(i + 1) % n], c.name});
    }

    auto adjacent = [&](const EdgeId& x, const EdgeId& y) {
        if (!cur.has_edge(x)) return false;
        auto [vi, p] = cur.locate(x);
        const auto& ord = cur.vertices[static_cast<size_t>(vi)].order;
        return p + 1 < static_cast<int>(ord.size()) && ord[p + 1] == y;
    };

    // Crossings (in listed order) interleaved with greedy strand fusion; a
    // fusion joins an adjacent arrival/departure pair into one edge, keeping
    // the names of the orphaned far ends.
    size_t qi = 0;
    while (true) {
        if (qi < L.crossings.size()) {
            const TangleCrossing& x = L.crossings[qi];
            if (adjacent(x.a, x.b)) {
                emit(ElementaryDiagram::crossing(x.sign, x.a, x.b));
                ++qi;
                continue;
            }
        }
        bool progress = false;
        for (size_t i = 0; i < pending.size(); ++i) {
            const StrandPair& pr = pending[i];
            if (cur.involution.at(pr.a) == pr.b) continue;  // closure, kept aside
            EdgeId first, second;
            if (adjacent(pr.a, pr.b)) {
                first = pr.a;
                second = pr.b;
            } else if (adjacent(pr.b, pr.a)) {
                first = pr.b;
                second = pr.a;
            } else {
                continue;
            }
            emit(ElementaryDiagram::cap(first, second));
            pending.erase(pending.begin() + static_cast<long>(i));
            progress = true;
            break;
        }
        if (progress) continue;
        if (qi < L.crossings.size())
            throw NamedError("MalformedTangle", "crossing pair never adjacent: " +
                                                    L.crossings[qi].a + " " +
                                                    L.crossings[qi].b);
        break;
    }

    for (const StrandPair& pr : pending) {
        if (cur.involution.at(pr.a) != pr.b)
            throw NamedError("MalformedTangle",
                             pr.component + ": strands not planar at " + pr.a + " " + pr.b);
        prog.closures.push_back({pr.component, pr.a, pr.b});
    }

    prog.domain = lat;
    prog.ir = compose_multitangle(lat, steps);
    prog.colors = L.colors;
    for (const auto& c : L.components)
        if (!prog.colors.count(c.name)) prog.colors[c.name] = "regular";
    return prog;
}

namespace {

std::vector<Rat> parse_chi(const std::string& label, int dim) {
    std::vector<Rat> vals;
    std::istringstream in(label.substr(4));
    std::string tok;
    while (std::getline(in, tok, ',')) vals.emplace_back(tok);
    if (static_cast<int>(vals.size()) != dim)
        throw NamedError("ColorMismatch", "character needs " + std::to_string(dim) +
                                              " values: " + label);
    return vals;
}

// Resolve which dart of a closure pair comes first cilially; the first one
// being oriented is what inserts the charm into the trace.
std::pair<EdgeId, bool> closure_layout(const Lattice& lat, const TraceProgram::Closure& c) {
    auto head = [&](const EdgeId& x, const EdgeId& y) -> bool {
        if (!lat.has_edge(x)) return false;
        auto [vi, p] = lat.locate(x);
        const auto& ord = lat.vertices[static_cast<size_t>(vi)].order;
        return p + 1 < static_cast<int>(ord.size()) && ord[p + 1] == y;
    };
    if (head(c.a, c.b)) return {c.a, lat.orientation.count(c.a) > 0};
    if (head(c.b, c.a)) return {c.b, lat.orientation.count(c.b) > 0};
    return {"", false};
}

}  // namespace

Rat eval_wilson(const TraceProgram& p, const ConnectionState& x) {
    const FiniteHopf& h = *x.backend;
    EvalResult res = evaluate_multitangle(p.ir, x);
    ConnectionState cur = std::move(res.state);

    std::vector<TraceProgram::Closure> rem = p.closures;
    Lattice clat = p.ir.range();
    while (!rem.empty()) {
        bool progress = false;
        for (size_t i = 0; i < rem.size(); ++i) {
            auto [first, charm] = closure_layout(clat, rem[i]);
            if (first.empty()) continue;
            const std::string& color = p.colors.count(rem[i].component)
                                           ? p.colors.at(rem[i].component)
                                           : "regular";
            int l = cur.leg_of(oriented_symbol(clat, first));
            if (charm) cur.tensor = h.leg_rmul(cur.tensor, l, h.charm);
            if (color == "regular") {
                cur.tensor = contract_leg(cur.tensor, l, [&](int bi) {
                    return h.trace_regular(HElt{{bi, Rat(1)}});
                });
            } else if (color.rfind("chi:", 0) == 0) {
                std::vector<Rat> vals = parse_chi(color, h.dim);
                cur.tensor = contract_leg(cur.tensor, l,
                                          [&](int bi) { return vals[static_cast<size_t>(bi)]; });
            } else {
                throw NamedError("ColorMismatch", rem[i].component + ": " + color);
            }
            cur.index.erase(cur.index.begin() + l);
            clat = diagram_signature(
                clat, ElementaryDiagram::cap(first, clat.involution.at(first)));
            rem.erase(rem.begin() + static_cast<long>(i));
            progress = true;
            break;
        }
        if (!progress) throw NamedError("MalformedTangle", "closure pair not adjacent");
    }

    // Remaining legs belong to edges the loop never visits; the functional
    // ignores them, so each surviving term contributes its coefficient.
    Rat total(0);
    for (const auto& [k, c] : cur.tensor) total += c;
    return total;
}

GaugeField wilson_field(const FiniteHopf& h, const Lattice& lat, const QTangle& L) {
    TraceProgram p = compile_qtangle(lat, L);
    return GaugeField::from_function(
        h, lat, [&](const ConnectionState& x) { return eval_wilson(p, x); });
}

namespace {

// Exact contraction state for the two-dimensional representation: one tensor
// leg per strand edge, each key entry coding a matrix slot 2*row + col.
struct RepState {
    std::vector<EdgeId> index;
    std::map<std::vector<int>, Laurent> tensor;

    int leg_of(const EdgeId& e) const {
        auto it = std::find(index.begin(), index.end(), e);
        if (it == index.end()) throw NamedError("UnknownEdge", e);
        return static_cast<int>(it - index.begin());
    }
};

void rep_add(std::map<std::vector<int>, Laurent>& t, const std::vector<int>& k,
             const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void rep_lmul(RepState& st, int leg, const LMat& m) {
    std::map<std::vector<int>, Laurent> out;
    for (const auto& [k, c] : st.tensor) {
        int code = k[static_cast<size_t>(leg)];
        int r = code / 2, col = code % 2;
        for (int nr = 0; nr < 2; ++nr) {
            const Laurent& w = m[static_cast<size_t>(nr)][static_cast<size_t>(r)];
            if (w.is_zero()) continue;
            std::vector<int> nk = k;
            nk[static_cast<size_t>(leg)] = 2 * nr + col;
            rep_add(out, nk, c * w);
        }
    }
    st.tensor = std::move(out);
}

void rep_rmul(RepState& st, int leg, const LMat& m) {
    std::map<std::vector<int>, Laurent> out;
    for (const auto& [k, c] : st.tensor) {
        int code = k[static_cast<size_t>(leg)];
        int r = code / 2, col = code % 2;
        for (int nc = 0; nc < 2; ++nc) {
            const Laurent& w = m[static_cast<size_t>(col)][static_cast<size_t>(nc)];
            if (w.is_zero()) continue;
            std::vector<int> nk = k;
            nk[static_cast<size_t>(leg)] = 2 * r + nc;
            rep_add(out, nk, c * w);
        }
    }
    st.tensor = std::move(out);
}

void rep_leg_S(RepState& st, int leg) {
    // Precomputed images of the four matrix slots under the representation
    // antipode, applied as a linear substitution on that leg.
    static const std::vector<LMat> images = [] {
        std::vector<LMat> out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                LMat unit = lmat_zero(2, 2);
                unit[static_cast<size_t>(r)][static_cast<size_t>(c)] = Laurent(1);
                out.push_back(rep_antipode(unit));
            }
        return out;
    }();
    std::map<std::vector<int>, Laurent> out;
    for (const auto& [k, c] : st.tensor) {
        int code = k[static_cast<size_t>(leg)];
        const LMat& img = images[static_cast<size_t>(code)];
        for (int r = 0; r < 2; ++r)
            for (int col = 0; col < 2; ++col) {
                const Laurent& w = img[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (w.is_zero()) continue;
                std::vector<int> nk = k;
                nk[static_cast<size_t>(leg)] = 2 * r + col;
                rep_add(out, nk, c * w);
            }
    }
    st.tensor = std::move(out);
}

// Contract one leg as a matrix trace, optionally twisted by rho(k).
void rep_trace_leg(RepState& st, int leg, bool charm, const FundRep& rep) {
    if (charm) rep_rmul(st, leg, rep.K);
    std::map<std::vector<int>, Laurent> out;
    for (const auto& [k, c] : st.tensor) {
        int code = k[static_cast<size_t>(leg)];
        if (code / 2 != code % 2) continue;
        std::vector<int> nk;
        nk.reserve(k.size() - 1);
        for (size_t i = 0; i < k.size(); ++i)
            if (static_cast<int>(i) != leg) nk.push_back(k[i]);
        rep_add(out, nk, c);
    }
    st.tensor = std::move(out);
    st.index.erase(st.index.begin() + leg);
}

// Fuse legs la and lb into la with the given ordered matrix product
// (a then b, or b then rho(k) then a).
void rep_merge(RepState& st, int la, int lb, bool left_up, const FundRep& rep) {
    std::map<std::vector<int>, Laurent> out;
    for (const auto& [k, c] : st.tensor) {
        int ca = k[static_cast<size_t>(la)], cb = k[static_cast<size_t>(lb)];
        int ra = ca / 2, cola = ca % 2, rb = cb / 2, colb = cb % 2;
        int nr, nc;
        Laurent w = c;
        if (left_up) {  // x y
            if (cola != rb) continue;
            nr = ra;
            nc = colb;
        } else {  // y k x
            if (colb != ra) continue;
            w = w * rep.K[static_cast<size_t>(colb)][static_cast<size_t>(colb)];
            nr = rb;
            nc = cola;
        }
        std::vector<int> nk;
        nk.reserve(k.size() - 1);
        for (size_t i = 0; i < k.size(); ++i)
            if (static_cast<int>(i) != lb) nk.push_back(k[i]);
        nk[static_cast<size_t>(la < lb ? la : la - 1)] = 2 * nr + nc;
        rep_add(out, nk, w);
    }
    st.tensor = std::move(out);
    st.index.erase(st.index.begin() + lb);
}

void rep_crossing_leg(RepState& st, const Lattice& lat, const EdgeId& dart, int leg,
                      const LMat& m) {
    if (lat.orientation.count(dart))
        rep_lmul(st, leg, m);
    else
        rep_rmul(st, leg, rep_antipode(m));
}

}  // namespace

Laurent eval_wilson_uq(const TraceProgram& p, const std::map<EdgeId, UqElement>& conn) {
    const FundRep& rep = fundamental_rep();
    for (const auto& [comp, color] : p.colors)
        if (color != "fundamental" && color != "regular")
            throw NamedError("ColorMismatch", comp + ": " + color);

    RepState st;
    st.tensor[{}] = Laurent(1);
    for (const auto& [base, copies] : p.splits) {
        auto it = conn.find(base);
        const UqElement x = it != conn.end() ? it->second : UqElement::one();
        int m = static_cast<int>(copies.size());
        LMat big = fundamental_tensor(x, m);
        std::map<std::vector<int>, Laurent> out;
        size_t dim = static_cast<size_t>(1) << m;
        for (const auto& [k, c] : st.tensor)
            for (size_t r = 0; r < dim; ++r)
                for (size_t col = 0; col < dim; ++col) {
                    const Laurent& w = big[r][col];
                    if (w.is_zero()) continue;
                    std::vector<int> nk = k;
                    for (int j = 0; j < m; ++j) {
                        int rb = static_cast<int>(r >> (m - 1 - j)) & 1;
                        int cb = static_cast<int>(col >> (m - 1 - j)) & 1;
                        nk.push_back(2 * rb + cb);
                    }
                    rep_add(out, nk, c * w);
                }
        st.tensor = std::move(out);
        for (const EdgeId& e : copies) st.index.push_back(e);
    }

    Lattice lat = p.domain;
    for (size_t si = 0; si < p.ir.steps.size(); ++si) {
        const ElementaryDiagram& d = p.ir.steps[si];
        const Lattice& next = p.ir.chain[si];
        switch (d.kind) {
            case ElementaryDiagram::Kind::Triad:
                break;  // handled by the tensor-power initialization

            case ElementaryDiagram::Kind::Switch: {
                int l = st.leg_of(d.a);
                rep_rmul(st, l, rep.K);
                rep_leg_S(st, l);
                st.index[static_cast<size_t>(l)] = lat.involution.at(d.a);
                break;
            }

            case ElementaryDiagram::Kind::Crossing: {
                int l1 = st.leg_of(oriented_symbol(lat, d.a));
                int l2 = st.leg_of(oriented_symbol(lat, d.b));
                std::map<std::vector<int>, Laurent> out;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int kk = 0; kk < 2; ++kk)
                            for (int ll = 0; ll < 2; ++ll) {
                                const Laurent& w = rep.R[static_cast<size_t>(2 * i + kk)]
                                                        [static_cast<size_t>(2 * j + ll)];
                                if (w.is_zero()) continue;
                                LMat first = lmat_zero(2, 2), second = lmat_zero(2, 2);
                                first[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                                    Laurent(1);
                                second[static_cast<size_t>(kk)][static_cast<size_t>(ll)] =
                                    Laurent(1);
                                LMat left = d.sign > 0 ? first : second;
                                LMat right = d.sign > 0 ? second : rep_antipode(first);
                                RepState piece = st;
                                for (auto& [pk, pc] : piece.tensor) pc = pc * w;
                                rep_crossing_leg(piece, lat, d.a, l1, left);
                                rep_crossing_leg(piece, lat, d.b, l2, right);
                                for (const auto& [pk, pc] : piece.tensor)
                                    rep_add(out, pk, pc);
                            }
                st.tensor = std::move(out);
                break;
            }

            case ElementaryDiagram::Kind::Cap: {
                if (d.b == lat.involution.at(d.a))
                    throw NamedError("MalformedTangle", "unexpected closure in program");
                int l1 = st.leg_of(oriented_symbol(lat, d.a));
                int l2 = st.leg_of(oriented_symbol(lat, d.b));
                bool left_up = !lat.orientation.count(d.a);
                rep_merge(st, l1, l2, left_up, rep);
                EdgeId ia = lat.involution.at(d.a), ib = lat.involution.at(d.b);
                EdgeId fused = next.orientation.count(ia) ? ia : ib;
                st.index[static_cast<size_t>(l1 < l2 ? l1 : l1 - 1)] = fused;
                break;
            }

            default:
                throw NamedError("MalformedTangle", "unsupported step: " + d.to_string());
        }
        lat = next;
    }

    std::vector<TraceProgram::Closure> rem = p.closures;
    while (!rem.empty()) {
        bool progress = false;
        for (size_t i = 0; i < rem.size(); ++i) {
            auto [first, charm] = closure_layout(lat, rem[i]);
            if (first.empty()) continue;
            int l = st.leg_of(oriented_symbol(lat, first));
            rep_trace_leg(st, l, charm, rep);
            lat = diagram_signature(
                lat, ElementaryDiagram::cap(first, lat.involution.at(first)));
            rem.erase(rem.begin() + static_cast<long>(i));
            progress = true;
            break;
        }
        if (!progress) throw NamedError("MalformedTangle", "closure pair not adjacent");
    }

    if (!st.index.empty())
        throw NamedError("MalformedTangle", "open strand has no trace: " + st.index[0]);
    auto it = st.tensor.find({});
    return it == st.tensor.end() ? Laurent() : it->second;
}

QTangle reverse_component(const QTangle& L, const std::string& component) {
    QTangle out = L;
    for (auto& c : out.components) {
        if (c.name != component) continue;
        size_t n = c.word.size();
        std::vector<EdgeId> w(n);
        std::vector<int> ps(n);
        bool explicit_passes = !c.passes.empty();
        for (size_t i = 0; i < n; ++i) {
            w[i] = edge_inv(c.word[n - 1 - i]);
            if (explicit_passes) ps[i] = c.passes[n - 1 - i];
        }
        c.word = std::move(w);
        if (explicit_passes) c.passes = std::move(ps);
        return out;
    }
    throw NamedError("MalformedTangle", "no component named " + component);
}

QTangle stack_product(const Lattice& lat, const QTangle& a, const QTangle& b) {
    if (a.components.empty()) return b;
    if (b.components.empty()) return a;
    if (!a.crossings.empty() || !b.crossings.empty())
        throw NamedError("MalformedTangle",
                         "stacking of tangles with explicit crossings is not supported");

    Resolved ra = resolve_passes(lat, a);
    Resolved rb = resolve_passes(lat, b);

    QTangle out;
    out.colors = a.colors;
    auto renamed = [&](const std::string& name) {
        std::string n = name;
        while (a.find(n)) n += "'";
        return n;
    };
    struct CompTag {
        bool over;  // belongs to b
    };
    std::vector<CompTag> tags;
    for (size_t ci = 0; ci < a.components.size(); ++ci) {
        TangleComponent c = a.components[ci];
        c.passes = ra.passes[ci];
        out.components.push_back(std::move(c));
        tags.push_back({false});
    }
    for (size_t ci = 0; ci < b.components.size(); ++ci) {
        TangleComponent c = b.components[ci];
        std::string nn = renamed(c.name);
        if (nn != c.name) {
            auto it = b.colors.find(c.name);
            if (it != b.colors.end()) out.colors[nn] = it->second;
            c.name = nn;
        } else if (b.colors.count(c.name)) {
            out.colors[c.name] = b.colors.at(c.name);
        }
        c.passes = rb.passes[ci];
        for (size_t i = 0; i < c.word.size(); ++i)
            c.passes[i] += ra.mult.count(base_oriented(lat, c.word[i]))
                               ? ra.mult.at(base_oriented(lat, c.word[i]))
                               : 0;
        out.components.push_back(std::move(c));
        tags.push_back({true});
    }

    // Simulate the fusion phase on the refined dart orders; whenever it
    // stalls, let a strand of b cross over an adjacent strand of a.
    Resolved merged = resolve_passes(lat, out);
    std::map<EdgeId, std::vector<EdgeId>> copies;
    for (const auto& [o, m] : merged.mult) copies[o] = make_copies(o, m);

    struct SimPair {
        EdgeId a, b;
        size_t comp;
    };
    std::vector<SimPair> pairs;
    std::vector<std::vector<EdgeId>> order(lat.vertices.size());
    std::map<EdgeId, size_t> owner;  // dart -> component index
    for (size_t vi = 0; vi < lat.vertices.size(); ++vi)
        for (const EdgeId& d : lat.vertices[vi].order) {
            EdgeId o = oriented_symbol(lat, d);
            if (!merged.mult.count(o)) {
                order[vi].push_back(d);
                continue;
            }
            const auto& cs = copies[o];
            if (d == o)
                for (const EdgeId& c : cs) order[vi].push_back(c);
            else
                for (auto it = cs.rbegin(); it != cs.rend(); ++it)
                    order[vi].push_back(edge_inv(*it));
        }
    for (size_t ci = 0; ci < out.components.size(); ++ci) {
        const auto& c = out.components[ci];
        size_t n = c.word.size();
        size_t last = c.closed ? n : n - 1;
        for (size_t i = 0; i < last; ++i) {
            EdgeId o1 = base_oriented(lat, c.word[i]);
            EdgeId o2 = base_oriented(lat, c.word[(i + 1) % n]);
            EdgeId d1 = copies[o1][static_cast<size_t>(merged.passes[ci][i] - 1)];
            EdgeId d2 = copies[o2][static_cast<size_t>(merged.passes[ci][(i + 1) % n] - 1)];
            if (c.word[i] != o1) d1 = edge_inv(d1);
            if (c.word[(i + 1) % n] != o2) d2 = edge_inv(d2);
            pairs.push_back({edge_inv(d1), d2, ci});
            owner[edge_inv(d1)] = ci;
            owner[d2] = ci;
        }
    }

    auto find_pos = [&](const EdgeId& d) -> std::pair<int, int> {
        for (size_t vi = 0; vi < order.size(); ++vi)
            for (size_t p = 0; p < order[vi].size(); ++p)
                if (order[vi][p] == d) return {static_cast<int>(vi), static_cast<int>(p)};
        return {-1, -1};
    };

    size_t guard = 0;
    while (!pairs.empty()) {
        if (++guard > 10000)
            throw NamedError("MalformedTangle", "stacking did not settle");
        bool progress = false;
        for (size_t i = 0; i < pairs.size(); ++i) {
            for (const auto* pr : {&pairs[i]}) {
                auto [vi, p] = find_pos(pr->a);
                bool adj = vi >= 0 && p + 1 < static_cast<int>(order[static_cast<size_t>(vi)].size()) &&
                           order[static_cast<size_t>(vi)][static_cast<size_t>(p + 1)] == pr->b;
                if (!adj) {
                    auto [vi2, p2] = find_pos(pr->b);
                    adj = vi2 >= 0 &&
                          p2 + 1 < static_cast<int>(order[static_cast<size_t>(vi2)].size()) &&
                          order[static_cast<size_t>(vi2)][static_cast<size_t>(p2 + 1)] == pr->a;
                    vi = vi2;
                    p = p2;
                }
                if (!adj) continue;
                auto& ord = order[static_cast<size_t>(vi)];
                ord.erase(ord.begin() + p, ord.begin() + p + 2);
                pairs.erase(pairs.begin() + static_cast<long>(i));
                progress = true;
            }
            if (progress) break;
        }
        if (progress) continue;

        // Stalled: some strand of b must cross over a strand of a.
        bool swapped = false;
        for (size_t vi = 0; vi < order.size() && !swapped; ++vi) {
            auto& ord = order[vi];
            for (size_t p = 0; p + 1 < ord.size(); ++p) {
                const EdgeId& x = ord[p];
                const EdgeId& y = ord[p + 1];
                if (!owner.count(x) || !owner.count(y)) continue;
                bool xo = tags[owner[x]].over, yo = tags[owner[y]].over;
                if (xo == yo) continue;
                TangleCrossing cr;
                cr.vertex = lat.vertices[vi].name;
                cr.a = x;
                cr.b = y;
                cr.sign = xo ? 1 : -1;  // over-strand of b on the left: positive
                out.crossings.push_back(cr);
                std::swap(ord[p], ord[p + 1]);
                swapped = true;
                break;
            }
        }
        if (!swapped)
            throw NamedError("MalformedTangle", "stacked strands not planar");
    }

    return out;
}

namespace {

// Letter for one parallel copy of a base edge: "e4" -> "x4", primes kept.
std::string letter_token(const EdgeId& base, const EdgeId& copy) {
    std::string stem = base;
    if (stem.size() > 1 && stem[0] == 'e' &&
        std::isdigit(static_cast<unsigned char>(stem[1])))
        stem = stem.substr(1);
    return "x" + stem + copy.substr(base.size());
}

std::string join_word(const std::vector<std::string>& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += w[i];
    }
    return out;
}

std::string braid_token(const std::string& name, int spow) {
    if (spow == 0) return name;
    if (spow == 1) return "S(" + name + ")";
    return "S^" + std::to_string(spow) + "(" + name + ")";
}

}  // namespace

std::map<std::string, std::string> holonomy_words(const Lattice& lat, const QTangle& L) {
    TraceProgram p = compile_qtangle(lat, L);

    // One token list per strand edge, updated exactly as the evaluator updates
    // the corresponding matrix factor: left multiplications prepend, right
    // multiplications append.
    std::map<EdgeId, std::vector<std::string>> val;
    for (const auto& [base, copies] : p.splits)
        for (const EdgeId& c : copies) val[c] = {letter_token(base, c)};

    Lattice cur = p.domain;
    int ncross = 0;
    for (size_t si = 0; si < p.ir.steps.size(); ++si) {
        const ElementaryDiagram& d = p.ir.steps[si];
        const Lattice& next = p.ir.chain[si];
        switch (d.kind) {
            case ElementaryDiagram::Kind::Triad:
                break;

            case ElementaryDiagram::Kind::Switch: {
                std::vector<std::string> w = val.at(d.a);
                val.erase(d.a);
                val[cur.involution.at(d.a)] = {"S(" + join_word(w) + " k)"};
                break;
            }

            case ElementaryDiagram::Kind::Crossing: {
                ++ncross;
                std::string s = "s" + std::to_string(ncross);
                std::string t = "t" + std::to_string(ncross);
                auto apply = [&](const EdgeId& dart, const std::string& name, int spow) {
                    std::vector<std::string>& w = val.at(oriented_symbol(cur, dart));
                    if (cur.orientation.count(dart))
                        w.insert(w.begin(), braid_token(name, spow));
                    else
                        w.push_back(braid_token(name, spow + 1));
                };
                if (d.sign > 0) {
                    apply(d.a, s, 0);
                    apply(d.b, t, 0);
                } else {
                    apply(d.a, t, 0);
                    apply(d.b, s, 1);
                }
                break;
            }

            case ElementaryDiagram::Kind::Cap: {
                if (d.b == cur.involution.at(d.a))
                    throw NamedError("MalformedTangle", "unexpected closure in program");
                EdgeId oa = oriented_symbol(cur, d.a), ob = oriented_symbol(cur, d.b);
                std::vector<std::string> wa = val.at(oa), wb = val.at(ob);
                val.erase(oa);
                val.erase(ob);
                std::vector<std::string> word;
                if (!cur.orientation.count(d.a)) {  // x y
                    word = std::move(wa);
                    word.insert(word.end(), wb.begin(), wb.end());
                } else {  // y k x
                    word = std::move(wb);
                    word.push_back("k");
                    word.insert(word.end(), wa.begin(), wa.end());
                }
                EdgeId ia = cur.involution.at(d.a), ib = cur.involution.at(d.b);
                val[next.orientation.count(ia) ? ia : ib] = std::move(word);
                break;
            }

            default:
                throw NamedError("MalformedTangle", "unsupported step: " + d.to_string());
        }
        cur = next;
    }

    std::map<std::string, std::string> out;
    std::vector<TraceProgram::Closure> rem = p.closures;
    while (!rem.empty()) {
        bool progress = false;
        for (size_t i = 0; i < rem.size(); ++i) {
            auto [first, charm] = closure_layout(cur, rem[i]);
            if (first.empty()) continue;
            std::vector<std::string> w = val.at(oriented_symbol(cur, first));
            if (charm) w.push_back("k");
            out[rem[i].component] = join_word(w);
            cur = diagram_signature(
                cur, ElementaryDiagram::cap(first, cur.involution.at(first)));
            rem.erase(rem.begin() + static_cast<long>(i));
            progress = true;
            break;
        }
        if (!progress) throw NamedError("MalformedTangle", "closure pair not adjacent");
    }
    return out;
}

}  // namespace lgft
