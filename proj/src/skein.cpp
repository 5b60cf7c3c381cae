#include "lgft/skein.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lgft/diagram.hpp"

namespace lgft {

namespace {

EdgeId oriented_symbol(const Lattice& lat, const EdgeId& d) {
    if (lat.orientation.count(d)) return d;
    EdgeId f = lat.involution.at(d);
    if (lat.orientation.count(f)) return f;
    throw NamedError("UnknownEdge", d);
}

// Copy naming and pass resolution mirror the tangle compiler, so crossings in
// a diagram refer to the same refined dart names either way it is consumed.
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
    std::map<EdgeId, int> mult;
    std::vector<std::vector<int>> passes;
};

Resolved resolve_passes(const Lattice& lat, const QTangle& L) {
    Resolved r;
    std::map<EdgeId, std::set<int>> used;
    for (const auto& c : L.components) {
        if (!c.passes.empty() && c.passes.size() != c.word.size())
            throw NamedError("MalformedTangle", c.name + ": pass list length");
        for (size_t i = 0; i < c.word.size(); ++i) {
            if (!lat.has_edge(c.word[i]))
                throw NamedError("MalformedTangle", "unknown edge " + c.word[i]);
            EdgeId o = oriented_symbol(lat, c.word[i]);
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
            EdgeId o = oriented_symbol(lat, c.word[i]);
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

// Port graph of the diagram: strand arcs, in-vertex joints and per-crossing
// square ports. Every port ends with degree two once each crossing square is
// replaced by one of its two planar smoothings, so components are cycles.
struct Wiring {
    struct Link {
        int from = 0, to = 0;
        EdgeId lab;  // emitted traversing from->to; empty for plain wire
    };
    std::vector<Link> links;
    std::vector<std::vector<int>> at;  // port -> incident link indices
    struct Square {
        int sign = 0;
        int bl = 0, br = 0, tl = 0, tr = 0;
    };
    std::vector<Square> squares;
    int nports = 0;

    int port() {
        at.emplace_back();
        return nports++;
    }
    void wire(int p, int q, const EdgeId& lab = "") {
        at[static_cast<size_t>(p)].push_back(static_cast<int>(links.size()));
        at[static_cast<size_t>(q)].push_back(static_cast<int>(links.size()));
        links.push_back({p, q, lab});
    }
};

Wiring build_wiring(const Lattice& lat, const QTangle& L) {
    for (const auto& c : L.components)
        if (!c.closed)
            throw NamedError("MalformedTangle", c.name + ": open component");
    Resolved rs = resolve_passes(lat, L);
    std::map<EdgeId, std::vector<EdgeId>> copies;
    for (const auto& [o, m] : rs.mult) copies[o] = make_copies(o, m);

    Wiring w;
    std::map<EdgeId, int> top;  // refined dart -> current top port
    // one arc per letter occurrence; remember the germ ports for the joints
    std::vector<std::vector<std::pair<EdgeId, EdgeId>>> germs;  // (tail, head)
    for (size_t ci = 0; ci < L.components.size(); ++ci) {
        const auto& c = L.components[ci];
        germs.emplace_back();
        for (size_t i = 0; i < c.word.size(); ++i) {
            EdgeId o = oriented_symbol(lat, c.word[i]);
            EdgeId cp = copies[o][static_cast<size_t>(rs.passes[ci][i] - 1)];
            EdgeId dir = edge_is_neg(c.word[i]) ? edge_inv(cp) : cp;
            int pa = w.port(), pb = w.port();
            w.wire(pa, pb, c.word[i]);  // base letter in traversal direction
            top[dir] = pa;
            top[edge_inv(dir)] = pb;
            germs.back().push_back({dir, edge_inv(dir)});
        }
    }
    for (const auto& x : L.crossings) {
        auto ia = top.find(x.a), ib = top.find(x.b);
        if (ia == top.end() || ib == top.end())
            throw NamedError("MalformedTangle", "crossing dart not on a strand");
        Wiring::Square s;
        s.sign = x.sign;
        s.bl = w.port();
        s.br = w.port();
        s.tl = w.port();
        s.tr = w.port();
        w.wire(s.bl, ia->second);
        w.wire(s.br, ib->second);
        ia->second = s.tr;
        ib->second = s.tl;
        w.squares.push_back(s);
    }
    for (size_t ci = 0; ci < L.components.size(); ++ci) {
        const auto& g = germs[ci];
        for (size_t i = 0; i < g.size(); ++i)
            w.wire(top.at(g[i].second), top.at(g[(i + 1) % g.size()].first));
    }
    return w;
}

// Walk the cycles of the resolved port graph and emit the raw edge words.
std::vector<std::vector<EdgeId>> trace_cycles(const Wiring& w,
                                              const std::vector<Wiring::Link>& extra) {
    std::vector<Wiring::Link> all = w.links;
    all.insert(all.end(), extra.begin(), extra.end());
    std::vector<std::vector<int>> at(static_cast<size_t>(w.nports));
    for (size_t i = 0; i < all.size(); ++i) {
        at[static_cast<size_t>(all[i].from)].push_back(static_cast<int>(i));
        at[static_cast<size_t>(all[i].to)].push_back(static_cast<int>(i));
    }
    std::vector<bool> seen(all.size(), false);
    std::vector<std::vector<EdgeId>> out;
    for (size_t start = 0; start < all.size(); ++start) {
        if (seen[start]) continue;
        std::vector<EdgeId> word;
        int li = static_cast<int>(start);
        int p = all[start].from;
        do {
            seen[static_cast<size_t>(li)] = true;
            const auto& lk = all[static_cast<size_t>(li)];
            int q = (lk.from == p) ? lk.to : lk.from;
            if (!lk.lab.empty())
                word.push_back(lk.from == p ? lk.lab : edge_inv(lk.lab));
            const auto& inc = at[static_cast<size_t>(q)];
            li = (inc[0] == li) ? inc[1] : inc[0];
            p = q;
        } while (li != static_cast<int>(start) || p != all[start].from);
        out.push_back(std::move(word));
    }
    return out;
}

std::set<EdgeId> spanning_tree(const Lattice& lat) {
    std::set<EdgeId> tree;
    if (lat.vertices.empty()) return tree;
    std::vector<bool> seen(lat.vertices.size(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (const EdgeId& d : lat.vertices[static_cast<size_t>(v)].order) {
            int u = lat.locate(lat.involution.at(d)).first;
            if (seen[static_cast<size_t>(u)]) continue;
            seen[static_cast<size_t>(u)] = true;
            tree.insert(edge_base(d));
            queue.push_back(u);
        }
    }
    return tree;
}

std::vector<EdgeId> cyclic_free_reduce(std::vector<EdgeId> w) {
    bool changed = true;
    while (changed && w.size() > 1) {
        changed = false;
        for (size_t i = 0; i < w.size(); ++i) {
            size_t j = (i + 1) % w.size();
            if (w[j] == edge_inv(w[i])) {
                if (j > i) {
                    w.erase(w.begin() + static_cast<long>(j));
                    w.erase(w.begin() + static_cast<long>(i));
                } else {
                    w.erase(w.begin() + static_cast<long>(i));
                    w.erase(w.begin());
                }
                changed = true;
                break;
            }
        }
    }
    if (w.size() == 1) return w;
    return w;
}

std::vector<EdgeId> invert_word(const std::vector<EdgeId>& w) {
    std::vector<EdgeId> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(edge_inv(*it));
    return out;
}

std::vector<std::vector<EdgeId>> word_variants(const std::vector<EdgeId>& w) {
    std::set<std::vector<EdgeId>> seen;
    for (const auto& base : {w, invert_word(w)})
        for (size_t r = 0; r < base.size(); ++r) {
            std::vector<EdgeId> rot(base.begin() + static_cast<long>(r), base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
            seen.insert(std::move(rot));
        }
    if (w.empty()) seen.insert({});
    return {seen.begin(), seen.end()};
}

const Laurent& loop_factor() {
    static Laurent f = -(Laurent::t(2) + Laurent::t(-2));
    return f;
}

void accumulate_state(const Lattice& lat, const Wiring& w,
                      const std::vector<int>& choice, const Laurent& coeff,
                      SkeinElement& out) {
    std::vector<Wiring::Link> extra;
    for (size_t i = 0; i < w.squares.size(); ++i) {
        const auto& s = w.squares[i];
        if (choice[i] == 0) {  // lane swap: strands pass through uncrossed
            extra.push_back({s.bl, s.tl, ""});
            extra.push_back({s.br, s.tr, ""});
        } else {  // turnback: cup below, cap above
            extra.push_back({s.bl, s.br, ""});
            extra.push_back({s.tl, s.tr, ""});
        }
    }
    Laurent c = coeff;
    std::vector<CurveClass> key;
    std::vector<std::vector<EdgeId>> witness;
    for (auto& word : trace_cycles(w, extra)) {
        CurveClass cls = curve_class(lat, word);
        if (cls.empty()) {
            c *= loop_factor();
        } else {
            key.push_back(cls);
            witness.push_back(cyclic_free_reduce(std::move(word)));
        }
    }
    // sort the witness alongside the key
    std::vector<size_t> idx(key.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return key[a] < key[b]; });
    std::vector<CurveClass> skey;
    std::vector<std::vector<EdgeId>> swit;
    for (size_t i : idx) {
        skey.push_back(key[i]);
        swit.push_back(witness[i]);
    }
    out.add(skey, c, swit);
}

void resolve_rec(const Lattice& lat, const Wiring& w,
                 const std::vector<size_t>& order, size_t depth,
                 std::vector<int>& choice, const Laurent& coeff,
                 SkeinElement& out) {
    if (depth == order.size()) {
        accumulate_state(lat, w, choice, coeff, out);
        return;
    }
    size_t i = order[depth];
    int sign = w.squares[i].sign;
    // left strand over: lane swap is the A-smoothing; mirrored for sign < 0
    Laurent lane = sign > 0 ? -Laurent::t(1) : -Laurent::t(-1);
    Laurent turn = sign > 0 ? -Laurent::t(-1) : -Laurent::t(1);
    choice[i] = 0;
    resolve_rec(lat, w, order, depth + 1, choice, coeff * lane, out);
    choice[i] = 1;
    resolve_rec(lat, w, order, depth + 1, choice, coeff * turn, out);
}

}  // namespace

CurveClass curve_class(const Lattice& lat, const std::vector<EdgeId>& word) {
    std::set<EdgeId> tree = spanning_tree(lat);
    std::vector<EdgeId> kept;
    for (const EdgeId& d : word)
        if (!tree.count(edge_base(d))) kept.push_back(d);
    kept = cyclic_free_reduce(std::move(kept));
    if (kept.empty()) return {};
    auto vs = word_variants(kept);
    return *std::min_element(vs.begin(), vs.end());
}

void SkeinElement::add(const std::vector<CurveClass>& key, const Laurent& c,
                       const std::vector<std::vector<EdgeId>>& witness) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(key, Term{c, witness});
    if (!fresh) {
        it->second.coeff += c;
        if (it->second.coeff.is_zero()) terms.erase(it);
    }
}

SkeinElement SkeinElement::scaled(const Laurent& c) const {
    SkeinElement out;
    for (const auto& [k, t] : terms) out.add(k, t.coeff * c, t.witness);
    return out;
}

SkeinElement SkeinElement::operator+(const SkeinElement& o) const {
    SkeinElement out = *this;
    for (const auto& [k, t] : o.terms) out.add(k, t.coeff, t.witness);
    return out;
}

bool SkeinElement::equals(const SkeinElement& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto a = terms.begin();
    auto b = o.terms.begin();
    for (; a != terms.end(); ++a, ++b)
        if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
    return true;
}

std::string SkeinElement::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, t] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << t.coeff.to_string() << ")*[";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) out << " | ";
            for (size_t j = 0; j < k[i].size(); ++j) {
                if (j) out << " ";
                out << k[i][j];
            }
        }
        out << "]";
    }
    return out.str();
}

SkeinElement SkeinElement::empty_diagram() {
    SkeinElement e;
    e.add({}, Laurent(1), {});
    return e;
}

SkeinElement skein_reduce(const Lattice& lat, const QTangle& diagram) {
    std::vector<size_t> order(diagram.crossings.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    return skein_reduce_ordered(lat, diagram, order);
}

SkeinElement skein_reduce_ordered(const Lattice& lat, const QTangle& diagram,
                                  const std::vector<size_t>& order) {
    if (order.size() != diagram.crossings.size())
        throw NamedError("MalformedTangle", "resolution order length");
    Wiring w = build_wiring(lat, diagram);
    SkeinElement out;
    std::vector<int> choice(w.squares.size(), 0);
    resolve_rec(lat, w, order, 0, choice, Laurent(1), out);
    return out;
}

QTangle realize_term(const Lattice& lat,
                     const std::vector<std::vector<EdgeId>>& words) {
    std::vector<std::vector<std::vector<EdgeId>>> cands;
    for (const auto& word : words) {
        if (word.empty()) throw NamedError("Unrealizable", "empty curve word");
        cands.push_back(word_variants(word));
    }
    std::vector<size_t> pick(words.size(), 0);
    while (true) {
        QTangle t;
        for (size_t i = 0; i < words.size(); ++i) {
            TangleComponent c;
            c.name = "s" + std::to_string(i);
            c.word = cands[i][pick[i]];
            t.components.push_back(std::move(c));
        }
        try {
            compile_qtangle(lat, t);
            return t;
        } catch (const NamedError&) {
        }
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == cands[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
        if (words.empty()) break;
    }
    throw NamedError("Unrealizable", "no embedded representative compiles");
}

SkeinElement skein_product(const Lattice& lat, const SkeinElement& a,
                           const SkeinElement& b) {
    SkeinElement out;
    for (const auto& [ka, ta] : a.terms)
        for (const auto& [kb, tb] : b.terms) {
            QTangle ra = realize_term(lat, ta.witness);
            QTangle rb = realize_term(lat, tb.witness);
            QTangle stacked = stack_product(lat, ra, rb);
            SkeinElement r = skein_reduce(lat, stacked);
            out = out + r.scaled(ta.coeff * tb.coeff);
        }
    return out;
}

Laurent zeta_eval(const Lattice& lat, const SkeinElement& a,
                  const std::map<EdgeId, UqElement>& conn) {
    Laurent total;
    for (const auto& [k, t] : a.terms) {
        Laurent val(1);
        if (!k.empty()) {
            QTangle r = realize_term(lat, t.witness);
            val = eval_wilson_uq(compile_qtangle(lat, r), conn);
        }
        Laurent sign(k.size() % 2 == 0 ? 1 : -1);
        total += t.coeff * sign * val;
    }
    return total;
}

ZetaReport zeta_compare(const Lattice& lat, const QTangle& diagram,
                        const std::map<EdgeId, UqElement>& conn) {
    ZetaReport rep;
    Laurent sign(diagram.components.size() % 2 == 0 ? 1 : -1);
    rep.direct = sign * eval_wilson_uq(compile_qtangle(lat, diagram), conn);
    rep.reduced = zeta_eval(lat, skein_reduce(lat, diagram), conn);
    rep.equal = rep.direct == rep.reduced;
    if (!rep.equal) rep.witness = diagram.to_string();
    return rep;
}

}  // namespace lgft
