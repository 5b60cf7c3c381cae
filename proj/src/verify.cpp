#include "lgft/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lgft/nabla.hpp"
#include "lgft/observable.hpp"
#include "lgft/rng.hpp"

namespace lgft {

bool Suite::ok() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

HElt basis(int i) { return HElt{{i, Rat(1)}}; }

}  // namespace

std::vector<FiniteHopf> standard_backends() {
    std::vector<FiniteHopf> out;
    out.push_back(build_group_algebra(GroupTable::cyclic(3)));
    out.push_back(build_group_algebra(GroupTable::symmetric3()));
    out.push_back(build_drinfeld_double(GroupTable::cyclic(2)));
    out.push_back(build_drinfeld_double(GroupTable::cyclic(3)));
    out.push_back(build_drinfeld_double(GroupTable::symmetric3()));
    return out;
}

Suite suite_axioms() {
    Suite s{"axioms", {}};
    for (const FiniteHopf& h : standard_backends()) {
        AxiomReport r = verify_ribbon_axioms(h);
        std::string wit;
        for (const std::string& f : r.failures()) {
            if (!wit.empty()) wit += "; ";
            wit += f;
        }
        s.checks.push_back({"ribbon axioms hold for " + h.name, r.ok(), wit});
    }
    return s;
}

Suite suite_moves(uint64_t seed, int samples) {
    Suite s{"moves", {}};
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    for (const MoveOutcome& r : check_moves(d2, 4096, 0, seed))
        s.checks.push_back({r.name + " (exhaustive over " + d2.name + ")", r.pass, r.witness});
    FiniteHopf ds3 = build_drinfeld_double(GroupTable::symmetric3());
    for (const MoveOutcome& r : check_moves(ds3, 1, samples, seed))
        s.checks.push_back({r.name + " (sampled over " + ds3.name + ")", r.pass, r.witness});
    return s;
}

namespace {

// Every ciliated lattice with at most `max_edges` edges on one or two
// vertices, one representative per class under edge relabeling, edge flips
// and vertex exchange.
std::vector<Lattice> small_lattices(int max_edges) {
    std::vector<Lattice> out;
    std::set<std::string> seen;
    for (int m = 1; m <= max_edges; ++m) {
        std::vector<int> edge_perm(static_cast<size_t>(m));
        std::vector<EdgeId> darts;
        for (int i = 1; i <= m; ++i) {
            darts.push_back("e" + std::to_string(i));
            darts.push_back("-e" + std::to_string(i));
        }
        std::sort(darts.begin(), darts.end());

        auto canon = [&](const std::vector<std::vector<EdgeId>>& orders) {
            std::string best;
            std::vector<int> perm(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
            do {
                for (int flips = 0; flips < (1 << m); ++flips) {
                    auto rename = [&](const EdgeId& d) {
                        bool neg = edge_is_neg(d);
                        int idx = std::stoi(edge_base(d).substr(1)) - 1;
                        if ((flips >> idx) & 1) neg = !neg;
                        return std::string(neg ? "-" : "") + "e" +
                               std::to_string(perm[static_cast<size_t>(idx)] + 1);
                    };
                    for (int swap = 0; swap < (orders.size() == 2 ? 2 : 1); ++swap) {
                        std::string enc;
                        for (size_t vi = 0; vi < orders.size(); ++vi) {
                            const auto& ord = orders[swap ? orders.size() - 1 - vi : vi];
                            enc += "|";
                            for (const EdgeId& d : ord) enc += " " + rename(d);
                        }
                        if (best.empty() || enc < best) best = enc;
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            return best;
        };

        std::vector<EdgeId> seq = darts;
        do {
            for (size_t cut = 1; cut <= seq.size(); ++cut) {
                std::vector<std::vector<EdgeId>> orders;
                orders.emplace_back(seq.begin(), seq.begin() + static_cast<long>(cut));
                if (cut < seq.size())
                    orders.emplace_back(seq.begin() + static_cast<long>(cut), seq.end());
                std::string key = canon(orders);
                if (!seen.insert(key).second) continue;
                Lattice lat;
                static const char* names[2] = {"u", "v"};
                for (size_t vi = 0; vi < orders.size(); ++vi)
                    lat.vertices.push_back({names[vi], orders[vi]});
                lat.derive_involution();
                for (int i = 1; i <= m; ++i) lat.orientation.insert("e" + std::to_string(i));
                lat.validate();
                out.push_back(std::move(lat));
            }
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
    return out;
}

// Deleting either copy of the comultiplication recovers the input.
bool counit_deletion_holds(const FiniteHopf& h, const Lattice& lat) {
    MultitangleIR base = nabla(lat);
    for (bool keep_second : {true, false}) {
        auto steps = base.steps;
        std::map<EdgeId, EdgeId> back;
        for (const EdgeId& e : lat.orientation) {
            steps.push_back(ElementaryDiagram::stump(
                keep_second ? triad_prime(e) : triad_double_prime(e)));
            back[keep_second ? triad_double_prime(e) : triad_prime(e)] = e;
        }
        auto mt = compose_multitangle(lat, steps);
        for (const auto& x : basis_connections(h, lat)) {
            auto res = evaluate_multitangle(mt, x);
            if (!relabel_connection(res.state, back, {}).equals(x)) return false;
        }
    }
    return true;
}

// Comultiplying either copy again yields the same three-fold splitting.
bool coassociativity_holds(const FiniteHopf& h, const Lattice& lat) {
    MultitangleIR first = nabla(lat);

    std::map<EdgeId, EdgeId> edge_map;
    std::map<std::string, std::string> vertex_map;
    for (const EdgeId& e : lat.orientation) {
        edge_map[triad_prime(e)] = e + "a";
        edge_map[triad_double_prime(e)] = e + "b";
    }
    for (const Vertex& v : lat.vertices) {
        vertex_map[v.name + "'"] = v.name + "a";
        vertex_map[v.name + "''"] = v.name + "b";
    }
    Lattice mid = relabel_lattice(first.range(), edge_map, vertex_map);

    std::set<std::string> left_copy, right_copy;
    for (const Vertex& v : lat.vertices) {
        left_copy.insert(v.name + "a");
        right_copy.insert(v.name + "b");
    }
    MultitangleIR again_left = nabla(mid, left_copy);
    MultitangleIR again_right = nabla(mid, right_copy);

    std::map<EdgeId, EdgeId> lhs_names, rhs_names;
    for (const EdgeId& e : lat.orientation) {
        lhs_names[triad_prime(e + "a")] = e + "1";
        lhs_names[triad_double_prime(e + "a")] = e + "2";
        lhs_names[e + "b"] = e + "3";
        rhs_names[e + "a"] = e + "1";
        rhs_names[triad_prime(e + "b")] = e + "2";
        rhs_names[triad_double_prime(e + "b")] = e + "3";
    }

    for (const auto& x : basis_connections(h, lat)) {
        ConnectionState split = relabel_connection(
            evaluate_multitangle(first, x).state, edge_map, vertex_map);
        ConnectionState lhs = relabel_connection(
            evaluate_multitangle(again_left, split).state, lhs_names, {});
        ConnectionState rhs = relabel_connection(
            evaluate_multitangle(again_right, split).state, rhs_names, {});
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

}  // namespace

Suite suite_coalgebra() {
    Suite s{"coalgebra", {}};
    std::vector<Lattice> lats = small_lattices(3);
    std::vector<FiniteHopf> backends;
    backends.push_back(build_group_algebra(GroupTable::symmetric3()));
    backends.push_back(build_drinfeld_double(GroupTable::cyclic(2)));
    for (const FiniteHopf& h : backends) {
        std::string co_wit, cu_wit;
        bool co = true, cu = true;
        for (const Lattice& lat : lats) {
            if (co && !coassociativity_holds(h, lat)) {
                co = false;
                co_wit = lat.to_string();
            }
            if (cu && !counit_deletion_holds(h, lat)) {
                cu = false;
                cu_wit = lat.to_string();
            }
        }
        std::string scope =
            " over " + h.name + " (" + std::to_string(lats.size()) + " lattices)";
        s.checks.push_back({"comultiplication is coassociative" + scope, co, co_wit});
        s.checks.push_back({"deleting either copy recovers the input" + scope, cu, cu_wit});
    }
    return s;
}

Suite suite_push(uint64_t seed, int samples) {
    Suite s{"push", {}};
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    GroupTable g3 = GroupTable::symmetric3();

    {
        Lattice lat = Lattice::parse(
            "vertex u: e0\nvertex v: -e0 e1 e2\nvertex w1: -e1\nvertex w2: -e2\n"
            "orient e0 e1 e2\n");
        CompositeMove push = push_multitangle(lat, "e0");
        bool pass = true;
        std::string wit;
        for (int g = 0; g < 6 && pass; ++g)
            for (int h1 = 0; h1 < 6 && pass; ++h1)
                for (int h2 = 0; h2 < 6 && pass; ++h2) {
                    ConnectionState x = ConnectionState::from_assignment(
                        s3, lat, {{"e0", basis(g)}, {"e1", basis(h1)}, {"e2", basis(h2)}});
                    ConnectionState want = ConnectionState::from_assignment(
                        s3, lat,
                        {{"e1", basis(g3.op(g, h1))}, {"e2", basis(g3.op(g, h2))}});
                    if (!apply_composite(push, x).equals(want)) {
                        pass = false;
                        wit = x.to_string();
                    }
                }
        s.checks.push_back(
            {"a push spreads the holonomy over the head edges (k[S3])", pass, wit});
    }

    {
        Lattice lat = Lattice::parse(
            "vertex u: a -a e0\nvertex v: -e0 e1\nvertex w: -e1\norient a e0 e1\n");
        CompositeMove push = push_multitangle(lat, "e0");
        Rng rng(seed);
        auto conns = basis_connections(s3, lat);
        bool pass = true;
        std::string wit;
        for (int i = 0; i < samples && pass; ++i) {
            GaugeField f = project_observable(
                GaugeField::from_function(s3, lat, [&](const ConnectionState&) {
                    return Rat(static_cast<long>(rng.range(-4, 5)));
                }));
            if (!is_observable(f)) {
                pass = false;
                wit = "projection left the observable space";
                break;
            }
            for (const auto& x : conns)
                if (f.eval(apply_composite(push, x)) != f.eval(x)) {
                    pass = false;
                    wit = x.to_string();
                    break;
                }
        }
        s.checks.push_back(
            {"projected observables cannot see a push (" + std::to_string(samples) +
                 " sampled fields)",
             pass, wit});
    }
    return s;
}

namespace {

LMat random_lmat(Rng& rng) {
    LMat z = lmat_zero(2, 2);
    for (auto& row : z)
        for (auto& x : row)
            x = Laurent::term(Rat(static_cast<long>(rng.range(-3, 4))),
                              rng.range(-2, 3));
    return z;
}

Rat random_rat(Rng& rng) {
    return Rat(static_cast<long>(rng.range(-5, 5))) /
           Rat(static_cast<long>(rng.range(1, 4)));
}

}  // namespace

Suite suite_ch(uint64_t seed, int samples) {
    Suite s{"ch", {}};
    Rng rng(seed);

    {
        bool pass = true;
        std::string wit;
        for (int i = 0; i < samples; ++i) {
            LMat z = random_lmat(rng), w = random_lmat(rng);
            if (!quantum_ch_residual(z, w).is_zero()) {
                pass = false;
                wit = "pair " + std::to_string(i);
                break;
            }
        }
        s.checks.push_back({"quantum Cayley-Hamilton residual vanishes (" +
                                std::to_string(samples) + " matrix pairs)",
                            pass, wit});
    }

    {
        // t = 1 limit: tr(AB) + tr(A^-1 B) = tr(A) tr(B) for det A = 1.
        bool pass = true;
        std::string wit;
        for (int i = 0; i < samples; ++i) {
            Rat a(0), b(0), c(0);
            while (a == 0) a = random_rat(rng);
            b = random_rat(rng);
            c = random_rat(rng);
            Rat d = (Rat(1) + b * c) / a;
            Rat e = random_rat(rng), f = random_rat(rng), g = random_rat(rng),
                h = random_rat(rng);
            Rat tr_ab = a * e + b * g + c * f + d * h;
            Rat tr_ainvb = d * e - b * g - c * f + a * h;
            if (tr_ab + tr_ainvb != (a + d) * (e + h)) {
                pass = false;
                wit = "pair " + std::to_string(i);
                break;
            }
        }
        s.checks.push_back({"classical trace identity tr(AB) + tr(A^-1B) = tr(A)tr(B) (" +
                                std::to_string(samples) + " unimodular pairs)",
                            pass, wit});
    }
    return s;
}

namespace {

struct DiagramShape {
    std::string components;
    std::vector<std::pair<EdgeId, EdgeId>> pairs;  // cilially adjacent darts
};

struct SurfaceSetup {
    std::string name;
    Lattice lat;
    std::vector<DiagramShape> shapes;
};

std::vector<SurfaceSetup> zeta_surfaces(const std::string& which) {
    std::vector<SurfaceSetup> out;
    if (which == "annulus" || which == "both") {
        SurfaceSetup a;
        a.name = "annulus";
        a.lat = Lattice::parse("vertex v: e -e\norient e");
        a.shapes.push_back({"component c closed : e", {{"e", "-e"}}});
        a.shapes.push_back({"component c1 closed : e@1\ncomponent c2 closed : e@2",
                            {{"e'", "e''"}, {"e''", "-e''"}, {"-e''", "-e'"}}});
        out.push_back(std::move(a));
    }
    if (which == "punctured-torus" || which == "both") {
        SurfaceSetup t;
        t.name = "punctured-torus";
        t.lat = Lattice::parse("vertex v: a b -a -b\norient a b");
        t.shapes.push_back({"component c1 closed : a\ncomponent c2 closed : b",
                            {{"a", "b"}, {"b", "-a"}, {"-a", "-b"}}});
        t.shapes.push_back({"component c1 closed : a@1\ncomponent c2 closed : a@2",
                            {{"a'", "a''"}, {"-a''", "-a'"}}});
        t.shapes.push_back({"component c1 closed : b@1\ncomponent c2 closed : b@2",
                            {{"b'", "b''"}, {"-b''", "-b'"}}});
        out.push_back(std::move(t));
    }
    if (out.empty()) throw NamedError("UnknownSurface", which);
    return out;
}

}  // namespace

Suite suite_zeta(uint64_t seed, int samples, const std::string& surface) {
    Suite s{"zeta", {}};
    for (const SurfaceSetup& surf : zeta_surfaces(surface)) {
        Rng rng(seed);
        bool pass = true;
        std::string wit;
        int found = 0, tries = 0;
        while (found < samples && tries < 100 * samples) {
            ++tries;
            const DiagramShape& shape =
                surf.shapes[static_cast<size_t>(rng.below(surf.shapes.size()))];
            QTangle t = QTangle::parse(shape.components);
            int ncross = static_cast<int>(rng.range(0, 3));
            for (int i = 0; i < ncross; ++i) {
                auto [x, y] = shape.pairs[static_cast<size_t>(rng.below(shape.pairs.size()))];
                TangleCrossing cr;
                cr.vertex = "v";
                cr.sign = rng.range(0, 1) ? 1 : -1;
                cr.a = x;
                cr.b = y;
                if (rng.range(0, 1)) std::swap(cr.a, cr.b);
                t.crossings.push_back(cr);
            }
            try {
                compile_qtangle(surf.lat, t);
            } catch (const NamedError&) {
                continue;
            }
            bool all_equal = true;
            try {
                for (long j = -2; j <= 2; ++j) {
                    std::map<EdgeId, UqElement> conn;
                    for (const EdgeId& e : surf.lat.orientation) conn[e] = UqElement::K(j);
                    if (!zeta_compare(surf.lat, t, conn).equal) {
                        all_equal = false;
                        break;
                    }
                }
            } catch (const NamedError&) {
                continue;  // odd crossing parity between closed cables: not a link
            }
            ++found;
            if (!all_equal && pass) {
                pass = false;
                wit = t.to_string();
            }
        }
        if (found < samples && pass) {
            pass = false;
            wit = "only " + std::to_string(found) + " diagrams realized";
        }
        s.checks.push_back({"reduction matches direct evaluation on the " + surf.name +
                                " (" + std::to_string(found) + " diagrams x 5 connections)",
                            pass, wit});
    }
    return s;
}

std::string render_report(const std::vector<Suite>& suites, uint64_t seed,
                          int samples, bool json) {
    bool all = true;
    int total = 0, passed = 0;
    for (const Suite& s : suites) {
        all = all && s.ok();
        for (const auto& c : s.checks) {
            ++total;
            if (c.passed) ++passed;
        }
    }
    if (json) {
        nlohmann::json j;
        j["rng"] = {{"algorithm", "splitmix64"}, {"seed", seed}};
        j["samples"] = samples;
        j["suites"] = nlohmann::json::array();
        for (const Suite& s : suites) {
            nlohmann::json js;
            js["name"] = s.name;
            js["ok"] = s.ok();
            js["checks"] = nlohmann::json::array();
            for (const auto& c : s.checks)
                js["checks"].push_back(
                    {{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
            j["suites"].push_back(std::move(js));
        }
        j["ok"] = all;
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "rng: splitmix64 seed " << seed << "\n";
    out << "samples: " << samples << "\n";
    for (const Suite& s : suites) {
        out << "\n[" << s.name << "]\n";
        for (const auto& c : s.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
            if (!c.passed && !c.witness.empty()) out << "  witness: " << c.witness << "\n";
        }
    }
    out << "\nresult: " << (all ? "PASS" : "FAIL") << " (" << passed << "/" << total
        << " checks)\n";
    return out.str();
}

}  // namespace lgft
