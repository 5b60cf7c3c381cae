#include "lgft/moves.hpp"

#include "lgft/rng.hpp"

namespace lgft {

namespace {

using ED = ElementaryDiagram;

std::string sgn(int s) { return s > 0 ? "+" : "-"; }

Lattice annulus(bool fwd) {
    return Lattice::parse(std::string("vertex v: -e e\norient ") + (fwd ? "e" : "-e"));
}

Lattice strand_only(bool fwd) {
    return Lattice::parse(std::string("vertex v: e2\nvertex w: -e2\norient ") +
                          (fwd ? "e2" : "-e2"));
}

Lattice two_edge(bool fwd1, bool fwd2) {
    return Lattice::parse(std::string("vertex v: e1 e2 -e1\nvertex w: -e2\norient ") +
                          (fwd1 ? "e1" : "-e1") + " " + (fwd2 ? "e2" : "-e2"));
}

Lattice two_loop(bool fwd1, bool fwd2) {
    return Lattice::parse(std::string("vertex v: e1 e2 -e2 -e1\norient ") +
                          (fwd1 ? "e1" : "-e1") + " " + (fwd2 ? "e2" : "-e2"));
}

// A curl on the single strand of the annulus. The loop edge is `fresh`; the
// surviving edge pair keeps the old unoriented symbol and the fresh one.
std::vector<ED> curl(bool fwd, bool left, int s, const EdgeId& fresh) {
    EdgeId f = fresh, nf = "-" + fresh;
    // The left-side loop is the mirror image, so the drawn handedness needs
    // the opposite crossing sign there.
    if (fwd) {
        if (left) return {ED::cup("v", 1, f), ED::crossing(-s, nf, "e"), ED::cap("e", nf)};
        return {ED::cup("v", 1, nf), ED::crossing(s, f, "e"), ED::cap(nf, "e")};
    }
    if (left) return {ED::cup("v", 0, nf), ED::crossing(s, f, "-e"), ED::cap(nf, "-e")};
    return {ED::cup("v", 1, f), ED::crossing(s, "-e", f), ED::cap("-e", nf)};
}

// After a curl the strand's oriented symbol is the fresh edge name.
std::map<EdgeId, EdgeId> curl_back(bool fwd, const EdgeId& fresh) {
    return {{fresh, fwd ? "e" : "-e"}};
}

void braid_cases(std::vector<MoveCase>& out) {
    for (int s : {1, -1})
        for (bool o1 : {true, false})
            for (bool o2 : {true, false}) {
                MoveCase mc;
                mc.name = "reidemeister-1 s" + sgn(s) + " o" + (o1 ? "+" : "-") +
                          (o2 ? "+" : "-");
                mc.domain = two_edge(o1, o2);
                mc.lhs = {{{ED::crossing(s, "e1", "e2"), ED::crossing(s, "e1", "-e1"),
                            ED::crossing(s, "e2", "-e1")},
                           {}}};
                mc.rhs = {{{ED::crossing(s, "e2", "-e1"), ED::crossing(s, "e1", "-e1"),
                            ED::crossing(s, "e1", "e2")},
                           {}}};
                out.push_back(std::move(mc));
            }
}

void curl_cancel_cases(std::vector<MoveCase>& out) {
    for (bool left : {false, true})
        for (int s : {1, -1})
            for (bool o : {true, false}) {
                MoveCase mc;
                mc.name = std::string(left ? "reidemeister-5" : "reidemeister-2") + " s" +
                          sgn(s) + " o" + (o ? "+" : "-");
                mc.domain = annulus(o);
                // Opposite curls on the same strand cancel.
                std::vector<ED> first = curl(o, left, s, "f");
                // The second curl repeats the pattern on the renamed strand.
                MoveStage st1{first, curl_back(o, "f")};
                MoveStage st2{curl(o, left, -s, "g"), curl_back(o, "g")};
                mc.lhs = {st1, st2};
                mc.rhs = {};
                out.push_back(std::move(mc));
            }
}

void strand_past_min_cases(std::vector<MoveCase>& out) {
    for (bool from_right : {true, false})
        for (bool min_fwd : {true, false})
            for (int s : {1, -1})
                for (bool o : {true, false}) {
                    MoveCase mc;
                    mc.name = std::string(from_right ? "reidemeister-3" : "reidemeister-6") +
                              " s" + sgn(s) + " min" + (min_fwd ? "+" : "-") + " o" +
                              (o ? "+" : "-");
                    mc.domain = strand_only(o);
                    EdgeId a = min_fwd ? "f" : "-f";   // first inserted symbol
                    EdgeId p = min_fwd ? "f" : "-f";
                    EdgeId q = min_fwd ? "-f" : "f";
                    if (from_right) {
                        mc.lhs = {{{ED::cup("v", 1, a), ED::crossing(s, "e2", p),
                                    ED::crossing(s, "e2", q)},
                                   {}}};
                        mc.rhs = {{{ED::cup("v", 0, a)}, {}}};
                    } else {
                        mc.lhs = {{{ED::cup("v", 0, a), ED::crossing(s, q, "e2"),
                                    ED::crossing(s, p, "e2")},
                                   {}}};
                        mc.rhs = {{{ED::cup("v", 1, a)}, {}}};
                    }
                    out.push_back(std::move(mc));
                }
}

void curl_slide_cases(std::vector<MoveCase>& out) {
    for (int s : {1, -1})
        for (bool o : {true, false}) {
            MoveCase mc;
            mc.name = "reidemeister-4 s" + sgn(s) + " o" + (o ? "+" : "-");
            mc.domain = annulus(o);
            mc.lhs = {{curl(o, true, s, "f"), {}}};
            mc.rhs = {{curl(o, false, s, "f"), {}}};
            out.push_back(std::move(mc));

            MoveCase fr;
            fr.name = "reidemeister-4 twist-scalar s" + sgn(s) + " o" + (o ? "+" : "-");
            fr.domain = annulus(o);
            fr.lhs = {{curl(o, false, s, "f"), curl_back(o, "f")}};
            fr.oracle = [s](const ConnectionState& x) {
                const FiniteHopf& h = *x.backend;
                bool inverse = (s > 0) == (kPositiveCurlTwist < 0);
                ConnectionState out = x;
                out.tensor = h.leg_lmul(x.tensor, 0, inverse ? h.theta_inv : h.theta);
                return out;
            };
            out.push_back(std::move(fr));
        }
}

void crossing_inverse_cases(std::vector<MoveCase>& out) {
    for (int s : {1, -1})
        for (bool o1 : {true, false})
            for (bool o2 : {true, false})
                for (bool involutary : {false, true}) {
                    MoveCase mc;
                    mc.name = "reidemeister-7 s" + sgn(s) +
                              (involutary ? " pair" : " distinct") + " o" +
                              (o1 ? "+" : "-") + (o2 ? "+" : "-");
                    mc.domain = two_loop(o1, o2);
                    EdgeId a = involutary ? "e2" : "e1";
                    EdgeId b = involutary ? "-e2" : "e2";
                    mc.lhs = {{{ED::crossing(s, a, b), ED::crossing(-s, b, a)}, {}}};
                    mc.rhs = {};
                    out.push_back(std::move(mc));
                }
}

void strand_past_triad_cases(std::vector<MoveCase>& out) {
    for (int s : {1, -1})
        for (bool mirror : {false, true})
            for (bool o1 : {true, false})
                for (bool o2 : {true, false}) {
                    MoveCase mc;
                    mc.name = "reidemeister-8 s" + sgn(s) + (mirror ? " right" : " left") +
                              " o" + (o1 ? "+" : "-") + (o2 ? "+" : "-");
                    mc.domain = two_edge(o1, o2);
                    EdgeId z = o2 ? "e2" : "-e2";
                    EdgeId p = o2 ? "e2'" : "e2''";
                    EdgeId q = o2 ? "e2''" : "e2'";
                    if (!mirror) {
                        mc.lhs = {{{ED::triad(z), ED::crossing(s, "e1", p),
                                    ED::crossing(s, "e1", q)},
                                   {}}};
                        mc.rhs = {{{ED::crossing(s, "e1", "e2"), ED::triad(z)}, {}}};
                    } else {
                        mc.lhs = {{{ED::triad(z), ED::crossing(s, q, "-e1"),
                                    ED::crossing(s, p, "-e1")},
                                   {}}};
                        mc.rhs = {{{ED::crossing(s, "e2", "-e1"), ED::triad(z)}, {}}};
                    }
                    out.push_back(std::move(mc));
                }
}

void distant_crossing_cases(std::vector<MoveCase>& out) {
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            MoveCase mc;
            mc.name = "reidemeister-9 s" + sgn(s1) + sgn(s2);
            mc.domain = two_loop(true, true);
            mc.lhs = {{{ED::crossing(s1, "e1", "e2"), ED::crossing(s2, "-e2", "-e1")}, {}}};
            mc.rhs = {{{ED::crossing(s2, "-e2", "-e1"), ED::crossing(s1, "e1", "e2")}, {}}};
            out.push_back(std::move(mc));
        }
}

void triad_move_cases(std::vector<MoveCase>& out) {
    for (bool o : {true, false}) {
        for (bool neg : {true, false}) {
            MoveCase mc;
            mc.name = std::string("triad-1 ") + (neg ? "min-" : "min+") + " o" +
                      (o ? "+" : "-");
            mc.domain = annulus(o);
            if (neg) {
                mc.lhs = {{{ED::cup("v", 0, "-f"), ED::triad("f")},
                           {{"f'", "h"}, {"f''", "g"}}}};
                mc.rhs = {{{ED::cup("v", 0, "-g"), ED::cup("v", 1, "-h")}, {}}};
            } else {
                mc.lhs = {{{ED::cup("v", 0, "f"), ED::triad("f")},
                           {{"f'", "g"}, {"f''", "h"}}}};
                mc.rhs = {{{ED::cup("v", 0, "g"), ED::cup("v", 1, "h")}, {}}};
            }
            out.push_back(std::move(mc));
        }
        EdgeId z = o ? "e" : "-e";
        MoveCase mc;
        mc.name = std::string("triad-2 o") + (o ? "+" : "-");
        mc.domain = annulus(o);
        mc.lhs = {{{ED::triad(z)}, {{triad_prime(z), "a"}, {triad_double_prime(z), "b"}}},
                  {{ED::triad("a")}, {{"a'", "x1"}, {"a''", "x2"}, {"b", "x3"}}}};
        mc.rhs = {{{ED::triad(z)}, {{triad_prime(z), "a"}, {triad_double_prime(z), "b"}}},
                  {{ED::triad("b")}, {{"a", "x1"}, {"b'", "x2"}, {"b''", "x3"}}}};
        out.push_back(std::move(mc));
    }
}

void cap_move_cases(std::vector<MoveCase>& out) {
    for (bool o : {true, false}) {
        MoveCase mc;
        mc.name = std::string("cap-1 o") + (o ? "+" : "-");
        mc.domain = annulus(o);
        mc.lhs = {{{ED::cap("-e", "e")}, {}}};
        mc.rhs = {{{ED::switch_edge(o ? "e" : "-e"), ED::cap("-e", "e")}, {}}};
        out.push_back(std::move(mc));
    }
    for (bool first : {true, false}) {
        MoveCase mc;
        mc.name = std::string("cap-2 o") + (first ? "+-" : "-+");
        mc.domain = two_loop(first, !first);
        mc.lhs = {{{ED::cap("e1", "e2"), ED::cap("-e2", "-e1")}, {}}};
        mc.rhs = {{{ED::cap("-e2", "-e1"), ED::cap("e1", "e2")}, {}}};
        out.push_back(std::move(mc));
    }
    for (bool first : {true, false}) {
        MoveCase mc;
        mc.name = std::string("cap-3 o") + (first ? "+-" : "-+");
        mc.domain = two_edge(first, !first);
        EdgeId fused = first ? "-e2" : "-e1";
        mc.lhs = {{{ED::cap("e1", "e2"), ED::stump(fused)}, {}}};
        mc.rhs = {{{ED::stump("e1"), ED::stump("e2")}, {}}};
        out.push_back(std::move(mc));
    }
}

void stump_move_cases(std::vector<MoveCase>& out) {
    for (bool o : {true, false}) {
        EdgeId z = o ? "e" : "-e";
        for (bool keep_second : {true, false}) {
            MoveCase mc;
            mc.name = std::string("stump-1 ") + (keep_second ? "left" : "right") + " o" +
                      (o ? "+" : "-");
            mc.domain = annulus(o);
            EdgeId gone = keep_second ? triad_prime(z) : triad_double_prime(z);
            EdgeId kept = keep_second ? triad_double_prime(z) : triad_prime(z);
            mc.lhs = {{{ED::triad(z), ED::stump(gone)}, {{kept, z}}}};
            mc.rhs = {};
            out.push_back(std::move(mc));
        }
        for (bool neg : {true, false}) {
            MoveCase mc;
            mc.name = std::string("stump-2 min") + (neg ? "-" : "+") + " o" + (o ? "+" : "-");
            mc.domain = annulus(o);
            mc.lhs = {{{ED::cup("v", 0, neg ? "-f" : "f"), ED::stump("f")}, {}}};
            mc.rhs = {};
            out.push_back(std::move(mc));
        }
    }
    for (int s : {1, -1})
        for (bool which : {true, false})
            for (bool o1 : {true, false})
                for (bool o2 : {true, false}) {
                    MoveCase mc;
                    mc.name = "stump-3 s" + sgn(s) + (which ? " under" : " over") + " o" +
                              (o1 ? "+" : "-") + (o2 ? "+" : "-");
                    mc.domain = two_edge(o1, o2);
                    EdgeId t = which ? "e1" : "e2";
                    mc.lhs = {{{ED::crossing(s, "e1", "e2"), ED::stump(t)}, {}}};
                    mc.rhs = {{{ED::stump(t)}, {}}};
                    out.push_back(std::move(mc));
                }
}

void switch_move_cases(std::vector<MoveCase>& out) {
    for (bool o : {true, false}) {
        EdgeId z = o ? "e" : "-e";
        EdgeId iz = o ? "-e" : "e";
        {
            MoveCase mc;
            mc.name = std::string("switch-1 o") + (o ? "+" : "-");
            mc.domain = annulus(o);
            mc.lhs = {{{ED::switch_edge(z), ED::triad(iz)},
                       {{triad_prime(iz), "A"}, {triad_double_prime(iz), "B"}}}};
            mc.rhs = {{{ED::triad(z), ED::switch_edge(triad_prime(z)),
                        ED::switch_edge(triad_double_prime(z))},
                       {{edge_inv(triad_prime(z)), "B"},
                        {edge_inv(triad_double_prime(z)), "A"}}}};
            out.push_back(std::move(mc));
        }
        {
            MoveCase mc;
            mc.name = std::string("switch-2 o") + (o ? "+" : "-");
            mc.domain = annulus(o);
            mc.lhs = {{{ED::switch_edge(z), ED::stump(iz)}, {}}};
            mc.rhs = {{{ED::stump(z)}, {}}};
            out.push_back(std::move(mc));
        }
        {
            MoveCase mc;
            mc.name = std::string("switch-3 o") + (o ? "+" : "-");
            mc.domain = annulus(o);
            mc.lhs = {{{ED::switch_edge(z), ED::switch_edge(iz)}, {}}};
            mc.rhs = {};
            out.push_back(std::move(mc));
        }
    }
    for (bool neg : {true, false}) {
        MoveCase mc;
        mc.name = std::string("switch-4 min") + (neg ? "-" : "+");
        mc.domain = annulus(true);
        EdgeId c = neg ? "-f" : "f";
        mc.lhs = {{{ED::cup("v", 0, c), ED::switch_edge("f"), ED::switch_edge("-f")}, {}}};
        mc.rhs = {{{ED::cup("v", 0, c)}, {}}};
        out.push_back(std::move(mc));
    }
    for (int s : {1, -1})
        for (bool o1 : {true, false})
            for (bool o2 : {true, false}) {
                MoveCase mc;
                mc.name = "switch-5 s" + sgn(s) + " o" + (o1 ? "+" : "-") + (o2 ? "+" : "-");
                mc.domain = two_edge(o1, o2);
                EdgeId z1 = o1 ? "e1" : "-e1", z2 = o2 ? "e2" : "-e2";
                mc.lhs = {{{ED::crossing(s, "e1", "e2"), ED::switch_edge(z1),
                            ED::switch_edge(z2)},
                           {}}};
                mc.rhs = {{{ED::switch_edge(z1), ED::switch_edge(z2),
                            ED::crossing(s, "e1", "e2")},
                           {}}};
                out.push_back(std::move(mc));
            }
}

void algebraic_move_cases(std::vector<MoveCase>& out) {
    for (bool o : {true, false}) {
        EdgeId z = o ? "e" : "-e";
        EdgeId zp = triad_prime(z), zpp = triad_double_prime(z);
        for (bool second : {false, true}) {
            MoveCase mc;
            mc.name = std::string("algebraic-1 ") + (second ? "right" : "left") + " o" +
                      (o ? "+" : "-");
            mc.domain = annulus(o);
            EdgeId switched = second ? zpp : zp;
            EdgeId survivor = edge_inv(switched);
            EdgeId other = edge_inv(second ? zp : zpp);
            mc.lhs = {{{ED::triad(z), ED::switch_edge(switched), ED::cap(zp, zpp)},
                       {{survivor, "f"}, {other, "-f"}}}};
            // The counit then a fresh minimum; its value matches the cap's
            // leftover charm factor.
            mc.rhs = {{{ED::cup("v", 2, second ? "f" : "-f"), ED::stump(z)}, {}}};
            out.push_back(std::move(mc));
        }
        for (int s : {1, -1}) {
            MoveCase mc;
            mc.name = "algebraic-2 s" + sgn(s) + " o" + (o ? "+" : "-");
            mc.domain = annulus(o);
            mc.lhs = {{{ED::triad(z), ED::crossing(s, zp, zpp)}, {}}};
            mc.oracle = [z, zp, zpp, s](const ConnectionState& x) {
                const FiniteHopf& h = *x.backend;
                HTensor cp = h.leg_coproduct(x.tensor, 0);
                HTensor swapped = h.permute_legs(cp, {1, 0});
                HTensor acc;
                for (const auto& [rk, rc] : h.R) {
                    HElt first{{rk[0], Rat(1)}}, secnd{{rk[1], Rat(1)}};
                    HElt a = s > 0 ? first : secnd;
                    HElt b = s > 0 ? secnd : h.S(first);
                    HTensor t = h.leg_rmul(h.leg_rmul(swapped, 0, a), 1, b);
                    for (const auto& [k, c] : t) {
                        acc[k] += c * rc;
                        if (acc[k] == 0) acc.erase(k);
                    }
                }
                ConnectionState out = x;
                out.index = {zp, zpp};
                out.tensor = std::move(acc);
                return out;
            };
            out.push_back(std::move(mc));
        }
    }
}

}  // namespace

std::vector<MoveCase> move_catalogue() {
    std::vector<MoveCase> out;
    braid_cases(out);
    curl_cancel_cases(out);
    strand_past_min_cases(out);
    curl_slide_cases(out);
    crossing_inverse_cases(out);
    strand_past_triad_cases(out);
    distant_crossing_cases(out);
    triad_move_cases(out);
    cap_move_cases(out);
    stump_move_cases(out);
    switch_move_cases(out);
    algebraic_move_cases(out);
    return out;
}

ConnectionState run_move_side(const MoveSide& side, const ConnectionState& x) {
    ConnectionState cur = x;
    for (const MoveStage& st : side) {
        MultitangleIR mt = compose_multitangle(cur.lattice, st.steps);
        cur = evaluate_multitangle(mt, cur).state;
        if (!st.rename.empty()) cur = relabel_connection(cur, st.rename, {});
    }
    return cur;
}

std::vector<MoveOutcome> check_moves(const FiniteHopf& h, size_t exhaustive_limit,
                                     int samples, uint64_t seed) {
    std::vector<MoveOutcome> out;
    Rng rng(seed);
    for (const MoveCase& mc : move_catalogue()) {
        MoveOutcome res;
        res.name = mc.name;
        res.pass = true;

        std::vector<ConnectionState> inputs;
        size_t rank = mc.domain.orientation.size();
        size_t count = 1;
        for (size_t i = 0; i < rank && count <= exhaustive_limit; ++i)
            count *= static_cast<size_t>(h.dim);
        if (count <= exhaustive_limit) {
            inputs = basis_connections(h, mc.domain);
        } else {
            for (int i = 0; i < samples; ++i) {
                std::map<EdgeId, HElt> assign;
                for (const EdgeId& e : mc.domain.orientation)
                    assign[e] = HElt{{static_cast<int>(rng.below(h.dim)), Rat(1)}};
                inputs.push_back(ConnectionState::from_assignment(h, mc.domain, assign));
            }
        }

        for (const auto& x : inputs) {
            ConnectionState lhs = run_move_side(mc.lhs, x);
            ConnectionState rhs = mc.oracle ? mc.oracle(x) : run_move_side(mc.rhs, x);
            if (!lhs.equals(rhs)) {
                res.pass = false;
                res.witness = x.to_string();
                break;
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

CompositeMove push_multitangle(const Lattice& lat, const EdgeId& e) {
    if (!lat.orientation.count(e))
        throw NamedError("InvalidParameters", "push acts along an oriented symbol: " + e);
    EdgeId back = lat.involution.at(e);
    auto [hi, hp] = lat.locate(back);
    const Vertex& head = lat.vertices[static_cast<size_t>(hi)];
    if (hp != 0)
        throw NamedError("InvalidParameters", "push head cilium must start at " + back);
    auto [ti, tp] = lat.locate(e);
    const Vertex& tail = lat.vertices[static_cast<size_t>(ti)];
    if (ti == hi || tp + 1 != static_cast<int>(tail.order.size()))
        throw NamedError("InvalidParameters", "push tail dart must close its own cilium");
    std::vector<EdgeId> spread(head.order.begin() + 1, head.order.end());
    if (spread.empty())
        throw NamedError("InvalidParameters", "push head has no other edges");
    for (const EdgeId& d : spread) {
        auto [di, dp] = lat.locate(lat.involution.at(d));
        if (!lat.orientation.count(d) || di == hi)
            throw NamedError("InvalidParameters", "push head edges must leave the head: " + d);
    }

    // Split e into one copy per remaining head edge; the copies carry the
    // Sweedler legs of the head holonomy in cilial order.
    std::vector<ElementaryDiagram> steps;
    std::vector<EdgeId> copies;
    EdgeId pending = e;
    for (size_t i = 1; i < spread.size(); ++i) {
        steps.push_back(ElementaryDiagram::triad(pending));
        copies.push_back(triad_prime(pending));
        pending = triad_double_prime(pending);
    }
    copies.push_back(pending);

    // Each copy fuses onto the matching head edge; the head vertex empties out.
    for (size_t i = 0; i < spread.size(); ++i)
        steps.push_back(ElementaryDiagram::cap(edge_inv(copies[i]), spread[i]));

    // A fresh unit strand and a cut restore the head vertex and the pushed edge.
    EdgeId fresh = e + "^";
    while (lat.has_edge(fresh) || lat.has_edge(edge_inv(fresh))) fresh += "^";
    int base = static_cast<int>(tail.order.size()) - 1;
    steps.push_back(ElementaryDiagram::cup(tail.name, base, fresh));
    steps.push_back(ElementaryDiagram::cut(tail.name, base + 1));

    CompositeMove out;
    out.ir = compose_multitangle(lat, steps);
    out.edge_rename[fresh] = e;
    out.edge_rename[edge_inv(fresh)] = back;
    for (size_t i = 0; i < spread.size(); ++i) out.edge_rename[copies[i]] = spread[i];
    out.vertex_rename[tail.name + "'"] = tail.name;
    out.vertex_rename[tail.name + "''"] = head.name;
    return out;
}

ConnectionState apply_composite(const CompositeMove& m, const ConnectionState& x) {
    return relabel_connection(evaluate_multitangle(m.ir, x).state, m.edge_rename,
                              m.vertex_rename);
}

MultitangleIR toggle_multitangle(const Lattice& lat, const std::string& vertex, int dir) {
    const Vertex& v = lat.vertex(vertex);
    size_t n = v.order.size();
    std::vector<ElementaryDiagram> steps;
    if (dir > 0) {
        for (size_t i = 1; i < n; ++i)
            steps.push_back(ElementaryDiagram::crossing(kToggleSign, v.order[0], v.order[i]));
        // The moved strand wraps around the vertex, picking up a curl.
        steps.push_back(ElementaryDiagram::twist(kToggleSign, v.order[0]));
    } else {
        steps.push_back(ElementaryDiagram::twist(-kToggleSign, v.order[n - 1]));
        for (size_t i = n - 1; i-- > 0;)
            steps.push_back(
                ElementaryDiagram::crossing(-kToggleSign, v.order[i], v.order[n - 1]));
    }
    return compose_multitangle(lat, steps);
}

}  // namespace lgft
