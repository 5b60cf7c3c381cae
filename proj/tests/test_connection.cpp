#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgft/connection.hpp"
#include "lgft/rng.hpp"

using namespace lgft;

namespace {

Lattice annulus() { return Lattice::parse("vertex v: -e e\norient e\n"); }

Lattice theta_graph() {
    // Two vertices joined by two parallel edges, both pointing the same way.
    return Lattice::parse("vertex v: e1 e2\nvertex w: -e2 -e1\norient e1 e2\n");
}

HElt basis(int i) { return HElt{{i, Rat(1)}}; }

ConnectionState rand_basis_connection(Rng& rng, const FiniteHopf& h, const Lattice& lat) {
    std::map<EdgeId, HElt> assign;
    for (const EdgeId& e : lat.orientation)
        assign[e] = basis(static_cast<int>(rng.below(h.dim)));
    return ConnectionState::from_assignment(h, lat, assign);
}

GaugeElement rand_basis_gauge(Rng& rng, const FiniteHopf& h, const Lattice& lat) {
    std::map<std::string, HElt> assign;
    for (const auto& v : lat.vertices)
        assign[v.name] = basis(static_cast<int>(rng.below(h.dim)));
    return GaugeElement::from_assignment(h, lat, assign);
}

}  // namespace

TEST_CASE("switch conjugates to group inverse on a group backend") {
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    Lattice lat = annulus();
    for (int g = 0; g < s3.dim; ++g) {
        auto mt = compose_multitangle(lat, {ElementaryDiagram::switch_edge("e")});
        auto res = evaluate_multitangle(
            mt, ConnectionState::from_assignment(s3, lat, {{"e", basis(g)}}));
        CHECK(res.state.index == std::vector<EdgeId>{"-e"});
        int ginv = GroupTable::symmetric3().inverse[static_cast<size_t>(g)];
        CHECK(res.state.tensor == HTensor{{{ginv}, Rat(1)}});
    }
}

TEST_CASE("stump applies the counit") {
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    Lattice lat = annulus();
    auto mt = compose_multitangle(lat, {ElementaryDiagram::stump("e")});
    auto res = evaluate_multitangle(
        mt, ConnectionState::from_assignment(s3, lat, {{"e", basis(3)}}));
    CHECK(res.state.index.empty());
    CHECK(res.state.tensor == HTensor{{HKey{}, Rat(1)}});
    // Vertex vanished, so the gauge map is the counit there.
    CHECK(res.gauge_map.at("v").empty());
}

TEST_CASE("crossing over a group backend only transposes strands") {
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    Lattice lat = theta_graph();
    auto mt = compose_multitangle(lat, {ElementaryDiagram::crossing(1, "e1", "e2")});
    ConnectionState x =
        ConnectionState::from_assignment(s3, lat, {{"e1", basis(1)}, {"e2", basis(3)}});
    auto res = evaluate_multitangle(mt, x);
    // Factors are untouched (R = 1 x 1); the strand positions swapped.
    CHECK(res.state.canonical().tensor == x.canonical().tensor);
    CHECK(res.state.lattice.vertex("v").order == std::vector<EdgeId>{"e2", "e1"});
}

TEST_CASE("gauge action by a grouplike conjugates a loop holonomy") {
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    GroupTable g3 = GroupTable::symmetric3();
    Lattice lat = annulus();
    for (int g = 0; g < 6; ++g)
        for (int x = 0; x < 6; ++x) {
            GaugeElement y = GaugeElement::from_assignment(s3, lat, {{"v", basis(g)}});
            ConnectionState conn =
                ConnectionState::from_assignment(s3, lat, {{"e", basis(x)}});
            ConnectionState acted = gauge_act(y, conn);
            int want = g3.op(g3.op(g, x), g3.inverse[static_cast<size_t>(g)]);
            CHECK(acted.tensor == HTensor{{{want}, Rat(1)}});
        }
}

TEST_CASE("gauge unit acts trivially") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = theta_graph();
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        ConnectionState x = rand_basis_connection(rng, d2, lat);
        CHECK(gauge_act(GaugeElement::unit(d2, lat), x).equals(x));
    }
}

TEST_CASE("gauge action is a module action") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = annulus();
    Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        GaugeElement y1 = rand_basis_gauge(rng, d2, lat);
        GaugeElement y2 = rand_basis_gauge(rng, d2, lat);
        ConnectionState x = rand_basis_connection(rng, d2, lat);
        // (y1 y2) . x = y1 . (y2 . x)
        GaugeElement prod = y1;
        prod.tensor = d2.tensor_mul(y1.tensor, y2.tensor);
        CHECK(gauge_act(prod, x).equals(gauge_act(y1, gauge_act(y2, x))));
    }
}

TEST_CASE("multitangle evaluation intertwines the gauge action") {
    // Theorem-level check that pins every elementary action convention:
    // evaluating after gauging equals gauging the image through the induced
    // gauge map.
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = Lattice::parse("vertex v: e1 e2 -e1\nvertex w: -e2\norient e1 e2\n");

    std::vector<std::vector<ElementaryDiagram>> programs = {
        {ElementaryDiagram::switch_edge("e1")},
        {ElementaryDiagram::triad("e2")},
        {ElementaryDiagram::crossing(1, "e1", "e2")},
        {ElementaryDiagram::crossing(-1, "e1", "e2")},
        {ElementaryDiagram::crossing(1, "e2", "-e1")},
        {ElementaryDiagram::crossing(-1, "e2", "-e1")},
        {ElementaryDiagram::stump("e2")},
        {ElementaryDiagram::cut("v", 1)},
        {ElementaryDiagram::cup("w", 0, "f")},
        {ElementaryDiagram::cup("w", 1, "-f")},
        {ElementaryDiagram::cap("e2", "-e1")},
        {ElementaryDiagram::switch_edge("e1"), ElementaryDiagram::cap("e1", "e2")},
        {ElementaryDiagram::triad("e1"),
         ElementaryDiagram::crossing(1, "e1''", "e2")},
        {ElementaryDiagram::stump("e2"), ElementaryDiagram::cap("e1", "-e1")},
    };

    Rng rng(13);
    for (const auto& steps : programs) {
        auto mt = compose_multitangle(lat, steps);
        for (int trial = 0; trial < 12; ++trial) {
            ConnectionState x = rand_basis_connection(rng, d2, lat);
            GaugeElement y = rand_basis_gauge(rng, d2, lat);
            auto lhs = evaluate_multitangle(mt, gauge_act(y, x));
            auto rhs_eval = evaluate_multitangle(mt, x);
            GaugeElement mapped = apply_gauge_map(rhs_eval.gauge_map, mt.range(), y);
            ConnectionState rhs = gauge_act(mapped, rhs_eval.state);
            CAPTURE(steps[0].to_string());
            CHECK(lhs.state.equals(rhs));
        }
    }
}

TEST_CASE("crossing pairs compose to the identity") {
    // Undo a positive crossing with the negative crossing on the swapped pair.
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    FiniteHopf d3 = build_drinfeld_double(GroupTable::cyclic(3));
    Lattice lat = theta_graph();
    for (const FiniteHopf* h : {&d2, &d3}) {
        auto mt = compose_multitangle(lat, {ElementaryDiagram::crossing(1, "e1", "e2"),
                                            ElementaryDiagram::crossing(-1, "e2", "e1")});
        for (const auto& x : basis_connections(*h, lat)) {
            auto res = evaluate_multitangle(mt, x);
            CHECK(res.state.canonical().tensor == x.canonical().tensor);
        }
    }
}

TEST_CASE("involutary crossing pair acts as the ribbon scalar block") {
    // A kink made of one positive crossing on (e, -e): x -> s x S(t).
    FiniteHopf d3 = build_drinfeld_double(GroupTable::cyclic(3));
    Lattice lat = Lattice::parse("vertex v: e -e\norient e\n");
    auto mt = compose_multitangle(lat, {ElementaryDiagram::crossing(1, "e", "-e")});
    for (const auto& x : basis_connections(d3, lat)) {
        auto res = evaluate_multitangle(mt, x);
        // Direct formula: sum s_i x S(t_i).
        HTensor want;
        for (const auto& [rk, rc] : d3.R) {
            HTensor t = d3.leg_lmul(x.tensor, 0, HElt{{rk[0], Rat(1)}});
            t = d3.leg_rmul(t, 0, d3.S(HElt{{rk[1], Rat(1)}}));
            for (const auto& [k, c] : t) {
                want[k] += c * rc;
                if (want[k] == 0) want.erase(k);
            }
        }
        CHECK(res.state.tensor == want);
    }
}
