#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lgft/moves.hpp"
#include "lgft/observable.hpp"
#include "lgft/rng.hpp"

using namespace lgft;

namespace {

HElt basis(int i) { return HElt{{i, Rat(1)}}; }

ConnectionState apply_toggles(const ConnectionState& x, const std::string& v, int times) {
    ConnectionState cur = x;
    for (int i = 0; i < std::abs(times); ++i) {
        MultitangleIR mt = toggle_multitangle(cur.lattice, v, times > 0 ? 1 : -1);
        cur = evaluate_multitangle(mt, cur).state;
    }
    return cur;
}

}  // namespace

TEST_CASE("every catalogued move holds exhaustively over a small double") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    for (const MoveOutcome& res : check_moves(d2, 4096, 0, 1)) {
        CAPTURE(res.name);
        CAPTURE(res.witness);
        CHECK(res.pass);
    }
}

TEST_CASE("every catalogued move holds on samples over a nonabelian double") {
    FiniteHopf ds3 = build_drinfeld_double(GroupTable::symmetric3());
    for (const MoveOutcome& res : check_moves(ds3, 1, 25, 2)) {
        CAPTURE(res.name);
        CAPTURE(res.witness);
        CHECK(res.pass);
    }
}

TEST_CASE("full cilium rotation acts as the inverse ribbon gauge factor") {
    FiniteHopf d3 = build_drinfeld_double(GroupTable::cyclic(3));
    Lattice lat = Lattice::parse("vertex v: -e e\norient e");
    for (const auto& x : basis_connections(d3, lat)) {
        ConnectionState rotated = apply_toggles(x, "v", 2);
        GaugeElement y = GaugeElement::from_assignment(d3, lat, {{"v", d3.theta_inv}});
        CHECK(rotated.equals(gauge_act(y, x)));
    }
}

TEST_CASE("full rotation at a trivalent vertex matches the ribbon factor") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = Lattice::parse("vertex v: e1 e2 -e1\nvertex w: -e2\norient e1 e2");
    for (const auto& x : basis_connections(d2, lat)) {
        ConnectionState rotated = apply_toggles(x, "v", 3);
        CHECK(rotated.lattice == lat);
        GaugeElement y = GaugeElement::from_assignment(d2, lat, {{"v", d2.theta_inv}});
        CHECK(rotated.equals(gauge_act(y, x)));
        GaugeElement z = GaugeElement::from_assignment(d2, lat, {{"v", d2.theta}});
        CHECK(apply_toggles(x, "v", -3).equals(gauge_act(z, x)));
    }
}

TEST_CASE("full rotation matches the ribbon factor over a nonabelian double") {
    FiniteHopf ds3 = build_drinfeld_double(GroupTable::symmetric3());
    Lattice lat = Lattice::parse("vertex v: e1 e2 -e1\nvertex w: -e2\norient e1 e2");
    auto basis = basis_connections(ds3, lat);
    GaugeElement y = GaugeElement::from_assignment(ds3, lat, {{"v", ds3.theta_inv}});
    for (size_t bi = 0; bi < basis.size(); bi += 41)
        CHECK(apply_toggles(basis[bi], "v", 3).equals(gauge_act(y, basis[bi])));
}

TEST_CASE("a push spreads a group holonomy over the head edges") {
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    GroupTable g3 = GroupTable::symmetric3();
    Lattice lat = Lattice::parse(
        "vertex u: e0\nvertex v: -e0 e1 e2\nvertex w1: -e1\nvertex w2: -e2\n"
        "orient e0 e1 e2\n");
    CompositeMove push = push_multitangle(lat, "e0");
    for (int g = 0; g < 6; ++g)
        for (int h1 = 0; h1 < 6; ++h1)
            for (int h2 = 0; h2 < 6; ++h2) {
                ConnectionState x = ConnectionState::from_assignment(
                    s3, lat, {{"e0", basis(g)}, {"e1", basis(h1)}, {"e2", basis(h2)}});
                ConnectionState got = apply_composite(push, x);
                CHECK(got.lattice == lat);
                ConnectionState want = ConnectionState::from_assignment(
                    s3, lat,
                    {{"e1", basis(g3.op(g, h1))}, {"e2", basis(g3.op(g, h2))}});
                CHECK(got.equals(want));
            }
}

TEST_CASE("a push comultiplies the holonomy over a double") {
    FiniteHopf d3 = build_drinfeld_double(GroupTable::cyclic(3));
    Lattice lat = Lattice::parse(
        "vertex u: e0\nvertex v: -e0 e1 e2\nvertex w1: -e1\nvertex w2: -e2\n"
        "orient e0 e1 e2\n");
    CompositeMove push = push_multitangle(lat, "e0");
    for (const auto& x : basis_connections(d3, lat)) {
        int b0 = -1, b1 = -1, b2 = -1;
        const HKey& k = x.tensor.begin()->first;
        b0 = k[static_cast<size_t>(x.leg_of("e0"))];
        b1 = k[static_cast<size_t>(x.leg_of("e1"))];
        b2 = k[static_cast<size_t>(x.leg_of("e2"))];
        ConnectionState want = ConnectionState::unit(d3, lat);
        want.tensor.clear();
        for (const auto& [ck, cc] : d3.coproduct_power(basis(b0), 2)) {
            HElt f1 = d3.mul(basis(ck[0]), basis(b1));
            HElt f2 = d3.mul(basis(ck[1]), basis(b2));
            ConnectionState part = ConnectionState::from_assignment(
                d3, lat, {{"e1", f1}, {"e2", f2}});
            for (const auto& [pk, pc] : part.tensor) {
                want.tensor[pk] += pc * cc;
                if (want.tensor[pk] == 0) want.tensor.erase(pk);
            }
        }
        CHECK(apply_composite(push, x).equals(want));
    }
}

TEST_CASE("observables cannot see a push") {
    FiniteHopf s3 = build_group_algebra(GroupTable::symmetric3());
    Lattice lat = Lattice::parse(
        "vertex u: a -a e0\nvertex v: -e0 e1\nvertex w: -e1\norient a e0 e1\n");
    CompositeMove push = push_multitangle(lat, "e0");
    Rng rng(59);
    auto basis = basis_connections(s3, lat);
    for (int i = 0; i < 2; ++i) {
        GaugeField f = project_observable(
            GaugeField::from_function(s3, lat, [&](const ConnectionState&) {
                return Rat(static_cast<long>(rng.range(-4, 5)));
            }));
        REQUIRE(is_observable(f));
        for (const auto& x : basis)
            CHECK(f.eval(apply_composite(push, x)) == f.eval(x));
    }
}

TEST_CASE("a toggle followed by its inverse is the identity") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = Lattice::parse("vertex v: e1 e2 -e1\nvertex w: -e2\norient e1 e2");
    for (const auto& x : basis_connections(d2, lat)) {
        ConnectionState forth = apply_toggles(x, "v", 1);
        ConnectionState back = apply_toggles(forth, "v", -1);
        CHECK(back.equals(x));
    }
}

TEST_CASE("toggle and switch cycles are gauge equivalent to the identity") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = Lattice::parse("vertex v: e1 e2 -e1\nvertex w: -e2\norient e1 e2");
    for (const auto& x : basis_connections(d2, lat)) {
        CHECK(gauge_equivalent(apply_toggles(x, "v", 3), x));
        auto mt = compose_multitangle(
            lat, {ElementaryDiagram::switch_edge("e1"), ElementaryDiagram::switch_edge("-e1")});
        CHECK(evaluate_multitangle(mt, x).state.equals(x));
    }
}
