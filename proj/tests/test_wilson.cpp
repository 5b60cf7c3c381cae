#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lgft/observable.hpp"
#include "lgft/rng.hpp"
#include "lgft/wilson.hpp"

using namespace lgft;

namespace {

const Lattice& annulus_right() {  // cilium before the out-dart: trace picks up k
    static Lattice l = Lattice::parse("vertex v: e -e\norient e");
    return l;
}

const Lattice& annulus_left() {  // cilium after the pair: plain trace
    static Lattice l = Lattice::parse("vertex v: -e e\norient e");
    return l;
}

const Lattice& triangle() {
    static Lattice l = Lattice::parse(
        "vertex v1: -e3 e1\nvertex v2: -e1 e2\nvertex v3: -e2 e3\norient e1 e2 e3");
    return l;
}

QTangle core_loop() { return QTangle::parse("component c closed : e"); }

Laurent tpow(long n) { return Laurent::t(n); }

}  // namespace

TEST_CASE("an unknotted core traces the charm when the cilium sits to its right") {
    TraceProgram p = compile_qtangle(annulus_right(), core_loop());
    CHECK(eval_wilson_uq(p, {}) == tpow(2) + tpow(-2));

    TraceProgram q = compile_qtangle(annulus_left(), core_loop());
    CHECK(eval_wilson_uq(q, {}) == Laurent(2));
}

TEST_CASE("the core loop reads off symbolic holonomies") {
    TraceProgram p = compile_qtangle(annulus_right(), core_loop());
    CHECK(eval_wilson_uq(p, {{"e", UqElement::K(1)}}) == tpow(4) + tpow(-4));
    CHECK(eval_wilson_uq(p, {{"e", UqElement::E()}}).is_zero());
    // EF maps to the upper-left matrix unit, so the charmed trace gives q.
    CHECK(eval_wilson_uq(p, {{"e", UqElement::E() * UqElement::F()}}) == tpow(2));

    TraceProgram q = compile_qtangle(annulus_left(), core_loop());
    CHECK(eval_wilson_uq(q, {{"e", UqElement::K(1)}}) == tpow(2) + tpow(-2));
}

TEST_CASE("a crossingless triangle loop multiplies the edge factors in order") {
    FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(3));
    QTangle tri = QTangle::parse("component c closed : e1 e2 e3");
    TraceProgram p = compile_qtangle(triangle(), tri);
    for (const ConnectionState& x : basis_connections(h, triangle())) {
        HKey k = x.tensor.begin()->first;
        HElt b1{{k[static_cast<size_t>(x.leg_of("e1"))], Rat(1)}};
        HElt b2{{k[static_cast<size_t>(x.leg_of("e2"))], Rat(1)}};
        HElt b3{{k[static_cast<size_t>(x.leg_of("e3"))], Rat(1)}};
        CHECK(eval_wilson(p, x) == h.trace_regular(h.mul(h.mul(b1, b2), b3)));
    }

    CHECK(eval_wilson_uq(p, {{"e1", UqElement::E()},
                             {"e2", UqElement::F()},
                             {"e3", UqElement::K(1)}}) == tpow(2));
}

TEST_CASE("passing a vertex with the cilium to the right inserts the charm") {
    // Same triangle, but the middle passage now runs on the cilium side.
    Lattice lat = Lattice::parse(
        "vertex v1: -e3 e1\nvertex v2: e2 -e1\nvertex v3: -e2 e3\norient e1 e2 e3");
    FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(2));
    QTangle tri = QTangle::parse("component c closed : e1 e2 e3");
    TraceProgram p = compile_qtangle(lat, tri);
    for (const ConnectionState& x : basis_connections(h, lat)) {
        HKey k = x.tensor.begin()->first;
        HElt b1{{k[static_cast<size_t>(x.leg_of("e1"))], Rat(1)}};
        HElt b2{{k[static_cast<size_t>(x.leg_of("e2"))], Rat(1)}};
        HElt b3{{k[static_cast<size_t>(x.leg_of("e3"))], Rat(1)}};
        HElt word = h.mul(h.mul(h.mul(b1, h.charm), b2), b3);
        CHECK(eval_wilson(p, x) == h.trace_regular(word));
    }
}

TEST_CASE("a curl contributes the ribbon scalar") {
    QTangle neg = QTangle::parse("component c closed : e\nvertex v: cross - e -e");
    TraceProgram pn = compile_qtangle(annulus_right(), neg);
    CHECK(eval_wilson_uq(pn, {}) == tpow(5) + tpow(1));  // t^3 * (t^2 + t^-2)

    QTangle pos = QTangle::parse("component c closed : e\nvertex v: cross + e -e");
    TraceProgram pp = compile_qtangle(annulus_right(), pos);
    CHECK(eval_wilson_uq(pp, {}) == tpow(-1) + tpow(-5));
}

TEST_CASE("group characters read the holonomy word") {
    FiniteHopf h = build_group_algebra(GroupTable::symmetric3());

    QTangle sgn = QTangle::parse("component c closed : e\ncolor c chi:1,1,1,-1,-1,-1");
    TraceProgram p = compile_qtangle(annulus_right(), sgn);
    std::vector<Rat> sign_vals{Rat(1), Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(-1)};
    auto conns = basis_connections(h, annulus_right());
    for (size_t i = 0; i < conns.size(); ++i)
        CHECK(eval_wilson(p, conns[i]) == sign_vals[i]);

    QTangle std2 = QTangle::parse("component c closed : e\ncolor c chi:2,-1,-1,0,0,0");
    TraceProgram p2 = compile_qtangle(annulus_right(), std2);
    std::vector<Rat> std_vals{Rat(2), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0)};
    for (size_t i = 0; i < conns.size(); ++i)
        CHECK(eval_wilson(p2, conns[i]) == std_vals[i]);

    // The sign character of a product loop evaluates on the fused word.
    QTangle tri = QTangle::parse("component c closed : e1 e2 e3\ncolor c chi:1,1,1,-1,-1,-1");
    TraceProgram pt = compile_qtangle(triangle(), tri);
    for (const ConnectionState& x : basis_connections(h, triangle())) {
        HKey k = x.tensor.begin()->first;
        HElt w = h.mul(h.mul(HElt{{k[static_cast<size_t>(x.leg_of("e1"))], Rat(1)}},
                             HElt{{k[static_cast<size_t>(x.leg_of("e2"))], Rat(1)}}),
                       HElt{{k[static_cast<size_t>(x.leg_of("e3"))], Rat(1)}});
        Rat expect(0);
        for (const auto& [bi, c] : w) expect += c * sign_vals[static_cast<size_t>(bi)];
        CHECK(eval_wilson(pt, x) == expect);
    }
}

TEST_CASE("wilson loops are gauge invariant") {
    FiniteHopf d2 = build_drinfeld_double(GroupTable::cyclic(2));
    Lattice lat = Lattice::parse(
        "vertex v1: -e3 e1\nvertex v2: e2 -e1\nvertex v3: -e2 e3\norient e1 e2 e3");
    CHECK(is_observable(wilson_field(d2, lat,
                                     QTangle::parse("component c closed : e1 e2 e3"))));

    FiniteHopf ds3 = build_drinfeld_double(GroupTable::symmetric3());
    CHECK(is_observable(wilson_field(ds3, annulus_right(), core_loop())));
    CHECK(is_observable(wilson_field(
        ds3, annulus_right(),
        QTangle::parse("component c closed : e\nvertex v: cross - e -e"))));
}

TEST_CASE("stacking cores multiplies wilson fields by convolution") {
    QTangle two = stack_product(annulus_right(), core_loop(), core_loop());
    REQUIRE(two.components.size() == 2);
    CHECK(two.crossings.empty());

    FiniteHopf h = build_drinfeld_double(GroupTable::symmetric3());
    GaugeField w1 = wilson_field(h, annulus_right(), core_loop());
    GaugeField w2 = wilson_field(h, annulus_right(), two);
    CHECK(star(w1, w1).equals(w2));

    // Quantum: the pair of parallel cores quantum-traces both coproduct legs.
    TraceProgram p = compile_qtangle(annulus_right(), two);
    const FundRep& rep = fundamental_rep();
    for (const UqElement& x : {UqElement::one(), UqElement::E(),
                               UqElement::F() * UqElement::K(1),
                               UqElement::K(1) + UqElement::E()}) {
        LMat big = lmat_mul(fundamental_tensor(x, 2), lmat_tensor(rep.K, rep.K));
        CHECK(eval_wilson_uq(p, {{"e", x}}) == lmat_trace(big));
    }
}

TEST_CASE("stacking an empty tangle changes nothing") {
    QTangle none;
    QTangle same = stack_product(annulus_right(), core_loop(), none);
    CHECK(same.to_string() == core_loop().to_string());
    same = stack_product(annulus_right(), none, core_loop());
    CHECK(same.to_string() == core_loop().to_string());
}

TEST_CASE("stacked torus loops cross once and commute only classically") {
    Lattice torus = Lattice::parse("vertex v: a b -a -b\norient a b");
    QTangle la = QTangle::parse("component x closed : a");
    QTangle lb = QTangle::parse("component y closed : b");

    QTangle ab = stack_product(torus, la, lb);
    QTangle ba = stack_product(torus, lb, la);
    REQUIRE(ab.crossings.size() == 1);
    REQUIRE(ba.crossings.size() == 1);
    CHECK(ab.crossings[0].sign != ba.crossings[0].sign);

    TraceProgram pab = compile_qtangle(torus, ab);
    TraceProgram pba = compile_qtangle(torus, ba);
    Laurent vab = eval_wilson_uq(pab, {});
    Laurent vba = eval_wilson_uq(pba, {});
    CHECK(vab != vba);                              // the braiding remembers the order
    CHECK(vab.eval_at_one() == vba.eval_at_one());  // classical shadow commutes

    std::map<EdgeId, UqElement> conn{{"a", UqElement::K(1)}, {"b", UqElement::K(1)}};
    CHECK(eval_wilson_uq(pab, conn).eval_at_one() == eval_wilson_uq(pba, conn).eval_at_one());
}

TEST_CASE("reversing a component applies the antipode to its holonomy") {
    QTangle rev = reverse_component(core_loop(), "c");
    REQUIRE(rev.components[0].word == std::vector<EdgeId>{"-e"});

    TraceProgram p = compile_qtangle(annulus_right(), rev);
    CHECK(eval_wilson_uq(p, {}) == tpow(2) + tpow(-2));

    FiniteHopf h = build_drinfeld_double(GroupTable::symmetric3());
    GaugeField wr = wilson_field(h, annulus_right(), rev);
    GaugeField oracle = GaugeField::from_function(
        h, annulus_right(), [&](const ConnectionState& x) {
            HKey k = x.tensor.begin()->first;
            HElt xe{{k[static_cast<size_t>(x.leg_of("e"))], Rat(1)}};
            return h.trace_regular(h.S(h.mul(xe, h.charm)));
        });
    CHECK(wr.equals(oracle));

    // A double reversal restores the original field.
    GaugeField w = wilson_field(h, annulus_right(), core_loop());
    GaugeField wrr =
        wilson_field(h, annulus_right(), reverse_component(rev, "c"));
    CHECK(w.equals(wrr));
}

TEST_CASE("the loop value does not depend on the chosen edge orientation") {
    Lattice flipped = Lattice::parse("vertex v: e -e\norient -e");
    FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(2));
    TraceProgram p = compile_qtangle(annulus_right(), core_loop());
    TraceProgram q = compile_qtangle(flipped, core_loop());
    for (const ConnectionState& x : basis_connections(h, annulus_right())) {
        HKey k = x.tensor.begin()->first;
        HElt xe{{k[0], Rat(1)}};
        // The reorientation move carries x_e to S(x_e k) on the other symbol.
        ConnectionState y = ConnectionState::from_assignment(
            h, flipped, {{"-e", h.S(h.mul(xe, h.charm))}});
        CHECK(eval_wilson(p, x) == eval_wilson(q, y));
    }
}

TEST_CASE("closure order does not change the value") {
    QTangle two = stack_product(annulus_right(), core_loop(), core_loop());
    FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(3));
    TraceProgram p = compile_qtangle(annulus_right(), two);
    TraceProgram rev = p;
    std::reverse(rev.closures.begin(), rev.closures.end());
    for (const ConnectionState& x : basis_connections(h, annulus_right()))
        CHECK(eval_wilson(p, x) == eval_wilson(rev, x));
}

TEST_CASE("malformed tangles are rejected with a diagnosis") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const NamedError& e) {
            return e.kind();
        }
        return std::string("no error");
    };
    // A word whose consecutive edges never meet.
    CHECK(kind_of([&] {
        compile_qtangle(triangle(), QTangle::parse("component c closed : e1 e1"));
    }) == "MalformedTangle");
    // A crossing naming darts that never become adjacent.
    CHECK(kind_of([&] {
        compile_qtangle(triangle(), QTangle::parse("component c closed : e1 e2 e3\n"
                                                   "vertex v1: cross + e1 e3"));
    }) == "MalformedTangle");
    // An unknown color label.
    CHECK(kind_of([&] {
        FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(2));
        QTangle t = QTangle::parse("component c closed : e\ncolor c sparkle");
        TraceProgram p = compile_qtangle(annulus_right(), t);
        eval_wilson(p, ConnectionState::unit(h, annulus_right()));
    }) == "ColorMismatch");
    // Finite colors are meaningless in the fundamental evaluation.
    CHECK(kind_of([&] {
        QTangle t = QTangle::parse("component c closed : e\ncolor c chi:1,1");
        eval_wilson_uq(compile_qtangle(annulus_right(), t), {});
    }) == "ColorMismatch");
}

TEST_CASE("tangle text round trips") {
    QTangle t = QTangle::parse(
        "component c closed : e1 -e2 e3@2\n"
        "vertex v1: cross + e1 -e2\n"
        "color c regular\n");
    QTangle u = QTangle::parse(t.to_string());
    CHECK(u.to_string() == t.to_string());
    REQUIRE(u.components.size() == 1);
    CHECK(u.components[0].word == std::vector<EdgeId>({"e1", "-e2", "e3"}));
    CHECK(u.components[0].passes == std::vector<int>({0, 0, 2}));
    CHECK(u.crossings.size() == 1);
    CHECK(u.colors.at("c") == "regular");
    CHECK_THROWS_AS(QTangle::parse("component broken"), NamedError);
}

namespace {

// Holonomy word of the two-lap figure-eight: lap twice around the left
// triangle (second edge against orientation), then once around the right
// triangle, with the lap start crossing the right loop and the second lap
// crossing itself at the wedge point.
Rat bowtie_oracle(const FiniteHopf& h, const std::vector<HElt>& x) {
    HTensor c4 = h.coproduct_power(x[4], 2);
    HTensor c5 = h.coproduct_power(x[5], 2);
    HTensor c6 = h.coproduct_power(x[6], 2);
    Rat total(0);
    for (const auto& [k4, w4] : c4)
        for (const auto& [k5, w5] : c5)
            for (const auto& [k6, w6] : c6)
                for (const auto& [r1, wr1] : h.R)
                    for (const auto& [r2, wr2] : h.R) {
                        HElt s1{{r1[0], Rat(1)}}, t1{{r1[1], Rat(1)}};
                        HElt s2{{r2[0], Rat(1)}}, t2{{r2[1], Rat(1)}};
                        HElt w = t1;
                        w = h.mul(w, HElt{{k4[0], Rat(1)}});
                        w = h.mul(w, h.charm);
                        w = h.mul(w, h.S(h.mul(HElt{{k5[1], Rat(1)}}, h.charm)));
                        w = h.mul(w, h.charm);
                        w = h.mul(w, HElt{{k6[0], Rat(1)}});
                        w = h.mul(w, h.charm);
                        w = h.mul(w, t2);
                        w = h.mul(w, HElt{{k4[1], Rat(1)}});
                        w = h.mul(w, h.charm);
                        w = h.mul(w, h.S(h.mul(HElt{{k5[0], Rat(1)}}, h.charm)));
                        w = h.mul(w, h.charm);
                        w = h.mul(w, HElt{{k6[1], Rat(1)}});
                        w = h.mul(w, h.S(h.S(s2)));
                        w = h.mul(w, h.charm);
                        w = h.mul(w, s1);
                        w = h.mul(w, x[1]);
                        w = h.mul(w, x[2]);
                        w = h.mul(w, x[3]);
                        w = h.mul(w, h.charm);
                        total += w4 * w5 * w6 * wr1 * wr2 * h.trace_regular(w);
                    }
    return total;
}

const Lattice& bowtie() {
    static Lattice l = Lattice::parse(
        "vertex w: e1 e4 -e6 -e3\n"
        "vertex u: -e5 -e4\n"
        "vertex p: e6 e5\n"
        "vertex r: -e1 e2\n"
        "vertex s: -e2 e3\n"
        "orient e1 e2 e3 e4 e5 e6");
    return l;
}

QTangle figure_eight() {
    return QTangle::parse(
        "component c closed : e4@1 -e5@2 e6@1 e4@2 -e5@1 e6@2 e1 e2 e3\n"
        "vertex w: cross + e1 e4'\n"
        "vertex w: cross - e4'' -e6''");
}

}  // namespace

TEST_CASE("the figure-eight holonomy matches its traversal word") {
    FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(3));
    TraceProgram p = compile_qtangle(bowtie(), figure_eight());

    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        std::map<EdgeId, HElt> assign;
        std::vector<HElt> x(7);
        for (int e = 1; e <= 6; ++e) {
            int b = static_cast<int>(rng.range(0, h.dim - 1));
            x[static_cast<size_t>(e)] = HElt{{b, Rat(1)}};
            assign["e" + std::to_string(e)] = x[static_cast<size_t>(e)];
        }
        ConnectionState conn = ConnectionState::from_assignment(h, bowtie(), assign);
        CHECK(eval_wilson(p, conn) == bowtie_oracle(h, x));
    }

    FiniteHopf hs = build_drinfeld_double(GroupTable::symmetric3());
    TraceProgram ps = compile_qtangle(bowtie(), figure_eight());
    Rng rng2(43);
    for (int trial = 0; trial < 2; ++trial) {
        std::map<EdgeId, HElt> assign;
        std::vector<HElt> x(7);
        for (int e = 1; e <= 6; ++e) {
            int b = static_cast<int>(rng2.range(0, hs.dim - 1));
            x[static_cast<size_t>(e)] = HElt{{b, Rat(1)}};
            assign["e" + std::to_string(e)] = x[static_cast<size_t>(e)];
        }
        ConnectionState conn = ConnectionState::from_assignment(hs, bowtie(), assign);
        CHECK(eval_wilson(ps, conn) == bowtie_oracle(hs, x));
    }
}

TEST_CASE("the figure-eight traversal word prints symbolically") {
    auto words = holonomy_words(bowtie(), figure_eight());
    REQUIRE(words.size() == 1);
    CHECK(words.at("c") ==
          "t1 x4' k S(x5'' k) k x6' k t2 x4'' k S(x5' k) k x6'' S^2(s2) k s1 x1 x2 x3 k");
}

TEST_CASE("a pass against orientation contributes the switched factor") {
    // One lap around the left triangle alone: hol = x4 S(x5 k) x6, no charm
    // insertions anywhere along the way.
    Lattice lat = Lattice::parse(
        "vertex w: -e6 e4\nvertex u: -e4 -e5\nvertex p: e5 e6\norient e4 e5 e6");
    QTangle loop = QTangle::parse("component c closed : e4 -e5 e6");
    TraceProgram p = compile_qtangle(lat, loop);

    FiniteHopf h = build_drinfeld_double(GroupTable::cyclic(2));
    for (const ConnectionState& x : basis_connections(h, lat)) {
        HKey k = x.tensor.begin()->first;
        HElt x4{{k[static_cast<size_t>(x.leg_of("e4"))], Rat(1)}};
        HElt x5{{k[static_cast<size_t>(x.leg_of("e5"))], Rat(1)}};
        HElt x6{{k[static_cast<size_t>(x.leg_of("e6"))], Rat(1)}};
        HElt w = h.mul(h.mul(x4, h.S(h.mul(x5, h.charm))), x6);
        CHECK(eval_wilson(p, x) == h.trace_regular(w));
    }

    CHECK(eval_wilson_uq(p, {{"e5", UqElement::K(1)}}) ==
          lmat_trace(rep_antipode(lmat_mul(fundamental_rep().K, fundamental_rep().K))));
}

TEST_CASE("opposite crossings cancel") {
    QTangle wiggle = QTangle::parse(
        "component c closed : e\n"
        "vertex v: cross + e -e\n"
        "vertex v: cross - -e e");
    TraceProgram p = compile_qtangle(annulus_right(), wiggle);
    TraceProgram plain = compile_qtangle(annulus_right(), core_loop());

    for (const UqElement& x : {UqElement::one(), UqElement::K(1), UqElement::E()})
        CHECK(eval_wilson_uq(p, {{"e", x}}) == eval_wilson_uq(plain, {{"e", x}}));

    FiniteHopf h = build_drinfeld_double(GroupTable::symmetric3());
    for (const ConnectionState& x : basis_connections(h, annulus_right()))
        CHECK(eval_wilson(p, x) == eval_wilson(plain, x));

    QTangle other = QTangle::parse(
        "component c closed : e\n"
        "vertex v: cross - e -e\n"
        "vertex v: cross + -e e");
    TraceProgram q = compile_qtangle(annulus_right(), other);
    for (const ConnectionState& x : basis_connections(h, annulus_right()))
        CHECK(eval_wilson(q, x) == eval_wilson(plain, x));
}
