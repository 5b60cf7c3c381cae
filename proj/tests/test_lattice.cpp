#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lgft/diagram.hpp"
#include "lgft/lattice.hpp"
#include "lgft/rng.hpp"

using namespace lgft;

namespace {

const char* kBowtie = R"(
vertex v1: -e1 e2
vertex v2: -e2 e3
vertex v3: -e3 e1 e4 -e6
vertex v4: -e5 -e4
vertex v5: e6 e5
orient e1 e2 e3 e4 e5 e6
)";

Lattice annulus() {
    return Lattice::parse("vertex v: -e e\norient e\n");
}

Lattice punctured_torus() {
    return Lattice::parse("vertex v: a b -a -b\norient a b\n");
}

// Random valid lattice: n edge orbits distributed over up to n vertices.
Lattice random_lattice(Rng& rng, int n) {
    std::vector<EdgeId> symbols;
    for (int i = 1; i <= n; ++i) {
        symbols.push_back("e" + std::to_string(i));
        symbols.push_back("-e" + std::to_string(i));
    }
    for (size_t i = symbols.size(); i > 1; --i)
        std::swap(symbols[i - 1], symbols[rng.below(i)]);
    int nv = 1 + static_cast<int>(rng.below(n));
    Lattice lat;
    for (int i = 0; i < nv; ++i) lat.vertices.push_back({"v" + std::to_string(i), {}});
    for (const auto& s : symbols)
        lat.vertices[rng.below(nv)].order.push_back(s);
    std::erase_if(lat.vertices, [](const Vertex& v) { return v.order.empty(); });
    for (int i = 1; i <= n; ++i)
        lat.orientation.insert(rng.below(2) ? "e" + std::to_string(i)
                                            : "-e" + std::to_string(i));
    lat.derive_involution();
    return lat;
}

}  // namespace

TEST_CASE("six edge example lattice validates") {
    Lattice lat = Lattice::parse(kBowtie);
    lat.validate();
    CHECK(lat.orientation.size() == 6);
    CHECK(lat.vertices.size() == 5);
    EnvelopeStats st = envelope_stats(lat);
    CHECK(st.euler_characteristic == -1);
    CHECK(st.components == 1);
    CHECK(Lattice::parse(lat.to_string()) == lat);
}

TEST_CASE("validation names the offending symbol") {
    Lattice lat = annulus();
    lat.involution["e"] = "e";
    lat.involution.erase("-e");
    try {
        lat.validate();
        FAIL("expected error");
    } catch (const NamedError& err) {
        CHECK(err.kind() == "FixedPointInvolution");
        CHECK(err.detail() == "e");
    }

    Lattice dup = annulus();
    dup.vertices.push_back({"w", {"e"}});
    CHECK_THROWS_WITH_AS(dup.validate(), "NotAPartition: e", NamedError);

    Lattice missing = Lattice::parse("vertex v: e\norient e\n");
    CHECK_THROWS_AS(missing.validate(), NamedError);

    Lattice both = annulus();
    both.orientation.insert("-e");
    try {
        both.validate();
        FAIL("expected error");
    } catch (const NamedError& err) {
        CHECK(err.kind() == "BadOrientation");
    }

    Lattice none = annulus();
    none.orientation.clear();
    try {
        none.validate();
        FAIL("expected error");
    } catch (const NamedError& err) {
        CHECK(err.kind() == "BadOrientation");
    }
}

TEST_CASE("envelope statistics of model surfaces") {
    EnvelopeStats ann = envelope_stats(annulus());
    CHECK(ann.boundary_count == 2);
    CHECK(ann.genus == 0);
    CHECK(ann.components == 1);
    CHECK(ann.euler_characteristic == 0);

    EnvelopeStats pt = envelope_stats(punctured_torus());
    CHECK(pt.boundary_count == 1);
    CHECK(pt.genus == 1);
    CHECK(pt.euler_characteristic == -1);

    // Disjoint union of the two adds component-wise.
    Lattice two = Lattice::parse(
        "vertex v: -e e\nvertex w: a b -a -b\norient e a b\n");
    EnvelopeStats st = envelope_stats(two);
    CHECK(st.components == 2);
    CHECK(st.boundary_count == 3);
    CHECK(st.genus == 1);
}

TEST_CASE("envelope statistics on random lattices") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        Lattice lat = random_lattice(rng, 2 + static_cast<int>(rng.below(5)));
        lat.validate();
        EnvelopeStats st = envelope_stats(lat);
        long v = static_cast<long>(lat.vertices.size());
        long e = static_cast<long>(lat.orientation.size());
        CHECK(st.euler_characteristic == v - e);
        CHECK(st.euler_characteristic ==
              2 * st.components - 2 * st.genus - st.boundary_count);
        CHECK(st.genus >= 0);
        CHECK(st.boundary_count >= st.components);
    }
}

TEST_CASE("switch is an involution on lattices") {
    Lattice lat = Lattice::parse(kBowtie);
    Lattice once = diagram_signature(lat, ElementaryDiagram::switch_edge("e2"));
    CHECK(once.orientation.count("-e2") == 1);
    CHECK(once.orientation.count("e2") == 0);
    Lattice twice = diagram_signature(once, ElementaryDiagram::switch_edge("-e2"));
    CHECK(twice == lat);
    CHECK_THROWS_AS(diagram_signature(lat, ElementaryDiagram::switch_edge("-e2")),
                    NamedError);
}

TEST_CASE("triad splits an edge into an ordered pair") {
    Lattice lat = Lattice::parse(kBowtie);
    Lattice out = diagram_signature(lat, ElementaryDiagram::triad("e1"));
    out.validate();
    CHECK(out.vertex("v3").order ==
          std::vector<EdgeId>{"-e3", "e1'", "e1''", "e4", "-e6"});
    CHECK(out.vertex("v1").order == std::vector<EdgeId>{"-e1''", "-e1'", "e2"});
    CHECK(out.orientation.count("e1'") == 1);
    CHECK(out.orientation.count("e1''") == 1);
    CHECK(envelope_stats(out).genus == envelope_stats(lat).genus);
}

TEST_CASE("triad then switch then cap restores the lattice up to names") {
    Lattice lat = Lattice::parse(kBowtie);
    auto ir = compose_multitangle(lat, {
        ElementaryDiagram::triad("e1"),
        ElementaryDiagram::switch_edge("e1''"),
        ElementaryDiagram::cap("-e1''", "-e1'"),
    });
    const Lattice& out = ir.range();
    out.validate();
    CHECK(envelope_stats(out) == envelope_stats(lat));
    CHECK(out.vertex("v3").order ==
          std::vector<EdgeId>{"-e3", "e1'", "e1''", "e4", "-e6"});
    CHECK(out.involution.at("e1'") == "e1''");
    CHECK(out.orientation.count("e1'") == 1);
}

TEST_CASE("cap on an involutary pair closes the strand") {
    Lattice lat = annulus();
    Lattice out = diagram_signature(lat, ElementaryDiagram::cap("-e", "e"));
    CHECK(out.vertices.empty());
    CHECK(out.involution.empty());
    out.validate();
}

TEST_CASE("cup inserts an involutary pair") {
    Lattice lat = annulus();
    Lattice out = diagram_signature(lat, ElementaryDiagram::cup("v", 1, "f"));
    out.validate();
    CHECK(out.vertex("v").order == std::vector<EdgeId>{"-e", "f", "-f", "e"});
    CHECK(out.orientation.count("f") == 1);
    // Capping the fresh pair undoes the cup.
    Lattice back = diagram_signature(out, ElementaryDiagram::cap("f", "-f"));
    CHECK(back == lat);
}

TEST_CASE("stump deletes an involutary pair") {
    Lattice lat = Lattice::parse(kBowtie);
    Lattice out = diagram_signature(lat, ElementaryDiagram::stump("e4"));
    out.validate();
    CHECK(out.orientation.size() == 5);
    CHECK(!out.has_edge("e4"));
    CHECK(!out.has_edge("-e4"));
}

TEST_CASE("cut splits a vertex and crossings swap adjacent symbols") {
    Lattice lat = Lattice::parse(kBowtie);
    Lattice cut = diagram_signature(lat, ElementaryDiagram::cut("v3", 2));
    cut.validate();
    CHECK(cut.vertex("v3'").order == std::vector<EdgeId>{"-e3", "e1"});
    CHECK(cut.vertex("v3''").order == std::vector<EdgeId>{"e4", "-e6"});
    CHECK_THROWS_AS(diagram_signature(lat, ElementaryDiagram::cut("v3", 0)), NamedError);
    CHECK_THROWS_AS(diagram_signature(lat, ElementaryDiagram::cut("v3", 4)), NamedError);

    Lattice crossed = diagram_signature(lat, ElementaryDiagram::crossing(1, "e1", "e4"));
    CHECK(crossed.vertex("v3").order ==
          std::vector<EdgeId>{"-e3", "e4", "e1", "-e6"});
    CHECK_THROWS_AS(diagram_signature(lat, ElementaryDiagram::crossing(1, "e4", "e1")),
                    NamedError);
}

TEST_CASE("multitangle chains validate step by step") {
    Lattice lat = Lattice::parse(kBowtie);
    auto empty = compose_multitangle(lat, {});
    CHECK(empty.range() == lat);

    auto ir = compose_multitangle(lat, {
        ElementaryDiagram::triad("e1"),
        ElementaryDiagram::stump("e1'"),
    });
    CHECK(ir.range().has_edge("e1''"));
    CHECK(!ir.range().has_edge("e1'"));
    CHECK(ir.chain.size() == 2);

    try {
        compose_multitangle(lat, {
            ElementaryDiagram::stump("e1"),
            ElementaryDiagram::switch_edge("e1"),
        });
        FAIL("expected ChainBreak");
    } catch (const NamedError& err) {
        CHECK(err.kind() == "ChainBreak");
        CHECK(err.detail().substr(0, 2) == "1:");
    }
}

TEST_CASE("multitangle text round-trip") {
    const char* text =
        "triad e1\n"
        "switch e3\n"
        "cross + e2 e4\n"
        "cut v1 2\n"
        "cap e1 -e2\n"
        "cup v2 0 e7\n"
        "stump e5\n";
    auto steps = parse_multitangle(text);
    REQUIRE(steps.size() == 7);
    std::string rendered;
    for (const auto& s : steps) rendered += s.to_string() + "\n";
    CHECK(rendered == text);
    CHECK(steps[2].sign == 1);
    CHECK(steps[3].position == 2);
    CHECK_THROWS_AS(ElementaryDiagram::parse_line("cross ? a b"), NamedError);
    CHECK_THROWS_AS(ElementaryDiagram::parse_line("wobble e1"), NamedError);
}
