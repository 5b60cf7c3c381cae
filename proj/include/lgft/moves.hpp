#pragma once

#include <functional>

#include "lgft/connection.hpp"
#include "lgft/nabla.hpp"

namespace lgft {

// One stage of a move side: a program followed by a bookkeeping rename.
struct MoveStage {
    std::vector<ElementaryDiagram> steps;
    std::map<EdgeId, EdgeId> rename;
};
using MoveSide = std::vector<MoveStage>;

// A two-sided rewriting move. When `oracle` is set the right side is the
// directly computed image instead of a second program.
struct MoveCase {
    std::string name;
    Lattice domain;
    MoveSide lhs, rhs;
    std::function<ConnectionState(const ConnectionState&)> oracle;
};

// The full catalogue with every orientation and crossing-sign variant.
std::vector<MoveCase> move_catalogue();

ConnectionState run_move_side(const MoveSide& side, const ConnectionState& x);

struct MoveOutcome {
    std::string name;
    bool pass = false;
    std::string witness;  // first failing input, empty when passing
};

// Evaluates both sides of every catalogued move over the backend: on all
// basis connections when their count is at most `exhaustive_limit`, otherwise
// on `samples` seeded random basis connections.
std::vector<MoveOutcome> check_moves(const FiniteHopf& h, size_t exhaustive_limit,
                                     int samples, uint64_t seed);

// Exponent of the ribbon element produced by a curl with a positive crossing;
// pinned by the framing move evaluated over a noncocommutative backend.
inline constexpr int kPositiveCurlTwist = -1;

// Crossing sign that realizes the counterclockwise cilium toggle; pinned by
// the full rotation acting as the gauge action of the inverse ribbon element.
inline constexpr int kToggleSign = 1;

// Moves the first dart of the vertex past the others (dir=+1), or the last
// dart to the front (dir=-1), as a block of |v|-1 crossings plus a curl on
// the moved strand.
MultitangleIR toggle_multitangle(const Lattice& lat, const std::string& vertex, int dir);

// A multitangle program together with the bookkeeping renames that carry its
// range back onto the intended lattice (spliced edges keep derived names).
struct CompositeMove {
    MultitangleIR ir;
    std::map<EdgeId, EdgeId> edge_rename;
    std::map<std::string, std::string> vertex_rename;
};

// The push along e: the holonomy of e is comultiplied across the other edges
// at its head and e itself is refreshed to the unit. Built from iterated
// triads, caps, a cup and a cut; domain and range lattices agree after the
// rename. Requires the head's cilium to start at -e with every other dart
// outgoing and not a loop, and e's tail dart to close its own cilium.
CompositeMove push_multitangle(const Lattice& lat, const EdgeId& e);

ConnectionState apply_composite(const CompositeMove& m, const ConnectionState& x);

}  // namespace lgft
