#pragma once

#include <optional>
#include <vector>

#include "lgft/rational.hpp"

namespace lgft {

using RatMatrix = std::vector<std::vector<Rat>>;

// One solution of A x = b, or nullopt if inconsistent. A need not be square.
std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b);

// Basis of the kernel of A.
std::vector<std::vector<Rat>> nullspace(RatMatrix a);

}  // namespace lgft
