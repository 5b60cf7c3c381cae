#pragma once

#include <gmpxx.h>
#include <string>

namespace lgft {

// Exact arbitrary-precision rational scalar. All coefficient arithmetic in
// the engine goes through this type; there is no floating point anywhere.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace lgft
