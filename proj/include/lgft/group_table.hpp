#pragma once

#include <string>
#include <vector>

#include "lgft/errors.hpp"

namespace lgft {

// Finite group given by its Cayley table over named elements.
struct GroupTable {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;  // table[i][j] = index of labels[i]*labels[j]
    int identity = 0;
    std::vector<int> inverse;

    int size() const { return static_cast<int>(labels.size()); }
    int op(int i, int j) const { return table[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    // Checks associativity, identity and inverses; fills identity/inverse.
    // Throws NamedError("NotAGroup", witness).
    void validate_and_close();

    static GroupTable cyclic(int n);     // Z/n, labels "0".."n-1"
    static GroupTable symmetric3();      // S3 as permutations of {1,2,3}
    static GroupTable trivial();

    // File format: `group <name>` header, then one Cayley-table row per line.
    static GroupTable parse(const std::string& text);
    std::string to_string() const;
};

}  // namespace lgft
