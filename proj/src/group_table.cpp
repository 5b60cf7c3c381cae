#include "lgft/group_table.hpp"

#include <array>
#include <map>
#include <sstream>

namespace lgft {

void GroupTable::validate_and_close() {
    int n = size();
    if (n == 0) throw NamedError("NotAGroup", "empty table");
    if (static_cast<int>(table.size()) != n) throw NamedError("NotAGroup", "table not square");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw NamedError("NotAGroup", "table not square");
        for (int v : row)
            if (v < 0 || v >= n) throw NamedError("NotAGroup", "entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw NamedError("NotAGroup",
                                     "associativity fails at " + labels[a] + "," +
                                         labels[b] + "," + labels[c]);
    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (op(e, a) != a || op(a, e) != a) { ok = false; break; }
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw NamedError("NotAGroup", "no identity element");
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (op(a, b) == identity && op(b, a) == identity) { inverse[a] = b; break; }
        if (inverse[a] < 0) throw NamedError("NotAGroup", "no inverse for " + labels[a]);
    }
}

GroupTable GroupTable::cyclic(int n) {
    GroupTable g;
    g.name = "Z" + std::to_string(n);
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
    g.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.validate_and_close();
    return g;
}

GroupTable GroupTable::symmetric3() {
    // Permutations of {0,1,2}; perm[i] is the image of i.
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
    }};
    GroupTable g;
    g.name = "S3";
    g.labels = {"e", "r", "r2", "s", "sr", "sr2"};
    g.table.assign(6, std::vector<int>(6));
    auto compose = [&](int a, int b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        for (int k = 0; k < 6; ++k)
            if (perms[k] == c) return k;
        return -1;
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g.table[i][j] = compose(i, j);
    g.validate_and_close();
    return g;
}

GroupTable GroupTable::trivial() {
    GroupTable g;
    g.name = "1";
    g.labels = {"e"};
    g.table = {{0}};
    g.validate_and_close();
    return g;
}

GroupTable GroupTable::parse(const std::string& text) {
    GroupTable g;
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "group" && g.name.empty() && rows.empty()) {
            if (!(ls >> g.name)) throw NamedError("ParseError", "missing group name");
            continue;
        }
        std::vector<std::string> row{word};
        while (ls >> word) row.push_back(word);
        rows.push_back(std::move(row));
    }
    if (g.name.empty()) throw NamedError("ParseError", "missing `group <name>` header");
    std::map<std::string, int> index;
    for (const auto& row : rows)
        for (const auto& cell : row)
            if (!index.count(cell)) {
                index[cell] = static_cast<int>(g.labels.size());
                g.labels.push_back(cell);
            }
    for (const auto& row : rows) {
        std::vector<int> r;
        for (const auto& cell : row) r.push_back(index.at(cell));
        g.table.push_back(std::move(r));
    }
    if (static_cast<int>(rows.size()) != g.size())
        throw NamedError("NotAGroup", "table not square");
    g.validate_and_close();
    return g;
}

std::string GroupTable::to_string() const {
    std::ostringstream os;
    os << "group " << name << "\n";
    for (const auto& row : table) {
        for (size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << labels[static_cast<size_t>(row[j])];
        os << "\n";
    }
    return os.str();
}

}  // namespace lgft
