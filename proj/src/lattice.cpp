#include "lgft/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lgft {

void Lattice::derive_involution() {
    involution.clear();
    for (const auto& v : vertices)
        for (const auto& e : v.order) involution[e] = edge_inv(e);
}

std::vector<EdgeId> Lattice::all_edges() const {
    std::vector<EdgeId> out;
    for (const auto& v : vertices)
        for (const auto& e : v.order) out.push_back(e);
    return out;
}

std::pair<int, int> Lattice::locate(const EdgeId& e) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        const auto& ord = vertices[i].order;
        auto it = std::find(ord.begin(), ord.end(), e);
        if (it != ord.end()) return {i, static_cast<int>(it - ord.begin())};
    }
    throw NamedError("UnknownEdge", e);
}

bool Lattice::has_edge(const EdgeId& e) const {
    for (const auto& v : vertices)
        if (std::find(v.order.begin(), v.order.end(), e) != v.order.end()) return true;
    return false;
}

int Lattice::vertex_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        if (vertices[i].name == name) return i;
    return -1;
}

const Vertex& Lattice::vertex(const std::string& name) const {
    int i = vertex_index(name);
    if (i < 0) throw NamedError("UnknownVertex", name);
    return vertices[static_cast<size_t>(i)];
}

void Lattice::validate() const {
    std::set<EdgeId> seen;
    for (const auto& v : vertices)
        for (const auto& e : v.order)
            if (!seen.insert(e).second) throw NamedError("NotAPartition", e);
    for (const auto& [e, f] : involution) {
        if (e == f) throw NamedError("FixedPointInvolution", e);
        auto back = involution.find(f);
        if (back == involution.end() || back->second != e)
            throw NamedError("FixedPointInvolution", e);
    }
    for (const auto& e : seen) {
        auto it = involution.find(e);
        if (it == involution.end()) throw NamedError("NotAPartition", e);
        if (!seen.count(it->second)) throw NamedError("NotAPartition", it->second);
    }
    for (const auto& [e, f] : involution)
        if (!seen.count(e)) throw NamedError("NotAPartition", e);
    for (const auto& e : orientation) {
        if (!seen.count(e)) throw NamedError("BadOrientation", e);
        if (orientation.count(involution.at(e))) throw NamedError("BadOrientation", e);
    }
    for (const auto& e : seen)
        if (!orientation.count(e) && !orientation.count(involution.at(e)))
            throw NamedError("BadOrientation", e);
}

bool Lattice::operator==(const Lattice& o) const {
    if (orientation != o.orientation || involution != o.involution) return false;
    if (vertices.size() != o.vertices.size()) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].name != o.vertices[i].name || vertices[i].order != o.vertices[i].order)
            return false;
    return true;
}

std::string Lattice::to_string() const {
    std::ostringstream os;
    for (const auto& v : vertices) {
        os << "vertex " << v.name << ":";
        for (const auto& e : v.order) os << " " << e;
        os << "\n";
    }
    os << "orient";
    for (const auto& e : orientation) os << " " << e;
    os << "\n";
    return os.str();
}

Lattice Lattice::parse(const std::string& text) {
    Lattice lat;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "vertex") {
            std::string name;
            if (!(ls >> name) || name.back() != ':')
                throw NamedError("ParseError", "line " + std::to_string(lineno) + ": expected `vertex <name>:`");
            Vertex v;
            v.name = name.substr(0, name.size() - 1);
            EdgeId e;
            while (ls >> e) v.order.push_back(e);
            if (v.order.empty())
                throw NamedError("ParseError",
                                 "line " + std::to_string(lineno) + ": empty vertex line");
            lat.vertices.push_back(std::move(v));
        } else if (word == "orient") {
            EdgeId e;
            while (ls >> e) lat.orientation.insert(e);
        } else {
            throw NamedError("ParseError", "line " + std::to_string(lineno) + ": unknown directive " + word);
        }
    }
    lat.derive_involution();
    return lat;
}

EnvelopeStats envelope_stats(const Lattice& lat) {
    EnvelopeStats st;

    // Connected components of the underlying graph via union-find on vertices.
    size_t nv = lat.vertices.size();
    std::vector<size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<EdgeId, size_t> at_vertex;
    for (size_t i = 0; i < nv; ++i)
        for (const auto& e : lat.vertices[i].order) at_vertex[e] = i;
    for (const auto& [e, f] : lat.involution)
        parent[find(at_vertex.at(e))] = find(at_vertex.at(f));
    std::set<size_t> roots;
    for (size_t i = 0; i < nv; ++i) roots.insert(find(i));
    st.components = static_cast<long>(roots.size());

    st.euler_characteristic =
        static_cast<long>(nv) - static_cast<long>(lat.involution.size() / 2);

    // Boundary arcs of the fattened surface: orbits of e -> next-at-vertex of
    // the involuted partner, "next" in the cyclic ciliated order.
    std::map<EdgeId, EdgeId> next;
    for (const auto& v : lat.vertices) {
        size_t n = v.order.size();
        for (size_t i = 0; i < n; ++i) next[v.order[i]] = v.order[(i + 1) % n];
    }
    std::set<EdgeId> visited;
    for (const auto& [e, f] : lat.involution) {
        if (visited.count(e)) continue;
        ++st.boundary_count;
        EdgeId d = e;
        do {
            visited.insert(d);
            d = next.at(lat.involution.at(d));
        } while (d != e);
    }

    st.genus = (2 * st.components - st.boundary_count - st.euler_characteristic) / 2;
    return st;
}

}  // namespace lgft
