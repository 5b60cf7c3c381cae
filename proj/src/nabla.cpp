#include "lgft/nabla.hpp"

#include <algorithm>

namespace lgft {

namespace {

EdgeId map_symbol(const std::map<EdgeId, EdgeId>& edge_map, const EdgeId& d) {
    auto it = edge_map.find(d);
    if (it != edge_map.end()) return it->second;
    // Partner symbols following the '-' convention track the base rename.
    auto inv = edge_map.find(edge_inv(d));
    if (inv != edge_map.end()) return edge_inv(inv->second);
    return d;
}

}  // namespace

MultitangleIR nabla(const Lattice& lat,
                    const std::optional<std::set<std::string>>& vertices) {
    std::set<std::string> vs;
    if (vertices) {
        vs = *vertices;
    } else {
        for (const Vertex& v : lat.vertices) vs.insert(v.name);
    }

    // Every edge incident to the region must have both endpoints inside it,
    // otherwise the cut would separate the two halves of a strand.
    for (const Vertex& v : lat.vertices) {
        if (!vs.count(v.name)) continue;
        for (const EdgeId& d : v.order) {
            auto [wi, wp] = lat.locate(lat.involution.at(d));
            if (!vs.count(lat.vertices[static_cast<size_t>(wi)].name))
                throw NamedError("InvalidParameters",
                                 "edge leaves the comultiplied region: " + d);
        }
    }

    std::vector<ElementaryDiagram> steps;
    Lattice cur = lat;
    auto apply = [&](const ElementaryDiagram& d) {
        cur = diagram_signature(cur, d);
        steps.push_back(d);
    };

    std::set<EdgeId> prime_syms;
    for (const EdgeId& e : lat.orientation) {
        auto [vi, vp] = lat.locate(e);
        if (!vs.count(lat.vertices[static_cast<size_t>(vi)].name)) continue;
        apply(ElementaryDiagram::triad(e));
        prime_syms.insert(triad_prime(e));
        prime_syms.insert(edge_inv(triad_prime(e)));
    }

    for (const Vertex& v : lat.vertices) {
        if (!vs.count(v.name)) continue;
        // Sort the first copy to the left, the second copy crossing over.
        bool moved = true;
        while (moved) {
            moved = false;
            const auto& ord = cur.vertex(v.name).order;
            for (size_t p = 0; p + 1 < ord.size(); ++p)
                if (!prime_syms.count(ord[p]) && prime_syms.count(ord[p + 1])) {
                    apply(ElementaryDiagram::crossing(kDoublePrimeOverSign, ord[p],
                                                      ord[p + 1]));
                    moved = true;
                    break;
                }
        }
        const auto& ord = cur.vertex(v.name).order;
        int primes = static_cast<int>(std::count_if(
            ord.begin(), ord.end(),
            [&](const EdgeId& d) { return prime_syms.count(d) > 0; }));
        apply(ElementaryDiagram::cut(v.name, primes));
    }

    MultitangleIR ir;
    ir.domain = lat;
    ir.steps = std::move(steps);
    Lattice chain_cur = lat;
    for (const auto& d : ir.steps) {
        chain_cur = diagram_signature(chain_cur, d);
        ir.chain.push_back(chain_cur);
    }
    return ir;
}

Lattice relabel_lattice(const Lattice& lat, const std::map<EdgeId, EdgeId>& edge_map,
                        const std::map<std::string, std::string>& vertex_map) {
    Lattice out;
    for (const Vertex& v : lat.vertices) {
        Vertex nv;
        auto it = vertex_map.find(v.name);
        nv.name = it != vertex_map.end() ? it->second : v.name;
        for (const EdgeId& d : v.order) nv.order.push_back(map_symbol(edge_map, d));
        out.vertices.push_back(std::move(nv));
    }
    for (const auto& [a, b] : lat.involution)
        out.involution[map_symbol(edge_map, a)] = map_symbol(edge_map, b);
    for (const EdgeId& e : lat.orientation) out.orientation.insert(map_symbol(edge_map, e));
    return out;
}

ConnectionState relabel_connection(const ConnectionState& x,
                                   const std::map<EdgeId, EdgeId>& edge_map,
                                   const std::map<std::string, std::string>& vertex_map) {
    ConnectionState out = x;
    out.lattice = relabel_lattice(x.lattice, edge_map, vertex_map);
    for (EdgeId& e : out.index) e = map_symbol(edge_map, e);
    return out;
}

}  // namespace lgft
