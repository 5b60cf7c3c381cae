#include "lgft/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace lgft {

namespace {

void require(bool ok, const std::string& detail) {
    if (!ok) throw NamedError("InvalidParameters", detail);
}

// Replace the unique occurrence of `from` with the given symbols.
void splice(Lattice& lat, const EdgeId& from, const std::vector<EdgeId>& to) {
    auto [vi, p] = lat.locate(from);
    auto& ord = lat.vertices[static_cast<size_t>(vi)].order;
    ord.erase(ord.begin() + p);
    ord.insert(ord.begin() + p, to.begin(), to.end());
}

void drop_empty_vertices(Lattice& lat) {
    std::erase_if(lat.vertices, [](const Vertex& v) { return v.order.empty(); });
}

void erase_orbit(Lattice& lat, const EdgeId& e) {
    EdgeId f = lat.involution.at(e);
    lat.involution.erase(e);
    lat.involution.erase(f);
    lat.orientation.erase(e);
    lat.orientation.erase(f);
}

}  // namespace

EdgeId triad_prime(const EdgeId& d) { return d + "'"; }
EdgeId triad_double_prime(const EdgeId& d) { return d + "''"; }

ElementaryDiagram ElementaryDiagram::crossing(int sign, EdgeId left, EdgeId right) {
    ElementaryDiagram d;
    d.kind = Kind::Crossing;
    d.sign = sign;
    d.a = std::move(left);
    d.b = std::move(right);
    return d;
}

ElementaryDiagram ElementaryDiagram::twist(int sign, EdgeId strand) {
    ElementaryDiagram d;
    d.kind = Kind::Twist;
    d.sign = sign;
    d.a = std::move(strand);
    return d;
}

ElementaryDiagram ElementaryDiagram::triad(EdgeId e) {
    ElementaryDiagram d;
    d.kind = Kind::Triad;
    d.a = std::move(e);
    return d;
}

ElementaryDiagram ElementaryDiagram::cap(EdgeId left, EdgeId right) {
    ElementaryDiagram d;
    d.kind = Kind::Cap;
    d.a = std::move(left);
    d.b = std::move(right);
    return d;
}

ElementaryDiagram ElementaryDiagram::cup(std::string vertex, int position, EdgeId fresh) {
    ElementaryDiagram d;
    d.kind = Kind::Cup;
    d.vertex = std::move(vertex);
    d.position = position;
    d.a = std::move(fresh);
    return d;
}

ElementaryDiagram ElementaryDiagram::stump(EdgeId e) {
    ElementaryDiagram d;
    d.kind = Kind::Stump;
    d.a = std::move(e);
    return d;
}

ElementaryDiagram ElementaryDiagram::switch_edge(EdgeId e) {
    ElementaryDiagram d;
    d.kind = Kind::Switch;
    d.a = std::move(e);
    return d;
}

ElementaryDiagram ElementaryDiagram::cut(std::string vertex, int position) {
    ElementaryDiagram d;
    d.kind = Kind::Cut;
    d.vertex = std::move(vertex);
    d.position = position;
    return d;
}

std::string ElementaryDiagram::to_string() const {
    switch (kind) {
        case Kind::Identity: return "identity";
        case Kind::Crossing:
            return std::string("cross ") + (sign > 0 ? "+" : "-") + " " + a + " " + b;
        case Kind::Twist:
            return std::string("twist ") + (sign > 0 ? "+" : "-") + " " + a;
        case Kind::Triad: return "triad " + a;
        case Kind::Cap: return "cap " + a + " " + b;
        case Kind::Cup:
            return "cup " + vertex + " " + std::to_string(position) + " " + a;
        case Kind::Stump: return "stump " + a;
        case Kind::Switch: return "switch " + a;
        case Kind::Cut: return "cut " + vertex + " " + std::to_string(position);
    }
    return "identity";
}

ElementaryDiagram ElementaryDiagram::parse_line(const std::string& line) {
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) throw NamedError("ParseError", "empty multitangle step");
    auto need = [&](std::string& out) {
        if (!(ls >> out)) throw NamedError("ParseError", "truncated step: " + line);
    };
    if (word == "identity") return identity();
    if (word == "cross") {
        std::string s, x, y;
        need(s);
        need(x);
        need(y);
        if (s != "+" && s != "-") throw NamedError("ParseError", "crossing sign must be + or -");
        return crossing(s == "+" ? 1 : -1, x, y);
    }
    if (word == "twist") {
        std::string s, x;
        need(s);
        need(x);
        if (s != "+" && s != "-") throw NamedError("ParseError", "twist sign must be + or -");
        return twist(s == "+" ? 1 : -1, x);
    }
    if (word == "triad") { std::string e; need(e); return triad(e); }
    if (word == "cap") { std::string x, y; need(x); need(y); return cap(x, y); }
    if (word == "cup") {
        std::string v, p, e;
        need(v);
        need(p);
        need(e);
        return cup(v, std::stoi(p), e);
    }
    if (word == "stump") { std::string e; need(e); return stump(e); }
    if (word == "switch") { std::string e; need(e); return switch_edge(e); }
    if (word == "cut") {
        std::string v, p;
        need(v);
        need(p);
        return cut(v, std::stoi(p));
    }
    throw NamedError("ParseError", "unknown step: " + word);
}

Lattice diagram_signature(const Lattice& lat, const ElementaryDiagram& d) {
    Lattice out = lat;
    switch (d.kind) {
        case ElementaryDiagram::Kind::Identity:
            break;

        case ElementaryDiagram::Kind::Crossing: {
            require(d.sign == 1 || d.sign == -1, "crossing sign");
            require(out.has_edge(d.a), d.a);
            auto [vi, p] = out.locate(d.a);
            auto& ord = out.vertices[static_cast<size_t>(vi)].order;
            require(p + 1 < static_cast<int>(ord.size()) && ord[p + 1] == d.b,
                    "crossing pair not cilially adjacent: " + d.a + " " + d.b);
            std::swap(ord[p], ord[p + 1]);
            break;
        }

        case ElementaryDiagram::Kind::Twist: {
            require(d.sign == 1 || d.sign == -1, "twist sign");
            require(out.has_edge(d.a), d.a);
            break;
        }

        case ElementaryDiagram::Kind::Triad: {
            require(out.has_edge(d.a), d.a);
            EdgeId e1 = triad_prime(d.a), e2 = triad_double_prime(d.a);
            EdgeId f = out.involution.at(d.a);
            require(!out.has_edge(e1) && !out.has_edge(e2), "triad names collide: " + e1);
            splice(out, d.a, {e1, e2});
            splice(out, f, {edge_inv(e2), edge_inv(e1)});
            bool fwd = out.orientation.count(d.a) > 0;
            erase_orbit(out, d.a);
            out.involution[e1] = edge_inv(e1);
            out.involution[edge_inv(e1)] = e1;
            out.involution[e2] = edge_inv(e2);
            out.involution[edge_inv(e2)] = e2;
            if (fwd) {
                out.orientation.insert(e1);
                out.orientation.insert(e2);
            } else {
                out.orientation.insert(edge_inv(e1));
                out.orientation.insert(edge_inv(e2));
            }
            break;
        }

        case ElementaryDiagram::Kind::Cap: {
            require(out.has_edge(d.a), d.a);
            auto [vi, p] = out.locate(d.a);
            auto& ord = out.vertices[static_cast<size_t>(vi)].order;
            require(p + 1 < static_cast<int>(ord.size()) && ord[p + 1] == d.b,
                    "cap pair not cilially adjacent: " + d.a + " " + d.b);
            require(out.orientation.count(d.a) != out.orientation.count(d.b),
                    "cap pair needs exactly one oriented symbol: " + d.a + " " + d.b);
            if (d.b == out.involution.at(d.a)) {
                // Closed strand: the edge disappears entirely.
                ord.erase(ord.begin() + p, ord.begin() + p + 2);
                erase_orbit(out, d.a);
            } else {
                // The orphaned partners pair up as a new involutary pair;
                // exactly one of them inherits the orientation.
                EdgeId ia = out.involution.at(d.a), ib = out.involution.at(d.b);
                ord.erase(ord.begin() + p, ord.begin() + p + 2);
                out.involution.erase(d.a);
                out.involution.erase(d.b);
                out.orientation.erase(d.a);
                out.orientation.erase(d.b);
                out.involution[ia] = ib;
                out.involution[ib] = ia;
            }
            drop_empty_vertices(out);
            break;
        }

        case ElementaryDiagram::Kind::Cup: {
            EdgeId base = edge_base(d.a);
            require(!out.has_edge(base) && !out.has_edge(edge_inv(base)),
                    "cup name collides: " + base);
            int vi = out.vertex_index(d.vertex);
            require(vi >= 0, "unknown vertex " + d.vertex);
            auto& ord = out.vertices[static_cast<size_t>(vi)].order;
            require(d.position >= 0 && d.position <= static_cast<int>(ord.size()),
                    "cup position out of range");
            ord.insert(ord.begin() + d.position, {d.a, edge_inv(d.a)});
            out.involution[d.a] = edge_inv(d.a);
            out.involution[edge_inv(d.a)] = d.a;
            out.orientation.insert(base);
            break;
        }

        case ElementaryDiagram::Kind::Stump: {
            require(out.has_edge(d.a), d.a);
            EdgeId f = out.involution.at(d.a);
            splice(out, d.a, {});
            splice(out, f, {});
            erase_orbit(out, d.a);
            drop_empty_vertices(out);
            break;
        }

        case ElementaryDiagram::Kind::Switch: {
            require(out.has_edge(d.a), d.a);
            require(out.orientation.count(d.a) > 0, "switch needs oriented symbol: " + d.a);
            out.orientation.erase(d.a);
            out.orientation.insert(out.involution.at(d.a));
            break;
        }

        case ElementaryDiagram::Kind::Cut: {
            int vi = out.vertex_index(d.vertex);
            require(vi >= 0, "unknown vertex " + d.vertex);
            Vertex v = out.vertices[static_cast<size_t>(vi)];
            require(d.position >= 1 && d.position < static_cast<int>(v.order.size()),
                    "cut position out of range");
            Vertex left{v.name + "'", {v.order.begin(), v.order.begin() + d.position}};
            Vertex right{v.name + "''", {v.order.begin() + d.position, v.order.end()}};
            out.vertices[static_cast<size_t>(vi)] = left;
            out.vertices.insert(out.vertices.begin() + vi + 1, right);
            break;
        }
    }
    return out;
}

MultitangleIR compose_multitangle(const Lattice& domain,
                                  const std::vector<ElementaryDiagram>& steps) {
    MultitangleIR ir;
    ir.domain = domain;
    ir.steps = steps;
    Lattice cur = domain;
    for (size_t i = 0; i < steps.size(); ++i) {
        try {
            cur = diagram_signature(cur, steps[i]);
        } catch (const NamedError& e) {
            throw NamedError("ChainBreak", std::to_string(i) + ": " + e.detail());
        }
        ir.chain.push_back(cur);
    }
    return ir;
}

std::vector<ElementaryDiagram> parse_multitangle(const std::string& text) {
    std::vector<ElementaryDiagram> steps;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        steps.push_back(ElementaryDiagram::parse_line(line));
    }
    return steps;
}

}  // namespace lgft
