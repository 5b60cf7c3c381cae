#include "lgft/cli.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lgft/wilson.hpp"

namespace lgft {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NamedError("ParseError", path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GroupTable load_group(const std::string& spec) {
    if (spec.empty() || spec == "Z2") return GroupTable::cyclic(2);
    if (spec == "S3") return GroupTable::symmetric3();
    if (spec.size() > 1 && spec[0] == 'Z') {
        bool digits = true;
        for (size_t i = 1; i < spec.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(spec[i]));
        if (digits) return GroupTable::cyclic(std::stoi(spec.substr(1)));
    }
    try {
        return GroupTable::parse(slurp(spec));
    } catch (const NamedError& e) {
        throw NamedError("ParseError", spec + ": " + e.detail());
    }
}

// Connection file: one `<edge> <value>` per line; '#' starts a comment. The
// value is a basis label or index over a finite backend and an algebra
// expression in uqsl2 mode.
void load_connection(const std::string& path, const std::string& backend,
                     const FiniteHopf* h, Inputs& io) {
    std::istringstream in(slurp(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string edge;
        if (!(ls >> edge)) continue;
        std::string rest;
        std::getline(ls, rest);
        size_t first = rest.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw NamedError("ParseError", path + ":" + std::to_string(lineno) +
                                               ": missing value for edge " + edge);
        rest = rest.substr(first);
        try {
            if (backend == "uqsl2") {
                io.uq_connection[edge] = UqElement::parse(rest);
            } else {
                int idx = -1;
                for (int i = 0; i < h->dim; ++i)
                    if (h->labels[static_cast<size_t>(i)] == rest) idx = i;
                if (idx < 0) idx = std::stoi(rest);
                if (idx < 0 || idx >= h->dim)
                    throw NamedError("UnknownBasisElement", rest);
                io.finite_connection[edge] = HElt{{idx, Rat(1)}};
            }
        } catch (const NamedError& e) {
            throw NamedError("ParseError", path + ":" + std::to_string(lineno) + ": " +
                                               e.detail());
        } catch (const std::exception& e) {
            throw NamedError("ParseError", path + ":" + std::to_string(lineno) + ": " +
                                               e.what());
        }
    }
}

std::string effective_backend(const RunConfig& cfg) {
    if (!cfg.backend.empty()) return cfg.backend;
    if (cfg.command == "wilson" || cfg.command == "holonomy") return "uqsl2";
    return "double";
}

int report_error(const RunConfig& cfg, const NamedError& e, std::ostream& out) {
    if (cfg.json) {
        nlohmann::json j;
        j["command"] = cfg.command;
        j["error"] = {{"kind", e.kind()}, {"detail", e.detail()}};
        j["ok"] = false;
        out << j.dump(2) << "\n";
    } else {
        out << "error: " << e.kind() << ": " << e.detail() << "\n";
    }
    return 2;
}

int run_validate(const RunConfig& cfg, const Inputs& io, std::ostream& out) {
    size_t edges = io.lattice.orientation.size();
    if (cfg.json) {
        nlohmann::json j;
        j["command"] = "validate";
        j["edges"] = edges;
        j["vertices"] = io.lattice.vertices.size();
        j["tangles"] = io.tangles.size();
        j["ok"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << "ok: " << edges << " edges, " << io.lattice.vertices.size()
            << " vertices";
        if (!io.tangles.empty()) out << ", " << io.tangles.size() << " tangle(s) compiled";
        out << "\n";
    }
    return 0;
}

int run_envelope(const RunConfig& cfg, const Inputs& io, std::ostream& out) {
    EnvelopeStats st = envelope_stats(io.lattice);
    if (cfg.json) {
        nlohmann::json j;
        j["command"] = "envelope";
        j["boundary_count"] = st.boundary_count;
        j["euler_characteristic"] = st.euler_characteristic;
        j["genus"] = st.genus;
        j["components"] = st.components;
        j["ok"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << "boundary components: " << st.boundary_count << "\n"
            << "euler characteristic: " << st.euler_characteristic << "\n"
            << "genus: " << st.genus << "\n"
            << "connected components: " << st.components << "\n";
    }
    return 0;
}

int run_wilson(const RunConfig& cfg, const Inputs& io, std::ostream& out) {
    if (io.tangles.empty()) throw NamedError("ParseError", "wilson needs --tangle");
    TraceProgram p = compile_qtangle(io.lattice, io.tangles[0]);
    std::string value;
    if (effective_backend(cfg) == "uqsl2") {
        value = eval_wilson_uq(p, io.uq_connection).to_string();
    } else {
        ConnectionState x = ConnectionState::from_assignment(*io.backend, io.lattice,
                                                            io.finite_connection);
        value = rat_to_string(eval_wilson(p, x));
    }
    if (cfg.json) {
        nlohmann::json j;
        j["command"] = "wilson";
        j["backend"] = effective_backend(cfg);
        j["value"] = value;
        j["ok"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
    return 0;
}

int run_holonomy(const RunConfig& cfg, const Inputs& io, std::ostream& out) {
    if (io.tangles.empty()) throw NamedError("ParseError", "holonomy needs --tangle");
    auto words = holonomy_words(io.lattice, io.tangles[0]);
    TraceProgram p = compile_qtangle(io.lattice, io.tangles[0]);
    std::string value;
    if (effective_backend(cfg) == "uqsl2") {
        value = eval_wilson_uq(p, io.uq_connection).to_string();
    } else {
        ConnectionState x = ConnectionState::from_assignment(*io.backend, io.lattice,
                                                            io.finite_connection);
        value = rat_to_string(eval_wilson(p, x));
    }
    if (cfg.json) {
        nlohmann::json j;
        j["command"] = "holonomy";
        j["backend"] = effective_backend(cfg);
        for (const auto& [comp, word] : words) j["words"][comp] = "tr(" + word + ")";
        j["value"] = value;
        j["ok"] = true;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [comp, word] : words)
            out << comp << " = tr(" << word << ")\n";
        out << "value = " << value << "\n";
    }
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<Suite> suites;
    const std::string& which = cfg.subcommand;
    if (which == "axioms" || which == "all") suites.push_back(suite_axioms());
    if (which == "moves" || which == "all")
        suites.push_back(suite_moves(cfg.seed, cfg.samples));
    if (which == "coalgebra" || which == "all") suites.push_back(suite_coalgebra());
    if (which == "push" || which == "all")
        suites.push_back(suite_push(cfg.seed, cfg.samples));
    if (which == "ch" || which == "all") suites.push_back(suite_ch(cfg.seed, cfg.samples));
    if (which == "zeta" || which == "all")
        suites.push_back(suite_zeta(cfg.seed, cfg.samples, cfg.surface));
    if (suites.empty()) throw NamedError("ParseError", "unknown verify suite: " + which);
    out << render_report(suites, cfg.seed, cfg.samples, cfg.json);
    for (const Suite& s : suites)
        if (!s.ok()) return 1;
    return 0;
}

int run_skein(const RunConfig& cfg, const Inputs& io, std::ostream& out) {
    SkeinElement result;
    if (cfg.subcommand == "reduce") {
        if (io.tangles.size() != 1)
            throw NamedError("ParseError", "skein reduce needs one --tangle");
        result = skein_reduce(io.lattice, io.tangles[0]);
    } else if (cfg.subcommand == "product") {
        if (io.tangles.size() != 2)
            throw NamedError("ParseError", "skein product needs two --tangle files");
        result = skein_product(io.lattice, skein_reduce(io.lattice, io.tangles[0]),
                               skein_reduce(io.lattice, io.tangles[1]));
    } else {
        throw NamedError("ParseError", "unknown skein action: " + cfg.subcommand);
    }
    if (cfg.json) {
        nlohmann::json j;
        j["command"] = "skein " + cfg.subcommand;
        j["element"] = result.to_string();
        j["ok"] = true;
        out << j.dump(2) << "\n";
    } else {
        out << result.to_string() << "\n";
    }
    return 0;
}

}  // namespace

Inputs parse_inputs(const RunConfig& cfg) {
    Inputs io;
    std::string backend = effective_backend(cfg);
    if (backend != "group" && backend != "double" && backend != "uqsl2")
        throw NamedError("ParseError", "unknown backend: " + backend);
    if (backend != "uqsl2") {
        GroupTable g = load_group(cfg.group);
        io.backend = backend == "group" ? build_group_algebra(g)
                                        : build_drinfeld_double(g);
    }
    if (!cfg.lattice_path.empty()) {
        try {
            io.lattice = Lattice::parse(slurp(cfg.lattice_path));
            io.lattice.validate();
        } catch (const NamedError& e) {
            throw NamedError("ParseError", cfg.lattice_path + ": " + e.detail());
        }
    }
    for (const std::string& path : cfg.tangle_paths) {
        try {
            QTangle t = QTangle::parse(slurp(path));
            compile_qtangle(io.lattice, t);  // surface validation
            io.tangles.push_back(std::move(t));
        } catch (const NamedError& e) {
            throw NamedError("ParseError", path + ": " + e.detail());
        }
    }
    if (!cfg.connection_path.empty())
        load_connection(cfg.connection_path, backend,
                        io.backend ? &*io.backend : nullptr, io);
    return io;
}

int run_command(const RunConfig& cfg, std::ostream& out) {
    try {
        if (cfg.command == "verify") return run_verify(cfg, out);
        Inputs io = parse_inputs(cfg);
        if (cfg.command == "validate") return run_validate(cfg, io, out);
        if (cfg.command == "envelope") return run_envelope(cfg, io, out);
        if (cfg.command == "wilson") return run_wilson(cfg, io, out);
        if (cfg.command == "holonomy") return run_holonomy(cfg, io, out);
        if (cfg.command == "skein") return run_skein(cfg, io, out);
        throw NamedError("ParseError", "unknown command: " + cfg.command);
    } catch (const NamedError& e) {
        return report_error(cfg, e, out);
    }
}

}  // namespace lgft
