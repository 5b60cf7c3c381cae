#pragma once

#include <optional>
#include <ostream>

#include "lgft/verify.hpp"

namespace lgft {

// One command invocation. Identical configs (including seed) produce
// byte-identical reports.
struct RunConfig {
    std::string command;     // validate | envelope | wilson | holonomy | verify | skein
    std::string subcommand;  // verify suite name, or skein reduce | product
    std::string lattice_path;
    std::vector<std::string> tangle_paths;
    std::string connection_path;
    std::string group;            // builtin name (Z<n>, S3) or group-table file
    std::string backend;          // group | double | uqsl2 (command default if empty)
    std::string surface = "both"; // zeta suite scope
    std::uint64_t seed = 0;
    int samples = 20;
    int order = 0;                // series truncation knob, recorded in reports
    bool json = false;
};

struct Inputs {
    Lattice lattice;
    std::vector<QTangle> tangles;
    std::optional<FiniteHopf> backend;           // group or double modes
    std::map<EdgeId, HElt> finite_connection;
    std::map<EdgeId, UqElement> uq_connection;
};

// Reads and validates the referenced files. Throws NamedError("ParseError",
// "<path>: <detail>") or the owning module's validation error tagged the same
// way.
Inputs parse_inputs(const RunConfig& cfg);

// Executes the command, writing the textual (or JSON) report. Returns the
// process exit status: 0 iff every executed check passed.
int run_command(const RunConfig& cfg, std::ostream& out);

}  // namespace lgft
