#include <iostream>

#include "CLI11.hpp"
#include "lgft/cli.hpp"

int main(int argc, char** argv) {
    lgft::RunConfig cfg;
    CLI::App app{"Exact lattice gauge field theory engine over ribbon Hopf algebras"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--lattice", cfg.lattice_path, "Lattice file");
        cmd->add_option("--tangle", cfg.tangle_paths, "Tangle file (repeatable)");
        cmd->add_option("--connection", cfg.connection_path, "Connection file");
        cmd->add_option("--group", cfg.group, "Group: Z<n>, S3 or a table file");
        cmd->add_option("--backend", cfg.backend, "group | double | uqsl2");
        cmd->add_option("--seed", cfg.seed, "Random seed (default 0)");
        cmd->add_option("--samples", cfg.samples, "Sample count for property suites");
        cmd->add_option("--order", cfg.order, "Series truncation order");
        cmd->add_flag("--json", cfg.json, "Machine-readable report");
    };

    add_common(app.add_subcommand("validate", "Parse and validate the inputs"));
    add_common(app.add_subcommand("envelope", "Surface statistics of the lattice"));
    add_common(app.add_subcommand("wilson", "Evaluate a Wilson operator"));
    add_common(app.add_subcommand("holonomy", "Symbolic traversal word and value"));

    CLI::App* verify = app.add_subcommand("verify", "Run an identity suite");
    verify->add_option("suite", cfg.subcommand,
                       "axioms | moves | coalgebra | push | ch | zeta | all")
        ->required();
    verify->add_option("--surface", cfg.surface, "annulus | punctured-torus | both");
    add_common(verify);

    CLI::App* skein = app.add_subcommand("skein", "Bracket reduction");
    skein->add_option("action", cfg.subcommand, "reduce | product")->required();
    add_common(skein);

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    return lgft::run_command(cfg, std::cout);
}
