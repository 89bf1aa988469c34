#include "surfloss/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace surfloss::cli;

int main(int argc, char** argv) {
    CLI::App app{"surface participation and TLS design tool"};
    app.require_subcommand(1);
    Options o;
    std::string format = "table";
    double span = 0.0;

    auto common = [&](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", o.config, "design config (INI)");
        if (needs_config) c->required()->check(CLI::ExistingFile);
        sub->add_option("--out", o.out_dir, "directory for CSV output");
        sub->add_option("--format", format, "stdout format")->check(CLI::IsMember({"table", "csv", "jsonl"}));
        sub->add_option("--mesh-scale", o.mesh_scale, "BEM mesh density multiplier")->check(CLI::PositiveNumber);
        sub->add_option("--span-ghz", span, "observation span for TLS counts")->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "participation table for a design");
    common(analyze, true);
    auto* verify = app.add_subcommand("verify", "closed forms against the boundary-element solvers");
    common(verify, false);
    verify->add_option("--suite", o.suites, "coax, flat-coax, corner, ribbon-ground, cyl-wire, flat-wire (default all)");
    auto* sweep = app.add_subcommand("sweep", "sweep one numeric config value");
    common(sweep, true);
    sweep->add_option("--param", o.param, "dotted path, e.g. structure.wire.d_um")->required();
    sweep->add_option("--from", o.from)->required();
    sweep->add_option("--to", o.to)->required();
    sweep->add_option("--steps", o.steps)->required();
    auto* taper = app.add_subcommand("taper", "optimal taper slope for the first wire");
    common(taper, true);
    auto* tls = app.add_subcommand("tls", "TLS splitting spectra and densities");
    common(tls, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: command=" << (argc > 1 ? argv[1] : "") << " code=" << kConfigError
                  << " kind=usage message=" << e.what() << "\n";
        return kConfigError;
    }
    o.format = parse_format(format);
    if (span > 0.0) o.span_ghz = span;

    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    return guarded(name.c_str(), std::cerr, [&] {
        if (name == "analyze") return cmd_analyze(o, std::cout, std::cerr);
        if (name == "verify") return cmd_verify(o, std::cout, std::cerr);
        if (name == "sweep") return cmd_sweep(o, std::cout, std::cerr);
        if (name == "taper") return cmd_taper(o, std::cout, std::cerr);
        return cmd_tls(o, std::cout, std::cerr);
    });
}
