#include "hodgekit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using hodgekit::cli::Options;
    CLI::App app{"Exact computations with mixed Hodge structures and spectral sequences"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::string format = "text";
    std::string output;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", output, "Write the report to a file instead of standard output");

    auto input_opt = [&](CLI::App* sub) { sub->add_option("input", opt.input, "Input document (- for standard input)"); };

    auto* validate = app.add_subcommand("validate", "Validate a Hodge structure, MHS, Hodge complex or mixed Hodge complex");
    validate->add_option("kind", opt.kind, "hs, mhs, hc or mhc")->required()->check(CLI::IsMember({"hs", "mhs", "hc", "mhc"}));
    input_opt(validate);

    input_opt(app.add_subcommand("split", "Deligne splitting table of an MHS"));

    auto* ss = app.add_subcommand("ss", "Pages of the spectral sequence of a filtered complex");
    ss->add_option("--filtration", opt.filtration, "F or W")->check(CLI::IsMember({"F", "W"}));
    ss->add_option("--pages", opt.pages, "Page range r0:r1 (r1 may be inf)");
    input_opt(ss);

    input_opt(app.add_subcommand("cone", "Mixed cone of a morphism of mixed Hodge complexes and its long exact sequence"));
    input_opt(app.add_subcommand("ncd", "Weight-graded cohomology of a normal crossing divisor"));
    input_opt(app.add_subcommand("open-variety", "Weight-graded cohomology of a smooth open variety"));

    auto* standard = app.add_subcommand("standard", "Cohomology of a standard space");
    standard->add_option("--kind", opt.kind, "projective_space, torus or punctured_curve")->required();
    standard->add_option("--params", opt.params, "Comma-separated integer parameters")->delimiter(',');

    auto* report = app.add_subcommand("report", "Re-render a saved JSON report");
    input_opt(report);

    auto* generate = app.add_subcommand("generate", "Emit a generated fixture");
    generate->add_option("--kind", opt.kind, "Fixture kind")->required();
    generate->add_option("--seed", opt.seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    opt.command = app.get_subcommands().front()->get_name();

    const auto rep = hodgekit::cli::run(opt);
    const std::string text = hodgekit::cli::render(rep, format);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << output << "'\n";
            return 1;
        }
        out << text;
    }
    if (rep.status != "ok" && format == "text" && !output.empty()) std::cerr << rep.message << "\n";
    return rep.exit_code();
}
