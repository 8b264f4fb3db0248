#include <CLI11.hpp>

#include <iostream>

#include "darboux/cli.hpp"

namespace {

struct CommonArgs {
    std::string path;
    bool json = false;
    int max_degree = -1;
    std::string bound_rule;
    int shear_seed = 0;
    bool shear_seed_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("file", args.path, "input system file")->required();
    cmd->add_flag("--json", args.json, "emit the JSON report");
    cmd->add_option("--max-degree", args.max_degree, "search curves up to this degree");
    cmd->add_option("--bound-rule", args.bound_rule, "smooth|nodal|k:<K>|explicit:<n>");
    cmd->add_option("--shear-seed", args.shear_seed, "first shear parameter to try")
        ->each([&args](const std::string&) { args.shear_seed_set = true; });
}

int run(const std::string& name, const CommonArgs& args) {
    darboux::CliOptions opt;
    opt.json = args.json;
    if (args.max_degree >= 0) opt.max_degree = args.max_degree;
    if (!args.bound_rule.empty()) {
        try {
            opt.bound_rule = darboux::parse_bound_rule(args.bound_rule);
        } catch (const darboux::ValidationError& e) {
            std::cerr << "validation error: " << e.what() << "\n";
            return 3;
        }
    }
    if (args.shear_seed_set) opt.shear_seed = args.shear_seed;
    darboux::CommandResult res = darboux::run_command(name, args.path, opt);
    if (res.exit_code == 0)
        std::cout << res.output;
    else
        std::cerr << res.output;
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of plane polynomial vector fields and their "
                 "algebraic invariant curves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("darboux ") + darboux::kVersion);

    CommonArgs analyze_args, verify_args, search_args, genus_args;
    auto* analyze = app.add_subcommand("analyze", "degree, Darboux divisor, equilibria");
    add_common(analyze, analyze_args);
    auto* verify = app.add_subcommand("verify", "certify given curves and check the theorems");
    add_common(verify, verify_args);
    auto* search = app.add_subcommand("search", "search for algebraic invariant curves");
    add_common(search, search_args);
    auto* genus = app.add_subcommand("genus", "singularity and genus analysis of curves");
    add_common(genus, genus_args);

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) return run("analyze", analyze_args);
    if (verify->parsed()) return run("verify", verify_args);
    if (search->parsed()) return run("search", search_args);
    if (genus->parsed()) return run("genus", genus_args);
    return 1;
}
