#include "kernelalg/cli.hpp"

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kernelalg/config.hpp"
#include "kernelalg/io.hpp"
#include "kernelalg/suites.hpp"

namespace kernelalg {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitSpaceError = 3;

int run_command(const std::string& config_path, const std::string& suite_override,
                long long seed_override, const std::string& out_override) {
    ExperimentConfig cfg;
    try {
        cfg = parse_config_file(config_path);
        if (!suite_override.empty()) cfg.suite = suite_from_string(suite_override);
        if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
        if (!out_override.empty()) cfg.out = out_override;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }

    DiscreteSpace::Ptr space;
    try {
        space = build_space(cfg);
    } catch (const std::exception& e) {
        std::cerr << "space build error: " << e.what() << "\n";
        return kExitSpaceError;
    }

    Report rep;
    try {
        rep = run_suite(space, cfg);
    } catch (const std::exception& e) {
        // a check construction failed outright; report it as a failed run
        rep.suite = to_string(cfg.suite);
        rep.space_summary = space->summary();
        rep.seed = cfg.seed;
        CheckRecord rec;
        rec.name = "suite_error";
        rec.pass = false;
        rec.note = e.what();
        rep.add(rec);
    }
    for (const auto& c : rep.checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!std::isnan(c.value)) std::cout << "  value " << c.value;
        if (!std::isnan(c.bound)) std::cout << "  bound " << c.bound;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << " suite " << rep.suite << " on "
              << rep.space_summary << "\n";
    std::cerr << "wall time " << rep.wall_time_ms << " ms\n";

    if (!cfg.out.empty()) {
        try {
            save_report(cfg.out, rep);
        } catch (const std::exception& e) {
            std::cerr << "report write error: " << e.what() << "\n";
            return kExitSpaceError;
        }
    }
    return rep.pass ? kExitPass : kExitCheckFailure;
}

int describe_command(const std::string& config_path) {
    ExperimentConfig cfg;
    try {
        cfg = parse_config_file(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }
    try {
        std::cout << describe_space(cfg) << "\n";
    } catch (const std::exception& e) {
        std::cerr << "space build error: " << e.what() << "\n";
        return kExitSpaceError;
    }
    return kExitPass;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"numerical laboratory for convolution algebras of continuous kernels"};
    app.require_subcommand(1);

    std::string config_path, suite_override, out_override;
    long long seed_override = -1;

    auto* run = app.add_subcommand("run", "run a named verification suite");
    run->add_option("--config", config_path, "experiment document")->required();
    run->add_option("--suite", suite_override,
                    "axioms|units|center|ideals|representation|derivation|all");
    run->add_option("--seed", seed_override, "random seed override");
    run->add_option("--out", out_override, "report document path");

    auto* describe = app.add_subcommand("describe", "print a space summary");
    std::string describe_config;
    describe->add_option("--config", describe_config, "experiment document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    if (run->parsed()) return run_command(config_path, suite_override, seed_override, out_override);
    return describe_command(describe_config);
}

}  // namespace kernelalg
