// Batch driver for the inequality suites and sharpness sweeps. Emits
// deterministic CSV; exit 0 when every assertion holds, 1 on a mathematical
// violation, 2 on usage or configuration errors.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rearr/suites.hpp"

namespace {

int write_output(const rearr::SuiteResult& res, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << res.csv;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 2;
    }
    out << res.csv;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp-constant verification suites for the ball kernel"};
    app.fallthrough(true);
    app.require_subcommand(1);

    std::string config_path, out_path, family = "all";
    std::vector<std::string> overrides;
    bool have_seed = false, have_dims = false, have_tol = false;
    std::uint64_t seed = 0;
    std::string dims;
    double tol = 0.0;

    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--out", out_path, "output CSV path (default: stdout)");
    app.add_option("--seed", seed, "random seed override")->each([&](const std::string&) {
        have_seed = true;
    });
    app.add_option("--dims", dims, "comma-separated dimension list")
        ->each([&](const std::string&) { have_dims = true; });
    app.add_option("--tol", tol, "violation tolerance override")
        ->each([&](const std::string&) { have_tol = true; });
    app.add_option("--set", overrides, "extra key=value config overrides")
        ->take_all();

    auto* cmd_check = app.add_subcommand("check-inequalities",
                                         "random radial data against the kernel bounds");
    auto* cmd_sweep =
        app.add_subcommand("sweep-sharpness", "extremal-family sharpness sweeps");
    cmd_sweep->add_option("--family", family,
                          "bump | bump_subball | balanced | translated | all");
    auto* cmd_bm = app.add_subcommand("brezis-merle", "exponential integrability sweeps");
    auto* cmd_lq = app.add_subcommand("lq-constants", "Gamma formula vs quadrature");
    auto* cmd_tm =
        app.add_subcommand("target-membership", "defect curves and majorant domination");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        rearr::RunConfig cfg;
        if (!config_path.empty()) cfg = rearr::load_config_file(config_path);
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw rearr::config_error("--set expects key=value, got: " + kv);
            rearr::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (have_seed) cfg.seed = seed;
        if (have_dims) rearr::apply_override(cfg, "dims", dims);
        if (have_tol) cfg.tol = tol;
        if (!out_path.empty()) cfg.out_path = out_path;
        cfg.validate();

        const auto t0 = std::chrono::steady_clock::now();
        rearr::SuiteResult res;
        if (*cmd_check)
            res = rearr::run_check_inequalities(cfg);
        else if (*cmd_sweep)
            res = rearr::run_sweep_sharpness(cfg, family);
        else if (*cmd_bm)
            res = rearr::run_brezis_merle(cfg);
        else if (*cmd_lq)
            res = rearr::run_lq_constants(cfg);
        else if (*cmd_tm)
            res = rearr::run_target_membership(cfg);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const int io = write_output(res, cfg.out_path);
        if (io != 0) return io;
        std::fprintf(stderr, "%s (%.2fs)\n", res.log.c_str(), wall);
        return res.exit_code;
    } catch (const rearr::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
