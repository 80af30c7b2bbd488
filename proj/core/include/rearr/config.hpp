#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rearr {

/// Thrown on malformed configuration; the CLI maps it to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Suite configuration. Plain key=value text files plus flag overrides; no
/// environment variables carry semantics.
struct RunConfig {
    std::vector<int> dims = {2, 3, 4};
    std::uint64_t seed = 20240915;
    int samples = 200;

    // measure-axis evaluation grid (relative to the domain volume)
    double t_min_rel = 1e-12;
    int t_points = 200;

    // sharpness schedules
    double sigma = 0.5;                                   // coupling exponent in (0,1)
    std::vector<double> R_schedule = {1e2, 1e3, 1e4};     // translated family
    std::vector<double> eps_schedule = {1e-1, 1e-2, 1e-3, 1e-4};  // relative to R
    std::vector<double> delta_schedule = {1e-1, 1e-2, 1e-3};      // relative to R
    double fixed_t_rel = 1e-2;  // balanced-family evaluation measure, relative to V
    double pair_t0 = 0.1;       // translated-family evaluation measure

    std::vector<double> alpha_over_pi = {1.0, 2.0, 3.0, 3.5};  // exponential sweeps
    std::vector<double> q_list = {1.0, 1.5, 2.5};

    double tol = 1e-9;
    double member_threshold = 1e-3;
    double kernel_scale = 1.0;  // test hook: != 1 corrupts the bound on purpose
    int field_cells_per_delta = 128;
    int threads = 0;  // 0 = hardware concurrency

    std::string out_path;

    void validate() const;
    std::string canonical() const;    // deterministic serialization
    std::uint64_t config_hash() const;
};

/// Parse a key=value config file ('#' comments, blank lines ignored).
RunConfig load_config_file(const std::string& path);

/// Apply one key=value override (same keys as the file).
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

} // namespace rearr
