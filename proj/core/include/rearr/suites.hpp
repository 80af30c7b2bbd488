#pragma once

#include "rearr/config.hpp"
#include "rearr/radial_profile.hpp"
#include "rearr/sweep.hpp"

namespace rearr {

struct SuiteResult {
    int exit_code = 0;  // 0: all assertions hold, 1: mathematical violation
    std::string csv;
    std::string log;
};

/// Seeded random radial suite for the pointwise kernel bound, plus the
/// quasi-norm consequences on a sample subset.
SuiteResult run_check_inequalities(const RunConfig& cfg);

/// family: bump | bump_subball | balanced | translated | all.
SuiteResult run_sweep_sharpness(const RunConfig& cfg, const std::string& family);

/// Exponential-integrability sweeps (n = 2), with the endpoint slope fit.
SuiteResult run_brezis_merle(const RunConfig& cfg);

/// Gamma-formula constants against quadrature, plus exploratory
/// compactly-supported rows (flagged no-target).
SuiteResult run_lq_constants(const RunConfig& cfg);

/// Defect curves, verdicts, majorant domination, truncation table.
SuiteResult run_target_membership(const RunConfig& cfg);

/// Deterministic splitmix64 stream (stable across platforms).
struct SplitMix {
    std::uint64_t state = 0;

    std::uint64_t next();
    double uniform();  // [0, 1)
    double uniform(double a, double b);
    int uniform_int(int lo, int hi);  // inclusive
};

/// Piecewise-constant radial data with 1..8 shells at uniform random radii,
/// values in [-1, 1].
RadialProfile random_radial_data(const BallGeometry& geom, SplitMix& rng);

/// Zero-mean variant: random shells inside [0, 0.7 R] balanced by an
/// annulus charge on [0.8 R, 0.9 R]; the potential is compactly supported.
RadialProfile random_balanced_data(const BallGeometry& geom, SplitMix& rng);

} // namespace rearr
