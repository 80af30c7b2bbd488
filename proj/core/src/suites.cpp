#include "rearr/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "rearr/embedding_norms.hpp"
#include "rearr/extremal_families.hpp"
#include "rearr/optimal_target.hpp"
#include "rearr/radial_poisson.hpp"
#include "rearr/rearrangement.hpp"

namespace rearr {

// ---- deterministic rng ----

std::uint64_t SplitMix::next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SplitMix::uniform() { return double(next() >> 11) * 0x1.0p-53; }

double SplitMix::uniform(double a, double b) { return a + (b - a) * uniform(); }

int SplitMix::uniform_int(int lo, int hi) {
    return lo + int(next() % std::uint64_t(hi - lo + 1));
}

static SplitMix sample_rng(std::uint64_t seed, int n, int sample) {
    SplitMix r{seed ^ (std::uint64_t(n) * 0xd6e8feb86659fd93ull) ^
               (std::uint64_t(sample) * 0xa5a5a5a5a5a5a5a5ull)};
    r.next();
    r.next();
    return r;
}

RadialProfile random_radial_data(const BallGeometry& geom, SplitMix& rng) {
    const int shells = 1 + rng.uniform_int(0, 7);
    std::vector<double> radii;
    for (int i = 0; i + 1 < shells; ++i)
        radii.push_back(rng.uniform(0.02 * geom.R, 0.98 * geom.R));
    radii.push_back(geom.R);
    std::sort(radii.begin(), radii.end());
    std::vector<std::pair<double, double>> spec;
    double l1 = 0.0;
    for (double r : radii) {
        const double v = rng.uniform(-1.0, 1.0);
        l1 += std::abs(v);
        spec.emplace_back(r, v);
    }
    if (l1 < 1e-6) spec.front().second = 0.5;
    return piecewise_constant_radial(geom, spec);
}

RadialProfile random_balanced_data(const BallGeometry& geom, SplitMix& rng) {
    const int shells = 1 + rng.uniform_int(0, 5);
    std::vector<double> radii;
    for (int i = 0; i + 1 < shells; ++i)
        radii.push_back(rng.uniform(0.05 * geom.R, 0.68 * geom.R));
    radii.push_back(0.7 * geom.R);
    std::sort(radii.begin(), radii.end());
    std::vector<std::pair<double, double>> spec;
    double total = 0.0, prev = 0.0;
    for (double r : radii) {
        const double v = rng.uniform(-1.0, 1.0);
        total += v * (geom.volume_of_radius(r) - geom.volume_of_radius(prev));
        spec.emplace_back(r, v);
        prev = r;
    }
    const double ann_vol =
        geom.volume_of_radius(0.9 * geom.R) - geom.volume_of_radius(0.8 * geom.R);
    spec.emplace_back(0.8 * geom.R, 0.0);
    spec.emplace_back(0.9 * geom.R, -total / ann_vol);
    spec.emplace_back(geom.R, 0.0);
    return piecewise_constant_radial(geom, spec);
}

// ---- check-inequalities ----

namespace {

struct CheckRow {
    std::string check;
    int n;
    int sample;
    double param, value, bound, margin;
};

void append_rows(CsvTable& t, const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        t.add_row({r.check, std::int64_t(r.n), std::int64_t(r.sample), r.param, r.value,
                   r.bound, r.margin});
}

} // namespace

SuiteResult run_check_inequalities(const RunConfig& cfg) {
    cfg.validate();
    SuiteResult res;
    CsvTable table({"check", "n", "sample", "param", "value", "bound", "margin"});
    char meta[64];
    std::snprintf(meta, sizeof(meta), "suite=check-inequalities config=%016llx",
                  static_cast<unsigned long long>(cfg.config_hash()));
    table.add_comment(meta);

    bool violation = false;
    for (int n : cfg.dims) {
        const BallGeometry geom = BallGeometry::from_radius(n, 1.0);
        const auto grid = geometric_grid(cfg.t_min_rel * geom.V, geom.V, cfg.t_points);
        std::vector<std::vector<CheckRow>> per_sample(cfg.samples);
        std::vector<char> bad(cfg.samples, 0);

        parallel_for(std::size_t(cfg.samples), cfg.threads, [&](std::size_t i) {
            SplitMix rng = sample_rng(cfg.seed, n, int(i));
            auto& rows = per_sample[i];

            // arbitrary signed radial data: pointwise kernel bound, checked
            // through the distribution function (u*(t) <= B iff |{|v|>B}| <= t)
            {
                const RadialProfile f = random_radial_data(geom, rng);
                const RadialProfile v = solve_radial(geom, f);
                const double l1 = l1_norm(f);
                const double slack = 1e-11 * radial_sup_abs(v);
                std::vector<double> levels(grid.size());
                for (size_t k = 0; k < grid.size(); ++k)
                    levels[k] = cfg.kernel_scale * green_rearranged(geom, grid[k]) * l1 *
                                    (1.0 + cfg.tol) +
                                slack;
                const auto measures = superlevel_measures(v, levels);
                double worst = 1e300;
                double worst_t = grid.front();
                for (size_t k = 0; k < grid.size(); ++k) {
                    const double margin = grid[k] - measures[k];
                    if (margin < worst) {
                        worst = margin;
                        worst_t = grid[k];
                    }
                    if (measures[k] > grid[k]) bad[i] = 1;
                }
                rows.push_back({"kernel_bound", n, int(i), worst_t,
                                measures[grid.size() / 2], grid[grid.size() / 2], worst});

                if (i % 16 == 0) {
                    const MonotoneProfile us = rearrange_radial(v);
                    if (n == 2) {
                        const double q = lexp_quasi_norm(us, geom.V);
                        const double b = cfg.kernel_scale * l1 / (4.0 * M_PI);
                        rows.push_back({"zygmund_quasi", n, int(i), 0.0, q, b, b - q});
                        if (q > b * (1.0 + cfg.tol)) bad[i] = 1;
                    } else {
                        const double q = weak_quasi_norm(us, n, geom.V);
                        const double b =
                            cfg.kernel_scale * green_infinite_coefficient(n) * l1;
                        rows.push_back({"weak_quasi", n, int(i), 0.0, q, b, b - q});
                        if (q > b * (1.0 + cfg.tol)) bad[i] = 1;
                    }
                }
            }

            // compactly supported zero-mean radial data: halved bound
            {
                const RadialProfile f = random_balanced_data(geom, rng);
                const RadialProfile v = solve_radial(geom, f);
                const double l1 = l1_norm(f);
                if (l1 > 1e-9) {
                    const double slack = 1e-11 * radial_sup_abs(v);
                    std::vector<double> levels(grid.size());
                    for (size_t k = 0; k < grid.size(); ++k)
                        levels[k] = 0.5 * cfg.kernel_scale *
                                        green_rearranged(geom, grid[k]) * l1 *
                                        (1.0 + cfg.tol) +
                                    slack;
                    const auto measures = superlevel_measures(v, levels);
                    double worst = 1e300;
                    double worst_t = grid.front();
                    for (size_t k = 0; k < grid.size(); ++k) {
                        const double margin = grid[k] - measures[k];
                        if (margin < worst) {
                            worst = margin;
                            worst_t = grid[k];
                        }
                        if (measures[k] > grid[k]) bad[i] = 1;
                    }
                    rows.push_back({"half_kernel_bound", n, int(i), worst_t,
                                    measures[grid.size() / 2], grid[grid.size() / 2],
                                    worst});

                    if (i % 16 == 0) {
                        const MonotoneProfile us = rearrange_radial(v);
                        if (n == 2) {
                            const double q = lexp_quasi_norm(us, geom.V);
                            const double b = cfg.kernel_scale * l1 / (8.0 * M_PI);
                            rows.push_back(
                                {"zygmund_quasi_compact", n, int(i), 0.0, q, b, b - q});
                            if (q > b * (1.0 + cfg.tol)) bad[i] = 1;
                        } else {
                            const double q = weak_quasi_norm(us, n, geom.V);
                            const double b = 0.5 * cfg.kernel_scale *
                                             green_infinite_coefficient(n) * l1;
                            rows.push_back(
                                {"weak_quasi_compact", n, int(i), 0.0, q, b, b - q});
                            if (q > b * (1.0 + cfg.tol)) bad[i] = 1;
                        }
                    }
                }
            }
        });

        for (int i = 0; i < cfg.samples; ++i) {
            append_rows(table, per_sample[i]);
            if (bad[i]) violation = true;
        }
    }

    res.exit_code = violation ? 1 : 0;
    res.csv = table.str();
    res.log = violation ? "kernel bound violated" : "all inequalities hold";
    return res;
}

// ---- sharpness sweeps ----

namespace {

void sweep_bump(const RunConfig& cfg, SweepReport& rep, bool& violation) {
    for (int n : cfg.dims) {
        const BallGeometry geom = BallGeometry::from_radius(n, 1.0);
        for (double drel : cfg.delta_schedule) {
            const double delta = drel * geom.R;
            const RadialProfile data = bump_data(geom, delta);
            const MonotoneProfile us = rearrange_radial(bump_potential(geom, delta));
            const double l1 = l1_norm(data);
            const double t_lo = geom.volume_of_radius(delta);
            const auto ts = geometric_grid(t_lo, geom.V * (1.0 - 1e-9), 16);
            for (double t : ts) {
                SharpnessRow row;
                row.family = "bump";
                row.n = n;
                row.t = t;
                row.delta = delta;
                row.R = geom.R;
                row.l1 = l1;
                row.ratio = sharpness_ratio(us, t, geom.V, l1, n);
                row.target = 1.0;
                row.gap = row.target - row.ratio;
                if (row.ratio > row.target * (1.0 + 1e-9)) violation = true;
                rep.rows.push_back(row);
            }
        }
    }
}

void sweep_bump_subball(const RunConfig& cfg, SweepReport& rep, bool& violation) {
    // bump on a sub-ball of half the domain radius; ratio against the
    // domain kernel tends to 1 as t -> 0
    for (int n : cfg.dims) {
        const BallGeometry domain = BallGeometry::from_radius(n, 1.0);
        const BallGeometry sub = BallGeometry::from_radius(n, 0.5);
        const auto ts = geometric_grid(1e-10 * sub.V, 1e-2 * sub.V, 12);
        for (double t : ts) {
            const double delta = sub.radius_of_volume(t);
            const MonotoneProfile us = rearrange_radial(bump_potential(sub, delta));
            const double l1 = 1.0;
            SharpnessRow row;
            row.family = "bump_subball";
            row.n = n;
            row.t = t;
            row.delta = delta;
            row.R = sub.R;
            row.l1 = l1;
            row.ratio = us.value(t) / (green_rearranged(domain.n, domain.V, t) * l1);
            row.target = 1.0;
            row.gap = row.target - row.ratio;
            if (row.ratio > row.target * (1.0 + 1e-9)) violation = true;
            rep.rows.push_back(row);
        }
    }
}

void sweep_balanced(const RunConfig& cfg, SweepReport& rep, bool& violation) {
    for (int n : cfg.dims) {
        const BallGeometry geom = BallGeometry::from_radius(n, 1.0);
        const double t_eval = cfg.fixed_t_rel * geom.V;
        const double delta = 0.25 * geom.radius_of_volume(t_eval);
        for (double erel : cfg.eps_schedule) {
            const double eps = erel * geom.R;
            if (!(delta < geom.R - 2.0 * eps)) continue;
            const RadialProfile data = balanced_data(geom, delta, eps);
            const MonotoneProfile us = rearrange_radial(balanced_potential(geom, delta, eps));
            const double l1 = l1_norm(data);
            SharpnessRow row;
            row.family = "balanced";
            row.n = n;
            row.t = t_eval;
            row.delta = delta;
            row.epsilon = eps;
            row.R = geom.R;
            row.l1 = l1;
            row.ratio = sharpness_ratio(us, t_eval, geom.V, l1, n);
            row.target = 0.5;
            row.gap = row.target - row.ratio;
            if (row.ratio > row.target * (1.0 + 1e-9)) violation = true;
            rep.rows.push_back(row);
        }
    }
}

void sweep_translated(const RunConfig& cfg, SweepReport& rep, bool& violation,
                      bool& under_resolved) {
    for (int n : cfg.dims) {
        if (n < 3) continue;
        const double t0 = cfg.pair_t0;
        const double target = std::pow(2.0, -2.0 / n);
        std::vector<SharpnessRow> rows(cfg.R_schedule.size());
        std::vector<char> warn(cfg.R_schedule.size(), 0);
        parallel_for(cfg.R_schedule.size(), cfg.threads, [&](std::size_t k) {
            const double R = cfg.R_schedule[k];
            const double lambda = std::pow(R, cfg.sigma);
            const BallGeometry geom = BallGeometry::from_radius(n, R);
            const double delta = geom.radius_of_volume(0.5 * t0);
            const AxisymmetricField field = translated_pair(geom, delta, lambda);
            const double l1 = translated_pair_data_l1(n, delta, lambda, R);

            FieldGrid g;
            g.cells_per_delta = cfg.field_cells_per_delta;
            g.value_floor = 0.3 * target * green_rearranged_infinite(n, t0);
            const FieldRearrangement fr = field_rearrangement(field, g);
            warn[k] = fr.under_resolved ? 1 : 0;

            SharpnessRow row;
            row.family = "translated";
            row.n = n;
            row.t = t0;
            row.delta = delta;
            row.lambda = lambda;
            row.R = R;
            row.l1 = l1;
            const double Ninf = green_rearranged_infinite(n, t0);
            row.ratio = (t0 <= fr.t_valid)
                            ? sharpness_ratio(fr.profile, t0,
                                              std::numeric_limits<double>::infinity(), l1, n)
                            : std::nan("");
            row.target = target;
            row.gap = row.target - row.ratio;
            row.res_tol = fr.res_tol_at(t0) / (Ninf * l1);
            rows[k] = row;
        });
        for (size_t k = 0; k < rows.size(); ++k) {
            if (warn[k]) under_resolved = true;
            if (std::isnan(rows[k].ratio) ||
                rows[k].ratio > rows[k].target * (1.0 + 1e-9) + rows[k].res_tol)
                violation = true;
            rep.rows.push_back(rows[k]);
        }
    }
}

// coupled small-measure limit on a fixed double ball: the bump scale tracks
// the evaluation measure, the translation is delta^sigma
void sweep_translated_smallt(const RunConfig& cfg, SweepReport& rep, bool& violation,
                             bool& under_resolved) {
    for (int n : cfg.dims) {
        if (n < 3) continue;
        const double R = 1.0;
        const BallGeometry geom = BallGeometry::from_radius(n, R);
        const BallGeometry domain = BallGeometry::from_radius(n, 2.0 * R);
        const double target = std::pow(2.0, -2.0 / n);
        const std::vector<double> ts = {1e-4, 1e-5, 1e-6, 1e-7};
        std::vector<SharpnessRow> rows(ts.size());
        std::vector<char> warn(ts.size(), 0);
        parallel_for(ts.size(), cfg.threads, [&](std::size_t k) {
            const double t = ts[k] * domain.V;
            const double delta = geom.radius_of_volume(0.5 * t);
            const double lambda = std::pow(delta, cfg.sigma);
            const AxisymmetricField field = translated_pair(geom, delta, lambda);
            const double l1 = translated_pair_data_l1(n, delta, lambda, R);

            FieldGrid g;
            g.cells_per_delta = cfg.field_cells_per_delta;
            g.value_floor =
                0.3 * target * green_rearranged(domain.n, domain.V, t);
            const FieldRearrangement fr = field_rearrangement(field, g);
            warn[k] = fr.under_resolved ? 1 : 0;

            SharpnessRow row;
            row.family = "translated_smallt";
            row.n = n;
            row.t = t;
            row.delta = delta;
            row.lambda = lambda;
            row.R = R;
            row.l1 = l1;
            row.ratio = (t <= fr.t_valid)
                            ? sharpness_ratio(fr.profile, t, domain.V, l1, n)
                            : std::nan("");
            row.target = target;
            row.gap = row.target - row.ratio;
            row.res_tol =
                fr.res_tol_at(t) / (green_rearranged(domain.n, domain.V, t) * l1);
            rows[k] = row;
        });
        for (size_t k = 0; k < rows.size(); ++k) {
            if (warn[k]) under_resolved = true;
            if (std::isnan(rows[k].ratio) ||
                rows[k].ratio > rows[k].target * (1.0 + 1e-9) + rows[k].res_tol)
                violation = true;
            rep.rows.push_back(rows[k]);
        }
    }
}

} // namespace

SuiteResult run_sweep_sharpness(const RunConfig& cfg, const std::string& family) {
    cfg.validate();
    SuiteResult res;
    SweepReport rep;
    rep.suite = "sweep-sharpness";
    rep.config_hash = cfg.config_hash();
    bool violation = false;
    bool under_resolved = false;

    if (family == "bump") {
        sweep_bump(cfg, rep, violation);
    } else if (family == "bump_subball") {
        sweep_bump_subball(cfg, rep, violation);
    } else if (family == "balanced") {
        sweep_balanced(cfg, rep, violation);
    } else if (family == "translated") {
        sweep_translated(cfg, rep, violation, under_resolved);
    } else if (family == "translated_smallt") {
        sweep_translated_smallt(cfg, rep, violation, under_resolved);
    } else if (family == "all") {
        sweep_bump(cfg, rep, violation);
        sweep_bump_subball(cfg, rep, violation);
        sweep_balanced(cfg, rep, violation);
        sweep_translated(cfg, rep, violation, under_resolved);
        sweep_translated_smallt(cfg, rep, violation, under_resolved);
    } else {
        throw config_error(
            "unknown family: " + family +
            " (expected bump|bump_subball|balanced|translated|translated_smallt|all)");
    }

    res.exit_code = violation ? 1 : 0;
    res.csv = rep.to_csv().str();
    res.log = violation ? "sharpness target exceeded" : "all ratios below targets";
    if (under_resolved) res.log += " (resolution warning: cells_per_delta below 32)";
    return res;
}

// ---- exponential integrability ----

SuiteResult run_brezis_merle(const RunConfig& cfg) {
    cfg.validate();
    SuiteResult res;
    CsvTable table({"record", "family", "n", "alpha", "delta", "epsilon", "value",
                    "reference", "gap"});
    char meta[64];
    std::snprintf(meta, sizeof(meta), "suite=brezis-merle config=%016llx",
                  static_cast<unsigned long long>(cfg.config_hash()));
    table.add_comment(meta);
    bool violation = false;

    const int n = 2;
    const BallGeometry geom = BallGeometry::from_radius(n, 1.0);
    const double V = geom.V;

    // bump family against the open-range bound
    for (double arel : cfg.alpha_over_pi) {
        const double alpha = arel * M_PI;
        if (!(alpha < 4.0 * M_PI)) continue;
        const double bound = 4.0 * M_PI * V / (4.0 * M_PI - alpha);
        for (double drel : cfg.delta_schedule) {
            const double delta = drel * geom.R;
            const RadialProfile data = bump_data(geom, delta);
            const MonotoneProfile us = rearrange_radial(bump_potential(geom, delta));
            const double l1 = l1_norm(data);
            const double value = exp_integral(us, alpha, l1, V);
            if (value > bound * (1.0 + cfg.tol)) violation = true;
            table.add_row({std::string("integral"), std::string("bump"), std::int64_t(n),
                           alpha, delta, std::nan(""), value, bound, bound - value});
        }
    }

    // endpoint: growth linear in log(1/delta) with slope 2V
    {
        const double alpha = 4.0 * M_PI;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (double drel : cfg.delta_schedule) {
            const double delta = drel * geom.R;
            const RadialProfile data = bump_data(geom, delta);
            const MonotoneProfile us = rearrange_radial(bump_potential(geom, delta));
            const double l1 = l1_norm(data);
            const double value = exp_integral(us, alpha, l1, V);
            table.add_row({std::string("endpoint_integral"), std::string("bump"),
                           std::int64_t(n), alpha, delta, std::nan(""), value,
                           std::nan(""), std::nan("")});
            const double x = std::log(1.0 / delta);
            sx += x;
            sy += value;
            sxx += x * x;
            sxy += x * value;
            ++m;
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        const double ref = 2.0 * V;
        if (std::abs(slope - ref) > 0.05 * ref) violation = true;
        table.add_row({std::string("slope_fit"), std::string("bump"), std::int64_t(n),
                       alpha, std::nan(""), std::nan(""), slope, ref,
                       ref - slope});
    }

    // compactly supported family against the doubled critical constant
    {
        const double eps = cfg.eps_schedule.back() * geom.R;
        const double delta = 1e-3 * geom.R;
        const RadialProfile data = balanced_data(geom, delta, eps);
        const MonotoneProfile us = rearrange_radial(balanced_potential(geom, delta, eps));
        const double l1 = l1_norm(data);
        for (double arel : cfg.alpha_over_pi) {
            const double alpha = 2.0 * arel * M_PI;  // sweep toward 8 pi
            if (!(alpha < 8.0 * M_PI)) continue;
            const double bound = 8.0 * M_PI * V / (8.0 * M_PI - alpha);
            const double value = exp_integral(us, alpha, l1, V);
            if (value > bound * (1.0 + cfg.tol)) violation = true;
            table.add_row({std::string("integral"), std::string("balanced"),
                           std::int64_t(n), alpha, delta, eps, value, bound,
                           bound - value});
        }
    }

    res.exit_code = violation ? 1 : 0;
    res.csv = table.str();
    res.log = violation ? "exponential bound violated" : "exponential bounds hold";
    return res;
}

// ---- Lq constants ----

SuiteResult run_lq_constants(const RunConfig& cfg) {
    cfg.validate();
    SuiteResult res;
    CsvTable table({"record", "n", "q", "value", "reference", "rel_err", "flag"});
    char meta[64];
    std::snprintf(meta, sizeof(meta), "suite=lq-constants config=%016llx",
                  static_cast<unsigned long long>(cfg.config_hash()));
    table.add_comment(meta);
    bool violation = false;

    for (int n : cfg.dims) {
        if (n < 3) continue;
        const double q_crit = double(n) / double(n - 2);
        const BallGeometry geom = BallGeometry::from_radius(n, 1.0);
        const MonotoneProfile kernel = green_profile(n, geom.V);
        for (double q : cfg.q_list) {
            if (!(q < q_crit)) continue;
            const double gamma_value = mazya_constant(n, q, geom.V);
            const double quad = lq_norm(kernel, q);
            const double rel = std::abs(gamma_value - quad) / gamma_value;
            if (rel > 1e-8) violation = true;
            table.add_row({std::string("gamma_vs_quadrature"), std::int64_t(n), q, quad,
                           gamma_value, rel, std::string("target")});

            // sharpness from the bump family (delta -> 0)
            const double delta = 1e-3 * geom.R;
            const MonotoneProfile us = rearrange_radial(bump_potential(geom, delta));
            const double family_norm = lq_norm(us, q);
            table.add_row({std::string("bump_family"), std::int64_t(n), q, family_norm,
                           gamma_value, std::abs(gamma_value - family_norm) / gamma_value,
                           std::string("target")});
            if (family_norm > gamma_value * (1.0 + 1e-6)) violation = true;

            // exploratory compactly-supported rows: no acceptance target
            const double eps = 1e-3 * geom.R;
            const MonotoneProfile ub =
                rearrange_radial(balanced_potential(geom, delta, eps));
            const double compact_norm = lq_norm(ub, q);
            table.add_row({std::string("compact_family"), std::int64_t(n), q,
                           compact_norm, mazya_constant_compact(n, q, geom.V),
                           std::nan(""), std::string("no-target")});
        }
    }

    res.exit_code = violation ? 1 : 0;
    res.csv = table.str();
    res.log = violation ? "Lq constant mismatch" : "Lq constants agree";
    return res;
}

// ---- optimal-target membership ----

SuiteResult run_target_membership(const RunConfig& cfg) {
    cfg.validate();
    SuiteResult res;
    CsvTable table({"record", "profile", "n", "param", "t", "value", "reference", "flag"});
    char meta[64];
    std::snprintf(meta, sizeof(meta), "suite=target-membership config=%016llx",
                  static_cast<unsigned long long>(cfg.config_hash()));
    table.add_comment(meta);
    bool violation = false;

    const int n = 2;
    const double V = 1.0;
    const MonotoneProfile kernel = green_profile(n, V);

    auto emit_verdict = [&](const std::string& name, const MonotoneProfile& u,
                            bool expect_member) {
        const auto verdict = target_defect(u, n, V, 0.5 * V, cfg.member_threshold);
        table.add_row({std::string("verdict"), name, std::int64_t(n),
                       verdict.member ? 1.0 : 0.0, std::nan(""), verdict.limit_defect,
                       std::nan(""),
                       std::string(verdict.analytic ? "analytic" : "trend")});
        const size_t stride = std::max<size_t>(1, verdict.defect_curve.size() / 24);
        for (size_t i = 0; i < verdict.defect_curve.size(); i += stride)
            table.add_row({std::string("defect"), name, std::int64_t(n), std::nan(""),
                           verdict.defect_curve[i].first, verdict.defect_curve[i].second,
                           std::nan(""), std::string("")});
        if (verdict.member != expect_member) violation = true;
        return verdict;
    };

    emit_verdict("kernel", kernel, false);
    emit_verdict("sqrt_kernel", kernel_power_profile(n, V, 0.5), true);
    emit_verdict("two_step", step_profile({{0.1, 2.0}, {0.4, 0.5}}), true);

    // truncation table: uniformly bounded norms, non-member limit
    double sup_norm = 0.0;
    for (int m = 1; m <= 20; ++m) {
        const MonotoneProfile um = clamp_max(kernel, double(m));
        const double norm = lexp_norm(um, V);
        sup_norm = std::max(sup_norm, norm);
        const auto verdict = target_defect(um, n, V, 0.5 * V, cfg.member_threshold);
        if (!verdict.member) violation = true;
        table.add_row({std::string("truncation"), std::string("kernel_clamped"),
                       std::int64_t(n), double(m), std::nan(""), norm,
                       1.0 / (4.0 * M_PI), std::string(verdict.member ? "member" : "non-member")});
    }
    if (sup_norm > (1.0 / (4.0 * M_PI)) * (1.0 + 1e-9)) violation = true;
    const auto kernel_verdict = target_defect(kernel, n, V, 0.5 * V, cfg.member_threshold);
    const double tail_defect = kernel_verdict.defect_curve.front().second;
    if (!(tail_defect >= 0.99)) violation = true;
    table.add_row({std::string("fatou"), std::string("kernel"), std::int64_t(n),
                   std::nan(""), kernel_verdict.defect_curve.front().first, tail_defect,
                   0.99, std::string("limit")});

    // majorant domination for members and kernel-class profiles
    auto emit_domination = [&](const std::string& name, const MonotoneProfile& u) {
        const auto rep = extended_domination(u, n);
        if (!rep.ok) violation = true;
        table.add_row({std::string("domination"), name, std::int64_t(n),
                       rep.lambda_level, std::nan(""), rep.worst_margin, rep.C,
                       std::string(rep.ok ? "ok" : "violated")});
        table.add_row({std::string("limsup_term"), name, std::int64_t(n), std::nan(""),
                       std::nan(""), rep.limsup_term, std::nan(""), std::string("")});
    };
    emit_domination("sqrt_kernel", kernel_power_profile(n, V, 0.5));
    emit_domination("two_step", step_profile({{0.1, 2.0}, {0.4, 0.5}}));
    emit_domination("kernel", kernel);
    emit_domination("kernel_x2", scaled(kernel, 2.0));

    res.exit_code = violation ? 1 : 0;
    res.csv = table.str();
    res.log = violation ? "membership/domination violation" : "membership suite holds";
    return res;
}

} // namespace rearr
