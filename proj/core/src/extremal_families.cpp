#include "rearr/extremal_families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rearr/rearrangement.hpp"

namespace rearr {

static constexpr double kInf = std::numeric_limits<double>::infinity();

RadialProfile bump_data(const BallGeometry& geom, double delta) {
    if (!(delta > 0.0) || !(delta < geom.R))
        throw std::domain_error("bump_data: need 0 < delta < R");
    const double vol = geom.volume_of_radius(delta);
    const std::vector<std::pair<double, double>> shells = {{delta, 1.0 / vol},
                                                           {geom.R, 0.0}};
    return piecewise_constant_radial(geom, shells);
}

RadialProfile bump_potential(const BallGeometry& geom, double delta) {
    return solve_radial(geom, bump_data(geom, delta));
}

RadialProfile balanced_data(const BallGeometry& geom, double delta, double eps) {
    if (!(delta > 0.0) || !(eps > 0.0) || !(delta < geom.R - 2.0 * eps))
        throw std::domain_error("balanced_data: need 0 < delta < R - 2 eps");
    const double vol_b = geom.volume_of_radius(delta);
    const double vol_a = geom.volume_of_radius(geom.R - eps) -
                         geom.volume_of_radius(geom.R - 2.0 * eps);
    const std::vector<std::pair<double, double>> shells = {
        {delta, 0.5 / vol_b},
        {geom.R - 2.0 * eps, 0.0},
        {geom.R - eps, -0.5 / vol_a},
        {geom.R, 0.0}};
    return piecewise_constant_radial(geom, shells);
}

RadialProfile balanced_potential(const BallGeometry& geom, double delta, double eps) {
    return solve_radial(geom, balanced_data(geom, delta, eps));
}

double balanced_shell_average(const BallGeometry& geom, double eps) {
    const double a = geom.R - 2.0 * eps, b = geom.R - eps;
    const double vol_a = geom.volume_of_radius(b) - geom.volume_of_radius(a);
    return 0.5 * integrate_green_shell(geom, a, b) / vol_a;
}

double AxisymmetricField::value(double x1, double rho_perp) const {
    const double floor_r = geom.R * 1e-15;
    const double r1 = std::max(std::hypot(x1, rho_perp), floor_r);
    const double r2 = std::max(std::hypot(x1 - lambda, rho_perp), floor_r);
    const double u1 = r1 <= geom.R ? bump.value(r1) : 0.0;
    const double u2 = r2 <= geom.R ? bump.value(r2) : 0.0;
    return u1 - u2;
}

AxisymmetricField translated_pair(const BallGeometry& geom, double delta,
                                  double lambda, bool relax_lambda) {
    if (geom.n < 3)
        throw std::domain_error("translated_pair: requires n >= 3");
    if (!(delta < std::min(0.5, 0.5 * geom.R)))
        throw std::domain_error("translated_pair: need delta < min(1/2, R/2)");
    if (!(delta < 0.5 * lambda))
        throw std::domain_error("translated_pair: bumps overlap (need delta < lambda/2)");
    if (!relax_lambda && !(lambda < geom.R))
        throw std::domain_error("translated_pair: need lambda < R");
    AxisymmetricField f;
    f.geom = geom;
    f.delta = delta;
    f.lambda = lambda;
    f.bump = balanced_potential(geom, delta, 0.25 * geom.R);
    return f;
}

// ---- lens geometry ----

// volume of the cap {x in B(0, r) : x1 >= x0}
static double cap_volume(int n, double r, double x0) {
    if (x0 <= -r) return unit_ball_volume(n) * std::pow(r, n);
    if (x0 >= r) return 0.0;
    const double ubv = unit_ball_volume(n - 1);
    return tanh_sinh(
        [&](double x, double) {
            return ubv * std::pow(std::max(r * r - x * x, 0.0), 0.5 * (n - 1));
        },
        x0, r, 1e-13 * std::pow(r, n));
}

double ball_lens_volume(int n, double r1, double r2, double d) {
    if (r1 <= 0.0 || r2 <= 0.0) return 0.0;
    if (d >= r1 + r2) return 0.0;
    if (d <= std::abs(r1 - r2)) {
        const double rm = std::min(r1, r2);
        return unit_ball_volume(n) * std::pow(rm, n);
    }
    const double x_plane = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    return cap_volume(n, r1, x_plane) + cap_volume(n, r2, d - x_plane);
}

// |A intersect (lambda e1 + A)| for the annulus A = {a < |x| < b}
static double annulus_overlap(int n, double a, double b, double lambda) {
    return ball_lens_volume(n, b, b, lambda) - 2.0 * ball_lens_volume(n, a, b, lambda) +
           ball_lens_volume(n, a, a, lambda);
}

double defect_l1(int n, double lambda, double R) {
    if (!(lambda >= 0.0)) throw std::domain_error("defect_l1: lambda must be >= 0");
    if (lambda == 0.0) return 0.0;
    const double a = 0.5 * R, b = 0.75 * R;
    const double vol_a = unit_ball_volume(n) * (std::pow(b, n) - std::pow(a, n));
    const double overlap = annulus_overlap(n, a, b, lambda);
    return 2.0 * (vol_a - overlap) / vol_a;
}

double translated_pair_data_l1(int n, double delta, double lambda, double R) {
    const double a = 0.5 * R, b = 0.75 * R;
    const double vol_b = unit_ball_volume(n) * std::pow(delta, n);
    const double vol_a = unit_ball_volume(n) * (std::pow(b, n) - std::pow(a, n));
    const double bump_overlap = ball_lens_volume(n, delta, delta, lambda);
    const double ann_overlap = annulus_overlap(n, a, b, lambda);
    return 2.0 - bump_overlap / vol_b - ann_overlap / vol_a;
}

// ---- field sampling ----

namespace {

struct Window {
    double x_lo, x_hi, rho_hi;
};

// radius beyond which U(r) <= s: U <= (1/2) c_n r^{2-n}
double window_radius(const BallGeometry& g, double s) {
    const double r = std::pow(2.0 * s / g.c_n, -1.0 / (g.n - 2));
    return std::min(r, g.R);
}

std::vector<CellSample> sample_window(const AxisymmetricField& f, const Window& w,
                                      double dx, double floor, bool positive_only) {
    const int n = f.geom.n;
    const double sigma = unit_sphere_measure(n - 1);
    const int nx = std::max(2, int(std::ceil((w.x_hi - w.x_lo) / dx)));
    const int nr = std::max(2, int(std::ceil(w.rho_hi / dx)));
    const double hx = (w.x_hi - w.x_lo) / nx;
    const double hr = w.rho_hi / nr;
    std::vector<CellSample> cells;
    cells.reserve(size_t(nx) * nr / 4);
    for (int i = 0; i < nx; ++i) {
        const double x = w.x_lo + (i + 0.5) * hx;
        for (int j = 0; j < nr; ++j) {
            const double rlo = j * hr, rhi = (j + 1) * hr;
            const double rho = 0.5 * (rlo + rhi);
            const double v = f.value(x, rho);
            const double av = positive_only ? v : std::abs(v);
            if (av <= floor) continue;
            const double measure =
                sigma * (std::pow(rhi, n - 1) - std::pow(rlo, n - 1)) / (n - 1) * hx;
            cells.push_back({av, measure});
        }
    }
    return cells;
}

std::vector<CellSample> sample_field(const AxisymmetricField& f, const FieldGrid& grid,
                                     int cells_per_delta, bool positive_only) {
    if (!(grid.value_floor > 0.0))
        throw std::domain_error("field_rearrangement: value_floor must be > 0");
    const double rw = window_radius(f.geom, grid.value_floor) * grid.window_pad;
    const double dx = f.delta / cells_per_delta;
    const Window w1{-rw, rw, rw};
    auto cells = sample_window(f, w1, dx, grid.value_floor, positive_only);
    if (!positive_only) {
        const Window w2{f.lambda - rw, f.lambda + rw, rw};
        auto more = sample_window(f, w2, dx, grid.value_floor, false);
        cells.insert(cells.end(), more.begin(), more.end());
    }
    return cells;
}

} // namespace

double FieldRearrangement::res_tol_at(double t) const {
    if (t <= 0.0 || t > t_valid) return kInf;
    const double a = profile.value(t);
    const double b = t <= coarse.total_measure ? coarse.value(t) : 0.0;
    return std::abs(a - b);
}

FieldRearrangement field_rearrangement(const AxisymmetricField& field,
                                       const FieldGrid& grid) {
    FieldRearrangement out;
    out.under_resolved = grid.cells_per_delta < 32;
    const auto fine = sample_field(field, grid, grid.cells_per_delta, false);
    const auto coarse = sample_field(field, grid, grid.cells_per_delta / 2, false);
    out.profile = decreasing_rearrangement(fine);
    out.coarse = decreasing_rearrangement(coarse);
    out.t_valid = out.profile.total_measure;
    return out;
}

double field_positive_superlevel(const AxisymmetricField& field, const FieldGrid& grid,
                                 double s) {
    const auto cells = sample_field(field, grid, grid.cells_per_delta, true);
    return distribution_function(cells, s);
}

double sharpness_ratio(const MonotoneProfile& u_star, double t, double V_domain,
                       double l1, int n) {
    if (!(l1 > 0.0)) throw std::domain_error("sharpness_ratio: l1 must be > 0");
    if (!(t > 0.0) || (!std::isinf(V_domain) && t > V_domain * (1.0 + 1e-14)))
        throw std::domain_error("sharpness_ratio: t outside (0, V]");
    const double N = std::isinf(V_domain) ? green_rearranged_infinite(n, t)
                                          : green_rearranged(n, V_domain, t);
    return u_star.value(t) / (N * l1);
}

} // namespace rearr
