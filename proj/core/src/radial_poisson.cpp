#include "rearr/radial_poisson.hpp"

#include <cmath>
#include <memory>

#include "rearr/quadrature.hpp"

namespace rearr {

double integrate_green_shell(const BallGeometry& geom, double a, double b) {
    if (a < 0.0 || b < a || b > geom.R * (1.0 + 1e-12))
        throw std::domain_error("integrate_green_shell: need 0 <= a <= b <= R");
    auto P = [&](double rho) {
        if (rho == 0.0) return 0.0;
        if (geom.n == 2)
            return 0.5 * rho * rho * std::log(geom.R / rho) + 0.25 * rho * rho;
        return geom.omega * geom.c_n *
               (0.5 * rho * rho -
                std::pow(geom.R, 2.0 - geom.n) * std::pow(rho, double(geom.n)) / geom.n);
    };
    return P(std::min(b, geom.R)) - P(a);
}

static bool piecewise_constant(const RadialProfile& f) {
    for (const auto& s : f.segments)
        if (s.generic || s.form.a_kernel != 0.0 || !s.form.powers.empty()) return false;
    return true;
}

static void check_continuity(const RadialProfile& v) {
    auto eval = [&](const RadialSegment& s, double r) {
        double x = s.form.a0;
        if (s.form.a_kernel != 0.0) x += s.form.a_kernel * green_radial(v.geom, r);
        for (const auto& p : s.form.powers) x += p.coeff * std::pow(r, p.expnt);
        return x;
    };
    double scale = 1e-300;
    for (const auto& s : v.segments)
        if (!s.generic && s.r_hi > 0.0)
            scale = std::max(scale, std::abs(eval(s, s.r_hi)));
    for (size_t i = 0; i + 1 < v.segments.size(); ++i) {
        const double r = v.segments[i].r_hi;
        if (!(r > 0.0)) continue;
        const auto& a = v.segments[i];
        const auto& b = v.segments[i + 1];
        if (a.generic || b.generic) continue;
        if (std::abs(eval(a, r) - eval(b, r)) > 1e-11 * scale)
            throw std::logic_error("solve_radial: discontinuity across segment boundary");
    }
}

RadialProfile solve_radial(const BallGeometry& geom, const RadialProfile& f) {
    RadialProfile v;
    v.geom = geom;
    if (f.segments.empty()) return v;

    if (piecewise_constant(f)) {
        const size_t m = f.segments.size();
        std::vector<double> mass(m);       // shell masses
        std::vector<double> green_mom(m);  // int_shell N dvol
        double mass_scale = 0.0;
        for (size_t j = 0; j < m; ++j) {
            const auto& s = f.segments[j];
            const double shell_vol =
                geom.volume_of_radius(s.r_hi) - geom.volume_of_radius(s.r_lo);
            mass[j] = s.form.a0 * shell_vol;
            green_mom[j] = s.form.a0 * integrate_green_shell(geom, s.r_lo, s.r_hi);
            mass_scale += std::abs(mass[j]);
        }
        double cum_mass = 0.0;
        std::vector<double> tail(m + 1, 0.0);  // tail[j] = sum_{l >= j} green_mom[l]
        for (size_t j = m; j-- > 0;) tail[j] = tail[j + 1] + green_mom[j];

        for (size_t j = 0; j < m; ++j) {
            const auto& s = f.segments[j];
            const double fj = s.form.a0;
            RadialSegment out;
            out.r_lo = s.r_lo;
            out.r_hi = s.r_hi;
            double a_k = cum_mass - fj * geom.volume_of_radius(s.r_lo);
            // cancel roundoff residue so zero-mean data keep exact compact support
            if (fj == 0.0 && tail[j + 1] == 0.0 && std::abs(a_k) <= 1e-12 * mass_scale)
                a_k = 0.0;
            out.form.a_kernel = a_k;
            out.form.a0 = tail[j + 1] + fj * integrate_green_shell(geom, 0.0, s.r_hi);
            if (fj != 0.0)
                out.form.powers.push_back({-fj / (2.0 * geom.n), 2.0});
            v.segments.push_back(std::move(out));
            cum_mass += mass[j];
        }
        check_continuity(v);
        return v;
    }

    // general data: quadrature-backed evaluation of the representation
    auto fp = std::make_shared<RadialProfile>(f);
    const BallGeometry g = geom;
    RadialSegment s;
    s.r_lo = 0.0;
    s.r_hi = geom.R;
    s.generic = true;
    s.eval = [fp, g](double rho) {
        const double M = radial_volume_integral(*fp, 0.0, rho);
        const double T = tanh_sinh(
            [&](double r, double) {
                return green_radial(g, r) * fp->value(r) * g.omega *
                       std::pow(r, g.n - 1.0);
            },
            rho, g.R, 1e-11);
        return green_radial(g, rho) * M + T;
    };
    v.segments.push_back(std::move(s));
    return v;
}

} // namespace rearr
