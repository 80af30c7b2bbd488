#include "rearr/optimal_target.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace rearr {

static constexpr double kInf = std::numeric_limits<double>::infinity();

MembershipVerdict target_defect(const MonotoneProfile& u_star, int n, double V,
                                double t0, double threshold, int grid_points,
                                double t_min_rel) {
    if (!(t0 > 0.0) || t0 > V * (1.0 + 1e-14))
        throw std::domain_error("target_defect: t0 outside (0, V]");
    MembershipVerdict verdict;
    const double t_hi = std::min(t0, V * (1.0 - 1e-12));
    const auto grid = geometric_grid(t_min_rel * t_hi, t_hi, grid_points);
    const auto cum = cumulative_on_grid(u_star, grid);
    verdict.defect_curve.reserve(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double ustar2 = cum[i] / t;
        verdict.defect_curve.emplace_back(t, ustar2 / green_rearranged(n, V, t));
    }

    const double exact = defect_limit(u_star, n);
    if (!std::isnan(exact)) {
        verdict.analytic = true;
        verdict.limit_defect = exact;
        verdict.member = exact < threshold;
        return verdict;
    }

    // trend rule: running sup over the last two decades must sit below the
    // threshold and the curve must have decreased across them
    double tail_sup = 0.0;
    double decade_ago = 0.0;
    const double t_small = grid.front();
    for (const auto& [t, d] : verdict.defect_curve) {
        if (t <= 100.0 * t_small) tail_sup = std::max(tail_sup, d);
        if (t > 10.0 * t_small && t <= 100.0 * t_small) decade_ago = std::max(decade_ago, d);
    }
    verdict.limit_defect = tail_sup;
    verdict.member = tail_sup < threshold &&
                     verdict.defect_curve.front().second <= decade_ago * (1.0 + 1e-12);
    return verdict;
}

// ---- envelope construction ----

double MajorantConstruction::f_at(double t) const {
    if (grid.empty()) return 0.0;
    if (t <= grid.front()) return f_env.front();
    if (t >= grid.back()) return f_env.back();
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const size_t i = size_t(it - grid.begin());
    const double w = (t - grid[i - 1]) / (grid[i] - grid[i - 1]);
    return f_env[i - 1] + w * (f_env[i] - f_env[i - 1]);
}

// I(t) = int_t^{V_B} f(s)/s ds with the piecewise-linear envelope; k = I/m
namespace {

double cell_integral(double s0, double s1, double f0, double f1, double lo, double hi) {
    // int_lo^hi (a + b s)/s ds on [s0, s1] with f linear between the nodes
    if (!(hi > lo)) return 0.0;
    const double b = (f1 - f0) / (s1 - s0);
    const double a = f0 - b * s0;
    return a * std::log(hi / lo) + b * (hi - lo);
}

} // namespace

double MajorantConstruction::k_at(double t) const {
    if (grid.empty()) return 0.0;
    const double m = std::log(V_B / t);
    if (m <= 1e-12) return f_env.back();
    double I = 0.0;
    // below the grid the envelope is frozen at f_env.front()
    const double g0 = grid.front();
    if (t < g0) I += f_env.front() * std::log(g0 / t);
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double lo = std::max(t, grid[i]);
        const double hi = grid[i + 1];
        if (hi <= lo) continue;
        I += cell_integral(grid[i], grid[i + 1], f_env[i], f_env[i + 1], lo, hi);
    }
    // above the top node the envelope is frozen at f_env.back()
    const double gt = grid.back();
    if (gt < V_B) I += f_env.back() * std::log(V_B / std::max(t, gt));
    return I / m;
}

double MajorantConstruction::h_at(double t) const {
    const double m = std::log(V_B / t);
    if (m <= 1e-9) {
        const double tt = V_B * (1.0 - 1e-9);
        const double mm = std::log(V_B / tt);
        return (k_at(tt) - f_at(tt)) / (tt * mm);
    }
    return (k_at(t) - f_at(t)) / (t * m);
}

MajorantConstruction majorant_density(const MonotoneProfile& u0, int n, double V_B,
                                      int grid_points, double t_min_rel,
                                      bool require_member, double member_threshold) {
    if (!(V_B > 0.0)) throw std::domain_error("majorant_density: V_B must be > 0");
    const double support = u0.total_measure;
    if (support > V_B * (1.0 + 1e-12))
        throw std::domain_error("majorant_density: support exceeds the working ball");

    MajorantConstruction mc;
    mc.n = n;
    mc.V_B = V_B;
    if (u0.segments.empty() || support <= 0.0) {
        mc.grid = {V_B * 1e-10, V_B};
        mc.f_env = {0.0, 0.0};
        mc.k0 = 0.0;
        return mc;
    }
    if (require_member) {
        const auto verdict = target_defect(u0, n, V_B, std::min(support, V_B) * 0.5,
                                           member_threshold);
        if (!verdict.member)
            throw std::domain_error(
                "majorant_density: input is not in the vanishing-defect class");
    }

    // averaged ratio up to the freeze point, plain ratio past it
    const double t_freeze = 0.5 * std::min(support, V_B);
    mc.grid = geometric_grid(t_min_rel * V_B, V_B * (1.0 - 1e-12), grid_points);
    mc.f_env.resize(mc.grid.size());
    std::vector<double> head;
    for (double t : mc.grid)
        if (t <= t_freeze) head.push_back(t);
    const auto cum = cumulative_on_grid(u0, head);
    double runner = 0.0;
    for (size_t i = 0; i < mc.grid.size(); ++i) {
        const double t = mc.grid[i];
        const double Nst = green_rearranged(n, V_B, t);
        double g;
        if (i < head.size()) {
            g = (cum[i] / t) / Nst;
        } else {
            const double us = t <= support ? std::max(u0.value(t), 0.0) : 0.0;
            g = us / Nst;
        }
        runner = std::max(runner, g);
        mc.f_env[i] = runner;
    }
    // Below the grid the envelope is extended by the classified decay of
    // the input, so the limit of k at 0 is the exact limsup defect (zero
    // for members) rather than the frozen value at the smallest node.
    mc.k0 = mc.f_env.front();
    const double exact = defect_limit(u0, n);
    if (!std::isnan(exact) && std::isfinite(exact)) mc.k0 = std::min(mc.k0, exact);
    return mc;
}

// ---- balanced potential on the double ball ----

namespace {

// int_a^b N^*_V(s) ds via the closed antiderivative
double kernel_mass(int n, double V, double a, double b) {
    AnalyticForm f;
    f.c_kernel = 1.0;
    f.kernel_n = n;
    f.kernel_V = V;
    return f.integral(a, b);
}

std::vector<double> suffix_tails(const MajorantConstruction& mc, int n, double V) {
    // tail[i] = int_{grid[i]}^{V_B} N^*_V(s) h(s) ds
    const auto& g = mc.grid;
    std::vector<double> tail(g.size(), 0.0);
    for (size_t i = g.size() - 1; i-- > 0;) {
        const double cell = gauss16(
            [&](double s) { return green_rearranged(n, V, s) * mc.h_at(s); }, g[i],
            g[i + 1]);
        tail[i] = tail[i + 1] + cell;
    }
    return tail;
}

double tail_at(const MajorantConstruction& mc, const std::vector<double>& tail, int n,
               double V, double t) {
    const auto& g = mc.grid;
    if (t >= g.back()) return 0.0;
    if (t <= g.front()) {
        // below the grid h integrates against the frozen envelope; the mass
        // there is k(g0) - k(t), bounded by N^*(t) * that mass
        const double extra = gauss16(
            [&](double s) { return green_rearranged(n, V, s) * mc.h_at(s); },
            std::max(t, g.front() * 1e-3), g.front());
        return tail.front() + extra;
    }
    const auto it = std::upper_bound(g.begin(), g.end(), t);
    const size_t i = size_t(it - g.begin());
    const double cell = gauss16(
        [&](double s) { return green_rearranged(n, V, s) * mc.h_at(s); }, t, g[i]);
    return tail[i] + cell;
}

} // namespace

double MajorantPotential::v0_star(double t) const {
    if (!(t > 0.0) || t > V_B * (1.0 + 1e-12))
        throw std::domain_error("v0_star: t outside (0, V_B]");
    const double tc = std::min(t, V_B);
    return green_rearranged(n, V_B, tc) * mc->mass_to(tc) +
           tail_at(*mc, tail_inner, n, V_B, tc);
}

double MajorantPotential::v_star(double t) const {
    if (!(t > 0.0) || t > V2 * (1.0 + 1e-12))
        throw std::domain_error("v_star: t outside (0, V2]");
    const double tc = std::min(t, V2);
    if (tc >= t53) return 0.0;
    const double N = green_rearranged(n, V2, tc);
    if (tc >= t43) {
        const double c_ann = k_total / (t53 - t43);
        const double M = c_ann * (t53 - tc);
        return N * M - c_ann * kernel_mass(n, V2, tc, t53);
    }
    const double annulus_term = (k_total / (t53 - t43)) * kernel_mass(n, V2, t43, t53);
    if (tc >= V_B) return N * k_total - annulus_term;
    return N * mc->mass_to(tc) + tail_at(*mc, tail_double, n, V2, tc) - annulus_term;
}

double MajorantPotential::data_integral() const {
    const double c_ann = k_total / (t53 - t43);
    return k_total - c_ann * (t53 - t43);
}

MajorantPotential majorant_potential(const MajorantConstruction& mc) {
    MajorantPotential mp;
    mp.n = mc.n;
    mp.V_B = mc.V_B;
    mp.V2 = std::pow(2.0, mc.n) * mc.V_B;  // ball of twice the radius
    mp.t43 = mc.V_B * std::pow(4.0 / 3.0, mc.n);
    mp.t53 = mc.V_B * std::pow(5.0 / 3.0, mc.n);
    mp.mc = std::make_shared<MajorantConstruction>(mc);
    mp.k_total = mc.k_at(mc.V_B) - mc.k0;
    mp.tail_inner = suffix_tails(mc, mc.n, mc.V_B);
    mp.tail_double = suffix_tails(mc, mc.n, mp.V2);
    mp.C = (mp.k_total / (mp.t53 - mp.t43)) * kernel_mass(mc.n, mp.V2, mp.t43, mp.t53);
    return mp;
}

DominationReport extended_domination(const MonotoneProfile& u, int n, int grid_points,
                                     double tol) {
    DominationReport rep;
    const double V_u = u.total_measure;
    if (!(V_u > 0.0)) {
        rep.ok = true;
        return rep;
    }
    const double V_B = 0.5 * V_u;  // working ball: half the domain measure
    rep.lambda_level = std::max(u.value(0.5 * V_B), 0.0);
    const MonotoneProfile u0 = shift_truncate(u, rep.lambda_level);

    const auto mc = majorant_density(u0, n, V_B, 600, 1e-10, /*require_member=*/false);
    rep.limsup_term = mc.k0;
    const auto mp = majorant_potential(mc);
    rep.C = mp.C;

    const auto grid = geometric_grid(1e-10 * V_u, V_u, grid_points);
    rep.ok = true;
    rep.worst_margin = kInf;
    rep.rows.reserve(grid.size());
    for (double t : grid) {
        const double us = u.value(t);
        const double vs = t <= mp.V2 ? mp.v_star(t) : 0.0;
        const double Nst = t <= V_B ? green_rearranged(n, V_B, t) : 0.0;
        const double bound = vs + rep.C + rep.lambda_level + Nst * mc.k0;
        rep.rows.push_back({t, us, bound});
        const double margin = bound - us;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (us > bound + tol * (std::abs(bound) + 1.0)) rep.ok = false;
    }
    return rep;
}

} // namespace rearr
