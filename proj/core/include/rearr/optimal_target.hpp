#pragma once

#include <memory>

#include "rearr/profile.hpp"

namespace rearr {

/// Verdict on the vanishing-at-zero condition u**(t)/N^*(t) -> 0 that cuts
/// the optimal target space out of the Zygmund / weak-Lebesgue class.
struct MembershipVerdict {
    std::vector<std::pair<double, double>> defect_curve;  // (t, u**(t)/N^*(t))
    double limit_defect = 0.0;  // limsup estimate at t -> 0
    bool member = false;
    bool analytic = false;  // verdict from an exact small-t classification
};

/// Defect curve on a geometric grid of (0, t0] plus the t -> 0 verdict.
/// Closed-form and classified profiles get the exact limit; unclassified
/// data fall back to the trend rule: defect below `threshold` at the
/// smallest grid point and decreasing over the last two decades.
MembershipVerdict target_defect(const MonotoneProfile& u_star, int n, double V,
                                double t0, double threshold = 1e-3,
                                int grid_points = 240, double t_min_rel = 1e-12);

/// The increasing weighted average k and its density h = k' built from the
/// running envelope of the defect ratio, with weight m(t) = log(V_B / t).
/// mass_to(t) = int_0^t h = k(t) - k0 exactly (closed form per grid cell).
struct MajorantConstruction {
    int n = 0;
    double V_B = 0.0;
    std::vector<double> grid;   // envelope nodes on (0, V_B]
    std::vector<double> f_env;  // running envelope values (non-decreasing)
    /// Limit of k at 0: the limsup of the defect ratio. Exact (0 for
    /// members) when the input's small-t behavior is classified; the
    /// envelope is understood to decay accordingly below the grid.
    double k0 = 0.0;

    double f_at(double t) const;  // piecewise-linear envelope
    double k_at(double t) const;
    double h_at(double t) const;  // exact derivative of the representation
    double mass_to(double t) const { return k_at(t) - k0; }
};

/// Builds the envelope from g = u0**/N^* (switching to u0*/N^* past the
/// freeze point, where the averaged ratio is no longer informative) and the
/// weighted average k. Throws std::domain_error for non-member input when
/// require_member is set.
MajorantConstruction majorant_density(const MonotoneProfile& u0, int n, double V_B,
                                      int grid_points = 1000, double t_min_rel = 1e-10,
                                      bool require_member = true,
                                      double member_threshold = 1e-3);

/// Radial solve with data h on the ball of volume V_B, balanced on the
/// double ball: data = h on (0, V_B], zero gap, a negative constant on the
/// annulus (measures |B_{4R/3}|, |B_{5R/3}|), zero outer shell. All in
/// measure coordinates.
struct MajorantPotential {
    int n = 0;
    double V_B = 0.0, V2 = 0.0;
    double t43 = 0.0, t53 = 0.0;  // annulus bounds in measure
    double C = 0.0;               // kernel mass of the balancing annulus
    double k_total = 0.0;         // int_0^{V_B} h

    double v0_star(double t) const;  // inner-ball solution, (0, V_B]
    double v_star(double t) const;   // balanced double-ball solution, (0, V2]
    double data_integral() const;    // total integral of the balanced data

    // cached construction state
    std::shared_ptr<const MajorantConstruction> mc;
    std::vector<double> tail_inner;   // int_{grid[i]}^{V_B} N^*_{V_B} h
    std::vector<double> tail_double;  // int_{grid[i]}^{V_B} N^*_{V2} h
};

MajorantPotential majorant_potential(const MajorantConstruction& mc);

struct DominationRow {
    double t, u_star, bound;
};

/// Full chain u* <= v* + C + lambda + N^*(t) * limsup-term, via truncation
/// at the level filling half the working ball, the envelope density, and
/// the balanced double-ball potential. Works for members (limsup term ~ 0)
/// and for general kernel-class profiles.
struct DominationReport {
    bool ok = false;
    double worst_margin = 0.0;  // min over the grid of bound - u*
    double lambda_level = 0.0;
    double C = 0.0;
    double limsup_term = 0.0;
    std::vector<DominationRow> rows;
};

DominationReport extended_domination(const MonotoneProfile& u, int n,
                                     int grid_points = 400, double tol = 1e-9);

} // namespace rearr
