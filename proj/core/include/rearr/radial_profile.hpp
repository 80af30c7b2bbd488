#pragma once

#include <span>

#include "rearr/profile.hpp"

namespace rearr {

/// One power term a * rho^p on the radial axis.
struct RadialTerm {
    double coeff = 0.0;
    double expnt = 0.0;
};

/// Closed form on a radial interval:
///   value(rho) = a0 + a_kernel * N_{B_R}(rho) + sum_i a_i rho^{p_i}
struct RadialForm {
    double a0 = 0.0;
    double a_kernel = 0.0;
    std::vector<RadialTerm> powers;
};

struct RadialSegment {
    double r_lo = 0.0;
    double r_hi = 0.0;
    bool generic = false;
    RadialForm form;
    std::function<double(double)> eval;  // generic only
};

/// A piecewise-analytic radial function on the ball (0, R].
struct RadialProfile {
    BallGeometry geom;
    std::vector<RadialSegment> segments;

    double value(double rho) const;
    /// d/d rho, analytic segments only.
    double derivative(double rho) const;
    bool all_analytic() const;
};

/// Piecewise-constant radial data from (r_hi, value) shells; the first shell
/// starts at 0 and the last must end at R.
RadialProfile piecewise_constant_radial(const BallGeometry& geom,
                                        std::span<const std::pair<double, double>> shells);

/// Signed integral over the shell a <= |x| <= b (volume measure). Exact for
/// analytic segments.
double radial_volume_integral(const RadialProfile& f, double a, double b);

/// Integral of |f| over the ball.
double l1_norm(const RadialProfile& f);

/// (int f^+, int f^-).
std::pair<double, double> signed_mass_split(const RadialProfile& f);

/// Decreasing rearrangement of |f| on the measure axis (0, V]. Monotone
/// nonnegative profiles compose exactly into closed forms; the general case
/// uses an exact piecewise-monotone inversion behind a generic evaluator.
MonotoneProfile rearrange_radial(const RadialProfile& f);

/// u*(t) at each t of an increasing grid, via monotone inversion with warm
/// bracketing; exact to ~1e-14 relative for analytic segments.
std::vector<double> rearranged_values(const RadialProfile& f,
                                      std::span<const double> grid);

/// Measure of {|f| > s}.
double superlevel_measure(const RadialProfile& f, double s);

/// Measures of {|f| > s} for many levels, with the piecewise-monotone
/// decomposition built once.
std::vector<double> superlevel_measures(const RadialProfile& f,
                                        std::span<const double> levels);

/// sup |f| over the ball (from the monotone decomposition).
double radial_sup_abs(const RadialProfile& f);

/// Schwarz symmetrization: the radially non-increasing function on the ball
/// of geom equimeasurable with u_star. Requires matching total measure.
RadialProfile schwarz_profile(const MonotoneProfile& u_star, const BallGeometry& geom);

/// -Laplacian applied segment-wise (symbolic: kernel and constant terms drop,
/// powers map to p (p + n - 2) rho^{p-2}). Analytic segments only.
RadialProfile radial_laplacian_negated(const RadialProfile& v);

} // namespace rearr
