#pragma once

#include "rearr/radial_poisson.hpp"

namespace rearr {

/// Normalized bump data chi_{B_delta} / |B_delta| on the ball.
RadialProfile bump_data(const BallGeometry& geom, double delta);

/// Potential of the bump data: equals the ball kernel N_{B_R} outside the
/// bump, with a bounded quadratic core inside. Unit data mass.
RadialProfile bump_potential(const BallGeometry& geom, double delta);

/// Balanced data chi_{B_delta}/(2|B_delta|) - chi_{A}/(2|A|) with
/// A = {R - 2 eps < |x| < R - eps}; zero total integral.
RadialProfile balanced_data(const BallGeometry& geom, double delta, double eps);

/// Potential of the balanced data: (1/2) N - C(eps) on the middle range,
/// identically zero on [R - eps, R]. Unit data L1 mass.
RadialProfile balanced_potential(const BallGeometry& geom, double delta, double eps);

/// The subtracted constant C(eps): the averaged kernel over the annulus,
/// (1 / 2|A|) int_A N(|y|) dy. Tends to 0 with eps.
double balanced_shell_average(const BallGeometry& geom, double eps);

/// Difference of a compactly supported radial potential and its translate
/// along the first axis, evaluated in cylindrical coordinates.
struct AxisymmetricField {
    BallGeometry geom;  // component ball (radius R)
    double delta = 0.0;
    double lambda = 0.0;
    RadialProfile bump;  // potential of the balanced data with eps = R/4

    /// U(|x|) - U(|x - x_lambda|) at x = (x1, rho_perp, 0, ...).
    double value(double x1, double rho_perp) const;
};

/// Constraints: delta < min(1/2, R/2) and delta < lambda/2; lambda < R
/// unless relax_lambda is set (large-translation sweeps).
AxisymmetricField translated_pair(const BallGeometry& geom, double delta,
                                  double lambda, bool relax_lambda = false);

/// |A symdiff (x_lambda + A)| / |A| for the annulus A = {R/2 < |x| < 3R/4};
/// 0 at lambda = 0, 2 for disjoint translates.
double defect_l1(int n, double lambda, double R);

/// Exact L1 norm of the field's Laplacian data:
///   2 - lens(delta,delta,lambda)/|B_delta| - overlap_A(lambda)/|A|.
double translated_pair_data_l1(int n, double delta, double lambda, double R);

/// Volume of B(0, r1) intersected with B(lambda e1, r2) in R^n.
double ball_lens_volume(int n, double r1, double r2, double d);

/// Cylindrical sampling grid for the field around both bump centers.
struct FieldGrid {
    int cells_per_delta = 64;  // resolution across the bump radius
    double value_floor = 0.0;  // cells with |V| <= floor are dropped
    double window_pad = 1.25;  // widen the window beyond the floor radius
};

struct FieldRearrangement {
    MonotoneProfile profile;  // step rearrangement of the sampled field
    MonotoneProfile coarse;   // half resolution, for the tolerance estimate
    double t_valid = 0.0;     // profile is trustworthy for t <= t_valid
    bool under_resolved = false;

    double res_tol_at(double t) const;
};

/// Sample |V| on cylindrical cells (measure sigma_{n-2} rho^{n-2} drho dx1)
/// around both bumps and rearrange. Requires n >= 3. Marks the result
/// under-resolved when cells_per_delta < 32.
FieldRearrangement field_rearrangement(const AxisymmetricField& field,
                                       const FieldGrid& grid);

/// Grid measure of {V > s} restricted to the positive-bump window (the
/// antisymmetric partner carries the mirror measure).
double field_positive_superlevel(const AxisymmetricField& field, const FieldGrid& grid,
                                 double s);

/// u*(t) / (N^*(t) * l1). Pass V_domain = +infinity for the whole-space
/// kernel (n >= 3).
double sharpness_ratio(const MonotoneProfile& u_star, double t, double V_domain,
                       double l1, int n);

} // namespace rearr
