#pragma once

#include "rearr/geometry.hpp"

namespace rearr {

/// Radial profile of the Dirichlet Green function of the Laplacian on the
/// centered ball of radius R, pole at the origin:
///   n >= 3:  c_n (r^{2-n} - R^{2-n})
///   n  = 2:  log(R/r) / (2 pi)
/// Returns +infinity at r = 0; throws for r outside (0, R].
double green_radial(const BallGeometry& geom, double r);

/// Decreasing rearrangement N_V^*(t) of the kernel above, as a function of
/// the measure t in (0, V]:
///   n >= 3:  c_n (omega/n)^{(n-2)/n} (t^{-(n-2)/n} - V^{-(n-2)/n})
///   n  = 2:  log(V/t) / (4 pi)
double green_rearranged(int n, double V, double t);
double green_rearranged(const BallGeometry& geom, double t);

/// V -> infinity limit of green_rearranged, a pure power law. n >= 3 only.
double green_rearranged_infinite(int n, double t);

/// Coefficient c_n (omega/n)^{(n-2)/n} of the power law above.
double green_infinite_coefficient(int n);

/// Running average (1/t) int_0^t N_V^*:
///   n >= 3:  c_n (omega/n)^{(n-2)/n} ((n/2) t^{-(n-2)/n} - V^{-(n-2)/n})
///   n  = 2:  (1 + log(V/t)) / (4 pi)
double green_maximal(int n, double V, double t);

/// Distribution function lambda_V(s) = |{t > 0 : N_V^*(t) > s}|:
///   n  = 2:  V e^{-4 pi s}
///   n >= 3:  min(V, (alpha_n s + V^{-(n-2)/n})^{-n/(n-2)})
double green_distribution(int n, double V, double s);

/// lambda_{V1}(s) + lambda_{V-V1}(s). Constant in V1 for n = 2; for n >= 3
/// maximized at the even split V1 = V/2.
double split_distribution_sum(int n, double V, double s, double V1);

} // namespace rearr
