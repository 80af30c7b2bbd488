#pragma once

#include "rearr/radial_profile.hpp"

namespace rearr {

/// omega int_a^b N_{B_R}(r) r^{n-1} dr = int_{a <= |y| <= b} N_{B_R}(|y|) dy,
/// in closed form. Requires 0 <= a <= b <= R.
double integrate_green_shell(const BallGeometry& geom, double a, double b);

/// Solve -Delta v = f on the ball with v = 0 on the boundary, for radial
/// data f, via
///   v(rho) = N(rho) int_{|y|<rho} f + int_{rho<|y|<R} N(|y|) f(y) dy.
/// Piecewise-constant data produce closed-form segments
///   a0 + a_kernel N(rho) - (f_j / 2n) rho^2
/// exactly; other data fall back to quadrature-backed evaluation.
/// Interior continuity of v is checked post-solve (1e-11 relative).
RadialProfile solve_radial(const BallGeometry& geom, const RadialProfile& f);

} // namespace rearr
