#pragma once

#include <cmath>
#include <stdexcept>

namespace rearr {

/// Geometry of a centered ball in R^n together with the dimensional
/// constants used by the kernel formulas.
///
/// omega     surface measure of the unit sphere, 2 pi^{n/2} / Gamma(n/2)
/// c_n       1 / ((n-2) omega), only for n >= 3
/// alpha_n   (n-2) n^{(n-2)/n} omega^{2/n}, only for n >= 3; normalized so
///           that the kernel rearrangement and its distribution function are
///           exact inverses of each other.
struct BallGeometry {
    int n = 0;
    double R = 0.0;
    double V = 0.0;
    double omega = 0.0;
    double c_n = 0.0;
    double alpha_n = 0.0;

    static BallGeometry from_radius(int n, double R);
    static BallGeometry from_volume(int n, double V);

    /// Volume of the centered ball of radius r.
    double volume_of_radius(double r) const;
    /// Radius of the centered ball of volume t.
    double radius_of_volume(double t) const;
};

/// Surface measure of the unit sphere S^{n-1} in R^n.
double unit_sphere_measure(int n);

/// Volume of the unit ball in R^n (= unit_sphere_measure(n) / n).
double unit_ball_volume(int n);

/// (n-2)/n, the decay exponent of the kernel rearrangement for n >= 3.
inline double weak_exponent(int n) { return double(n - 2) / double(n); }

} // namespace rearr
