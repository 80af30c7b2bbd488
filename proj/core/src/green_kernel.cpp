#include "rearr/green_kernel.hpp"

#include <limits>

namespace rearr {

double green_radial(const BallGeometry& geom, double r) {
    if (r < 0.0 || r > geom.R * (1.0 + 1e-14))
        throw std::domain_error("green_radial: r outside (0, R]");
    if (r == 0.0) return std::numeric_limits<double>::infinity();
    if (geom.n == 2) return std::log(geom.R / r) / (2.0 * M_PI);
    return geom.c_n * (std::pow(r, 2 - geom.n) - std::pow(geom.R, 2 - geom.n));
}

double green_rearranged(int n, double V, double t) {
    if (!(t > 0.0) || t > V * (1.0 + 1e-14))
        throw std::domain_error("green_rearranged: t outside (0, V]");
    if (n == 2) return std::log(V / t) / (4.0 * M_PI);
    const double beta = weak_exponent(n);
    return green_infinite_coefficient(n) * (std::pow(t, -beta) - std::pow(V, -beta));
}

double green_rearranged(const BallGeometry& geom, double t) {
    return green_rearranged(geom.n, geom.V, t);
}

double green_infinite_coefficient(int n) {
    if (n < 3) throw std::domain_error("green_infinite_coefficient: requires n >= 3");
    const double omega = unit_sphere_measure(n);
    const double c_n = 1.0 / ((n - 2) * omega);
    return c_n * std::pow(omega / n, weak_exponent(n));
}

double green_rearranged_infinite(int n, double t) {
    if (n < 3)
        throw std::domain_error("green_rearranged_infinite: no finite limit for n = 2");
    if (!(t > 0.0)) throw std::domain_error("green_rearranged_infinite: t must be > 0");
    return green_infinite_coefficient(n) * std::pow(t, -weak_exponent(n));
}

double green_maximal(int n, double V, double t) {
    if (!(t > 0.0) || t > V * (1.0 + 1e-14))
        throw std::domain_error("green_maximal: t outside (0, V]");
    if (n == 2) return (1.0 + std::log(V / t)) / (4.0 * M_PI);
    const double beta = weak_exponent(n);
    return green_infinite_coefficient(n) *
           (0.5 * n * std::pow(t, -beta) - std::pow(V, -beta));
}

double green_distribution(int n, double V, double s) {
    if (s < 0.0) throw std::domain_error("green_distribution: s must be >= 0");
    if (n == 2) return V * std::exp(-4.0 * M_PI * s);
    const double beta = weak_exponent(n);
    const double omega = unit_sphere_measure(n);
    const double alpha_n =
        (n - 2) * std::pow(double(n), beta) * std::pow(omega, 2.0 / n);
    const double lam = std::pow(alpha_n * s + std::pow(V, -beta), -1.0 / beta);
    return std::min(V, lam);
}

double split_distribution_sum(int n, double V, double s, double V1) {
    if (V1 < 0.0 || V1 > V)
        throw std::domain_error("split_distribution_sum: V1 outside [0, V]");
    const double a = (V1 > 0.0) ? green_distribution(n, V1, s) : 0.0;
    const double b = (V - V1 > 0.0) ? green_distribution(n, V - V1, s) : 0.0;
    return a + b;
}

} // namespace rearr
