#include "rearr/geometry.hpp"

namespace rearr {

double unit_sphere_measure(int n) {
    if (n < 1) throw std::domain_error("unit_sphere_measure: n must be >= 1");
    const double pi = M_PI;
    return 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double unit_ball_volume(int n) { return unit_sphere_measure(n) / n; }

static BallGeometry make(int n, double R) {
    if (n < 2) throw std::domain_error("BallGeometry: dimension must be >= 2");
    if (!(R > 0.0)) throw std::domain_error("BallGeometry: radius must be positive");
    BallGeometry g;
    g.n = n;
    g.R = R;
    g.omega = unit_sphere_measure(n);
    g.V = g.omega * std::pow(R, n) / n;
    if (n >= 3) {
        g.c_n = 1.0 / ((n - 2) * g.omega);
        g.alpha_n = (n - 2) * std::pow(double(n), double(n - 2) / n) *
                    std::pow(g.omega, 2.0 / n);
    } else {
        g.c_n = std::nan("");
        g.alpha_n = std::nan("");
    }
    return g;
}

BallGeometry BallGeometry::from_radius(int n, double R) { return make(n, R); }

BallGeometry BallGeometry::from_volume(int n, double V) {
    if (!(V > 0.0)) throw std::domain_error("BallGeometry: volume must be positive");
    const double omega = unit_sphere_measure(n);
    return make(n, std::pow(n * V / omega, 1.0 / n));
}

double BallGeometry::volume_of_radius(double r) const {
    return omega * std::pow(r, n) / n;
}

double BallGeometry::radius_of_volume(double t) const {
    return std::pow(n * t / omega, 1.0 / n);
}

} // namespace rearr
