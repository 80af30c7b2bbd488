#pragma once

#include <functional>
#include <stdexcept>

namespace rearr {

/// Thrown when an integral or series fails to converge to a finite value.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tanh-sinh (double-exponential) quadrature on (a, b). Tolerates integrable
/// endpoint singularities. The integrand is called as f(x, d) where x is the
/// abscissa and d its distance to the nearer endpoint, computed without
/// cancellation; singular integrands should use d.
double tanh_sinh(const std::function<double(double x, double d)>& f, double a,
                 double b, double abs_tol = 1e-12);

/// Convenience overload for integrands that only need the abscissa.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

/// Fixed-order Gauss-Legendre rule on [a, b] (16 nodes). For smooth
/// integrands over short cells.
double gauss16(const std::function<double(double)>& f, double a, double b);

} // namespace rearr
