#pragma once

#include "rearr/profile.hpp"

namespace rearr {

enum class NormKind { lexp_quasi, lexp, weak_quasi, weak, lq, exp_integral };

struct NormResult {
    NormKind kind;
    double value = 0.0;
    double V = 0.0;
    double param = 0.0;  // q or alpha where applicable
};

/// sup_{0<t<=V} u*(t) / (1 + log(V/t)). Suprema include the analytic t -> 0
/// limit of closed-form leading segments; +infinity when the profile grows
/// faster than the kernel rate.
double lexp_quasi_norm(const MonotoneProfile& u_star, double V);

/// Same with u** in place of u*.
double lexp_norm(const MonotoneProfile& u_star, double V);

/// sup_{0<t<=V} t^{(n-2)/n} u*(t), n >= 3.
double weak_quasi_norm(const MonotoneProfile& u_star, int n, double V);

/// Same with u**.
double weak_norm(const MonotoneProfile& u_star, int n, double V);

/// (int_0^V (u*)^q dt)^{1/q}; exact for steps, quadrature otherwise.
/// Returns +infinity when the q-th power is not integrable.
double lq_norm(const MonotoneProfile& u_star, double q);

/// int_0^V exp(alpha u*(t) / l1) dt. Exact on kernel/log segments where the
/// integrand is a power of V/t; +infinity at or past the critical alpha.
double exp_integral(const MonotoneProfile& u_star, double alpha, double l1, double V);

/// Sharp L^q constant for the ball kernel,
///   c_n (omega/n)^{(n-2)/n} [Gamma(n/(n-2)-q) Gamma(q+1) / Gamma(n/(n-2))]^{1/q}
///   * V^{1/q - (n-2)/n},
/// for n >= 3, 1 <= q < n/(n-2). The Gamma bracket equals the exact
/// rescaled integral int_0^V (N_V^*)^q dt.
double mazya_constant(int n, double q, double V);

/// Compactly-supported variant: 2^{-2/(qn)} * mazya_constant.
double mazya_constant_compact(int n, double q, double V);

} // namespace rearr
