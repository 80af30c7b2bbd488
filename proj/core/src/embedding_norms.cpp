#include "rearr/embedding_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rearr {

static constexpr double kInf = std::numeric_limits<double>::infinity();

namespace {

struct Weight {
    bool lexp = true;
    double V = 1.0;
    double beta = 0.0;  // (n-2)/n for the weak weight

    double apply(double v, double t) const {
        return lexp ? v / (1.0 + std::log(V / t)) : v * std::pow(t, beta);
    }
};

// leading power exponent E (u ~ c t^{-E}) and log coefficient of a form
struct Leading {
    double E = 0.0;
    double coeff = 0.0;      // coefficient at t^{-E} when E > 0
    double log_coeff = 0.0;  // total coefficient of log(1/t)
};

Leading analytic_leading(const AnalyticForm& f) {
    Leading L;
    auto add_power = [&](double c, double e) {
        if (e > L.E + 1e-15) {
            L.E = e;
            L.coeff = c;
        } else if (std::abs(e - L.E) <= 1e-15 && L.E > 0.0) {
            L.coeff += c;
        }
    };
    for (const auto& p : f.powers)
        if (p.coeff != 0.0 && p.expnt < 0.0) add_power(p.coeff, -p.expnt);
    L.log_coeff = f.c_log;
    if (f.c_kernel != 0.0) {
        if (f.kernel_n == 2)
            L.log_coeff += f.c_kernel / (4.0 * M_PI);
        else
            add_power(f.c_kernel * green_infinite_coefficient(f.kernel_n),
                      weak_exponent(f.kernel_n));
    }
    return L;
}

// sup contribution of t -> 0+
double limit_at_zero(const MonotoneProfile& u, const Weight& w) {
    if (u.segments.empty()) return 0.0;
    const Segment& s0 = u.segments.front();
    if (s0.t_lo > 0.0) return 0.0;
    if (s0.kind == SegmentKind::analytic) {
        const Leading L = analytic_leading(s0.form);
        if (w.lexp) {
            if (L.E > 0.0) return kInf;
            return L.log_coeff;
        }
        if (L.E > w.beta + 1e-15) return kInf;
        if (L.E > w.beta - 1e-15 && L.E > 0.0) return L.coeff;
        return 0.0;
    }
    switch (u.small_t.cls) {
        case SmallTClass::bounded:
        case SmallTClass::slow_growth:
            return 0.0;
        case SmallTClass::log_growth:
            return w.lexp ? u.small_t.coeff : 0.0;
        case SmallTClass::power_growth:
            if (w.lexp) return kInf;
            if (u.small_t.expnt > w.beta + 1e-15) return kInf;
            if (u.small_t.expnt > w.beta - 1e-15) return u.small_t.coeff;
            return 0.0;
        default: {
            // no classification: report the weighted value at the smallest
            // representable grid point
            const double t = s0.t_hi * 1e-30;
            return w.apply(s0.value(t), t);
        }
    }
}

double weighted_sup(const MonotoneProfile& u, const Weight& w) {
    if (u.segments.empty()) return 0.0;
    double best = limit_at_zero(u, w);
    if (best == kInf) return kInf;
    const int K = 200;
    for (const auto& s : u.segments) {
        const double b = std::min(s.t_hi, w.V);
        double a = std::max(s.t_lo, 0.0);
        if (!(b > a)) continue;
        const double start = (a > 0.0) ? a : b * 1e-30;
        // log-spaced scan plus golden refinement around the best sample
        double f_best = -kInf;
        double t_best = start;
        const double span = std::log(b / start);
        for (int i = 0; i <= K; ++i) {
            const double t = start * std::exp(span * double(i) / K);
            const double v = w.apply(s.value(t), t);
            if (v > f_best) {
                f_best = v;
                t_best = t;
            }
        }
        best = std::max(best, f_best);
        const double step = std::exp(span / K);
        double lo = std::max(start, t_best / step), hi = std::min(b, t_best * step);
        const double gr = 0.6180339887498949;
        double x1 = lo * std::pow(hi / lo, 1.0 - gr);
        double x2 = lo * std::pow(hi / lo, gr);
        double f1 = w.apply(s.value(x1), x1);
        double f2 = w.apply(s.value(x2), x2);
        for (int i = 0; i < 80 && hi > lo * (1.0 + 1e-14); ++i) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo * std::pow(hi / lo, gr);
                f2 = w.apply(s.value(x2), x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = lo * std::pow(hi / lo, 1.0 - gr);
                f1 = w.apply(s.value(x1), x1);
            }
            best = std::max({best, f1, f2});
        }
    }
    return best;
}

} // namespace

double lexp_quasi_norm(const MonotoneProfile& u_star, double V) {
    return weighted_sup(u_star, Weight{true, V, 0.0});
}

double lexp_norm(const MonotoneProfile& u_star, double V) {
    return weighted_sup(maximal_function(u_star), Weight{true, V, 0.0});
}

double weak_quasi_norm(const MonotoneProfile& u_star, int n, double V) {
    if (n < 3) throw std::domain_error("weak_quasi_norm: requires n >= 3");
    return weighted_sup(u_star, Weight{false, V, weak_exponent(n)});
}

double weak_norm(const MonotoneProfile& u_star, int n, double V) {
    if (n < 3) throw std::domain_error("weak_norm: requires n >= 3");
    return weighted_sup(maximal_function(u_star), Weight{false, V, weak_exponent(n)});
}

double lq_norm(const MonotoneProfile& u_star, double q) {
    if (!(q >= 1.0)) throw std::domain_error("lq_norm: q must be >= 1");
    if (u_star.segments.empty()) return 0.0;
    // divergence at t -> 0
    const Segment& s0 = u_star.segments.front();
    double E = 0.0;
    if (s0.kind == SegmentKind::analytic && s0.t_lo == 0.0) {
        E = analytic_leading(s0.form).E;
    } else if (u_star.small_t.cls == SmallTClass::power_growth) {
        E = u_star.small_t.expnt;
    }
    if (q * E >= 1.0) return kInf;

    double acc = 0.0;
    for (const auto& s : u_star.segments) {
        const double a = s.t_lo, b = std::min(s.t_hi, u_star.total_measure);
        if (!(b > a)) continue;
        const bool pure_step = s.kind == SegmentKind::analytic &&
                               s.form.c_kernel == 0.0 && s.form.c_log == 0.0 &&
                               s.form.powers.empty();
        if (pure_step) {
            acc += std::pow(std::abs(s.form.c0), q) * (b - a);
        } else {
            acc += tanh_sinh(
                [&](double t, double) { return std::pow(std::abs(s.value(t)), q); },
                a, b, 1e-13);
        }
    }
    return std::pow(acc, 1.0 / q);
}

double exp_integral(const MonotoneProfile& u_star, double alpha, double l1, double V) {
    if (!(alpha > 0.0)) throw std::domain_error("exp_integral: alpha must be > 0");
    if (!(l1 > 0.0)) throw std::domain_error("exp_integral: l1 must be > 0");
    if (u_star.segments.empty()) return V;

    // divergence test at t -> 0: power growth always diverges, log growth
    // diverges once the induced power of V/t reaches 1
    const Segment& s0 = u_star.segments.front();
    if (s0.t_lo == 0.0) {
        if (s0.kind == SegmentKind::analytic) {
            const Leading L = analytic_leading(s0.form);
            if (L.E > 0.0) return kInf;
            if (alpha * L.log_coeff / l1 >= 1.0) return kInf;
        } else {
            switch (u_star.small_t.cls) {
                case SmallTClass::power_growth: return kInf;
                case SmallTClass::log_growth:
                    if (alpha * u_star.small_t.coeff / l1 >= 1.0) return kInf;
                    break;
                case SmallTClass::unknown:
                case SmallTClass::slow_growth:
                case SmallTClass::bounded:
                    break;
            }
        }
    }

    double acc = 0.0;
    double covered = 0.0;
    for (const auto& s : u_star.segments) {
        const double a = s.t_lo, b = std::min(s.t_hi, V);
        if (!(b > a)) continue;
        covered = std::max(covered, b);
        if (s.kind == SegmentKind::analytic) {
            const auto& f = s.form;
            bool linear_only = true;
            double c1 = 0.0;
            for (const auto& p : f.powers) {
                if (p.coeff == 0.0) continue;
                if (p.expnt == 1.0)
                    c1 += p.coeff;
                else if (p.expnt == 0.0)
                    c1 += 0.0;  // folded below via value at constant
                else
                    linear_only = false;
            }
            if (linear_only) {
                double c_const = f.c0;
                for (const auto& p : f.powers)
                    if (p.expnt == 0.0) c_const += p.coeff;
                double p_log = 0.0, log_A = alpha * c_const / l1;
                if (f.c_kernel != 0.0 && f.kernel_n == 2) {
                    p_log += alpha * f.c_kernel / (4.0 * M_PI * l1);
                    log_A += alpha * f.c_kernel / (4.0 * M_PI * l1) * std::log(f.kernel_V);
                } else if (f.c_kernel != 0.0) {
                    linear_only = false;  // power-law kernel: handled by quadrature
                }
                if (f.c_log != 0.0) {
                    p_log += alpha * f.c_log / l1;
                    log_A += alpha * f.c_log / l1 * std::log(f.log_ref);
                }
                if (linear_only) {
                    const double bcoef = alpha * c1 / l1;
                    if (bcoef == 0.0) {
                        // int A t^{-p}
                        if (a == 0.0 && p_log >= 1.0) return kInf;
                        if (std::abs(p_log - 1.0) < 1e-14) {
                            acc += std::exp(log_A) * std::log(b / std::max(a, 1e-300));
                        } else {
                            auto F = [&](double t) {
                                return t == 0.0 ? 0.0
                                                : std::exp(log_A + (1.0 - p_log) * std::log(t)) /
                                                      (1.0 - p_log);
                            };
                            if (a == 0.0 && p_log > 1.0) return kInf;
                            acc += F(b) - F(a);
                        }
                        continue;
                    }
                    if (p_log == 0.0) {
                        acc += std::exp(log_A) * (std::exp(bcoef * b) - std::exp(bcoef * a)) / bcoef;
                        continue;
                    }
                }
            }
            // mixed forms: bounded away from the handled singular cases
            acc += tanh_sinh(
                [&](double t, double) { return std::exp(alpha * s.form(t) / l1); }, a, b,
                1e-12);
        } else {
            acc += tanh_sinh(
                [&](double t, double) { return std::exp(alpha * s.eval(t) / l1); }, a, b,
                1e-12);
        }
    }
    if (V > covered) acc += V - covered;  // u* = 0 there, integrand = 1
    return acc;
}

double mazya_constant(int n, double q, double V) {
    if (n < 3) throw std::domain_error("mazya_constant: requires n >= 3");
    const double q_crit = double(n) / double(n - 2);
    if (!(q >= 1.0) || !(q < q_crit))
        throw std::domain_error("mazya_constant: q outside [1, n/(n-2))");
    const double inv_beta = q_crit;  // 1/beta = n/(n-2)
    const double bracket = std::exp(std::lgamma(inv_beta - q) + std::lgamma(q + 1.0) -
                                    std::lgamma(inv_beta));
    return green_infinite_coefficient(n) * std::pow(bracket, 1.0 / q) *
           std::pow(V, 1.0 / q - weak_exponent(n));
}

double mazya_constant_compact(int n, double q, double V) {
    return std::pow(2.0, -2.0 / (q * n)) * mazya_constant(n, q, V);
}

} // namespace rearr
