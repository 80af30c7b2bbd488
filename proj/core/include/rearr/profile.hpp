#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "rearr/green_kernel.hpp"
#include "rearr/quadrature.hpp"

namespace rearr {

/// One power term c * t^e.
struct PowerTerm {
    double coeff = 0.0;
    double expnt = 0.0;
};

/// Closed form on a measure-axis interval:
///   value(t) = c0 + c_kernel * N^*_{kernel_V}(t)
///            + c_log * log(log_ref / t) + sum_i c_i t^{e_i}
/// The kernel term evaluates through green_rearranged so that profiles built
/// from kernel data reproduce it bit for bit.
struct AnalyticForm {
    double c0 = 0.0;
    double c_kernel = 0.0;
    int kernel_n = 0;
    double kernel_V = 0.0;
    double c_log = 0.0;
    double log_ref = 1.0;
    std::vector<PowerTerm> powers;

    double operator()(double t) const;
    /// Antiderivative, normalized so that integrable terms vanish at 0.
    /// Throws divergence_error when a t^{-1} term is integrated from 0.
    double antiderivative(double t) const;
    double integral(double a, double b) const;
    bool bounded_at_zero() const;
    bool integrable_at_zero() const;
};

enum class SegmentKind { analytic, generic };

struct Segment {
    double t_lo = 0.0;
    double t_hi = 0.0;
    SegmentKind kind = SegmentKind::analytic;
    AnalyticForm form;
    std::function<double(double)> eval;  // generic only

    double value(double t) const;
};

enum class TailBehavior { zero_beyond_V, analytic_extension };

/// Classified behavior as t -> 0, used for membership limits and norm
/// suprema when a segment is not in closed form.
enum class SmallTClass {
    bounded,       // sup u < infinity
    slow_growth,   // unbounded, below any kernel rate (e.g. log^p, p < 1)
    log_growth,    // u ~ coeff * log(1/t)
    power_growth,  // u ~ coeff * t^{-expnt}
    unknown
};

struct SmallTBehavior {
    SmallTClass cls = SmallTClass::unknown;
    double coeff = 0.0;
    double expnt = 0.0;
    double bound = 0.0;  // for bounded
};

/// A non-increasing, right-continuous function on (0, total_measure],
/// represented by contiguous segments. Values beyond total_measure are 0
/// when tail == zero_beyond_V, otherwise the last form extends.
struct MonotoneProfile {
    std::vector<Segment> segments;
    double total_measure = 0.0;
    TailBehavior tail = TailBehavior::zero_beyond_V;
    SmallTBehavior small_t;

    double value(double t) const;
    /// Exact on analytic segments, tanh-sinh on generic ones.
    double integral(double a, double b) const;
    double integral_to(double t) const { return integral(0.0, t); }
    /// u**(t) = (1/t) int_0^t u.
    double maximal_at(double t) const;
    bool all_analytic() const;
    bool empty() const { return segments.empty(); }
    /// ess sup = limit at t -> 0+ (may be +infinity).
    double sup_value() const;
};

// ---- constructors ----

/// Step profile from (t_hi, value) breakpoints with increasing t and
/// non-increasing values; the first step starts at 0.
MonotoneProfile step_profile(const std::vector<std::pair<double, double>>& breaks);
MonotoneProfile constant_profile(double c, double V);
/// N_V^* as a profile on (0, V].
MonotoneProfile green_profile(int n, double V);
/// N_infinity^* restricted to (0, t_max] (n >= 3); tail extends analytically.
MonotoneProfile green_infinite_profile(int n, double t_max);
/// coeff * t^{-expnt} on (0, t_max].
MonotoneProfile power_profile(double coeff, double expnt, double t_max);
/// (N_V^*)^p for 0 < p: generic segment with classified small-t behavior.
MonotoneProfile kernel_power_profile(int n, double V, double p);

// ---- transforms ----

/// Running average u**; closed form for analytic profiles. Generic segments
/// are resampled onto a dense geometric grid (monotone interpolation).
MonotoneProfile maximal_function(const MonotoneProfile& u);

/// (u - level)_+ : support shrinks to {u > level}.
MonotoneProfile shift_truncate(const MonotoneProfile& u, double level);

/// min(u, cap).
MonotoneProfile clamp_max(const MonotoneProfile& u, double cap);

/// c * u for c >= 0.
MonotoneProfile scaled(const MonotoneProfile& u, double c);

/// Level lambda with |{u > lambda}| = t (up to plateaus): u.value(t).
double level_for_measure(const MonotoneProfile& u, double t);

/// limsup_{t->0} u**(t) / N^*(t) for dimension n; exact for classified or
/// analytic leading segments, NaN when unknown.
double defect_limit(const MonotoneProfile& u, int n);

// ---- grids ----

std::vector<double> geometric_grid(double lo, double hi, int points);
/// Default evaluation grid, 1e-12 V .. V.
std::vector<double> default_grid(double V, int points = 1024);

/// int_0^{grid[i]} u for every grid point, computed incrementally (tanh-sinh
/// on the leading cell, fixed-order Gauss on interior cells).
std::vector<double> cumulative_on_grid(const MonotoneProfile& u,
                                       const std::vector<double>& grid);

bool is_non_increasing(const MonotoneProfile& u, const std::vector<double>& grid,
                       double slack = 1e-12);

} // namespace rearr
