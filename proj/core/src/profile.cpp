#include "rearr/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace rearr {

static constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- AnalyticForm ----

double AnalyticForm::operator()(double t) const {
    double v = c0;
    if (c_kernel != 0.0) v += c_kernel * green_rearranged(kernel_n, kernel_V, t);
    if (c_log != 0.0) v += c_log * std::log(log_ref / t);
    for (const auto& p : powers) v += p.coeff * std::pow(t, p.expnt);
    return v;
}

double AnalyticForm::antiderivative(double t) const {
    if (t == 0.0) {
        if (!integrable_at_zero())
            throw divergence_error("AnalyticForm: non-integrable singularity at t = 0");
        return 0.0;
    }
    double F = c0 * t;
    if (c_kernel != 0.0) {
        if (kernel_n == 2) {
            F += c_kernel / (4.0 * M_PI) * t * (std::log(kernel_V / t) + 1.0);
        } else {
            const double beta = weak_exponent(kernel_n);
            const double kappa = green_infinite_coefficient(kernel_n);
            F += c_kernel * kappa *
                 (std::pow(t, 1.0 - beta) / (1.0 - beta) - std::pow(kernel_V, -beta) * t);
        }
    }
    if (c_log != 0.0) F += c_log * t * (std::log(log_ref / t) + 1.0);
    for (const auto& p : powers) {
        if (p.expnt == -1.0)
            F += p.coeff * std::log(t);
        else
            F += p.coeff * std::pow(t, p.expnt + 1.0) / (p.expnt + 1.0);
    }
    return F;
}

double AnalyticForm::integral(double a, double b) const {
    return antiderivative(b) - antiderivative(a);
}

bool AnalyticForm::bounded_at_zero() const {
    if (c_kernel != 0.0 || c_log != 0.0) return false;
    for (const auto& p : powers)
        if (p.coeff != 0.0 && p.expnt < 0.0) return false;
    return true;
}

bool AnalyticForm::integrable_at_zero() const {
    for (const auto& p : powers)
        if (p.coeff != 0.0 && p.expnt <= -1.0) return false;
    return true;
}

double Segment::value(double t) const {
    return kind == SegmentKind::analytic ? form(t) : eval(t);
}

// ---- MonotoneProfile ----

static const Segment& segment_at(const std::vector<Segment>& segs, double t) {
    // segments cover (t_lo, t_hi]; pick the first with t_hi >= t
    auto it = std::lower_bound(segs.begin(), segs.end(), t,
                               [](const Segment& s, double x) { return s.t_hi < x; });
    if (it == segs.end()) --it;
    return *it;
}

double MonotoneProfile::value(double t) const {
    if (segments.empty()) return 0.0;
    if (!(t > 0.0)) throw std::domain_error("MonotoneProfile::value: t must be > 0");
    const double covered = segments.back().t_hi;
    if (t > covered) {
        if (tail == TailBehavior::zero_beyond_V) return 0.0;
        return segments.back().value(t);
    }
    const double tc = std::min(t, covered);
    return segment_at(segments, tc).value(tc);
}

double MonotoneProfile::integral(double a, double b) const {
    if (segments.empty()) return 0.0;
    if (b < a) return -integral(b, a);
    double acc = 0.0;
    for (const auto& s : segments) {
        const double lo = std::max(a, s.t_lo), hi = std::min(b, s.t_hi);
        if (hi <= lo) continue;
        if (s.kind == SegmentKind::analytic)
            acc += s.form.integral(lo, hi);
        else
            acc += tanh_sinh([&](double x, double) { return s.eval(x); }, lo, hi, 1e-12);
    }
    const double covered = segments.back().t_hi;
    if (b > covered && tail == TailBehavior::analytic_extension) {
        const auto& s = segments.back();
        const double lo = std::max(a, covered);
        if (s.kind == SegmentKind::analytic)
            acc += s.form.integral(lo, b);
        else
            acc += tanh_sinh([&](double x, double) { return s.eval(x); }, lo, b, 1e-12);
    }
    return acc;
}

double MonotoneProfile::maximal_at(double t) const {
    if (!(t > 0.0)) throw std::domain_error("maximal_at: t must be > 0");
    return integral(0.0, t) / t;
}

bool MonotoneProfile::all_analytic() const {
    for (const auto& s : segments)
        if (s.kind != SegmentKind::analytic) return false;
    return true;
}

double MonotoneProfile::sup_value() const {
    if (segments.empty()) return 0.0;
    const auto& s = segments.front();
    if (s.kind == SegmentKind::analytic) {
        if (!s.form.bounded_at_zero()) return kInf;
        double v = s.form.c0;
        for (const auto& p : s.form.powers)
            if (p.expnt == 0.0) v += p.coeff;
        return v;
    }
    switch (small_t.cls) {
        case SmallTClass::bounded: return small_t.bound;
        case SmallTClass::unknown: return s.value(std::max(s.t_lo * (1.0 + 1e-12), s.t_hi * 1e-13));
        default: return kInf;
    }
}

// ---- constructors ----

MonotoneProfile step_profile(const std::vector<std::pair<double, double>>& breaks) {
    MonotoneProfile u;
    double prev_t = 0.0;
    double prev_v = kInf;
    for (const auto& [t, v] : breaks) {
        if (!(t > prev_t))
            throw std::invalid_argument("step_profile: breakpoints not increasing");
        if (v > prev_v + 1e-14 * std::abs(prev_v) + 1e-300)
            throw std::invalid_argument("step_profile: values not non-increasing");
        Segment s;
        s.t_lo = prev_t;
        s.t_hi = t;
        s.form.c0 = v;
        u.segments.push_back(std::move(s));
        prev_t = t;
        prev_v = v;
    }
    u.total_measure = prev_t;
    u.small_t = {SmallTClass::bounded, 0.0, 0.0,
                 breaks.empty() ? 0.0 : breaks.front().second};
    return u;
}

MonotoneProfile constant_profile(double c, double V) {
    return step_profile({{V, c}});
}

MonotoneProfile green_profile(int n, double V) {
    MonotoneProfile u;
    Segment s;
    s.t_lo = 0.0;
    s.t_hi = V;
    s.form.c_kernel = 1.0;
    s.form.kernel_n = n;
    s.form.kernel_V = V;
    u.segments.push_back(std::move(s));
    u.total_measure = V;
    if (n == 2)
        u.small_t = {SmallTClass::log_growth, 1.0 / (4.0 * M_PI), 0.0, 0.0};
    else
        u.small_t = {SmallTClass::power_growth, green_infinite_coefficient(n),
                     weak_exponent(n), 0.0};
    return u;
}

MonotoneProfile power_profile(double coeff, double expnt, double t_max) {
    MonotoneProfile u;
    Segment s;
    s.t_lo = 0.0;
    s.t_hi = t_max;
    s.form.powers.push_back({coeff, -expnt});
    u.segments.push_back(std::move(s));
    u.total_measure = t_max;
    u.small_t = expnt > 0.0
                    ? SmallTBehavior{SmallTClass::power_growth, coeff, expnt, 0.0}
                    : SmallTBehavior{SmallTClass::bounded, 0.0, 0.0, coeff};
    return u;
}

MonotoneProfile green_infinite_profile(int n, double t_max) {
    MonotoneProfile u =
        power_profile(green_infinite_coefficient(n), weak_exponent(n), t_max);
    u.tail = TailBehavior::analytic_extension;
    return u;
}

MonotoneProfile kernel_power_profile(int n, double V, double p) {
    if (!(p > 0.0)) throw std::domain_error("kernel_power_profile: p must be > 0");
    MonotoneProfile u;
    Segment s;
    s.t_lo = 0.0;
    s.t_hi = V;
    s.kind = SegmentKind::generic;
    s.eval = [n, V, p](double t) { return std::pow(green_rearranged(n, V, t), p); };
    u.segments.push_back(std::move(s));
    u.total_measure = V;
    if (n == 2) {
        if (p < 1.0)
            u.small_t = {SmallTClass::slow_growth, 0.0, 0.0, 0.0};
        else if (p == 1.0)
            u.small_t = {SmallTClass::log_growth, 1.0 / (4.0 * M_PI), 0.0, 0.0};
        else
            u.small_t = {SmallTClass::unknown, 0.0, 0.0, 0.0};
    } else {
        const double beta = weak_exponent(n);
        u.small_t = {SmallTClass::power_growth,
                     std::pow(green_infinite_coefficient(n), p), beta * p, 0.0};
    }
    return u;
}

// ---- maximal function ----

static AnalyticForm maximal_form(const AnalyticForm& f, double carried, double t_lo) {
    // (1/t) * (carried - F(t_lo) + F(t)), F the antiderivative of f
    AnalyticForm g;
    g.c0 = f.c0;
    if (f.c_kernel != 0.0) {
        if (f.kernel_n == 2) {
            g.c_log = f.c_kernel / (4.0 * M_PI);
            g.log_ref = f.kernel_V;
            g.c0 += f.c_kernel / (4.0 * M_PI);
        } else {
            const double beta = weak_exponent(f.kernel_n);
            const double kappa = green_infinite_coefficient(f.kernel_n);
            g.powers.push_back({f.c_kernel * kappa / (1.0 - beta), -beta});
            g.c0 -= f.c_kernel * kappa * std::pow(f.kernel_V, -beta);
        }
    }
    if (f.c_log != 0.0) {
        if (g.c_log != 0.0) {
            if (g.log_ref != f.log_ref)
                g.c0 += f.c_log * std::log(f.log_ref / g.log_ref);
        } else {
            g.log_ref = f.log_ref;
        }
        g.c_log += f.c_log;
        g.c0 += f.c_log;  // from t (log(ref/t) + 1) / t
    }
    for (const auto& p : f.powers) {
        if (p.expnt == -1.0)
            throw std::invalid_argument("maximal_function: t^{-1} term not supported");
        g.powers.push_back({p.coeff / (p.expnt + 1.0), p.expnt});
    }
    const double residue = carried - f.antiderivative(t_lo);
    if (residue != 0.0) g.powers.push_back({residue, -1.0});
    return g;
}

MonotoneProfile maximal_function(const MonotoneProfile& u) {
    if (u.segments.empty()) return u;
    const auto& first = u.segments.front();
    if (first.kind == SegmentKind::analytic && !first.form.integrable_at_zero())
        throw divergence_error("maximal_function: profile not integrable near 0");

    MonotoneProfile r;
    r.total_measure = u.total_measure;
    r.tail = TailBehavior::analytic_extension;

    if (u.all_analytic()) {
        double carried = 0.0;
        for (const auto& s : u.segments) {
            Segment out;
            out.t_lo = s.t_lo;
            out.t_hi = s.t_hi;
            out.form = maximal_form(s.form, carried, s.t_lo);
            carried += s.form.integral(s.t_lo, s.t_hi);
            r.segments.push_back(std::move(out));
        }
        if (u.tail == TailBehavior::zero_beyond_V) {
            // past the support the average decays like (total mass)/t
            Segment ext;
            ext.t_lo = u.segments.back().t_hi;
            ext.t_hi = kInf;
            ext.form.powers.push_back({carried, -1.0});
            r.segments.push_back(std::move(ext));
        }
    } else {
        const double lo = u.total_measure * 1e-14;
        const auto grid = geometric_grid(lo, u.total_measure, 2048);
        const auto cum = cumulative_on_grid(u, grid);
        auto gr = std::make_shared<std::vector<double>>(grid);
        auto vals = std::make_shared<std::vector<double>>(grid.size());
        for (size_t i = 0; i < grid.size(); ++i) (*vals)[i] = cum[i] / grid[i];
        Segment s;
        s.t_lo = 0.0;
        s.t_hi = u.total_measure;
        s.kind = SegmentKind::generic;
        s.eval = [gr, vals](double t) {
            const auto& g = *gr;
            const auto& v = *vals;
            if (t <= g.front()) return v.front();
            if (t >= g.back()) return v.back();
            const auto it = std::upper_bound(g.begin(), g.end(), t);
            const size_t i = size_t(it - g.begin());
            const double w = std::log(t / g[i - 1]) / std::log(g[i] / g[i - 1]);
            return v[i - 1] + w * (v[i] - v[i - 1]);
        };
        r.segments.push_back(std::move(s));
    }

    switch (u.small_t.cls) {
        case SmallTClass::bounded:
            r.small_t = {SmallTClass::bounded, 0.0, 0.0, u.small_t.bound};
            break;
        case SmallTClass::power_growth:
            r.small_t = {SmallTClass::power_growth,
                         u.small_t.coeff / (1.0 - u.small_t.expnt), u.small_t.expnt,
                         0.0};
            break;
        default:
            r.small_t = u.small_t;
            break;
    }
    return r;
}

// ---- truncations ----

// measure of the superlevel set {u > level}
static double crossing_measure(const MonotoneProfile& u, double level) {
    if (u.segments.empty()) return 0.0;
    const double total = u.total_measure;
    if (u.value(total) > level) return total;
    if (!(u.sup_value() > level)) return 0.0;
    double lo = 0.0, hi = total;  // u(lo+) > level >= u(hi)
    for (int i = 0; i < 800; ++i) {
        const double mid = (lo > 0.0) ? std::sqrt(lo * hi) : hi * 1e-3;
        if (!(mid > 0.0) || mid >= hi) break;
        if (u.value(mid) > level)
            lo = mid;
        else
            hi = mid;
        if (lo > 0.0 && hi <= lo * (1.0 + 4e-16)) break;
    }
    return lo > 0.0 ? 0.5 * (lo + hi) : 0.0;
}

MonotoneProfile shift_truncate(const MonotoneProfile& u, double level) {
    if (level < 0.0) throw std::domain_error("shift_truncate: level must be >= 0");
    if (level == 0.0) return u;
    MonotoneProfile r;
    r.small_t = u.small_t;
    if (r.small_t.cls == SmallTClass::bounded)
        r.small_t.bound = std::max(0.0, r.small_t.bound - level);
    const double tc = crossing_measure(u, level);
    if (tc <= 0.0) return r;
    for (const auto& s : u.segments) {
        if (s.t_lo >= tc) break;
        Segment out = s;
        out.t_hi = std::min(s.t_hi, tc);
        if (s.kind == SegmentKind::analytic) {
            out.form.c0 -= level;
        } else {
            auto base = s.eval;
            out.eval = [base, level](double t) { return std::max(0.0, base(t) - level); };
        }
        r.segments.push_back(std::move(out));
    }
    r.total_measure = tc;
    return r;
}

MonotoneProfile clamp_max(const MonotoneProfile& u, double cap) {
    if (!(cap >= 0.0)) throw std::domain_error("clamp_max: cap must be >= 0");
    const double tc = crossing_measure(u, cap);
    MonotoneProfile r;
    r.total_measure = u.total_measure;
    r.tail = u.tail;
    r.small_t = {SmallTClass::bounded, 0.0, 0.0, cap};
    if (tc > 0.0) {
        Segment flat;
        flat.t_lo = 0.0;
        flat.t_hi = tc;
        flat.form.c0 = cap;
        r.segments.push_back(std::move(flat));
    }
    for (const auto& s : u.segments) {
        if (s.t_hi <= tc) continue;
        Segment out = s;
        out.t_lo = std::max(s.t_lo, tc);
        r.segments.push_back(std::move(out));
    }
    return r;
}

MonotoneProfile scaled(const MonotoneProfile& u, double c) {
    if (c < 0.0) throw std::domain_error("scaled: factor must be >= 0");
    MonotoneProfile r = u;
    for (auto& s : r.segments) {
        if (s.kind == SegmentKind::analytic) {
            s.form.c0 *= c;
            s.form.c_kernel *= c;
            s.form.c_log *= c;
            for (auto& p : s.form.powers) p.coeff *= c;
        } else {
            auto base = s.eval;
            s.eval = [base, c](double t) { return c * base(t); };
        }
    }
    r.small_t.coeff *= c;
    r.small_t.bound *= c;
    return r;
}

double level_for_measure(const MonotoneProfile& u, double t) { return u.value(t); }

// ---- defect limit ----

double defect_limit(const MonotoneProfile& u, int n) {
    if (u.segments.empty()) return 0.0;
    const auto& s0 = u.segments.front();
    SmallTBehavior b = u.small_t;
    if (s0.kind == SegmentKind::analytic && s0.t_lo == 0.0) {
        const auto& f = s0.form;
        double power_coeff = 0.0, power_max = 0.0;
        auto add_power = [&](double c, double e) {
            if (e > power_max + 1e-15) {
                power_max = e;
                power_coeff = c;
            } else if (std::abs(e - power_max) <= 1e-15) {
                power_coeff += c;
            }
        };
        for (const auto& p : f.powers)
            if (p.coeff != 0.0 && p.expnt < 0.0) add_power(p.coeff, -p.expnt);
        double log_coeff = f.c_log;
        if (f.c_kernel != 0.0) {
            if (f.kernel_n == 2)
                log_coeff += f.c_kernel / (4.0 * M_PI);
            else
                add_power(f.c_kernel * green_infinite_coefficient(f.kernel_n),
                          weak_exponent(f.kernel_n));
        }
        if (power_max > 0.0)
            b = {SmallTClass::power_growth, power_coeff, power_max, 0.0};
        else if (log_coeff != 0.0)
            b = {SmallTClass::log_growth, log_coeff, 0.0, 0.0};
        else
            b = {SmallTClass::bounded, 0.0, 0.0, 0.0};
    }

    switch (b.cls) {
        case SmallTClass::bounded:
        case SmallTClass::slow_growth:
            return 0.0;
        case SmallTClass::log_growth:
            return (n == 2) ? 4.0 * M_PI * b.coeff : 0.0;
        case SmallTClass::power_growth: {
            if (n == 2) return kInf;
            const double beta = weak_exponent(n);
            if (b.expnt < beta - 1e-15) return 0.0;
            if (b.expnt > beta + 1e-15) return kInf;
            return 0.5 * n * b.coeff / green_infinite_coefficient(n);
        }
        default:
            return std::nan("");
    }
}

// ---- grids ----

std::vector<double> geometric_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw std::invalid_argument("geometric_grid: need 0 < lo < hi, points >= 2");
    std::vector<double> g(points);
    const double span = std::log(hi / lo);
    for (int i = 0; i < points; ++i)
        g[i] = lo * std::exp(span * double(i) / double(points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> default_grid(double V, int points) {
    return geometric_grid(1e-12 * V, V, points);
}

std::vector<double> cumulative_on_grid(const MonotoneProfile& u,
                                       const std::vector<double>& grid) {
    std::vector<double> cum(grid.size());
    if (grid.empty() || u.segments.empty()) return cum;
    if (u.all_analytic()) {
        for (size_t i = 0; i < grid.size(); ++i) cum[i] = u.integral(0.0, grid[i]);
        return cum;
    }
    cum[0] = tanh_sinh([&](double x, double) { return u.value(x); }, 0.0, grid[0], 1e-13);
    for (size_t i = 1; i < grid.size(); ++i) {
        const double a = grid[i - 1], b = grid[i];
        double cell;
        const Segment& s = segment_at(u.segments, std::min(b, u.total_measure));
        if (s.kind == SegmentKind::analytic && s.t_lo <= a && b <= s.t_hi)
            cell = s.form.integral(a, b);
        else
            cell = gauss16([&](double x) { return u.value(x); }, a, b);
        cum[i] = cum[i - 1] + cell;
    }
    return cum;
}

bool is_non_increasing(const MonotoneProfile& u, const std::vector<double>& grid,
                       double slack) {
    double prev = kInf;
    for (double t : grid) {
        if (t <= 0.0 || t > u.total_measure) continue;
        const double v = u.value(t);
        if (v > prev + slack * (std::abs(prev) + 1.0)) return false;
        prev = v;
    }
    return true;
}

} // namespace rearr
