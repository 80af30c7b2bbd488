#include "rearr/rearrangement.hpp"

#include <algorithm>
#include <cmath>

namespace rearr {

double distribution_function(std::span<const CellSample> samples, double s) {
    if (s < 0.0) throw std::domain_error("distribution_function: s must be >= 0");
    double m = 0.0;
    for (const auto& c : samples)
        if (c.value > s) m += c.measure;
    return m;
}

MonotoneProfile decreasing_rearrangement(std::span<const CellSample> samples) {
    std::vector<CellSample> cells;
    cells.reserve(samples.size());
    for (const auto& c : samples) {
        if (c.measure < 0.0)
            throw std::domain_error("decreasing_rearrangement: negative cell measure");
        if (!std::isfinite(c.value))
            throw std::domain_error("decreasing_rearrangement: non-finite cell value");
        if (c.measure > 0.0) cells.push_back(c);
    }
    std::sort(cells.begin(), cells.end(),
              [](const CellSample& a, const CellSample& b) { return a.value > b.value; });

    std::vector<std::pair<double, double>> breaks;
    breaks.reserve(cells.size());
    double t = 0.0;
    for (size_t i = 0; i < cells.size();) {
        const double v = cells[i].value;
        double m = 0.0;
        while (i < cells.size() && cells[i].value == v) m += cells[i++].measure;
        t += m;
        breaks.emplace_back(t, v);
    }
    return step_profile(breaks);
}

double profile_distribution(const MonotoneProfile& u, double s) {
    if (s < 0.0) throw std::domain_error("profile_distribution: s must be >= 0");
    // step data invert exactly at breakpoints
    double m = 0.0;
    bool steps_only = true;
    for (const auto& seg : u.segments) {
        if (seg.kind == SegmentKind::analytic && seg.form.c_kernel == 0.0 &&
            seg.form.c_log == 0.0 && seg.form.powers.empty()) {
            if (seg.form.c0 > s) m = seg.t_hi;
        } else {
            steps_only = false;
            break;
        }
    }
    if (steps_only) return m;

    // monotone inversion: largest t with u(t) > s
    if (u.segments.empty()) return 0.0;
    if (u.value(u.total_measure) > s) return u.total_measure;
    if (!(u.sup_value() > s)) return 0.0;
    double lo = 0.0, hi = u.total_measure;
    for (int i = 0; i < 800; ++i) {
        const double mid = (lo > 0.0) ? std::sqrt(lo * hi) : hi * 1e-3;
        if (!(mid > 0.0) || mid >= hi) break;
        if (u.value(mid) > s)
            lo = mid;
        else
            hi = mid;
        if (lo > 0.0 && hi <= lo * (1.0 + 4e-16)) break;
    }
    return lo > 0.0 ? 0.5 * (lo + hi) : 0.0;
}

} // namespace rearr
