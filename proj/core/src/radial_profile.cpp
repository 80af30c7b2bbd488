#include "rearr/radial_profile.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>

namespace rearr {

static constexpr double kInf = std::numeric_limits<double>::infinity();

static double form_value(const RadialForm& f, const BallGeometry& g, double rho) {
    double v = f.a0;
    if (f.a_kernel != 0.0) v += f.a_kernel * green_radial(g, rho);
    for (const auto& p : f.powers) v += p.coeff * std::pow(rho, p.expnt);
    return v;
}

static double form_derivative(const RadialForm& f, const BallGeometry& g, double rho) {
    double d = 0.0;
    // N'(rho) = -rho^{1-n} / omega in every dimension
    if (f.a_kernel != 0.0) d -= f.a_kernel * std::pow(rho, 1.0 - g.n) / g.omega;
    for (const auto& p : f.powers)
        if (p.expnt != 0.0) d += p.coeff * p.expnt * std::pow(rho, p.expnt - 1.0);
    return d;
}

static const RadialSegment& radial_segment_at(const RadialProfile& f, double rho) {
    auto it = std::lower_bound(
        f.segments.begin(), f.segments.end(), rho,
        [](const RadialSegment& s, double x) { return s.r_hi < x; });
    if (it == f.segments.end()) --it;
    return *it;
}

double RadialProfile::value(double rho) const {
    if (segments.empty()) return 0.0;
    if (!(rho > 0.0)) throw std::domain_error("RadialProfile::value: rho must be > 0");
    if (rho > segments.back().r_hi * (1.0 + 1e-14)) return 0.0;
    const double rc = std::min(rho, segments.back().r_hi);
    const auto& s = radial_segment_at(*this, rc);
    return s.generic ? s.eval(rc) : form_value(s.form, geom, rc);
}

double RadialProfile::derivative(double rho) const {
    const auto& s = radial_segment_at(*this, rho);
    if (s.generic)
        throw std::invalid_argument("RadialProfile::derivative: generic segment");
    return form_derivative(s.form, geom, rho);
}

bool RadialProfile::all_analytic() const {
    for (const auto& s : segments)
        if (s.generic) return false;
    return true;
}

RadialProfile piecewise_constant_radial(
    const BallGeometry& geom, std::span<const std::pair<double, double>> shells) {
    RadialProfile f;
    f.geom = geom;
    double prev = 0.0;
    for (const auto& [r, v] : shells) {
        if (!(r > prev) || r > geom.R * (1.0 + 1e-12))
            throw std::invalid_argument("piecewise_constant_radial: bad shell radii");
        RadialSegment s;
        s.r_lo = prev;
        s.r_hi = r;
        s.form.a0 = v;
        f.segments.push_back(std::move(s));
        prev = r;
    }
    if (f.segments.empty() || std::abs(prev - geom.R) > 1e-12 * geom.R)
        throw std::invalid_argument("piecewise_constant_radial: shells must end at R");
    f.segments.back().r_hi = geom.R;
    return f;
}

// int_0^rho form * omega r^{n-1} dr
static double form_volume_antiderivative(const RadialForm& f, const BallGeometry& g,
                                         double rho) {
    if (rho == 0.0) return 0.0;
    const int n = g.n;
    double F = f.a0 * g.volume_of_radius(rho);
    if (f.a_kernel != 0.0) {
        double P;
        if (n == 2)
            P = 0.5 * rho * rho * std::log(g.R / rho) + 0.25 * rho * rho;
        else
            P = g.omega * g.c_n *
                (0.5 * rho * rho - std::pow(g.R, 2.0 - n) * std::pow(rho, double(n)) / n);
        F += f.a_kernel * P;
    }
    for (const auto& p : f.powers) {
        const double q = p.expnt + n;
        if (q <= 0.0)
            throw divergence_error("radial_volume_integral: non-integrable power");
        F += p.coeff * g.omega * std::pow(rho, q) / q;
    }
    return F;
}

double radial_volume_integral(const RadialProfile& f, double a, double b) {
    if (b < a) return -radial_volume_integral(f, b, a);
    double acc = 0.0;
    for (const auto& s : f.segments) {
        const double lo = std::max(a, s.r_lo), hi = std::min(b, s.r_hi);
        if (hi <= lo) continue;
        if (!s.generic) {
            acc += form_volume_antiderivative(s.form, f.geom, hi) -
                   form_volume_antiderivative(s.form, f.geom, lo);
        } else {
            const auto& g = f.geom;
            acc += tanh_sinh(
                [&](double r, double) {
                    return s.eval(r) * g.omega * std::pow(r, g.n - 1.0);
                },
                lo, hi, 1e-11);
        }
    }
    return acc;
}

// ---- piecewise-monotone decomposition of |f| ----

namespace {

struct MonotonePiece {
    const RadialProfile* owner;
    const RadialSegment* seg;
    double r_lo, r_hi;
    double a_lo, a_hi;  // |f| at the endpoints
    int sign;           // sign of f on the interior
};

double piece_abs(const MonotonePiece& p, double r) {
    const double rc = std::min(std::max(r, p.r_lo), p.r_hi);
    if (!p.seg->generic)
        return std::abs(form_value(p.seg->form, p.owner->geom, rc));
    return std::abs(p.seg->eval(rc));
}

// r in [r_lo, r_hi] with |f|(r) = s; safeguarded Newton on analytic forms
double piece_invert(const MonotonePiece& p, double s) {
    double lo = p.r_lo, hi = p.r_hi;
    const bool dec = p.a_lo >= p.a_hi;
    double r = 0.5 * (lo + hi);
    const bool newton = !p.seg->generic;
    for (int i = 0; i < 64; ++i) {
        const double v = piece_abs(p, r) - s;
        if ((v > 0.0) == dec)
            lo = r;
        else
            hi = r;
        if (hi - lo <= 4e-16 * hi) break;
        double next = 0.5 * (lo + hi);
        if (newton) {
            const double d = (p.sign >= 0 ? 1.0 : -1.0) *
                             form_derivative(p.seg->form, p.owner->geom, r);
            if (d != 0.0 && std::isfinite(d)) {
                const double cand = r - v / d;
                if (cand > lo && cand < hi) next = cand;
            }
        }
        r = next;
    }
    return 0.5 * (lo + hi);
}

// interior direction changes of one segment
void critical_points(const RadialProfile& f, const RadialSegment& s,
                     std::vector<double>& out) {
    const double lo = std::max(s.r_lo, s.r_hi * 1e-12);
    const int K = 64;
    if (s.generic) {
        double prev_r = lo, prev_v = s.eval(lo);
        int prev_dir = 0;
        for (int i = 1; i <= K; ++i) {
            const double r = lo * std::pow(s.r_hi / lo, double(i) / K);
            const double v = s.eval(r);
            const int dir = (v > prev_v) ? 1 : (v < prev_v ? -1 : prev_dir);
            if (prev_dir != 0 && dir != 0 && dir != prev_dir) out.push_back(prev_r);
            if (dir != 0) prev_dir = dir;
            prev_r = r;
            prev_v = v;
        }
        return;
    }
    double prev_r = lo;
    double prev_d = form_derivative(s.form, f.geom, lo);
    for (int i = 1; i <= K; ++i) {
        const double r = lo * std::pow(s.r_hi / lo, double(i) / K);
        const double d = form_derivative(s.form, f.geom, r);
        if ((prev_d < 0.0 && d > 0.0) || (prev_d > 0.0 && d < 0.0)) {
            double a = prev_r, b = r;
            for (int j = 0; j < 64; ++j) {
                const double m = 0.5 * (a + b);
                if ((form_derivative(s.form, f.geom, m) < 0.0) == (prev_d < 0.0))
                    a = m;
                else
                    b = m;
            }
            out.push_back(0.5 * (a + b));
        }
        prev_r = r;
        prev_d = d;
    }
}

std::vector<MonotonePiece> monotone_pieces(const RadialProfile& f) {
    std::vector<MonotonePiece> pieces;
    for (const auto& s : f.segments) {
        std::vector<double> cuts;
        cuts.push_back(std::max(s.r_lo, s.r_hi * 1e-14));
        critical_points(f, s, cuts);
        cuts.push_back(s.r_hi);
        std::sort(cuts.begin(), cuts.end());
        auto seg_value = [&](double r) {
            return s.generic ? s.eval(r) : form_value(s.form, f.geom, r);
        };
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double a = cuts[i], b = cuts[i + 1];
            if (!(b > a)) continue;
            const double va = seg_value(a);
            const double vb = seg_value(b);
            if (va * vb < 0.0) {
                double zlo = a, zhi = b;
                for (int j = 0; j < 64; ++j) {
                    const double m = 0.5 * (zlo + zhi);
                    if (seg_value(m) * va > 0.0)
                        zlo = m;
                    else
                        zhi = m;
                }
                const double z = 0.5 * (zlo + zhi);
                pieces.push_back({&f, &s, a, z, std::abs(va), 0.0, va > 0.0 ? 1 : -1});
                pieces.push_back({&f, &s, z, b, 0.0, std::abs(vb), vb > 0.0 ? 1 : -1});
            } else {
                const int sign = (va + vb) >= 0.0 ? 1 : -1;
                pieces.push_back({&f, &s, a, b, std::abs(va), std::abs(vb), sign});
            }
        }
    }
    return pieces;
}

double piece_superlevel(const std::vector<MonotonePiece>& pieces,
                        const BallGeometry& g, double s) {
    double m = 0.0;
    for (const auto& p : pieces) {
        const double hi = std::max(p.a_lo, p.a_hi), lo = std::min(p.a_lo, p.a_hi);
        if (s >= hi) continue;
        if (s < lo) {
            m += g.volume_of_radius(p.r_hi) - g.volume_of_radius(p.r_lo);
            continue;
        }
        const double rc = piece_invert(p, s);
        if (p.a_lo >= p.a_hi)
            m += g.volume_of_radius(rc) - g.volume_of_radius(p.r_lo);
        else
            m += g.volume_of_radius(p.r_hi) - g.volume_of_radius(rc);
    }
    return m;
}

} // namespace

double superlevel_measure(const RadialProfile& f, double s) {
    if (s < 0.0) throw std::domain_error("superlevel_measure: s must be >= 0");
    return piece_superlevel(monotone_pieces(f), f.geom, s);
}

std::vector<double> superlevel_measures(const RadialProfile& f,
                                        std::span<const double> levels) {
    const auto pieces = monotone_pieces(f);
    std::vector<double> out(levels.size());
    for (size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 0.0)
            throw std::domain_error("superlevel_measures: level must be >= 0");
        out[i] = piece_superlevel(pieces, f.geom, levels[i]);
    }
    return out;
}

double radial_sup_abs(const RadialProfile& f) {
    double sup = 0.0;
    for (const auto& p : monotone_pieces(f)) sup = std::max({sup, p.a_lo, p.a_hi});
    return sup;
}

std::vector<double> rearranged_values(const RadialProfile& f,
                                      std::span<const double> grid) {
    const auto pieces = monotone_pieces(f);
    double s_max = 0.0;
    for (const auto& p : pieces) s_max = std::max({s_max, p.a_lo, p.a_hi});
    if (!std::isfinite(s_max)) s_max = 1e300;

    std::vector<double> out(grid.size());
    double hi_bound = s_max;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        double lo = 0.0, up = hi_bound;
        if (piece_superlevel(pieces, f.geom, 0.0) <= t) {
            out[i] = 0.0;
            hi_bound = 0.0;
            continue;
        }
        for (int j = 0; j < 100; ++j) {
            const double mid = 0.5 * (lo + up);
            if (piece_superlevel(pieces, f.geom, mid) <= t)
                up = mid;
            else
                lo = mid;
            if (up - lo <= 1e-14 * (1.0 + up)) break;
        }
        out[i] = up;
        hi_bound = up;
    }
    return out;
}

MonotoneProfile rearrange_radial(const RadialProfile& f) {
    const auto& g = f.geom;
    bool monotone = f.all_analytic();
    if (monotone) {
        const auto pieces = monotone_pieces(f);
        double sup_all = 0.0;
        for (const auto& p : pieces) sup_all = std::max({sup_all, p.a_lo, p.a_hi});
        const double wiggle = 1e-11 * sup_all;  // roundoff noise near zeros
        double prev = kInf;
        for (const auto& p : pieces) {
            if ((p.sign < 0 && std::max(p.a_lo, p.a_hi) > wiggle) ||
                p.a_lo > prev + wiggle || p.a_hi > p.a_lo + wiggle) {
                monotone = false;
                break;
            }
            prev = p.a_hi;
        }
    }
    if (monotone) {
        MonotoneProfile u;
        u.total_measure = g.V;
        for (const auto& s : f.segments) {
            Segment out;
            out.t_lo = g.volume_of_radius(s.r_lo);
            out.t_hi = g.volume_of_radius(s.r_hi);
            AnalyticForm& af = out.form;
            af.c0 = s.form.a0;
            if (s.form.a_kernel != 0.0) {
                af.c_kernel = s.form.a_kernel;
                af.kernel_n = g.n;
                af.kernel_V = g.V;
            }
            for (const auto& p : s.form.powers) {
                if (p.expnt == 0.0) {
                    af.c0 += p.coeff;
                    continue;
                }
                af.powers.push_back(
                    {p.coeff * std::pow(double(g.n) / g.omega, p.expnt / g.n),
                     p.expnt / g.n});
            }
            u.segments.push_back(std::move(out));
        }
        u.segments.back().t_hi = g.V;
        const auto& af0 = u.segments.front().form;
        if (af0.bounded_at_zero()) {
            double bound = af0.c0;
            for (const auto& p : af0.powers)
                if (p.expnt == 0.0) bound += p.coeff;
            u.small_t = {SmallTClass::bounded, 0.0, 0.0, bound};
        } else if (af0.c_kernel != 0.0) {
            if (g.n == 2)
                u.small_t = {SmallTClass::log_growth, af0.c_kernel / (4.0 * M_PI), 0.0, 0.0};
            else
                u.small_t = {SmallTClass::power_growth,
                             af0.c_kernel * green_infinite_coefficient(g.n),
                             weak_exponent(g.n), 0.0};
        } else {
            double c = 0.0, e = 0.0;
            for (const auto& p : af0.powers)
                if (p.expnt < -e) {
                    e = -p.expnt;
                    c = p.coeff;
                }
            u.small_t = {SmallTClass::power_growth, c, e, 0.0};
        }
        return u;
    }

    // general case: one distribution sweep over a dense level grid, then
    // monotone interpolation of the inverse
    const auto pieces = monotone_pieces(f);
    double sup = 0.0;
    for (const auto& p : pieces) sup = std::max({sup, p.a_lo, p.a_hi});
    MonotoneProfile u;
    u.total_measure = g.V;
    if (!(sup > 0.0)) {
        u.segments.push_back({0.0, g.V, SegmentKind::analytic, AnalyticForm{}, {}});
        u.small_t = {SmallTClass::bounded, 0.0, 0.0, 0.0};
        return u;
    }
    const int K = 3072;
    auto ts = std::make_shared<std::vector<double>>();
    auto ss = std::make_shared<std::vector<double>>();
    ts->reserve(K + 1);
    ss->reserve(K + 1);
    double prev_t = -1.0;
    for (int j = 0; j < K; ++j) {
        // levels descend geometrically over 15 decades below the sup
        const double s = sup * std::pow(10.0, -15.0 * double(j) / (K - 1));
        const double t = piece_superlevel(pieces, g, s);
        if (t > prev_t) {
            ts->push_back(t);
            ss->push_back(s);
            prev_t = t;
        }
    }
    {
        const double t0 = piece_superlevel(pieces, g, 0.0);
        if (t0 > prev_t) {
            ts->push_back(t0);
            ss->push_back(0.0);
        }
    }
    Segment s;
    s.t_lo = 0.0;
    s.t_hi = g.V;
    s.kind = SegmentKind::generic;
    const double sup_c = sup;
    s.eval = [ts, ss, sup_c](double t) {
        const auto& x = *ts;
        const auto& y = *ss;
        if (x.empty() || t >= x.back()) return 0.0;
        if (t <= x.front()) return sup_c;
        const auto it = std::upper_bound(x.begin(), x.end(), t);
        const size_t i = size_t(it - x.begin());
        const double w = (t - x[i - 1]) / (x[i] - x[i - 1]);
        return y[i - 1] + w * (y[i] - y[i - 1]);
    };
    u.segments.push_back(std::move(s));
    u.small_t = {SmallTClass::bounded, 0.0, 0.0, sup};
    return u;
}

double l1_norm(const RadialProfile& f) {
    double acc = 0.0;
    for (const auto& p : monotone_pieces(f))
        acc += std::abs(radial_volume_integral(f, p.r_lo, p.r_hi));
    return acc;
}

std::pair<double, double> signed_mass_split(const RadialProfile& f) {
    double plus = 0.0, minus = 0.0;
    for (const auto& p : monotone_pieces(f)) {
        const double m = radial_volume_integral(f, p.r_lo, p.r_hi);
        if (p.sign >= 0)
            plus += m;
        else
            minus += -m;
    }
    return {plus, minus};
}

RadialProfile schwarz_profile(const MonotoneProfile& u_star, const BallGeometry& geom) {
    if (std::abs(u_star.total_measure - geom.V) > 1e-12 * geom.V)
        throw std::domain_error(
            "schwarz_profile: total measure does not match the ball volume");
    RadialProfile f;
    f.geom = geom;
    const int n = geom.n;
    for (const auto& s : u_star.segments) {
        RadialSegment out;
        out.r_lo = s.t_lo > 0.0 ? geom.radius_of_volume(s.t_lo) : 0.0;
        out.r_hi = std::min(geom.radius_of_volume(s.t_hi), geom.R);
        if (s.kind == SegmentKind::generic) {
            out.generic = true;
            auto base = s.eval;
            const BallGeometry g = geom;
            out.eval = [base, g](double rho) { return base(g.volume_of_radius(rho)); };
            f.segments.push_back(std::move(out));
            continue;
        }
        const auto& af = s.form;
        RadialForm& rf = out.form;
        rf.a0 = af.c0;
        if (af.c_kernel != 0.0) {
            rf.a_kernel += af.c_kernel;
            if (af.kernel_V != geom.V) {
                if (n == 2)
                    rf.a0 += af.c_kernel * std::log(af.kernel_V / geom.V) / (4.0 * M_PI);
                else {
                    const double beta = weak_exponent(n);
                    rf.a0 += af.c_kernel * green_infinite_coefficient(n) *
                             (std::pow(geom.V, -beta) - std::pow(af.kernel_V, -beta));
                }
            }
        }
        if (af.c_log != 0.0) {
            if (n != 2)
                throw std::invalid_argument("schwarz_profile: log term requires n = 2");
            rf.a_kernel += 4.0 * M_PI * af.c_log;
            rf.a0 += af.c_log * std::log(af.log_ref / geom.V);
        }
        for (const auto& p : af.powers) {
            if (p.expnt == 0.0) {
                rf.a0 += p.coeff;
                continue;
            }
            rf.powers.push_back({p.coeff * std::pow(geom.omega / n, p.expnt),
                                 p.expnt * n});
        }
        f.segments.push_back(std::move(out));
    }
    if (!f.segments.empty()) f.segments.back().r_hi = geom.R;
    return f;
}

RadialProfile radial_laplacian_negated(const RadialProfile& v) {
    RadialProfile f;
    f.geom = v.geom;
    const int n = v.geom.n;
    for (const auto& s : v.segments) {
        if (s.generic)
            throw std::invalid_argument("radial_laplacian_negated: generic segment");
        RadialSegment out;
        out.r_lo = s.r_lo;
        out.r_hi = s.r_hi;
        for (const auto& p : s.form.powers) {
            if (p.expnt == 0.0) continue;
            const double c = -p.coeff * p.expnt * (p.expnt + n - 2.0);
            if (p.expnt == 2.0)
                out.form.a0 += c;
            else
                out.form.powers.push_back({c, p.expnt - 2.0});
        }
        f.segments.push_back(std::move(out));
    }
    return f;
}

} // namespace rearr
