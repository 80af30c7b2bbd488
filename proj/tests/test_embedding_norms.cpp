#include <doctest.h>

#include <cmath>
#include <random>

#include "rearr/embedding_norms.hpp"
#include "rearr/extremal_families.hpp"
#include "rearr/rearrangement.hpp"

using namespace rearr;

namespace {
constexpr double kQuarterPi = 0.07957747154594767;  // 1/(4 pi)

MonotoneProfile random_steps(std::mt19937_64& rng, double V) {
    std::uniform_int_distribution<int> uk(1, 9);
    std::uniform_real_distribution<double> uv(0.0, 3.0), ut(0.05, 1.0);
    const int k = uk(rng);
    std::vector<double> vals, ts;
    for (int i = 0; i < k; ++i) {
        vals.push_back(uv(rng));
        ts.push_back(ut(rng));
    }
    std::sort(vals.rbegin(), vals.rend());
    double total = 0.0;
    for (double t : ts) total += t;
    std::vector<std::pair<double, double>> breaks;
    double acc = 0.0;
    for (int i = 0; i < k; ++i) {
        acc += ts[i] / total * V;
        breaks.emplace_back(std::min(acc, V), vals[i]);
    }
    breaks.back().first = V;
    return step_profile(breaks);
}

} // namespace

TEST_CASE("Zygmund quasi-norm") {
    const double V = 2.0;
    CHECK(lexp_quasi_norm(constant_profile(3.0, V), V) ==
          doctest::Approx(3.0).epsilon(1e-14));

    // the kernel attains its norm only in the t -> 0 limit
    CHECK(lexp_quasi_norm(green_profile(2, V), V) ==
          doctest::Approx(kQuarterPi).epsilon(1e-15));

    // bump family: the normalized quasi-norm climbs to 1/(4 pi)
    const auto g = BallGeometry::from_radius(2, 1.0);
    double prev = 0.0;
    for (double delta : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const auto us = rearrange_radial(bump_potential(g, delta));
        const double q = lexp_quasi_norm(us, g.V) / l1_norm(bump_data(g, delta));
        CHECK(q > prev);
        CHECK(q < kQuarterPi * (1.0 + 1e-9));
        prev = q;
    }
    CHECK(prev > kQuarterPi * 0.93);
}

TEST_CASE("Zygmund norm via the running average") {
    const double V = 2.0;
    CHECK(lexp_norm(constant_profile(3.0, V), V) == doctest::Approx(3.0).epsilon(1e-14));

    // for the kernel the averaged quotient is constant at 1/(4 pi)
    CHECK(lexp_norm(green_profile(2, V), V) ==
          doctest::Approx(kQuarterPi).epsilon(1e-13));

    // norm dominates quasi-norm on random step profiles
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 100; ++rep) {
        const auto u = random_steps(rng, V);
        CHECK(lexp_norm(u, V) >= lexp_quasi_norm(u, V) * (1.0 - 1e-12));
    }
}

TEST_CASE("weak-Lebesgue norms") {
    const double V = 2.0;
    for (int n : {3, 4, 5}) {
        const double beta = weak_exponent(n);
        const double kappa = green_infinite_coefficient(n);

        // the whole-space kernel has a constant weighted profile
        CHECK(weak_quasi_norm(green_infinite_profile(n, V), n, V) ==
              doctest::Approx(kappa).epsilon(1e-14));

        CHECK(weak_quasi_norm(constant_profile(2.0, V), n, V) ==
              doctest::Approx(2.0 * std::pow(V, beta)).epsilon(1e-14));

        // supremal limit for the finite-volume kernel
        CHECK(weak_quasi_norm(green_profile(n, V), n, V) ==
              doctest::Approx(kappa).epsilon(1e-14));

        // averaged variant is larger by the factor n/2 in the limit
        const double ratio = weak_norm(green_profile(n, V), n, V) /
                             weak_quasi_norm(green_profile(n, V), n, V);
        CHECK(ratio == doctest::Approx(0.5 * n).epsilon(1e-13));

        // ordering on random step profiles
        std::mt19937_64 rng(80 + n);
        for (int rep = 0; rep < 100; ++rep) {
            const auto u = random_steps(rng, V);
            CHECK(weak_norm(u, n, V) >= weak_quasi_norm(u, n, V) * (1.0 - 1e-12));
        }
    }
    CHECK_THROWS_AS(weak_quasi_norm(constant_profile(1.0, V), 2, V), std::domain_error);

    // bump family approaches the sharp constant
    const int n = 3;
    const auto g = BallGeometry::from_radius(n, 1.0);
    double prev = 0.0;
    for (double delta : {1e-1, 1e-2, 1e-3}) {
        const auto us = rearrange_radial(bump_potential(g, delta));
        const double q = weak_quasi_norm(us, n, g.V) / l1_norm(bump_data(g, delta));
        CHECK(q > prev);
        CHECK(q < green_infinite_coefficient(n) * (1.0 + 1e-9));
        prev = q;
    }
    CHECK(prev > green_infinite_coefficient(n) * 0.97);
}

TEST_CASE("Lq norms") {
    const double V = 1.5;
    CHECK(lq_norm(constant_profile(2.0, V), 2.0) ==
          doctest::Approx(2.0 * std::sqrt(V)).epsilon(1e-14));

    // kernel in space at q = 1: the integral evaluates to kappa/2 on V = 1
    const double kappa3 = green_infinite_coefficient(3);
    CHECK(lq_norm(green_profile(3, 1.0), 1.0) ==
          doctest::Approx(0.5 * kappa3).epsilon(1e-10));

    // non-integrable power of the kernel
    CHECK(std::isinf(lq_norm(green_profile(3, 1.0), 3.0)));
    CHECK(std::isinf(lq_norm(green_profile(3, 1.0), 4.5)));
    CHECK_THROWS_AS(lq_norm(green_profile(3, 1.0), 0.5), std::domain_error);
}

TEST_CASE("exponential integrals") {
    const double V = 2.0;
    CHECK(exp_integral(constant_profile(0.0, V), 1.0, 1.0, V) ==
          doctest::Approx(V).epsilon(1e-14));

    // kernel: closed form V * 4pi / (4pi - alpha), infinite at the endpoint
    for (double alpha : {1.0, M_PI, 2.0 * M_PI, 3.9 * M_PI}) {
        CHECK(exp_integral(green_profile(2, V), alpha, 1.0, V) ==
              doctest::Approx(4.0 * M_PI * V / (4.0 * M_PI - alpha)).epsilon(1e-11));
    }
    CHECK(std::isinf(exp_integral(green_profile(2, V), 4.0 * M_PI, 1.0, V)));
    CHECK(std::isinf(exp_integral(green_profile(2, V), 5.0 * M_PI, 1.0, V)));
    CHECK_THROWS_AS(exp_integral(green_profile(2, V), -1.0, 1.0, V), std::domain_error);

    // bump family: integral approaches the closed form from below
    const auto g = BallGeometry::from_radius(2, 1.0);
    for (double alpha : {2.0 * M_PI, 3.0 * M_PI}) {
        const double bound = 4.0 * M_PI * g.V / (4.0 * M_PI - alpha);
        double prev = 0.0;
        for (double delta : {1e-1, 1e-2, 1e-3}) {
            const auto us = rearrange_radial(bump_potential(g, delta));
            const double I = exp_integral(us, alpha, l1_norm(bump_data(g, delta)), g.V);
            CHECK(I < bound * (1.0 + 1e-9));
            CHECK(I > prev);
            prev = I;
        }
        CHECK(prev > bound * 0.98);
    }

    // compactly supported family against the doubled constant
    {
        const double delta = 1e-3, eps = 1e-3;
        const auto us = rearrange_radial(balanced_potential(g, delta, eps));
        const double l1 = l1_norm(balanced_data(g, delta, eps));
        for (double alpha : {4.0 * M_PI, 6.0 * M_PI}) {
            const double bound = 8.0 * M_PI * g.V / (8.0 * M_PI - alpha);
            const double I = exp_integral(us, alpha, l1, g.V);
            CHECK(I < bound * (1.0 + 1e-9));
            CHECK(I > bound * 0.9);
        }
    }
}

TEST_CASE("sharp Lq constant from the Gamma bracket") {
    const double kappa3 = green_infinite_coefficient(3);
    // Gamma(2) Gamma(2) / Gamma(3) = 1/2
    CHECK(mazya_constant(3, 1.0, 1.0) == doctest::Approx(0.5 * kappa3).epsilon(1e-14));

    // pole as q approaches the critical exponent (softened by the 1/q root)
    CHECK(mazya_constant(3, 2.999, 1.0) > mazya_constant(3, 2.9, 1.0));
    CHECK(mazya_constant(3, 3.0 - 1e-9, 1.0) > 1e2 * mazya_constant(3, 2.0, 1.0));
    CHECK_THROWS_AS(mazya_constant(3, 3.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mazya_constant(3, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(mazya_constant(2, 1.0, 1.0), std::domain_error);

    // bracket equals the rescaled kernel integral (two independent routes)
    for (int n : {3, 4}) {
        const double q_crit = double(n) / double(n - 2);
        for (double q : {1.0, 1.5, 2.5}) {
            if (!(q < q_crit)) continue;
            for (double V : {0.5, 1.0, 7.0}) {
                const double via_gamma = mazya_constant(n, q, V);
                const double via_quad = lq_norm(green_profile(n, V), q);
                CHECK(std::abs(via_gamma - via_quad) / via_gamma < 1e-8);
            }
        }
    }

    // compactly supported variant scales by 2^{-2/(qn)}
    CHECK(mazya_constant_compact(3, 1.5, 1.0) ==
          doctest::Approx(std::pow(2.0, -2.0 / 4.5) * mazya_constant(3, 1.5, 1.0))
              .epsilon(1e-15));
}

TEST_CASE("norm bounds on solved random data") {
    std::mt19937_64 rng(5);
    for (int n : {2, 3}) {
        const auto g = BallGeometry::from_radius(n, 1.0);
        for (int rep = 0; rep < 10; ++rep) {
            std::uniform_real_distribution<double> ur(0.1, 0.9), uv(-1.0, 1.0);
            std::vector<std::pair<double, double>> spec = {{ur(rng), uv(rng)},
                                                           {g.R, uv(rng)}};
            const auto f = piecewise_constant_radial(g, spec);
            const auto us = rearrange_radial(solve_radial(g, f));
            const double l1 = l1_norm(f);
            if (n == 2)
                CHECK(lexp_quasi_norm(us, g.V) <= l1 / (4.0 * M_PI) * (1.0 + 1e-9));
            else
                CHECK(weak_quasi_norm(us, n, g.V) <=
                      green_infinite_coefficient(n) * l1 * (1.0 + 1e-9));
        }
    }
}
