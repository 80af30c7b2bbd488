#include <doctest.h>

#include <cmath>

#include "rearr/green_kernel.hpp"
#include "rearr/profile.hpp"

using namespace rearr;

namespace {
constexpr double kQuarterPi = 0.07957747154594767;  // 1/(4 pi)
}

TEST_CASE("dimensional constants against rational multiples of pi") {
    CHECK(unit_sphere_measure(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(unit_sphere_measure(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
    CHECK(unit_sphere_measure(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-15));
    CHECK(unit_sphere_measure(5) ==
          doctest::Approx(8.0 * M_PI * M_PI / 3.0).epsilon(1e-15));

    const auto g3 = BallGeometry::from_radius(3, 2.0);
    CHECK(g3.V == doctest::Approx(4.0 / 3.0 * M_PI * 8.0).epsilon(1e-15));
    CHECK(g3.c_n == doctest::Approx(kQuarterPi).epsilon(1e-15));

    const auto g2 = BallGeometry::from_radius(2, 1.0);
    CHECK(g2.V == doctest::Approx(M_PI).epsilon(1e-15));
    CHECK(std::isnan(g2.c_n));

    const auto gv = BallGeometry::from_volume(3, g3.V);
    CHECK(gv.R == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("kernel radial profile") {
    const auto g2 = BallGeometry::from_radius(2, 1.0);
    CHECK(green_radial(g2, 1.0) == 0.0);

    const auto g3 = BallGeometry::from_radius(3, 1.0);
    // c_3 (1/0.5 - 1) = 1/(4 pi)
    CHECK(green_radial(g3, 0.5) == doctest::Approx(kQuarterPi).epsilon(1e-14));

    const auto ge = BallGeometry::from_radius(2, std::exp(1.0));
    CHECK(green_radial(ge, 1.0) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));

    CHECK(std::isinf(green_radial(g3, 0.0)));
    CHECK_THROWS_AS(green_radial(g3, 1.5), std::domain_error);
    CHECK_THROWS_AS(green_radial(g3, -0.1), std::domain_error);

    // strictly decreasing
    for (int n = 2; n <= 5; ++n) {
        const auto g = BallGeometry::from_radius(n, 1.7);
        double prev = green_radial(g, 1e-6);
        for (double r = 0.1; r < 1.7; r += 0.1) {
            const double v = green_radial(g, r);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("kernel rearrangement") {
    const auto g2 = BallGeometry::from_radius(2, 1.0);
    CHECK(green_rearranged(g2, g2.V) == 0.0);
    CHECK(green_rearranged(2, 1.0, std::exp(-4.0 * M_PI)) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // definitional identity N_V^*(|B_r|) = N(r)
    for (int n = 2; n <= 5; ++n) {
        const auto g = BallGeometry::from_radius(n, 1.3);
        for (double r : {0.01, 0.2, 0.77, 1.29}) {
            const double t = g.volume_of_radius(r);
            CHECK(green_rearranged(g, t) ==
                  doctest::Approx(green_radial(g, r)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(green_rearranged(2, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(green_rearranged(2, 1.0, 1.5), std::domain_error);
}

TEST_CASE("whole-space kernel rearrangement") {
    const double kappa3 = green_infinite_coefficient(3);
    CHECK(green_rearranged_infinite(3, 8.0) ==
          doctest::Approx(kappa3 * std::pow(8.0, -1.0 / 3.0)).epsilon(1e-15));

    // at the unit-ball volume the power cancels down to c_3
    const double t_unit = unit_sphere_measure(3) / 3.0;
    CHECK(green_rearranged_infinite(3, t_unit) ==
          doctest::Approx(kQuarterPi).epsilon(1e-14));

    // the finite-volume kernel differs by a t-independent constant
    for (int n = 3; n <= 5; ++n) {
        const double V = 7.0;
        const double expected =
            -green_infinite_coefficient(n) * std::pow(V, -weak_exponent(n));
        for (double t : {1e-6, 1e-3, 1.0, 6.9}) {
            CHECK(green_rearranged(n, V, t) - green_rearranged_infinite(n, t) ==
                  doctest::Approx(expected).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(green_rearranged_infinite(2, 1.0), std::domain_error);

    // monotone convergence from below as V grows
    for (double t : {0.01, 0.5}) {
        double prev = -1e300;
        for (double V : {1.0, 10.0, 1e3, 1e6}) {
            const double v = green_rearranged(3, V, t);
            CHECK(v > prev);
            CHECK(v < green_rearranged_infinite(3, t));
            prev = v;
        }
    }
}

TEST_CASE("kernel running average") {
    const double V = 2.5;
    CHECK(green_maximal(2, V, V) == doctest::Approx(kQuarterPi).epsilon(1e-14));

    // the closed forms hold exactly in every listed dimension
    for (int n : {2, 3, 4, 5}) {
        for (double t : {1e-8 * V, 1e-3 * V, 0.3 * V, V}) {
            double expected;
            if (n == 2) {
                expected = (1.0 + std::log(V / t)) / (4.0 * M_PI);
            } else {
                const double beta = weak_exponent(n);
                expected = green_infinite_coefficient(n) *
                           (0.5 * n * std::pow(t, -beta) - std::pow(V, -beta));
            }
            CHECK(green_maximal(n, V, t) == doctest::Approx(expected).epsilon(1e-12));
        }
    }

    // ratio to the rearrangement approaches n/2
    for (int n : {3, 4, 5}) {
        const double t = 1e-8 * V;
        const double ratio = green_maximal(n, V, t) / green_rearranged(n, V, t);
        CHECK(std::abs(ratio - 0.5 * n) < 1e-2);
    }

    // consistency with the profile-level running average
    for (int n : {2, 3, 4}) {
        const MonotoneProfile nv = green_profile(n, V);
        const MonotoneProfile nvv = maximal_function(nv);
        for (double t : geometric_grid(1e-10 * V, V, 40)) {
            CHECK(nvv.value(t) == doctest::Approx(green_maximal(n, V, t)).epsilon(1e-10));
        }
    }
}

TEST_CASE("kernel distribution function and the inversion identity") {
    const double V = 3.7;
    CHECK(green_distribution(2, V, 0.0) == doctest::Approx(V).epsilon(1e-15));
    CHECK(green_distribution(2, 1.0, kQuarterPi) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

    // the inversion N_V^*(lambda_V(s)) = s pins down the normalization of
    // alpha_n (unit-sphere measure, not unit-ball)
    for (int n : {3, 4, 5}) {
        for (double s : {0.1, 1.0, 10.0}) {
            const double lam = green_distribution(n, V, s);
            REQUIRE(lam > 0.0);
            REQUIRE(lam < V);
            CHECK(green_rearranged(n, V, lam) == doctest::Approx(s).epsilon(1e-12));
        }
    }

    // the same identity fails by a wide margin with the unit-ball variant
    {
        const int n = 3;
        const double s = 1.0;
        const double omega_ball = unit_sphere_measure(n) / n;
        const double alpha_wrong = (n - 2) * std::pow(double(n), weak_exponent(n)) *
                                   std::pow(omega_ball, 2.0 / n);
        const double lam = std::pow(
            alpha_wrong * s + std::pow(V, -weak_exponent(n)), -1.0 / weak_exponent(n));
        CHECK(std::abs(green_rearranged(n, V, lam) - s) > 1e-3);
    }

    CHECK_THROWS_AS(green_distribution(2, V, -1.0), std::domain_error);
}

TEST_CASE("split distribution sum") {
    const double V = 1.0;
    // flat in the split point when n = 2
    for (double s : {0.05, 0.7}) {
        const double whole = V * std::exp(-4.0 * M_PI * s);
        for (int k = 1; k < 1000; ++k) {
            const double V1 = V * k / 1000.0;
            CHECK(split_distribution_sum(2, V, s, V1) ==
                  doctest::Approx(whole).epsilon(1e-12));
        }
    }

    CHECK(split_distribution_sum(3, 1.0, 1.0, 0.5) >
          split_distribution_sum(3, 1.0, 1.0, 0.3));

    // maximized at the even split on a 1000-point grid
    for (int n : {3, 4}) {
        for (double s : {0.1, 1.0, 10.0}) {
            const double at_half = split_distribution_sum(n, V, s, 0.5 * V);
            for (int k = 1; k < 1000; ++k) {
                const double V1 = V * k / 1000.0;
                CHECK(split_distribution_sum(n, V, s, V1) <= at_half * (1.0 + 1e-12));
            }
        }
    }

    // the even split agrees with the closed-form doubled-rate expression
    for (int n : {3, 4, 5}) {
        const double beta = weak_exponent(n);
        const double alpha_n = (n - 2) * std::pow(double(n), beta) *
                               std::pow(unit_sphere_measure(n), 2.0 / n);
        for (double s : {0.2, 2.0}) {
            const double lhs = split_distribution_sum(n, V, s, 0.5 * V);
            const double rhs =
                std::pow(std::pow(2.0, 2.0 / n) * alpha_n * (0.5 * s) +
                             std::pow(V, -beta),
                         -1.0 / beta);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }

    CHECK_THROWS_AS(split_distribution_sum(3, 1.0, 1.0, 1.5), std::domain_error);
}
