#include <doctest.h>

#include <cmath>
#include <random>

#include "rearr/extremal_families.hpp"
#include "rearr/radial_poisson.hpp"

using namespace rearr;

TEST_CASE("kernel shell integrals in closed form") {
    for (int n : {2, 3, 4, 5}) {
        const auto g = BallGeometry::from_radius(n, 1.3);
        CHECK(integrate_green_shell(g, 0.4, 0.4) == 0.0);

        // quadrature oracle over random shells
        std::mt19937_64 rng(5 + n);
        std::uniform_real_distribution<double> ur(0.0, g.R);
        for (int k = 0; k < 6; ++k) {
            double a = ur(rng), b = ur(rng);
            if (a > b) std::swap(a, b);
            const double quad = tanh_sinh(
                [&](double r, double) {
                    return g.omega * green_radial(g, r) * std::pow(r, n - 1.0);
                },
                a, b, 1e-13);
            CHECK(integrate_green_shell(g, a, b) ==
                  doctest::Approx(quad).epsilon(1e-10));
        }
    }
    // full-ball values: R^2/4 in the plane, R^2/6 in space
    for (double R : {1.0, 2.5}) {
        const auto g2 = BallGeometry::from_radius(2, R);
        CHECK(integrate_green_shell(g2, 0.0, R) ==
              doctest::Approx(R * R / 4.0).epsilon(1e-14));
        const auto g3 = BallGeometry::from_radius(3, R);
        CHECK(integrate_green_shell(g3, 0.0, R) ==
              doctest::Approx(R * R / 6.0).epsilon(1e-14));
    }
    const auto g = BallGeometry::from_radius(3, 1.0);
    CHECK_THROWS_AS(integrate_green_shell(g, 0.5, 0.2), std::domain_error);
    CHECK_THROWS_AS(integrate_green_shell(g, 0.0, 1.5), std::domain_error);
}

TEST_CASE("constant data solves to the parabolic profile") {
    // -Delta v = 1 with zero boundary: v = (R^2 - rho^2) / (2n)
    for (int n : {2, 3, 4}) {
        const auto g = BallGeometry::from_radius(n, 1.7);
        const auto f = piecewise_constant_radial(
            g, std::vector<std::pair<double, double>>{{g.R, 1.0}});
        const auto v = solve_radial(g, f);
        for (double rho : {0.05, 0.6, 1.2, 1.7}) {
            CHECK(v.value(rho) ==
                  doctest::Approx((g.R * g.R - rho * rho) / (2.0 * n)).epsilon(1e-13));
        }
        // the symbolic residual reproduces the data
        const auto residual = radial_laplacian_negated(v);
        for (double rho : {0.1, 0.9, 1.5})
            CHECK(residual.value(rho) == doctest::Approx(1.0).epsilon(1e-13));
    }
    // zero data
    const auto g3 = BallGeometry::from_radius(3, 1.0);
    const auto z = solve_radial(
        g3, piecewise_constant_radial(
                g3, std::vector<std::pair<double, double>>{{1.0, 0.0}}));
    for (double rho : {0.2, 1.0}) CHECK(z.value(rho) == 0.0);
}

TEST_CASE("normalized bump data solves to the kernel outside the bump") {
    for (int n : {2, 3, 5}) {
        const auto g = BallGeometry::from_radius(n, 1.0);
        const double delta = 0.23;
        const auto U = bump_potential(g, delta);
        for (double rho : {0.23, 0.4, 0.77, 1.0}) {
            CHECK(U.value(rho) == doctest::Approx(green_radial(g, rho)).epsilon(1e-13));
        }
        // inside: the paper-form expression through the shell integral
        const double volb = g.volume_of_radius(delta);
        for (double rho : {0.02, 0.1, 0.2, 0.2299}) {
            const double expected =
                std::pow(rho / delta, n) * green_radial(g, rho) +
                integrate_green_shell(g, rho, delta) / volb;
            CHECK(U.value(rho) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("L1 norms of the extremal data") {
    const auto g3 = BallGeometry::from_radius(3, 1.0);
    CHECK(l1_norm(bump_data(g3, 0.1)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(l1_norm(balanced_data(g3, 0.1, 0.05)) == doctest::Approx(1.0).epsilon(1e-13));
    const auto ones = piecewise_constant_radial(
        g3, std::vector<std::pair<double, double>>{{1.0, 1.0}});
    CHECK(l1_norm(ones) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-13));
}

TEST_CASE("signed mass split") {
    const auto g3 = BallGeometry::from_radius(3, 1.0);
    {
        const auto [p, m] = signed_mass_split(balanced_data(g3, 0.1, 0.05));
        CHECK(p == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(m == doctest::Approx(0.5).epsilon(1e-13));
    }
    {
        const auto [p, m] = signed_mass_split(bump_data(g3, 0.1));
        CHECK(p == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(m == doctest::Approx(0.0));
    }
    {
        const auto zero = piecewise_constant_radial(
            g3, std::vector<std::pair<double, double>>{{1.0, 0.0}});
        const auto [p, m] = signed_mass_split(zero);
        CHECK(p == 0.0);
        CHECK(m == 0.0);
    }
}

TEST_CASE("solver invariants on random piecewise-constant data") {
    std::mt19937_64 rng(99);
    for (int n : {2, 3, 4}) {
        const auto g = BallGeometry::from_radius(n, 1.0);
        for (int rep = 0; rep < 20; ++rep) {
            std::uniform_int_distribution<int> us(1, 8);
            std::uniform_real_distribution<double> ur(0.05, 0.95), uv(-1.0, 1.0);
            const int shells = us(rng);
            std::vector<double> radii;
            for (int i = 0; i + 1 < shells; ++i) radii.push_back(ur(rng));
            radii.push_back(g.R);
            std::sort(radii.begin(), radii.end());
            std::vector<std::pair<double, double>> spec;
            for (double r : radii) spec.emplace_back(r, uv(rng));
            const auto f = piecewise_constant_radial(g, spec);
            const auto v = solve_radial(g, f);
            const double l1 = l1_norm(f);
            const double scale = std::max(radial_sup_abs(v), 1e-300);

            // boundary value
            CHECK(std::abs(v.value(g.R)) <= 1e-12 * std::max(scale, l1));

            // symbolic residual, spot-checked at 1000 interior points
            const auto residual = radial_laplacian_negated(v);
            for (int k = 1; k < 1000; ++k) {
                const double rho = g.R * k / 1000.0;
                const double want = f.value(rho);
                CHECK(residual.value(rho) ==
                      doctest::Approx(want).epsilon(1e-9).scale(1.0));
            }

            // pointwise kernel bound
            for (int k = 1; k <= 64; ++k) {
                const double rho = g.R * k / 64.0 * 0.999;
                CHECK(std::abs(v.value(rho)) <=
                      green_radial(g, rho) * l1 * (1.0 + 1e-12) + 1e-13 * scale);
            }
        }
    }
}

TEST_CASE("half-mass bound and monotonicity") {
    std::mt19937_64 rng(123);
    for (int n : {2, 3}) {
        const auto g = BallGeometry::from_radius(n, 1.0);

        // zero-mean data: |v| <= (1/2) N ||f||_1
        for (int rep = 0; rep < 10; ++rep) {
            std::uniform_real_distribution<double> ur(0.1, 0.6), uv(-1.0, 1.0);
            const double r1 = ur(rng);
            const double val = uv(rng);
            const double mass = val * g.volume_of_radius(r1);
            const double ann_vol = g.V - g.volume_of_radius(0.7);
            const std::vector<std::pair<double, double>> spec = {
                {r1, val}, {0.7, 0.0}, {g.R, -mass / ann_vol}};
            const auto f = piecewise_constant_radial(g, spec);
            const auto v = solve_radial(g, f);
            const double l1 = l1_norm(f);
            for (int k = 1; k < 64; ++k) {
                const double rho = g.R * k / 64.0;
                CHECK(std::abs(v.value(rho)) <=
                      0.5 * green_radial(g, rho) * l1 * (1.0 + 1e-11) + 1e-14);
            }
        }

        // nonnegative data: v non-increasing
        const auto f = piecewise_constant_radial(
            g, std::vector<std::pair<double, double>>{{0.3, 2.0}, {0.8, 0.5}, {1.0, 1.0}});
        const auto v = solve_radial(g, f);
        double prev = v.value(1e-9);
        for (int k = 1; k <= 512; ++k) {
            const double rho = g.R * k / 512.0;
            const double val = v.value(rho);
            CHECK(val <= prev * (1.0 + 1e-12) + 1e-15);
            prev = val;
        }
    }
}

TEST_CASE("quadrature fallback for general data") {
    for (int n : {2, 3}) {
        const auto g = BallGeometry::from_radius(n, 1.0);
        // manufactured solution v = cos(rho) - cos(R)
        RadialProfile f;
        f.geom = g;
        RadialSegment s;
        s.r_lo = 0.0;
        s.r_hi = g.R;
        s.generic = true;
        s.eval = [n](double r) {
            return std::cos(r) + (n - 1) * (r < 1e-8 ? 1.0 - r * r / 6.0
                                                     : std::sin(r) / r);
        };
        f.segments.push_back(std::move(s));
        const auto v = solve_radial(g, f);
        for (double rho : {0.1, 0.45, 0.9}) {
            CHECK(v.value(rho) ==
                  doctest::Approx(std::cos(rho) - std::cos(g.R)).epsilon(1e-9));
        }
    }
}
