#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracsphere/random.hpp"
#include "fracsphere/specfun.hpp"

using namespace fracsphere;

namespace {
double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}
} // namespace

TEST_SUITE("specfun")
{
    TEST_CASE("log_gamma at exact points")
    {
        CHECK(log_gamma(1.0) == 0.0);
        CHECK(rel(log_gamma(0.5), 0.5 * std::log(std::numbers::pi)) <= 1e-13);
        CHECK(rel(log_gamma(5.0), std::log(24.0)) <= 1e-13);
        CHECK(rel(log_gamma(0.1), std::lgamma(0.1)) <= 1e-13);
        CHECK(rel(log_gamma(123.456), std::lgamma(123.456)) <= 1e-13);
        CHECK_THROWS_AS(log_gamma(0.0), DomainError);
        CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
        CHECK_THROWS_AS(log_gamma(INFINITY), DomainError);
    }

    TEST_CASE("gamma_ratio")
    {
        CHECK(rel(gamma_ratio(2.5, 0.5), 0.75) <= 1e-13);
        CHECK(rel(gamma_ratio(3.5, 1.5), 3.75) <= 1e-13);
        CHECK(rel(gamma_ratio(0.25, 0.75), 2.95867511918863889) <= 1e-13);
        CHECK_THROWS_AS(gamma_ratio(-1.0, 2.0), DomainError);
        for (double a : {0.1, 0.5, 1.3, 7.25, 40.5})
            CHECK(rel(gamma_ratio(a + 1, a), a) <= 1e-13);
        // integer offsets agree with the product recurrence
        for (double a : {0.3, 2.7}) {
            double prod = 1;
            for (int j = 0; j < 9; ++j)
                prod *= a + j;
            CHECK(rel(gamma_ratio(a + 9, a), prod) <= 1e-13);
        }
    }

    TEST_CASE("gegenbauer values and recurrence")
    {
        CHECK(gegenbauer(0, 0.7, 0.2) == 1.0);
        CHECK(gegenbauer(1, 0.5, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
        CHECK(gegenbauer(4, 0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(gegenbauer(5, 0.0, std::cos(0.4)) == doctest::Approx(std::cos(2.0)).epsilon(1e-13));
        CHECK_THROWS_AS(gegenbauer(2, 0.5, 1.5), DomainError);
        Rng rng(11);
        for (int i = 0; i < 50; ++i) {
            const int k = rng.integer(2, 30);
            const double a = rng.uniform(0.1, 3.0), z = rng.uniform(-1, 1);
            const double lhs = k * gegenbauer(k, a, z);
            const double rhs = 2 * (k + a - 1) * z * gegenbauer(k - 1, a, z) - (k + 2 * a - 2) * gegenbauer(k - 2, a, z);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }

    TEST_CASE("gauss_jacobi examples")
    {
        const auto r1 = gauss_jacobi<double>(1, 0.0, 0.0);
        CHECK(std::abs(r1.nodes(0)) <= 1e-15);
        CHECK(r1.weights(0) == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(gauss_jacobi<double>(20, 0.0, 0.0).weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
        const double mass = 4.0 / 3.0 * std::pow(2.0, 0.75);
        CHECK(rel(gauss_jacobi<double>(16, -0.25, 0.0).weights.sum(), mass) <= 1e-13);
        CHECK_THROWS_AS(gauss_jacobi<double>(4, -1.0, 0.0), DomainError);
        CHECK_THROWS_AS(gauss_jacobi<double>(0, 0.0, 0.0), DomainError);
    }

    TEST_CASE("gauss_jacobi invariants")
    {
        for (auto [a, b] : {std::pair{0.5, 0.5}, std::pair{-0.5, -0.5}, std::pair{-0.25, 0.5}, std::pair{1.5, 0.0},
                            std::pair{-0.9, 2.0}}) {
            const int m = 24;
            const auto r = gauss_jacobi<double>(m, a, b);
            for (Index i = 0; i < m; ++i) {
                CHECK(r.weights(i) > 0);
                CHECK(r.nodes(i) > -1);
                CHECK(r.nodes(i) < 1);
                if (i > 0)
                    CHECK(r.nodes(i) > r.nodes(i - 1));
            }
            // exactness on z^j, j <= 2m-1, against the Beta-function moments computed from P_j of z = 2u - 1
            for (int j = 0; j <= 2 * m - 1; j += 5) {
                double quad = 0;
                for (Index i = 0; i < m; ++i)
                    quad += r.weights(i) * std::pow((1 + r.nodes(i)) / 2, j);
                // ∫ ((1+z)/2)^j (1−z)^a (1+z)^b dz = 2^{a+b+1} B(b+j+1, a+1)
                const double exact = std::exp((a + b + 1) * std::log(2.0) + log_gamma(b + j + 1) + log_gamma(a + 1) -
                                              log_gamma(a + b + j + 2));
                CHECK(rel(quad, exact) <= 1e-12);
            }
        }
    }

    TEST_CASE("sphere rule is a probability measure")
    {
        for (int n = 1; n <= 6; ++n) {
            const auto r = sphere_rule(n, 64);
            CHECK(std::abs(r.probability_weights().sum() - 1) <= 1e-14);
        }
        CHECK(sphere_area(1) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-14));
        CHECK(sphere_area(2) == doctest::Approx(4 * std::numbers::pi).epsilon(1e-14));
    }

    TEST_CASE("quadrature convergence of a smooth non-polynomial integrand")
    {
        // ∫ e^z (1−z)^{−1/4} dz
        for (int m = 64; m <= 128; m *= 2) {
            auto integral = [](int mm) {
                const auto r = gauss_jacobi<double>(mm, -0.25, 0.0);
                return r.weights.dot(r.nodes.array().exp().matrix());
            };
            CHECK(std::abs(integral(2 * m) - integral(m)) < 1e-12);
            CHECK(rel(integral(m), 3.04770565690403038) <= 1e-13);
        }
    }

    TEST_CASE("hurwitz_zeta")
    {
        CHECK(rel(hurwitz_zeta(2.0, 1.0), std::numbers::pi * std::numbers::pi / 6) <= 1e-13);
        // ζ(s, 1/2) = (2^s − 1) ζ(s)
        CHECK(rel(hurwitz_zeta(2.0, 0.5), 3 * std::numbers::pi * std::numbers::pi / 6) <= 1e-13);
        CHECK(rel(hurwitz_zeta(1.5, 1.0), 2.6123753486854883) <= 1e-13);
    }
}
