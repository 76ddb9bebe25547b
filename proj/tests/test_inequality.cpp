#include <doctest.h>

#include <cmath>

#include "fracsphere/inequality.hpp"

using namespace fracsphere;

TEST_SUITE("inequality")
{
    TEST_CASE("constants are equality cases")
    {
        const auto ps = derive_params(3, 2, 4);
        const auto r = deficit(InequalityKind::interpolation, ZonalField::constant(3, 1.0), ps);
        CHECK(std::abs(r.lhs) <= 1e-15);
        CHECK(r.rhs == 0);
        CHECK(std::abs(r.deficit) <= 1e-15);
        CHECK(r.equality_case);
        const auto sq = deficit_square(ZonalField::constant(1, 1.0), derive_params(1, 0.5, 2));
        CHECK(std::abs(sq.lhs) <= 1e-12);
        CHECK(std::abs(sq.rhs) <= 1e-12);
    }

    TEST_CASE("interpolation deficit vanishes faster than the square of the amplitude")
    {
        const auto ps = derive_params(3, 2, 4);
        const auto big = deficit(InequalityKind::interpolation, ZonalField::one_plus_eps_y1(3, 0.3), ps);
        CHECK(big.deficit > 0);
        double prev = big.deficit;
        for (double eps : {0.15, 0.075}) {
            const double d = deficit(InequalityKind::interpolation, ZonalField::one_plus_eps_y1(3, eps), ps).deficit;
            CHECK(d > 0);
            CHECK(prev / d >= 7.0);
            prev = d;
        }
    }

    TEST_CASE("improved inequality subtracts the remainder form")
    {
        const auto ps = derive_params(2, 1, 3);
        VectorXd c(5);
        c << 1, 0.2, -0.15, 0.05, 0.02;
        const ZonalField f(2, c);
        const auto plain = deficit(InequalityKind::interpolation, f, ps);
        const auto imp = deficit(InequalityKind::improved, f, ps);
        double rem = 0;
        for (int k = 2; k <= 4; ++k)
            rem += operator_eigenvalue(OperatorKind::R_qs, ps, k) * c(k) * c(k);
        CHECK(imp.deficit < plain.deficit);
        CHECK(std::abs(plain.deficit - imp.deficit - rem) <= 1e-14);
        CHECK(imp.deficit >= 0);
    }

    TEST_CASE("poincare equality on affine fields")
    {
        for (auto [n, s] : {std::pair{1, 0.5}, std::pair{3, 2.0}, std::pair{2, -1.0}, std::pair{2, 0.0}}) {
            const auto ps = derive_params(n, s);
            VectorXd c(2);
            c << 1.3, -0.6;
            const auto r = deficit(InequalityKind::poincare, ZonalField(n, c), ps);
            CHECK(std::abs(r.deficit) <= 1e-12);
            CHECK(r.equality_case);
        }
    }

    TEST_CASE("inadmissible combinations")
    {
        const auto f = ZonalField::one_plus_eps_y1(2, 0.1);
        CHECK_THROWS_AS(deficit(InequalityKind::interpolation, f, derive_params(2, 1, 2)), ParameterError);
        CHECK_THROWS_AS(deficit(InequalityKind::hls, f, derive_params(2, 1, 2)), ParameterError);
        CHECK_THROWS_AS(deficit(InequalityKind::sobolev, f, derive_params(2, -1, 1.2)), ParameterError);
        CHECK_THROWS_AS(deficit(InequalityKind::logsob_critical, f, derive_params(2, 1, 2)), ParameterError);
        CHECK_THROWS_AS(deficit(InequalityKind::improved, f, derive_params(2, 1, 4)), ParameterError);
        CHECK_THROWS_AS(deficit(InequalityKind::interpolation, ZonalField::constant(2, 0.0), derive_params(2, 1, 3)),
                        DomainError);
        CHECK_THROWS_AS(deficit_square(ZonalField::one_plus_eps_y1(1, 0.9), derive_params(1, 0.5, 2)), DomainError);
    }

    TEST_CASE("duality estimate")
    {
        const auto ps = derive_params(1, 0.5, 2);
        const auto r = deficit_square(ZonalField::one_plus_eps_y1(1, 0.2), ps);
        CHECK(r.deficit >= 0);
        CHECK(r.lhs > 0);
        // ∫G K_s^{-1} G through the Riesz kernel |ζ−η|^{−(n−s)}
        for (auto [n, s] : {std::pair{1, 0.5}, std::pair{2, 1.2}, std::pair{3, 1.0}}) {
            const auto p = derive_params(n, s, 2);
            VectorXd c(3);
            c << 1, 0.25, -0.1;
            const auto G = critical_power(ZonalField(n, c), p, 8);
            const double lambda = n - s;
            const double A = funk_hecke_mu(n, lambda, 0).closed_form;
            const double viaKernel = riesz_energy(G, lambda) / A;
            const double viaSpectrum = quadratic_form(G, OperatorKind::InvK_s, p);
            CHECK(std::abs(viaKernel - viaSpectrum) <= 1e-8 * viaSpectrum);
        }
    }

    TEST_CASE("funk_hecke examples")
    {
        const auto a = funk_hecke_mu(2, 1.0, 0);
        CHECK(std::abs(a.quadrature - 1) <= 1e-12);
        CHECK(std::abs(a.closed_form - 1) <= 1e-12);
        const auto b = funk_hecke_mu(3, 1.5, 3);
        CHECK(std::abs(b.quadrature - 0.100223590447071398) <= 1e-9 * 0.1);
        CHECK(std::abs(b.closed_form - 0.100223590447071398) <= 1e-12);
        CHECK_THROWS_AS(funk_hecke_mu(2, 2.0, 1), DomainError);
    }

    TEST_CASE("linearization probe")
    {
        const auto ps = derive_params(3, 2, 4);
        double prev = INFINITY;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const double v = linearization_probe(ps, eps);
            CHECK(v >= -1e-10);
            CHECK(std::abs(v) < prev);
            prev = std::abs(v);
        }
        CHECK(std::abs(linearization_probe(ps, 1e-4)) <= 1e-3);
        CHECK(std::abs(linearization_probe(derive_params(2, 1, 2), 1e-3)) <= 5e-3);
        CHECK_THROWS_AS(linearization_probe(ps, 0.2), DomainError);
    }

    TEST_CASE("taylor remainder examples")
    {
        const auto z = taylor_remainder(0.0, 3.5);
        CHECK(z.r == 0);
        CHECK(z.within_bound);
        const auto m = taylor_remainder(-1.0, 3.0);
        CHECK(std::abs(m.r + 1) <= 1e-15);
        CHECK(m.within_bound);
        const auto h = taylor_remainder(0.5, 4.0);
        CHECK(std::abs(h.r - 0.5625) <= 1e-15);
        CHECK(std::abs(h.bound - 1.0) <= 1e-15);
        CHECK(h.within_bound);
        CHECK(h.sign_ok);
        CHECK_THROWS_AS(taylor_remainder(0.1, 2.0), DomainError);
        CHECK(taylor_case_one_constant(2.5) == 1);
    }

    TEST_CASE("seeded suite")
    {
        const auto a = random_suite(90, 42), b = random_suite(90, 42);
        REQUIRE(a.size() == 90);
        std::size_t equalities = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].field.coeffs == b[i].field.coeffs);
            const auto r = evaluate(a[i]);
            CHECK(r.holds(1e-10));
            if (a[i].expected_equality) {
                ++equalities;
                CHECK(std::abs(r.deficit) <= 1e-10 * std::max(1.0, std::abs(r.rhs)));
            }
        }
        CHECK(equalities > 0);
    }

    TEST_CASE("deficit tolerance default")
    {
        if (!std::getenv("FRACSPHERE_TOL"))
            CHECK(deficit_tolerance() == 1e-10);
    }
}
