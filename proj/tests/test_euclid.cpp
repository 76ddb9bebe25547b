#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracsphere/euclid.hpp"

using namespace fracsphere;

TEST_SUITE("euclid")
{
    TEST_CASE("stereographic projection")
    {
        for (int n = 1; n <= 3; ++n) {
            const auto p = stereo_inverse(VectorXd::Zero(n));
            CHECK(p.zeta(n) == 1);
            CHECK(p.zeta.head(n).norm() == 0);
            CHECK(p.jacobian == std::pow(2.0, n));
            VectorXd x = VectorXd::Zero(n);
            x(0) = 1;
            CHECK(std::abs(stereo_inverse(x).zeta(n)) <= 1e-16);
            VectorXd y = VectorXd::LinSpaced(n, -0.7, 2.3);
            CHECK(std::abs(stereo_inverse(y).zeta.norm() - 1) <= 1e-14);
        }
        // ∫ |J| dx over R equals |S^1|
        const GridField J = sample(GridSpec{4096, 1 << 16}, [](double x) { return 2 / (1 + x * x); });
        CHECK(std::abs(line_integral(J).value / sphere_area(1) - 1) <= 1e-9);
    }

    TEST_CASE("pushforward of constants")
    {
        const auto ps = derive_params(1, 0.5, 3);
        const GridSpec g{20, 256};
        const auto f = pushforward(ZonalField::constant(1, 1.0), ps, g);
        for (Index j = 0; j < g.N; ++j) {
            const double x = g.x(j);
            CHECK(std::abs(f.values(j) - std::pow(2.0, 1 / ps.q_star) * std::pow(1 + x * x, -0.25)) <= 1e-14);
        }
        CHECK(std::abs(f.values(128) - std::pow(2.0, 1 / ps.q_star)) <= 1e-15);
    }

    TEST_CASE("weighted norms")
    {
        const GridSpec g{4096, 1 << 16};
        CHECK(std::abs(std::pow(weighted_norm(fstar(0.5, g), 2, 1.0), 2) - std::numbers::pi) <= 1e-8);
        const GridField gauss = sample(g, [](double x) { return std::exp(-x * x / 8) + 1e-6 / (1 + x * x); });
        const double plain = weighted_norm(gauss, 2, 0);
        const VectorXd v2 = gauss.values.cwiseProduct(gauss.values);
        CHECK(std::abs(plain * plain - line_integral({g, v2}).value) <= 1e-14 * plain * plain);
        CHECK(weighted_norm({g, VectorXd::Zero(g.N)}, 3, 1) == 0);
    }

    TEST_CASE("norm transport")
    {
        const auto ps = derive_params(1, 0.5, 3);
        VectorXd c(3);
        c << 1, 0.3, -0.1;
        const ZonalField F(1, c);
        const auto f = pushforward(F, ps, GridSpec{4096, 1 << 17});
        const double lhs = weighted_norm(f, ps.q_star, 0);
        const double rhs = std::pow(sphere_area(1), 1 / ps.q_star) * lq_norm(F, ps.q_star);
        CHECK(std::abs(lhs / rhs - 1) <= 1e-6);
    }

    TEST_CASE("Gaussian quadratic form")
    {
        for (double s : {0.5, 1.3}) {
            const GridSpec g{16, 1 << 12};
            const GridField f = sample(g, [](double x) { return std::exp(-std::numbers::pi * x * x); });
            const GridField D = frac_laplacian_oracle(f, s);
            const double form = D.values.dot(f.values) * g.dx();
            const double exact = std::pow(2 * std::numbers::pi, 0.5 * (s - 1)) * std::tgamma(0.5 * (s + 1));
            CHECK(std::abs(form / exact - 1) <= 1e-10);
        }
    }

    TEST_CASE("oracle identity and linearity")
    {
        const GridSpec g{16, 1 << 10};
        const GridField f = sample(g, [](double x) { return std::exp(-x * x); });
        const GridField h = sample(g, [](double x) { return x * std::exp(-x * x / 2); });
        CHECK((frac_laplacian_oracle(f, 0).values - f.values).norm() == 0);
        CHECK((frac_laplacian_oracle(f, 1e-9).values - f.values).cwiseAbs().maxCoeff() <= 1e-7);
        const GridField sum(g, f.values + h.values);
        const VectorXd lin = frac_laplacian_oracle(sum, 0.6).values - frac_laplacian_oracle(f, 0.6).values -
                             frac_laplacian_oracle(h, 0.6).values;
        CHECK(lin.cwiseAbs().maxCoeff() <= 1e-12);
        const GridField slow = sample(g, [](double x) { return 1 / (1 + x * x); });
        CHECK_THROWS_AS(frac_laplacian_oracle(slow, 0.5), TruncationError);
        CHECK_THROWS_AS(frac_laplacian_oracle(f, 2.5), DomainError);
    }

    TEST_CASE("eigenvalues and residuals")
    {
        for (double s : {0.3, 0.7}) {
            const auto ps = derive_params(1, s, 1.5);
            CHECK(std::abs(euclid_eigenvalue(0, 1, s) - std::pow(2.0, s) / ps.kappa) <= 1e-14);
            for (int k = 0; k <= 6; ++k)
                CHECK(std::abs(euclid_eigenvalue(k, 1, s) / euclid_eigenvalue(0, 1, s) - gamma_k(1, ps.x_crit, k)) <= 1e-13);
        }
        CHECK(eigen_residual(0, 1, 0.5, default_eigen_grid()) <= 1e-3);
        CHECK_THROWS_AS(eigen_residual(0, 2, 0.5, default_eigen_grid()), ParameterError);
        CHECK_THROWS_AS(eigen_residual(7, 1, 0.5, default_eigen_grid()), ParameterError);
        CHECK_THROWS_AS(eigen_residual(0, 1, 0.5, GridSpec{60, 1000}), TruncationError);
    }

    TEST_CASE("conformal quadratic form")
    {
        const auto ps = derive_params(1, 0.5, 3);
        VectorXd c(3);
        c << 1, 0.2, 0.1;
        const ZonalField F(1, c);
        const auto f = pushforward(F, ps, default_thm16_grid());
        const GridField D = frac_laplacian_tail_oracle(f, ps.s);
        const Index lo = f.size() / 2 - f.size() / 8;
        const double euclid = line_integral({D.grid, f.values.segment(lo, D.size()).cwiseProduct(D.values)}).value;
        const double sphere = sphere_area(1) * quadratic_form(F, OperatorKind::A_s, ps);
        CHECK(std::abs(euclid / sphere - 1) <= 1e-3);
    }

    TEST_CASE("weighted inequality coefficients")
    {
        const auto c = thm16_coefficients(1, 0.5, 2);
        CHECK(c.a == 0);
        CHECK(std::abs(c.b - 1) <= 1e-14);
        CHECK(std::abs(c.beta - 1.0) <= 1e-14);
        const auto e = euclid_params(1, 0.5, 3);
        CHECK(e.a > 0);
        CHECK(e.b > 0);
        CHECK_THROWS_AS(euclid_params(1, 0.5, 4), ParameterError);
        CHECK_THROWS_AS(euclid_params(1, 0.5, 1.5), ParameterError);
    }

    TEST_CASE("weighted inequality on trial fields")
    {
        const auto ep = euclid_params(1, 0.5, 3);
        const auto eq = thm16_deficit(fstar(0.5, default_thm16_grid()), ep);
        CHECK(std::abs(eq.deficit) <= euclid_tolerance);
        const auto pert = thm16_deficit(euclid_family("fstar_odd", 0.5, default_thm16_grid()), ep);
        CHECK(pert.deficit > 0);
        CHECK_THROWS_AS(euclid_family("nope", 0.5, default_thm16_grid()), ParameterError);
    }
}
