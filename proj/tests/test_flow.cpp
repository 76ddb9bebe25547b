#include <doctest.h>

#include <cmath>

#include "fracsphere/flow.hpp"

using namespace fracsphere;

namespace {
FlowConfig config(double s, double q, ZonalField root, double t_max)
{
    FlowConfig c;
    c.params = derive_params(1, s, q);
    c.init_root = std::move(root);
    c.t_max = t_max;
    return c;
}
} // namespace

TEST_SUITE("flow")
{
    TEST_CASE("entropy examples")
    {
        const auto b = zonal_basis(1, 16, 64);
        const VectorXd c = VectorXd::Constant(b->size(), 3.0);
        CHECK(std::abs(entropy_Eq(c, 4, *b)) <= 1e-15);
        const VectorXd root = synthesize(ZonalField::one_plus_eps_y1(1, 1e-3), *b);
        const VectorXd u = root.array().pow(4).matrix();
        CHECK(std::abs(entropy_Eq(u, 4, *b) / 1e-6 - 1) <= 1e-2);
        CHECK(std::abs(entropy_Eq(2 * u, 4, *b) - std::pow(2.0, 0.5) * entropy_Eq(u, 4, *b)) <= 1e-18);
        CHECK(entropy_Eq(u, 1.5, *b) > 0);
        CHECK_THROWS_AS(entropy_Eq(u, 2, *b), DomainError);
    }

    TEST_CASE("constants are steady")
    {
        const auto cfg = config(0.5, 4, ZonalField::constant(1, 1.0), 0.1);
        const FlowOperator op(cfg);
        auto st = op.initial_state();
        const VectorXd c0 = st.coeffs;
        for (int i = 0; i < 10; ++i)
            st = op.step(st);
        CHECK((st.coeffs - c0).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(std::abs(st.entropy) <= 1e-15);
    }

    TEST_CASE("one step decreases entropy and conserves mass")
    {
        const auto cfg = config(0.5, 4, ZonalField::one_plus_eps_y1(1, 0.05), 0.1);
        const FlowOperator op(cfg);
        const auto a = op.initial_state();
        const auto b = op.step(a);
        CHECK(b.entropy < a.entropy);
        CHECK(std::abs(b.mass - a.mass) <= 1e-15 * a.mass);
    }

    TEST_CASE("linear case decays each mode at its eigenvalue")
    {
        for (int k : {1, 3}) {
            VectorXd c = VectorXd::Zero(k + 1);
            c(0) = 1;
            c(k) = 0.1;
            const auto cfg = config(0.7, 1, ZonalField(1, c), 1.0);
            const FlowOperator op(cfg);
            auto st = op.initial_state();
            const double a0 = st.coeffs(k);
            for (int i = 0; i < 1000; ++i)
                st = op.step(st);
            const double rate = -std::log(st.coeffs(k) / a0);
            CHECK(std::abs(rate / delta_k(cfg.params, k) - 1) <= 1e-4);
        }
    }

    TEST_CASE("decay rate and bound")
    {
        const auto cfg = config(1.0, 4, ZonalField::one_plus_eps_y1(1, 0.01), 3.0);
        const auto series = run(cfg);
        CHECK(series.bound_ok);
        CHECK(series.max_mass_drift <= 1e-8);
        CHECK(series.clamp_events == 0);
        const double rate = fit_rate(series);
        CHECK(std::abs(rate / 2 - 1) <= 0.02);
        // mode 2 only: strictly faster than the spectral gap
        VectorXd c(3);
        c << 1, 0, 0.01;
        const auto cfg2 = config(0.5, 4, ZonalField(1, c), 2.0);
        const double rate2 = fit_rate(run(cfg2));
        CHECK(rate2 > 1.1 * 2 * delta_k(cfg2.params, 1));
    }

    TEST_CASE("fit_rate")
    {
        std::vector<double> t, e;
        for (int i = 0; i <= 30; ++i) {
            t.push_back(0.1 * i);
            e.push_back(std::exp(-3 * 0.1 * i));
        }
        CHECK(std::abs(fit_rate(t, e) - 3) <= 1e-12);
        CHECK_THROWS_AS(fit_rate(std::vector<double>(5, 1.0), std::vector<double>(5, 1.0)), InsufficientData);
    }

    TEST_CASE("configuration errors")
    {
        CHECK_THROWS_AS(FlowOperator(config(0.5, 4, ZonalField::mode(1, 1), 1.0)).initial_state(), DomainError);
        FlowConfig bad;
        bad.params = derive_params(2, 1, 3);
        bad.init_root = ZonalField::constant(2, 1.0);
        CHECK_THROWS_AS(FlowOperator{bad}, ParameterError);
        CHECK_THROWS_AS(FlowOperator(config(0.5, 2, ZonalField::constant(1, 1.0), 1.0)), ParameterError);
    }
}
