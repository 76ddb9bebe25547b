#include <cmath>
#include <limits>
#include <sstream>

#include "fracsphere/spectrum.hpp"

namespace fracsphere {

const char* to_string(OperatorKind kind)
{
    switch (kind) {
    case OperatorKind::K_s: return "K_s";
    case OperatorKind::L_s: return "L_s";
    case OperatorKind::A_s: return "A_s";
    case OperatorKind::K0_prime: return "K0_prime";
    case OperatorKind::InvK_s: return "InvK_s";
    case OperatorKind::R_qs: return "R_qs";
    }
    return "?";
}

OperatorKind operator_kind_from_string(const std::string& name)
{
    for (auto kind : {OperatorKind::K_s, OperatorKind::L_s, OperatorKind::A_s, OperatorKind::K0_prime,
                      OperatorKind::InvK_s, OperatorKind::R_qs})
        if (name == to_string(kind))
            return kind;
    throw ParameterError("unknown operator kind: " + name);
}

namespace {

void check_x(int n, double x)
{
    if (!(x > 0) || x > n) {
        std::ostringstream os;
        os.precision(17);
        os << "gamma_k: x = " << x << " outside (0, n] with n = " << n;
        throw DomainError(os.str());
    }
}

// ẽ_k with γ_k(x) − 1 = (n − 2x) ẽ_k.
double reduced_excess(int n, double x, int k)
{
    double e = 0;
    for (int j = 1; j <= k; ++j) {
        const double r = (n - x + j - 1) / (x + j - 1);
        e = e * r + 1.0 / (x + j - 1);
    }
    return e;
}

} // namespace

double gamma_k(int n, double x, int k)
{
    check_x(n, x);
    double g = 1;
    for (int j = 1; j <= k; ++j)
        g *= (n - x + j - 1) / (x + j - 1);
    return g;
}

double gamma_k_minus_one(int n, double x, int k)
{
    check_x(n, x);
    return (n - 2 * x) * reduced_excess(n, x, k);
}

double alpha_k(int n, double x, int k)
{
    if (!(x > 0) || !(x < n))
        throw DomainError("alpha_k: x must lie in (0, n)");
    double a = 0;
    for (int j = 0; j < k; ++j)
        a += 1.0 / (n + j - x) + 1.0 / (j + x);
    return a;
}

double delta_k(const ParameterSet& params, int k)
{
    if (params.regime == Regime::endpoint)
        return k == 0 ? 0.0 : gamma_ratio(double(params.n + k), double(k));
    if (params.regime != Regime::positive)
        throw ParameterError("delta_k is the L_s spectrum for 0 < s <= n");
    return gamma_k_minus_one(params.n, params.x_crit, k) / params.kappa;
}

double sharp_constant(int n, double s)
{
    if (s == 0)
        throw ZeroOrderError("s = 0 has no C_{q,s}; the zero-order inequalities use n/2 with the operator K0'");
    if (!(s > -n) || s > n)
        throw ParameterError("sharp_constant: s must lie in (-n, n]");
    if (s == n)
        return std::exp(-log_gamma(double(n) + 1));
    return (n - s) / (2 * std::abs(s)) * gamma_ratio(0.5 * (n - s), 0.5 * (n + s));
}

double slope(int n, double q, int k)
{
    if (!(q >= 1))
        throw DomainError("slope: q must be at least 1");
    if (q == 2)
        return 0.25 * n * alpha_k(n, 0.5 * n, k);
    const double x = n / q;
    return x * reduced_excess(n, x, k);
}

double operator_eigenvalue(OperatorKind kind, const ParameterSet& ps, int k)
{
    const int n = ps.n;
    switch (kind) {
    case OperatorKind::K_s:
        if (ps.regime == Regime::endpoint)
            throw ParameterError("K_s is not defined at s = n (kappa diverges)");
        return gamma_k(n, ps.x_crit, k);
    case OperatorKind::L_s:
        if (ps.regime == Regime::zero)
            throw ParameterError("L_s vanishes at s = 0; use K0_prime");
        if (ps.regime == Regime::negative)
            return -gamma_k_minus_one(n, ps.x_crit, k) / ps.kappa;
        return delta_k(ps, k);
    case OperatorKind::A_s:
        if (ps.regime == Regime::endpoint)
            throw ParameterError("A_s is not defined at s = n (kappa diverges)");
        return gamma_k(n, ps.x_crit, k) / ps.kappa;
    case OperatorKind::K0_prime:
        if (ps.regime != Regime::zero)
            throw ParameterError("K0_prime requires s = 0");
        return k == 0 ? 0.0 : 0.5 * alpha_k(n, 0.5 * n, k);
    case OperatorKind::InvK_s:
        if (ps.regime == Regime::endpoint)
            throw ParameterError("InvK_s is not defined at s = n");
        return gamma_k(n, 0.5 * (n + ps.s), k);
    case OperatorKind::R_qs:
        if (ps.regime != Regime::positive && ps.regime != Regime::endpoint)
            throw ParameterError("the remainder operator needs 0 < s <= n");
        if (!(ps.q < ps.q_star))
            throw ParameterError("the remainder operator needs q < q_star");
        if (k < 2)
            return 0.0;
        return ps.sharp_constant * delta_k(ps, k) - slope(n, ps.q, k);
    }
    throw ParameterError("unknown operator kind");
}

SpectrumTable spectrum_table(OperatorKind kind, const ParameterSet& params, int K)
{
    SpectrumTable t;
    t.kind = kind;
    t.values.resize(K + 1);
    for (int k = 0; k <= K; ++k)
        t.values(k) = operator_eigenvalue(kind, params, k);
    return t;
}

OperatorKind primary_operator(const ParameterSet& params)
{
    return params.regime == Regime::zero ? OperatorKind::K0_prime : OperatorKind::L_s;
}

ScanReport monotonicity_scan(int n, int k_max, const std::vector<double>& q_grid)
{
    for (std::size_t i = 0; i + 1 < q_grid.size(); ++i)
        if (!(q_grid[i] < q_grid[i + 1]) || !(q_grid[i] > 1))
            throw ParameterError("monotonicity_scan: q grid must be strictly increasing in (1, inf)");
    ScanReport rep;
    rep.n = n;
    rep.k_max = k_max;
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= k_max; ++k) {
        double prev = slope(n, q_grid.front(), k);
        for (std::size_t i = 1; i < q_grid.size(); ++i) {
            const double cur = slope(n, q_grid[i], k);
            const double gap = cur - prev;
            ++rep.comparisons;
            if (gap < rep.min_gap) {
                rep.min_gap = gap;
                rep.min_gap_k = k;
                rep.min_gap_q = q_grid[i - 1];
            }
            if (!(gap > 0))
                rep.violations.push_back({n, k, q_grid[i - 1], q_grid[i], gap});
            prev = cur;
        }
    }
    return rep;
}

std::vector<double> default_scan_grid()
{
    std::vector<double> g{1.01};
    for (int i = 11; i <= 199; ++i)
        g.push_back(i / 10.0);
    return g;
}

} // namespace fracsphere
