#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fracsphere/errors.hpp"

namespace fracsphere {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Eigen::Index;
using Eigen::VectorXd;
using Eigen::MatrixXd;

namespace detail {

// Godfrey's coefficients for g = 607/128, 15 terms.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

template <typename Scalar>
bool is_small_integer(Scalar x, int limit)
{
    using std::abs;
    using std::nearbyint;
    return abs(x) <= Scalar(limit) && nearbyint(x) == x;
}

} // namespace detail

/// ln Γ(x) for x > 0.
template <typename Scalar>
Scalar log_gamma(Scalar x)
{
    using std::log;
    using std::sin;
    using std::isfinite;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (!isfinite(x) || !(x > Scalar(0)))
        throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(double(x)));
    if (detail::is_small_integer(x, 30)) {
        Scalar acc = 0;
        for (int j = 2; j < int(x); ++j)
            acc += log(Scalar(j));
        return acc;
    }
    if (x < Scalar(0.5))
        return log(pi / sin(pi * x)) - log_gamma(Scalar(1) - x);
    const Scalar y = x - Scalar(1);
    Scalar a = Scalar(detail::lanczos_c[0]);
    for (std::size_t i = 1; i < detail::lanczos_c.size(); ++i)
        a += Scalar(detail::lanczos_c[i]) / (y + Scalar(i));
    const Scalar t = y + Scalar(detail::lanczos_g) + Scalar(0.5);
    return Scalar(0.5) * log(Scalar(2) * pi) + (y + Scalar(0.5)) * log(t) - t + log(a);
}

/// Γ(a)/Γ(b). Integer offsets b − a = m use the exact product.
template <typename Scalar>
Scalar gamma_ratio(Scalar a, Scalar b)
{
    using std::exp;
    if (!(a > Scalar(0)) || !(b > Scalar(0)))
        throw DomainError("gamma_ratio: arguments must be positive");
    const Scalar m = b - a;
    if (detail::is_small_integer(m, 64)) {
        Scalar prod = 1;
        if (m >= 0) {
            for (int j = 0; j < int(m); ++j)
                prod *= a + Scalar(j);
            return Scalar(1) / prod;
        }
        for (int j = 0; j < int(-m); ++j)
            prod *= b + Scalar(j);
        return prod;
    }
    return exp(log_gamma(a) - log_gamma(b));
}

/// C_k^{(α)}(z) by the three-term recurrence; α = 0 gives cos(kθ), z = cos θ.
template <typename Scalar>
Scalar gegenbauer(int k, Scalar alpha, Scalar z)
{
    using std::abs;
    using std::acos;
    using std::cos;
    if (abs(z) > Scalar(1))
        throw DomainError("gegenbauer: |z| must not exceed 1");
    if (k < 0 || alpha < Scalar(0))
        throw DomainError("gegenbauer: need k >= 0 and alpha >= 0");
    if (alpha == Scalar(0))
        return cos(Scalar(k) * acos(z));
    if (k == 0)
        return Scalar(1);
    Scalar c0 = 1, c1 = 2 * alpha * z;
    for (int j = 2; j <= k; ++j) {
        const Scalar c2 = (2 * (j + alpha - 1) * z * c1 - (j + 2 * alpha - 2) * c0) / Scalar(j);
        c0 = c1;
        c1 = c2;
    }
    return c1;
}

/// C_0..C_K at one point.
template <typename Scalar>
Vector<Scalar> gegenbauer_sequence(int K, Scalar alpha, Scalar z)
{
    using std::abs;
    using std::acos;
    using std::cos;
    if (abs(z) > Scalar(1))
        throw DomainError("gegenbauer: |z| must not exceed 1");
    Vector<Scalar> c(K + 1);
    if (alpha == Scalar(0)) {
        const Scalar theta = acos(z);
        for (int j = 0; j <= K; ++j)
            c(j) = cos(Scalar(j) * theta);
        return c;
    }
    c(0) = 1;
    if (K >= 1)
        c(1) = 2 * alpha * z;
    for (int j = 2; j <= K; ++j)
        c(j) = (2 * (j + alpha - 1) * z * c(j - 1) - (j + 2 * alpha - 2) * c(j - 2)) / Scalar(j);
    return c;
}

/// P_m^{(a,b)}(x) together with P_{m-1}^{(a,b)}(x).
template <typename Scalar>
std::pair<Scalar, Scalar> jacobi_p(int m, Scalar a, Scalar b, Scalar x)
{
    Scalar p0 = 1;
    if (m == 0)
        return {p0, Scalar(0)};
    Scalar p1 = ((a + b + 2) * x + (a - b)) / 2;
    for (int k = 2; k <= m; ++k) {
        const Scalar c = 2 * k + a + b;
        const Scalar a1 = 2 * k * (k + a + b) * (c - 2);
        const Scalar a2 = (c - 1) * (c * (c - 2) * x + a * a - b * b);
        const Scalar a3 = 2 * (k + a - 1) * (k + b - 1) * c;
        const Scalar p2 = (a2 * p1 - a3 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

/// Hurwitz zeta ζ(σ, a) = Σ_{k≥0} (k + a)^{−σ}, σ > 1, a > 0 (Euler–Maclaurin).
template <typename Scalar>
Scalar hurwitz_zeta(Scalar sigma, Scalar a)
{
    using std::pow;
    if (!(sigma > Scalar(1)) || !(a > Scalar(0)))
        throw DomainError("hurwitz_zeta: need sigma > 1 and a > 0");
    constexpr int M = 12;
    // B_{2j}/(2j)!
    constexpr std::array<double, 7> b2j = {
        1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
        1.0 / 47900160.0, -691.0 / 1307674368000.0, 1.0 / 74724249600.0};
    Scalar sum = 0;
    for (int k = 0; k < M; ++k)
        sum += pow(a + Scalar(k), -sigma);
    const Scalar x = a + Scalar(M);
    sum += pow(x, Scalar(1) - sigma) / (sigma - Scalar(1)) + pow(x, -sigma) / 2;
    Scalar rising = sigma; // σ(σ+1)...(σ+2j-2)
    Scalar xpow = pow(x, -sigma - Scalar(1));
    const Scalar inv_x2 = Scalar(1) / (x * x);
    for (std::size_t j = 0; j < b2j.size(); ++j) {
        sum += Scalar(b2j[j]) * rising * xpow;
        rising *= (sigma + Scalar(2 * j + 1)) * (sigma + Scalar(2 * j + 2));
        xpow *= inv_x2;
    }
    return sum;
}

/// Gauss–Jacobi rule for (1−z)^a (1+z)^b on [−1, 1].
template <typename Scalar>
struct QuadratureRule {
    Scalar exponent_a = 0;
    Scalar exponent_b = 0;
    Vector<Scalar> nodes;
    Vector<Scalar> weights;
    // 1 / total weight mass; turns weights into a probability measure.
    Scalar normalization = 1;

    Index size() const { return nodes.size(); }
    Vector<Scalar> probability_weights() const { return weights * normalization; }
};

/// Total mass ∫(1−z)^a (1+z)^b dz.
template <typename Scalar>
Scalar jacobi_mass(Scalar a, Scalar b)
{
    using std::exp;
    using std::log;
    return exp(Scalar(a + b + 1) * log(Scalar(2)) + log_gamma(a + 1) + log_gamma(b + 1) - log_gamma(a + b + 2));
}

/// m-point Gauss–Jacobi rule; Newton on the recurrence with deflation.
template <typename Scalar>
QuadratureRule<Scalar> gauss_jacobi(int m, Scalar a, Scalar b)
{
    using std::abs;
    using std::cos;
    using std::exp;
    using std::log;
    if (m < 1)
        throw DomainError("gauss_jacobi: need at least one node");
    if (!(a > Scalar(-1)) || !(b > Scalar(-1)))
        throw DomainError("gauss_jacobi: exponents must exceed -1");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();

    QuadratureRule<Scalar> rule;
    rule.exponent_a = a;
    rule.exponent_b = b;
    rule.nodes.resize(m);
    rule.weights.resize(m);

    // R_m = Γ(m+a+1)Γ(m+b+1) / (Γ(m+a+b+1) m!)
    Scalar r = exp(log_gamma(a + 2) + log_gamma(b + 2) - log_gamma(a + b + 2));
    for (int j = 2; j <= m; ++j)
        r *= (j + a) * (j + b) / ((j + a + b) * Scalar(j));
    const Scalar prefactor = exp(Scalar(a + b + 1) * log(Scalar(2))) * r;

    auto value_and_slope = [&](Scalar x) {
        const auto [pm, pm1] = jacobi_p(m, a, b, x);
        const Scalar c = 2 * m + a + b;
        const Scalar dp = (m * ((a - b) - c * x) * pm + 2 * (m + a) * (m + b) * pm1) / (c * (1 - x * x));
        return std::pair<Scalar, Scalar>{pm, dp};
    };

    std::vector<Scalar> found;
    found.reserve(m);
    for (int k = 1; k <= m; ++k) {
        const Scalar theta = (k + a / 2 - Scalar(0.25)) * pi / (m + (a + b + 1) / 2);
        Scalar x = cos(theta);
        for (int it = 0; it < 200; ++it) {
            const auto [p, dp] = value_and_slope(x);
            Scalar defl = 0;
            for (Scalar root : found)
                defl += Scalar(1) / (x - root);
            const Scalar step = p / (dp - p * defl);
            const Scalar prev = x;
            x -= step;
            if (x >= Scalar(1))
                x = (Scalar(1) + prev) / 2;
            if (x <= Scalar(-1))
                x = (Scalar(-1) + prev) / 2;
            if (abs(step) <= 4 * eps * std::max(Scalar(1e-3), abs(x)))
                break;
        }
        found.push_back(x);
    }
    std::sort(found.begin(), found.end());
    for (int i = 0; i < m; ++i) {
        const Scalar x = found[i];
        const Scalar dp = value_and_slope(x).second;
        rule.nodes(i) = x;
        rule.weights(i) = prefactor / ((1 - x * x) * dp * dp);
    }
    rule.normalization = Scalar(1) / jacobi_mass(a, b);
    return rule;
}

/// Rule for the uniform probability measure dμ on S^n in the zonal variable z.
template <typename Scalar = double>
QuadratureRule<Scalar> sphere_rule(int n, int m)
{
    if (n < 1)
        throw DomainError("sphere_rule: dimension must be positive");
    const Scalar e = Scalar(n - 2) / 2;
    return gauss_jacobi<Scalar>(m, e, e);
}

/// |S^n| = 2π^{(n+1)/2}/Γ((n+1)/2).
template <typename Scalar = double>
Scalar sphere_area(int n)
{
    using std::exp;
    using std::log;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    return 2 * exp(Scalar(n + 1) / 2 * log(pi) - log_gamma(Scalar(n + 1) / 2));
}

} // namespace fracsphere
