#include <cmath>
#include <numbers>
#include <sstream>

#include "fracsphere/euclid.hpp"

namespace fracsphere {

namespace {

void require_oracle_grid(const GridSpec& g)
{
    if (!is_power_of_two(g.N) || g.N < 64)
        throw TruncationError("oracle grids need N a power of two, N >= 64");
    if (!(g.L > 0))
        throw TruncationError("oracle grids need L > 0");
}

void require_order(double s)
{
    if (!(s > 0) || !(s < 2))
        throw DomainError("the Fourier oracle needs 0 < s < 2");
}

double psi(double u)
{
    return u > 0 ? std::exp(-1 / u) : 0.0;
}

// 1 on |x| <= a, 0 on |x| >= b, smooth in between.
double cutoff(double x, double a, double b)
{
    const double t = std::clamp((std::abs(x) - a) / (b - a), 0.0, 1.0);
    return psi(1 - t) / (psi(1 - t) + psi(t));
}

struct PowerTail {
    double A = 0; // f ≈ A |x|^{−p}
    double p = 0;
};

// Power law through (xa, fa) and (xb, fb) with |xb| > |xa|.
PowerTail fit_tail(double xa, double fa, double xb, double fb)
{
    if (!(fa != 0 && fb != 0) || (fa > 0) != (fb > 0))
        throw TruncationError("tail fit: edge samples vanish or change sign");
    PowerTail t;
    t.p = std::log(fa / fb) / std::log(std::abs(xb) / std::abs(xa));
    t.A = fb * std::pow(std::abs(xb), t.p);
    if (!std::isfinite(t.p) || !(t.p > 0))
        throw TruncationError("tail fit: samples do not decay toward the edge");
    return t;
}

// Periodized multiplier on the zero-padded window plus the exact correction for the periodic images.
VectorXd riesz_padded(const VectorXd& g, double L, double s)
{
    const Index N = g.size();
    const double dx = 2 * L / double(N);
    VectorXd padded = VectorXd::Zero(2 * N);
    padded.segment(N / 2, N) = g;
    const double two_pi = 2 * std::numbers::pi;
    const VectorXd per = apply_multiplier(padded, dx, [&](double xi) { return std::pow(two_pi * std::abs(xi), s); });

    const double P = 4 * L;
    VectorXd image(2 * N + 1);
    for (Index i = 0; i <= 2 * N; ++i) {
        const double r = double(i - N) * dx;
        image(i) = std::pow(P, -1 - s) * (hurwitz_zeta(1 + s, 1 + r / P) + hurwitz_zeta(1 + s, 1 - r / P));
    }
    const VectorXd conv = convolve(g, image);
    return per.segment(N / 2, N) + riesz_constant(s) * dx * conv.segment(N, N);
}

// ∫_Y^∞ A y^{−p} (y − x)^{−1−s} dy for |x| < Y.
double tail_kernel_integral(const PowerTail& t, double Y, double x, double s, const QuadratureRule<double>& gj)
{
    double acc = 0;
    for (Index i = 0; i < gj.size(); ++i) {
        const double u = 0.5 * (1 + gj.nodes(i));
        acc += gj.weights(i) * std::pow(1 - x * u / Y, -1 - s);
    }
    return t.A * std::pow(Y, -t.p - s) * std::pow(0.5, t.p + s) * acc;
}

} // namespace

StereoPoint stereo_inverse(const VectorXd& x)
{
    const double r2 = x.squaredNorm();
    StereoPoint out;
    out.zeta.resize(x.size() + 1);
    out.zeta.head(x.size()) = 2 * x / (1 + r2);
    out.zeta(x.size()) = (1 - r2) / (1 + r2);
    out.jacobian = std::pow(2.0 / (1 + r2), double(x.size()));
    return out;
}

GridField pushforward(const ZonalField& field, const ParameterSet& params, const GridSpec& grid)
{
    if (params.n != 1 || field.n != 1)
        throw ParameterError("pushforward: Euclidean grids are one-dimensional (n = 1)");
    if (params.regime != Regime::positive)
        throw ParameterError("pushforward: needs 0 < s < n");
    const auto basis = zonal_basis(1, std::max(field.bandwidth(), 0));
    const double e = 1 / params.q_star;
    return sample(grid, [&](double x) {
        const double r2 = x * x;
        const double J = 2 / (1 + r2);
        const double z = (1 - r2) / (1 + r2);
        return std::pow(J, e) * basis->evaluate(z).dot(field.coeffs);
    });
}

GridField fstar(double s, const GridSpec& grid)
{
    return sample(grid, [&](double x) { return std::pow(1 + x * x, -0.5 * (1 - s)); });
}

const std::vector<std::string>& euclid_family_names()
{
    static const std::vector<std::string> names = {"fstar", "fstar_odd", "fstar_bump", "fstar_dilated"};
    return names;
}

GridField euclid_family(const std::string& name, double s, const GridSpec& grid)
{
    auto fs = [s](double x) { return std::pow(1 + x * x, -0.5 * (1 - s)); };
    if (name == "fstar")
        return sample(grid, fs);
    if (name == "fstar_odd")
        return sample(grid, [&](double x) { return fs(x) * (1 + 0.1 * x / (1 + x * x)); });
    if (name == "fstar_bump")
        return sample(grid, [&](double x) { return fs(x) * (1 + 0.2 * std::exp(-x * x)); });
    if (name == "fstar_dilated")
        return sample(grid, [&](double x) { return fs(2 * x); });
    throw ParameterError("unknown Euclidean field family: " + name);
}

LineIntegral line_integral(const GridField& g)
{
    const Index N = g.size();
    if (N < 16)
        throw TruncationError("line_integral: too few samples for tail fits");
    const VectorXd& v = g.values;
    const double dx = g.grid.dx();
    LineIntegral out;
    double trap = dx * (v.sum() - 0.5 * v(0) - 0.5 * v(N - 1));
    const Index j = N / 8;
    const PowerTail right = fit_tail(g.x(N - 1 - j), v(N - 1 - j), g.x(N - 1), v(N - 1));
    const PowerTail left = fit_tail(g.x(j), v(j), g.x(0), v(0));
    if (!(right.p > 1) || !(left.p > 1))
        throw TruncationError("line_integral: fitted tails are not integrable (decay exponent <= 1)");
    out.tail = right.A * std::pow(std::abs(g.x(N - 1)), 1 - right.p) / (right.p - 1) +
               left.A * std::pow(std::abs(g.x(0)), 1 - left.p) / (left.p - 1);
    out.value = trap + out.tail;
    return out;
}

double weighted_norm(const GridField& f, double q, double beta)
{
    if (!(q >= 1))
        throw DomainError("weighted_norm: q must be at least 1");
    if (f.values.cwiseAbs().maxCoeff() == 0)
        return 0;
    VectorXd g(f.size());
    for (Index j = 0; j < f.size(); ++j) {
        const double x = f.x(j);
        g(j) = std::pow(std::abs(f.values(j)), q) * std::pow(1 + x * x, -0.5 * beta);
    }
    return std::pow(line_integral({f.grid, g}).value, 1 / q);
}

double riesz_constant(double s)
{
    return std::pow(2.0, s) * std::exp(log_gamma(0.5 * (1 + s))) /
           (std::sqrt(std::numbers::pi) * std::abs(std::tgamma(-0.5 * s)));
}

GridField frac_laplacian_oracle(const GridField& f, double s)
{
    if (s == 0)
        return f;
    require_order(s);
    require_oracle_grid(f.grid);
    const double peak = f.values.cwiseAbs().maxCoeff();
    const double edge = std::max(std::abs(f.values(0)), std::abs(f.values(f.size() - 1)));
    if (edge > 1e-8 * peak) {
        std::ostringstream os;
        os << "frac_laplacian_oracle: edge value " << edge << " exceeds 1e-8 of the peak " << peak
           << "; widen the window or use the tail oracle";
        throw TruncationError(os.str());
    }
    return {f.grid, riesz_padded(f.values, f.grid.L, s)};
}

GridField frac_laplacian_tail_oracle(const GridField& f, double s)
{
    require_order(s);
    require_oracle_grid(f.grid);
    const Index N = f.size();
    const double L = f.grid.L, dx = f.grid.dx();
    const double c = riesz_constant(s);
    const VectorXd& v = f.values;

    VectorXd chi(N), near_part(N), far_part(N);
    for (Index j = 0; j < N; ++j)
        chi(j) = cutoff(f.x(j), 0.5 * L, 0.75 * L);
    near_part = chi.cwiseProduct(v);
    const VectorXd near = riesz_padded(near_part, L, s);

    // Far field: −c ∫ (1−χ)f(y) |x−y|^{−1−s} dy, trapezoid in the window.
    far_part = (VectorXd::Ones(N) - chi).cwiseProduct(v) * dx;
    far_part(0) *= 0.5;
    far_part(N - 1) *= 0.5;
    VectorXd kernel(2 * N - 1);
    for (Index i = 0; i < 2 * N - 1; ++i) {
        const Index d = i - (N - 1);
        kernel(i) = d == 0 ? 0.0 : std::pow(std::abs(double(d) * dx), -1 - s);
    }
    const VectorXd far = -c * convolve(far_part, kernel).segment(N - 1, N);

    const Index jr = N - 1, ja = N - 1 - N / 8;
    const PowerTail right = fit_tail(f.x(ja), v(ja), f.x(jr), v(jr));
    const PowerTail left = fit_tail(f.x(N / 8), v(N / 8), f.x(0), v(0));
    const auto gj_right = gauss_jacobi<double>(40, 0.0, right.p + s - 1);
    const auto gj_left = gauss_jacobi<double>(40, 0.0, left.p + s - 1);

    const Index lo = N / 2 - N / 8, M = N / 4;
    GridSpec out_grid{0.25 * L, M};
    VectorXd out(M);
    for (Index i = 0; i < M; ++i) {
        const Index j = lo + i;
        const double x = f.x(j);
        const double tails = tail_kernel_integral(right, f.x(jr), x, s, gj_right) +
                             tail_kernel_integral(left, L, -x, s, gj_left);
        out(i) = near(j) + far(j) - c * tails;
    }
    return {out_grid, out};
}

double euclid_eigenvalue(int k, int n, double s)
{
    return std::pow(2.0, s) * std::exp(log_gamma(k + 0.5 * (n + s)) - log_gamma(k + 0.5 * (n - s)));
}

double eigen_residual(int k, int n, double s, const GridSpec& grid)
{
    if (n != 1)
        throw ParameterError("eigen_residual: the Fourier oracle is one-dimensional (n = 1)");
    if (!(s > 0) || !(s < 1))
        throw ParameterError("eigen_residual: needs 0 < s < 1");
    if (k < 0 || k > 6)
        throw ParameterError("eigen_residual: k must lie in [0, 6]");
    require_oracle_grid(grid);
    const double mu = 0.5 * (n - s);
    auto fk = [&](double x) {
        const double z = (1 - x * x) / (1 + x * x);
        return gegenbauer(k, 0.5 * (n - 1), z) * std::pow(1 + x * x, -mu);
    };
    const GridField f = sample(grid, fk);
    const GridField D = frac_laplacian_tail_oracle(f, s);
    const double lam = euclid_eigenvalue(k, n, s);
    double num = 0, den = 0;
    for (Index i = 0; i < D.size(); ++i) {
        const double x = D.x(i);
        const double ref = lam * std::pow(1 + x * x, -s) * fk(x);
        num += (D.values(i) - ref) * (D.values(i) - ref);
        den += ref * ref;
    }
    return std::sqrt(num / den);
}

GridSpec default_eigen_grid()
{
    return {60.0, Index(1) << 15};
}

GridSpec default_thm16_grid()
{
    return {4096.0, Index(1) << 17};
}

Thm16Coefficients thm16_coefficients(int n, double s, double q)
{
    if (!(s > 0) || !(s < n))
        throw ParameterError("the weighted inequality needs 0 < s < n");
    const double qs = 2.0 * n / (n - s);
    if (!(q >= 2) || !(q <= qs))
        throw ParameterError("thm16_coefficients: q must lie in [2, q*]");
    const double area = sphere_area(n);
    const double kappa = gamma_ratio(0.5 * (n - s), 0.5 * (n + s));
    Thm16Coefficients c;
    c.beta = 2 * n * (1 - q / qs);
    c.a = (q - 2) / (qs - 2) * kappa * std::pow(2.0, n * (2 / qs - 2 / q)) * std::pow(area, 2 / q - 1);
    c.b = (qs - q) / (qs - 2) * std::pow(2.0, n * (1 - 2 / q)) * std::pow(area, 2 / q - 1);
    return c;
}

EuclidParams euclid_params(int n, double s, double q)
{
    EuclidParams e;
    e.base = derive_params(n, s, q);
    if (e.base.regime != Regime::positive || !(q > 2) || !(q < e.base.q_star))
        throw ParameterError("the weighted inequality needs 0 < s < n and 2 < q < 2n/(n-s)");
    const auto c = thm16_coefficients(n, s, q);
    e.beta = c.beta;
    e.a = c.a;
    e.b = c.b;
    return e;
}

InequalityReport thm16_deficit(const GridField& f, const EuclidParams& ep, const std::string& descriptor)
{
    const auto& ps = ep.base;
    if (ps.n != 1)
        throw ParameterError("thm16_deficit: Euclidean grids are one-dimensional (n = 1)");
    if (ps.regime != Regime::positive || !(ps.q > 2) || !(ps.q < ps.q_star))
        throw ParameterError("the weighted inequality needs 2 < q < 2n/(n-s)");
    const double lhs = std::pow(weighted_norm(f, ps.q, ep.beta), 2);
    const GridField D = frac_laplacian_tail_oracle(f, ps.s);
    const Index lo = f.size() / 2 - f.size() / 8;
    const GridField fd(D.grid, f.values.segment(lo, D.size()).cwiseProduct(D.values));
    const double seminorm = line_integral(fd).value;
    const double rhs = ep.a * seminorm + ep.b * std::pow(weighted_norm(f, 2, 2 * ps.s), 2);
    return make_report(InequalityKind::thm16, lhs, rhs, ps, ps.q, descriptor);
}

} // namespace fracsphere
