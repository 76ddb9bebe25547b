#pragma once

#include <string>
#include <vector>

#include "fracsphere/field.hpp"
#include "fracsphere/grid.hpp"
#include "fracsphere/inequality.hpp"

namespace fracsphere {

struct StereoPoint {
    VectorXd zeta;        // point on S^n in R^{n+1}
    double jacobian = 0;  // 2^n (1+|x|²)^{−n}
};

/// ζ = (2x/(1+|x|²), (1−|x|²)/(1+|x|²))
StereoPoint stereo_inverse(const VectorXd& x);

/// f(x) = |J(x)|^{1/q*} F(ζ(x)) on a 1D grid (n = 1, 0 < s < 1).
GridField pushforward(const ZonalField& field, const ParameterSet& params, const GridSpec& grid);

/// (1+x²)^{−(1−s)/2} on a 1D grid.
GridField fstar(double s, const GridSpec& grid);

/// Named trial fields: fstar, fstar_odd (1 + 0.1x/(1+x²)), fstar_bump (1 + 0.2e^{−x²}), fstar_dilated (f*(2x)).
GridField euclid_family(const std::string& name, double s, const GridSpec& grid);
const std::vector<std::string>& euclid_family_names();

struct LineIntegral {
    double value = 0; // trapezoid plus both tails
    double tail = 0;  // fitted power-law contribution beyond the window
};

/// ∫_R g dx from window samples with power-law tails fitted at each edge.
LineIntegral line_integral(const GridField& g);

/// (∫ |f|^q (1+x²)^{−β/2} dx)^{1/q}
double weighted_norm(const GridField& f, double q, double beta);

/// 2^s Γ((1+s)/2) / (√π |Γ(−s/2)|), the kernel constant of (−Δ)^{s/2} in 1D.
double riesz_constant(double s);

/// (−Δ)^{s/2} of a field that has decayed to 1e−8·max|f| at both edges; output on the full window.
GridField frac_laplacian_oracle(const GridField& f, double s);

/// (−Δ)^{s/2} of a field with algebraic tails; output on the central window |x| ≤ L/4.
GridField frac_laplacian_tail_oracle(const GridField& f, double s);

/// Relative L² residual of (−Δ)^{s/2} f_k = λ_k (1+x²)^{−s} f_k on the central window.
double eigen_residual(int k, int n, double s, const GridSpec& grid);

/// 2^s Γ(k + (n+s)/2) / Γ(k + (n−s)/2)
double euclid_eigenvalue(int k, int n, double s);

GridSpec default_eigen_grid();
GridSpec default_thm16_grid();

struct EuclidParams {
    ParameterSet base;
    double beta = 0;
    double a = 0;
    double b = 0;
};

struct Thm16Coefficients {
    double beta = 0;
    double a = 0;
    double b = 0;
};

/// β = 2n(1 − q/q*), a, b of the weighted inequality; defined on q in [2, q*].
Thm16Coefficients thm16_coefficients(int n, double s, double q);

/// Requires 0 < s < n and q in (2, q*).
EuclidParams euclid_params(int n, double s, double q);

/// ‖f‖_{q,β}² ≤ a ∫ f (−Δ)^{s/2} f + b ‖f‖_{2,2s}²
InequalityReport thm16_deficit(const GridField& f, const EuclidParams& params, const std::string& descriptor = "");

/// Euclidean deficit tolerance (oracle-limited).
inline constexpr double euclid_tolerance = 1e-6;

} // namespace fracsphere
