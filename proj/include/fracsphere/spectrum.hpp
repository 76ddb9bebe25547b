#pragma once

#include <string>
#include <vector>

#include "fracsphere/specfun.hpp"

namespace fracsphere {

enum class Regime {
    positive,  // 0 < s < n
    endpoint,  // s = n
    negative,  // -n < s < 0
    zero       // s = 0
};

const char* to_string(Regime r);

struct ParameterSet {
    int n = 1;
    double s = 0;
    double q = 2;
    Regime regime = Regime::zero;

    double q_star = 2;   // 2n/(n-s), +inf at s = n
    double p = 2;        // 2n/(n+s)
    double lambda = 1;   // n - s
    double x_crit = 0.5; // (n-s)/2 = n/q_star
    double kappa = 1;    // Γ((n-s)/2)/Γ((n+s)/2), +inf at s = n (reported, never used)
    // C_{q,s} for s != 0; n/2 (the K0' constant) for s = 0.
    double sharp_constant = 0.5;

    bool log_case() const { return q == 2.0; }
};

/// Validates (n, s, q) against the theorem ranges and fills the derived fields.
ParameterSet derive_params(int n, double s, double q);

/// Same validation without q (q is set to 2 when admissible, else 1).
ParameterSet derive_params(int n, double s);

enum class OperatorKind { K_s, L_s, A_s, K0_prime, InvK_s, R_qs };

const char* to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& name);

/// γ_k(x) = Γ(x)Γ(n−x+k)/(Γ(n−x)Γ(x+k)), product recurrence from γ_0 = 1.
double gamma_k(int n, double x, int k);

/// γ_k(x) − 1 without cancellation.
double gamma_k_minus_one(int n, double x, int k);

/// α_k(x) = Σ_{j<k} [1/(n+j−x) + 1/(j+x)].
double alpha_k(int n, double x, int k);

/// Eigenvalue of L_s on degree-k harmonics, 0 < s ≤ n.
double delta_k(const ParameterSet& params, int k);

double operator_eigenvalue(OperatorKind kind, const ParameterSet& params, int k);

/// C_{q,s}; throws ZeroOrderError at s = 0.
double sharp_constant(int n, double s);

/// (γ_k(n/q) − 1)/(q − 2), continuous through q = 2.
double slope(int n, double q, int k);

struct SpectrumTable {
    OperatorKind kind = OperatorKind::L_s;
    VectorXd values;
};

SpectrumTable spectrum_table(OperatorKind kind, const ParameterSet& params, int K);

/// The operator whose quadratic form appears on the right of the interpolation
/// inequality: L_s for s != 0, K0' for s = 0.
OperatorKind primary_operator(const ParameterSet& params);

struct ScanViolation {
    int n;
    int k;
    double q_lo;
    double q_hi;
    double gap;
};

struct ScanReport {
    int n = 0;
    int k_max = 0;
    std::size_t comparisons = 0;
    double min_gap = 0;
    int min_gap_k = 0;
    double min_gap_q = 0;
    std::vector<ScanViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks slope(q_i, k) < slope(q_{i+1}, k) for k in [2, k_max].
ScanReport monotonicity_scan(int n, int k_max, const std::vector<double>& q_grid);

/// {1.01, 1.1, 1.2, ..., 19.9}
std::vector<double> default_scan_grid();

} // namespace fracsphere
