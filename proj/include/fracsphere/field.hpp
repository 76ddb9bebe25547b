#pragma once

#include <memory>
#include <string>

#include "fracsphere/spectrum.hpp"

namespace fracsphere {

/// Normalized zonal harmonics Y_0..Y_K tabulated at the nodes of a sphere rule.
class ZonalBasis {
public:
    ZonalBasis(int n, int K, int m);

    int dimension() const { return n_; }
    int bandwidth() const { return K_; }
    Index size() const { return rule_.size(); }

    const QuadratureRule<double>& rule() const { return rule_; }
    // Probability weights of dμ at the nodes.
    const VectorXd& weights() const { return weights_; }
    const VectorXd& nodes() const { return rule_.nodes; }
    // values()(i, k) = Y_k(z_i)
    const MatrixXd& values() const { return Y_; }
    // Y_k = C_k^{((n-1)/2)} / norms()(k)
    const VectorXd& norms() const { return h_; }

    /// Y_0..Y_K at an arbitrary z in [-1, 1].
    VectorXd evaluate(double z) const;

private:
    int n_;
    int K_;
    QuadratureRule<double> rule_;
    VectorXd weights_;
    MatrixXd Y_;
    VectorXd h_;
};

/// Shared, cached basis; node count m defaults to max(128, 4K).
std::shared_ptr<const ZonalBasis> zonal_basis(int n, int K, int m = 0);

int default_node_count(int K);

struct ZonalField {
    int n = 1;
    VectorXd coeffs; // c_0..c_K against Y_k

    ZonalField() = default;
    ZonalField(int dim, VectorXd c) : n(dim), coeffs(std::move(c)) {}

    int bandwidth() const { return int(coeffs.size()) - 1; }

    static ZonalField constant(int n, double c, int K = 0);
    static ZonalField mode(int n, int k, double amplitude = 1.0);
    /// 1 + eps·Y_1
    static ZonalField one_plus_eps_y1(int n, double eps);
};

ZonalField operator+(const ZonalField& a, const ZonalField& b);
ZonalField operator*(double a, const ZonalField& f);

VectorXd synthesize(const ZonalField& field, const ZonalBasis& basis);

/// Coefficients c_k = Σ w_i v_i Y_k(z_i) for k ≤ K; needs at least 2K + 2 nodes.
ZonalField analyze(const VectorXd& values, const ZonalBasis& basis, int K);

/// (Σ w_i |F(z_i)|^q)^{1/q}
double lq_norm(const ZonalField& field, double q, const ZonalBasis& basis);
double lq_norm(const ZonalField& field, double q);

double l2_norm_squared(const ZonalField& field);

/// ‖F‖_q² − ‖F‖_2², expanded around the mean when c_0 != 0.
double norm_gap(const ZonalField& field, double q, const ZonalBasis& basis);
double norm_gap(const ZonalField& field, double q);

/// Σ_k λ_k c_k² for the chosen operator.
double quadratic_form(const ZonalField& field, OperatorKind kind, const ParameterSet& params);

/// ∫ F² log(|F|/‖F‖_2) dμ
double entropy2(const ZonalField& field, const ZonalBasis& basis);
double entropy2(const ZonalField& field);

/// Σ_{k≥1} c_k² ≤ 1e-24 c_0²
bool is_constant(const ZonalField& field);

/// (q−2)∫F L F / (‖F‖_q² − ‖F‖_2²), or ∫F L F / entropy at q = 2.
double quotient(const ZonalField& field, const ParameterSet& params);

} // namespace fracsphere
