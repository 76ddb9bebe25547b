#pragma once

#include <vector>

#include "fracsphere/field.hpp"

namespace fracsphere {

struct FlowConfig {
    ParameterSet params;       // n = 1, 0 < s <= 1, q != 2
    int K = 32;                // bandwidth of u
    double dt = 1e-3;          // RK4 step
    double t_max = 5.0;
    double sample_every = 0.05;
    ZonalField init_root;      // u_0 = init_root^q (root > 0) at the nodes, projected to bandwidth K
    double clamp_floor = 1e-12;
};

struct FlowState {
    double t = 0;
    VectorXd coeffs;   // u in the Y_k basis, k <= K
    VectorXd u_values; // u at the 4K dealiasing nodes
    double entropy = 0;
    double mass = 0;
    double last_rhs_norm = 0;
    int clamp_events = 0; // nodes lifted to clamp_floor so far
};

/// (1/(q−2))[(∫u)^{2/q} − ∫u^{2/q}], expanded around the mean.
double entropy_Eq(const VectorXd& u_values, double q, const ZonalBasis& basis);

/// Pseudo-spectral right-hand side of the fractional heat flow on S^1.
class FlowOperator {
public:
    explicit FlowOperator(const FlowConfig& config);

    const FlowConfig& config() const { return config_; }
    const ZonalBasis& basis() const { return *basis_; }

    FlowState initial_state() const;
    /// du/dt in coefficients; counts clamped nodes into *clamped when given.
    VectorXd rhs(const VectorXd& coeffs, int* clamped = nullptr) const;
    FlowState step(const FlowState& state) const;
    /// −2 ∫ u^{1/q} L_s u^{1/q} dμ
    double entropy_production(const FlowState& state) const;

private:
    void finish(FlowState& state) const;

    FlowConfig config_;
    std::shared_ptr<const ZonalBasis> basis_;
    MatrixXd sines_;     // √2 sin(kθ_i), k = 0..K
    VectorXd multiplier_; // δ_k / k², 0 at k = 0
};

FlowState step(const FlowState& state, const FlowConfig& config);

struct FlowSample {
    double t = 0;
    double entropy = 0;
    double mass = 0;
    double bound = 0; // E_0 exp(−2t/C)
    double production = 0;
};

struct FlowSeries {
    std::vector<FlowSample> samples;
    int clamp_events = 0;
    double max_mass_drift = 0; // relative
    bool bound_ok = true;      // E(t) <= bound·(1 + 1e-6) at every sample
};

FlowSeries run(const FlowConfig& config);

/// −slope of the least-squares fit of log E over the final third of the usable samples.
double fit_rate(const std::vector<double>& t, const std::vector<double>& entropy);
double fit_rate(const FlowSeries& series);

} // namespace fracsphere
