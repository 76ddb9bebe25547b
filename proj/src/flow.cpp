#include <cmath>
#include <sstream>

#include "fracsphere/flow.hpp"

namespace fracsphere {

double entropy_Eq(const VectorXd& u_values, double q, const ZonalBasis& basis)
{
    if (q == 2)
        throw DomainError("entropy_Eq: q = 2 is excluded");
    if (u_values.size() != basis.size())
        throw DomainError("entropy_Eq: value count does not match the rule");
    if (!(u_values.minCoeff() > 0))
        throw DomainError("entropy_Eq: u must be positive");
    const VectorXd& w = basis.weights();
    const double M = w.dot(u_values);
    const double e = 2.0 / q;
    double acc = 0;
    for (Index i = 0; i < u_values.size(); ++i) {
        const double t = u_values(i) / M - 1;
        acc += w(i) * (std::expm1(e * std::log1p(t)) - e * t);
    }
    return -std::pow(M, e) * acc / (q - 2);
}

FlowOperator::FlowOperator(const FlowConfig& config) : config_(config)
{
    const auto& ps = config.params;
    if (ps.n != 1)
        throw ParameterError("the flow is simulated on S^1 only (n = 1)");
    if (!(ps.s > 0) || ps.s > 1)
        throw ParameterError("the flow needs 0 < s <= n");
    if (ps.q == 2)
        throw ParameterError("the flow entropy excludes q = 2");
    if (config.K < 1)
        throw ResolutionError("flow bandwidth must be at least 1");
    if (!(config.dt > 0) || !(config.t_max >= 0) || !(config.sample_every > 0))
        throw ParameterError("flow: dt and sample_every must be positive, t_max non-negative");
    if (!(config.clamp_floor > 0))
        throw ParameterError("flow: clamp_floor must be positive");

    const int K = config.K;
    basis_ = zonal_basis(1, K, 4 * K);
    const Index m = basis_->size();
    sines_.resize(m, K + 1);
    for (Index i = 0; i < m; ++i) {
        const double theta = std::acos(basis_->nodes()(i));
        for (int k = 0; k <= K; ++k)
            sines_(i, k) = std::sqrt(2.0) * std::sin(k * theta);
    }
    multiplier_ = VectorXd::Zero(K + 1);
    for (int k = 1; k <= K; ++k)
        multiplier_(k) = delta_k(ps, k) / double(k * k);
}

VectorXd FlowOperator::rhs(const VectorXd& coeffs, int* clamped) const
{
    const double q = config_.params.q;
    const int K = config_.K;
    const MatrixXd& Y = basis_->values();
    const VectorXd& w = basis_->weights();

    VectorXd u = Y * coeffs;
    int lifted = 0;
    for (Index i = 0; i < u.size(); ++i)
        if (u(i) < config_.clamp_floor) {
            u(i) = config_.clamp_floor;
            ++lifted;
        }
    if (clamped)
        *clamped += lifted;

    const VectorXd root = u.array().pow(1.0 / q).matrix();
    const VectorXd c = Y.transpose() * root.cwiseProduct(w);
    // ψ = (−Δ)^{−1} L_s u^{1/q}; dψ/dθ = −Σ k a_k √2 sin kθ
    VectorXd ka(K + 1);
    for (int k = 0; k <= K; ++k)
        ka(k) = -k * multiplier_(k) * c(k);
    const VectorXd dpsi = sines_ * ka;
    const VectorXd flux = q * u.array().pow(1 - 1.0 / q) * dpsi.array();
    const VectorXd b = sines_.transpose() * flux.cwiseProduct(w);
    VectorXd r(K + 1);
    for (int k = 0; k <= K; ++k)
        r(k) = k * b(k);
    return r;
}

void FlowOperator::finish(FlowState& state) const
{
    state.u_values = basis_->values() * state.coeffs;
    VectorXd clamped = state.u_values.cwiseMax(config_.clamp_floor);
    state.mass = state.coeffs(0);
    state.entropy = entropy_Eq(clamped, config_.params.q, *basis_);
}

FlowState FlowOperator::initial_state() const
{
    const auto& root = config_.init_root;
    if (root.n != 1)
        throw ParameterError("flow: the initial datum must live on S^1");
    auto fine = zonal_basis(1, std::max(root.bandwidth(), 0), 4 * config_.K);
    const VectorXd v = synthesize(root, *fine);
    if (!(v.minCoeff() > 0))
        throw DomainError("flow: the initial root must be strictly positive");
    const VectorXd u0 = v.array().pow(config_.params.q).matrix();
    FlowState s;
    s.coeffs = analyze(u0, *basis_, config_.K).coeffs;
    if (s.coeffs.size() != config_.K + 1)
        s.coeffs.conservativeResize(config_.K + 1);
    finish(s);
    if (!(s.u_values.minCoeff() >= config_.clamp_floor))
        throw DomainError("flow: the projected initial datum falls below clamp_floor");
    return s;
}

FlowState FlowOperator::step(const FlowState& state) const
{
    const double h = config_.dt;
    int clamped = 0;
    const VectorXd& y = state.coeffs;
    const VectorXd k1 = rhs(y, &clamped);
    const VectorXd k2 = rhs(y + 0.5 * h * k1, &clamped);
    const VectorXd k3 = rhs(y + 0.5 * h * k2, &clamped);
    const VectorXd k4 = rhs(y + h * k3, &clamped);
    FlowState next;
    next.t = state.t + h;
    next.coeffs = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    next.last_rhs_norm = k1.norm();
    next.clamp_events = state.clamp_events + clamped;
    if (!next.coeffs.allFinite()) {
        std::ostringstream os;
        os << "flow: non-finite state at t = " << next.t << " with dt = " << h << "; reduce dt";
        throw BlowUpError(os.str());
    }
    finish(next);
    return next;
}

double FlowOperator::entropy_production(const FlowState& state) const
{
    const VectorXd u = state.u_values.cwiseMax(config_.clamp_floor);
    const VectorXd root = u.array().pow(1.0 / config_.params.q).matrix();
    return -2 * quadratic_form(analyze(root, *basis_, config_.K), OperatorKind::L_s, config_.params);
}

FlowState step(const FlowState& state, const FlowConfig& config)
{
    return FlowOperator(config).step(state);
}

FlowSeries run(const FlowConfig& config)
{
    const FlowOperator op(config);
    FlowState st = op.initial_state();
    const double E0 = st.entropy, M0 = st.mass;
    const double rate = 2 / config.params.sharp_constant;
    const long per_sample = std::max(1L, std::lround(config.sample_every / config.dt));
    const long total = std::lround(config.t_max / config.dt);

    FlowSeries out;
    auto record = [&](const FlowState& s) {
        FlowSample smp;
        smp.t = s.t;
        smp.entropy = s.entropy;
        smp.mass = s.mass;
        smp.bound = E0 * std::exp(-rate * s.t);
        smp.production = op.entropy_production(s);
        out.max_mass_drift = std::max(out.max_mass_drift, std::abs(s.mass - M0) / M0);
        if (smp.entropy > smp.bound * (1 + 1e-6))
            out.bound_ok = false;
        out.samples.push_back(smp);
    };
    record(st);
    for (long i = 1; i <= total; ++i) {
        st = op.step(st);
        st.t = double(i) * config.dt;
        if (i % per_sample == 0 || i == total)
            record(st);
    }
    out.clamp_events = st.clamp_events;
    return out;
}

double fit_rate(const std::vector<double>& t, const std::vector<double>& entropy)
{
    if (t.size() != entropy.size())
        throw DomainError("fit_rate: time and entropy lengths differ");
    std::size_t usable = 0;
    while (usable < entropy.size() && entropy[usable] > 1e-14)
        ++usable;
    if (usable < 10)
        throw InsufficientData("fit_rate: fewer than 10 samples with entropy above 1e-14");
    const std::size_t first = usable - usable / 3;
    const double cnt = double(usable - first);
    double st = 0, sy = 0;
    for (std::size_t i = first; i < usable; ++i) {
        st += t[i];
        sy += std::log(entropy[i]);
    }
    const double tm = st / cnt, ym = sy / cnt;
    double num = 0, den = 0;
    for (std::size_t i = first; i < usable; ++i) {
        num += (t[i] - tm) * (std::log(entropy[i]) - ym);
        den += (t[i] - tm) * (t[i] - tm);
    }
    if (!(den > 0))
        throw InsufficientData("fit_rate: degenerate time samples");
    return -num / den;
}

double fit_rate(const FlowSeries& series)
{
    std::vector<double> t, e;
    for (const auto& s : series.samples) {
        t.push_back(s.t);
        e.push_back(s.entropy);
    }
    return fit_rate(t, e);
}

} // namespace fracsphere
