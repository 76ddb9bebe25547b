#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "fracsphere/field.hpp"

namespace fracsphere {

ZonalBasis::ZonalBasis(int n, int K, int m) : n_(n), K_(K), rule_(sphere_rule<double>(n, m))
{
    if (K < 0)
        throw ResolutionError("bandwidth must be non-negative");
    weights_ = rule_.probability_weights();
    weights_ /= weights_.sum();
    const double alpha = 0.5 * (n - 1);
    Y_.resize(m, K + 1);
    for (int i = 0; i < m; ++i)
        Y_.row(i) = gegenbauer_sequence(K, alpha, rule_.nodes(i)).transpose();
    h_.resize(K + 1);
    h_(0) = 1; // C_0 ≡ 1 and the weights sum to 1, so Y_0 ≡ 1 exactly
    for (int k = 1; k <= K; ++k) {
        h_(k) = std::sqrt((weights_.array() * Y_.col(k).array().square()).sum());
        Y_.col(k) /= h_(k);
    }
}

VectorXd ZonalBasis::evaluate(double z) const
{
    VectorXd c = gegenbauer_sequence(K_, 0.5 * (n_ - 1), z);
    return c.cwiseQuotient(h_);
}

int default_node_count(int K)
{
    return std::max(128, 4 * K);
}

std::shared_ptr<const ZonalBasis> zonal_basis(int n, int K, int m)
{
    if (m <= 0)
        m = default_node_count(K);
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const ZonalBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, K, m}];
    if (!slot)
        slot = std::make_shared<const ZonalBasis>(n, K, m);
    return slot;
}

ZonalField ZonalField::constant(int n, double c, int K)
{
    VectorXd v = VectorXd::Zero(K + 1);
    v(0) = c;
    return {n, v};
}

ZonalField ZonalField::mode(int n, int k, double amplitude)
{
    VectorXd v = VectorXd::Zero(k + 1);
    v(k) = amplitude;
    return {n, v};
}

ZonalField ZonalField::one_plus_eps_y1(int n, double eps)
{
    VectorXd v(2);
    v << 1.0, eps;
    return {n, v};
}

ZonalField operator+(const ZonalField& a, const ZonalField& b)
{
    if (a.n != b.n)
        throw DomainError("adding fields of different dimension");
    const Index K = std::max(a.coeffs.size(), b.coeffs.size());
    VectorXd c = VectorXd::Zero(K);
    c.head(a.coeffs.size()) += a.coeffs;
    c.head(b.coeffs.size()) += b.coeffs;
    return {a.n, c};
}

ZonalField operator*(double a, const ZonalField& f)
{
    return {f.n, a * f.coeffs};
}

namespace {

void check_pair(const ZonalField& field, const ZonalBasis& basis)
{
    if (field.n != basis.dimension())
        throw DomainError("field and basis dimensions differ");
    if (field.bandwidth() > basis.bandwidth())
        throw ResolutionError("field bandwidth exceeds the basis bandwidth");
}

const ZonalBasis& default_basis(const ZonalField& f)
{
    // The cache keeps the basis alive for the lifetime of the process.
    return *zonal_basis(f.n, std::max(f.bandwidth(), 0));
}

// |1+t|^q − 1
double pow_excess(double t, double q)
{
    if (t > -1)
        return std::expm1(q * std::log1p(t));
    return std::pow(std::abs(1 + t), q) - 1;
}

} // namespace

VectorXd synthesize(const ZonalField& field, const ZonalBasis& basis)
{
    check_pair(field, basis);
    return basis.values().leftCols(field.coeffs.size()) * field.coeffs;
}

ZonalField analyze(const VectorXd& values, const ZonalBasis& basis, int K)
{
    if (values.size() != basis.size())
        throw DomainError("value count does not match the rule");
    if (basis.size() < 2 * K + 2 || K > basis.bandwidth())
        throw ResolutionError("analysis to degree " + std::to_string(K) + " needs at least " +
                              std::to_string(2 * K + 2) + " nodes and a basis of that bandwidth");
    VectorXd c = basis.values().leftCols(K + 1).transpose() * values.cwiseProduct(basis.weights());
    return {basis.dimension(), c};
}

double lq_norm(const ZonalField& field, double q, const ZonalBasis& basis)
{
    if (!(q >= 1))
        throw DomainError("lq_norm: q must be at least 1");
    const VectorXd v = synthesize(field, basis);
    const double m = basis.weights().dot(v.array().abs().pow(q).matrix());
    return std::pow(m, 1.0 / q);
}

double lq_norm(const ZonalField& field, double q)
{
    return lq_norm(field, q, default_basis(field));
}

double l2_norm_squared(const ZonalField& field)
{
    return field.coeffs.squaredNorm();
}

double norm_gap(const ZonalField& field, double q, const ZonalBasis& basis)
{
    if (!(q >= 1))
        throw DomainError("norm_gap: q must be at least 1");
    const VectorXd v = synthesize(field, basis);
    const VectorXd& w = basis.weights();
    const double c0 = field.coeffs(0);
    if (c0 == 0) {
        const double mq = w.dot(v.array().abs().pow(q).matrix());
        return std::pow(mq, 2.0 / q) - w.dot(v.cwiseProduct(v));
    }
    double aq = 0, a2 = 0;
    for (Index i = 0; i < v.size(); ++i) {
        const double t = v(i) / c0 - 1;
        aq += w(i) * pow_excess(t, q);
        a2 += w(i) * t * (2 + t);
    }
    return c0 * c0 * (std::expm1(2.0 / q * std::log1p(aq)) - a2);
}

double norm_gap(const ZonalField& field, double q)
{
    return norm_gap(field, q, default_basis(field));
}

double quadratic_form(const ZonalField& field, OperatorKind kind, const ParameterSet& params)
{
    if (field.n != params.n)
        throw ParameterError("field dimension does not match the parameter set");
    double acc = 0;
    for (Index k = 0; k < field.coeffs.size(); ++k) {
        const double c = field.coeffs(k);
        if (c != 0)
            acc += operator_eigenvalue(kind, params, int(k)) * c * c;
    }
    return acc;
}

double entropy2(const ZonalField& field, const ZonalBasis& basis)
{
    if (field.coeffs.squaredNorm() == 0)
        throw DomainError("entropy of the zero field is undefined");
    const VectorXd v = synthesize(field, basis);
    const VectorXd& w = basis.weights();
    const double c0 = field.coeffs(0);
    if (c0 == 0) {
        double a = 0, m2 = 0;
        for (Index i = 0; i < v.size(); ++i) {
            const double x = v(i);
            m2 += w(i) * x * x;
            if (x != 0)
                a += w(i) * x * x * std::log(std::abs(x));
        }
        return a - 0.5 * m2 * std::log(m2);
    }
    double a = 0, a2 = 0;
    for (Index i = 0; i < v.size(); ++i) {
        const double t = v(i) / c0 - 1;
        a2 += w(i) * t * (2 + t);
        const double u = 1 + t;
        if (t > -1)
            a += w(i) * u * u * std::log1p(t);
        else if (u != 0)
            a += w(i) * u * u * std::log(std::abs(u));
    }
    return c0 * c0 * (a - 0.5 * (1 + a2) * std::log1p(a2));
}

double entropy2(const ZonalField& field)
{
    return entropy2(field, default_basis(field));
}

bool is_constant(const ZonalField& field)
{
    const double c0 = field.coeffs(0);
    return field.coeffs.tail(field.coeffs.size() - 1).squaredNorm() <= 1e-24 * c0 * c0;
}

double quotient(const ZonalField& field, const ParameterSet& params)
{
    if (is_constant(field))
        throw UndefinedQuotient("Q[F] is 0/0 on constant fields: numerator and denominator both vanish");
    const double num = quadratic_form(field, primary_operator(params), params);
    if (params.q == 2)
        return num / entropy2(field);
    return (params.q - 2) * num / norm_gap(field, params.q);
}

} // namespace fracsphere
