#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "fracsphere/inequality.hpp"
#include "fracsphere/random.hpp"

namespace fracsphere {

namespace {

struct KindName {
    InequalityKind kind;
    const char* name;
};

constexpr KindName kind_names[] = {
    {InequalityKind::interpolation, "interpolation"},
    {InequalityKind::sobolev, "sobolev"},
    {InequalityKind::hls, "hls"},
    {InequalityKind::poincare, "poincare"},
    {InequalityKind::logsob, "logsob"},
    {InequalityKind::logsob_critical, "logsob_critical"},
    {InequalityKind::s0_subcritical, "s0_subcritical"},
    {InequalityKind::improved, "improved"},
    {InequalityKind::square, "square"},
    {InequalityKind::thm16, "thm16"},
};

[[noreturn]] void inadmissible(InequalityKind kind, const ParameterSet& ps, const std::string& why)
{
    std::ostringstream os;
    os.precision(17);
    os << to_string(kind) << " at (n, s, q) = (" << ps.n << ", " << ps.s << ", " << ps.q << "): " << why;
    throw ParameterError(os.str());
}

void require_away_from_two(InequalityKind kind, const ParameterSet& ps, double q)
{
    if (std::abs(q - 2) < q_two_exclusion)
        inadmissible(kind, ps, "q is within 1e-8 of 2; use the entropy kinds (logsob, logsob_critical)");
}

bool is_affine(const ZonalField& f)
{
    if (f.coeffs.size() <= 2)
        return true;
    return f.coeffs.tail(f.coeffs.size() - 2).squaredNorm() == 0;
}

} // namespace

const char* to_string(InequalityKind kind)
{
    for (const auto& kn : kind_names)
        if (kn.kind == kind)
            return kn.name;
    return "?";
}

InequalityKind inequality_kind_from_string(const std::string& name)
{
    for (const auto& kn : kind_names)
        if (name == kn.name)
            return kn.kind;
    throw ParameterError("unknown inequality kind: " + name);
}

const std::vector<InequalityKind>& sphere_inequality_kinds()
{
    static const std::vector<InequalityKind> kinds = {
        InequalityKind::interpolation, InequalityKind::sobolev,         InequalityKind::hls,
        InequalityKind::poincare,      InequalityKind::logsob,          InequalityKind::logsob_critical,
        InequalityKind::s0_subcritical, InequalityKind::improved,       InequalityKind::square};
    return kinds;
}

bool InequalityReport::holds(double tol) const
{
    return deficit >= -tol * std::max(1.0, std::abs(rhs));
}

InequalityReport make_report(InequalityKind kind, double lhs, double rhs, const ParameterSet& params, double q_used,
                             std::string descriptor)
{
    InequalityReport r;
    r.kind = kind;
    r.lhs = lhs;
    r.rhs = rhs;
    r.deficit = rhs - lhs;
    r.relative_deficit = r.deficit / std::max(std::abs(rhs), std::numeric_limits<double>::epsilon());
    r.params = params;
    r.q_used = q_used;
    r.field_descriptor = std::move(descriptor);
    return r;
}

double deficit_tolerance()
{
    if (const char* env = std::getenv("FRACSPHERE_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v) && v >= 0)
            return v;
    }
    return 1e-10;
}

InequalityReport deficit(InequalityKind kind, const ZonalField& field, const ParameterSet& ps,
                         const std::string& descriptor)
{
    if (field.coeffs.size() == 0 || field.coeffs.squaredNorm() == 0)
        throw DomainError("deficit: the field must be nonzero");
    if (field.n != ps.n)
        throw ParameterError("deficit: field dimension does not match n");

    const double C = ps.sharp_constant;
    double lhs = 0, rhs = 0, q = ps.q;
    bool equality = is_constant(field);

    switch (kind) {
    case InequalityKind::interpolation:
        if (ps.regime == Regime::zero)
            inadmissible(kind, ps, "s = 0 is covered by s0_subcritical and logsob_critical");
        require_away_from_two(kind, ps, q);
        lhs = norm_gap(field, q) / (q - 2);
        rhs = C * quadratic_form(field, OperatorKind::L_s, ps);
        break;
    case InequalityKind::sobolev:
        if (ps.regime != Regime::positive)
            inadmissible(kind, ps, "the fractional Sobolev inequality needs 0 < s < n");
        q = ps.q_star;
        lhs = std::pow(lq_norm(field, q), 2);
        rhs = quadratic_form(field, OperatorKind::K_s, ps);
        break;
    case InequalityKind::hls:
        if (ps.regime != Regime::negative)
            inadmissible(kind, ps, "the HLS form needs -n < s < 0");
        q = ps.q_star;
        require_away_from_two(kind, ps, q);
        lhs = norm_gap(field, q) / (q - 2);
        rhs = C * quadratic_form(field, OperatorKind::L_s, ps);
        break;
    case InequalityKind::poincare:
        lhs = field.coeffs.tail(field.coeffs.size() - 1).squaredNorm();
        rhs = C * quadratic_form(field, primary_operator(ps), ps);
        equality = equality || is_affine(field);
        break;
    case InequalityKind::logsob:
        if (ps.regime != Regime::positive && ps.regime != Regime::endpoint)
            inadmissible(kind, ps, "the subcritical logarithmic Sobolev inequality needs 0 < s <= n");
        q = 2;
        lhs = entropy2(field);
        rhs = C * quadratic_form(field, OperatorKind::L_s, ps);
        break;
    case InequalityKind::logsob_critical:
        if (ps.regime != Regime::zero)
            inadmissible(kind, ps, "the conformally invariant logarithmic Sobolev inequality is the s = 0 case");
        q = 2;
        lhs = entropy2(field);
        rhs = 0.5 * ps.n * quadratic_form(field, OperatorKind::K0_prime, ps);
        break;
    case InequalityKind::s0_subcritical:
        if (ps.regime != Regime::zero || !(q < 2))
            inadmissible(kind, ps, "the zero-order subcritical inequality needs s = 0 and q in [1, 2)");
        require_away_from_two(kind, ps, q);
        lhs = norm_gap(field, q) / (q - 2);
        rhs = 0.5 * ps.n * quadratic_form(field, OperatorKind::K0_prime, ps);
        break;
    case InequalityKind::improved:
        if (ps.regime != Regime::positive && ps.regime != Regime::endpoint)
            inadmissible(kind, ps, "the improved inequality needs 0 < s <= n");
        if (!(q < ps.q_star))
            inadmissible(kind, ps, "the improved inequality needs q < q_star");
        require_away_from_two(kind, ps, q);
        lhs = norm_gap(field, q) / (q - 2) + quadratic_form(field, OperatorKind::R_qs, ps);
        rhs = C * quadratic_form(field, OperatorKind::L_s, ps);
        break;
    case InequalityKind::square:
        return deficit_square(field, ps, descriptor);
    case InequalityKind::thm16:
        inadmissible(kind, ps, "thm16 acts on Euclidean fields; see euclid.hpp");
    }
    auto r = make_report(kind, lhs, rhs, ps, q, descriptor);
    r.equality_case = equality;
    return r;
}

ZonalField critical_power(const ZonalField& field, const ParameterSet& ps, int K)
{
    if (ps.regime != Regime::positive)
        throw ParameterError("G = F^{q*-1} needs 0 < s < n");
    auto basis = zonal_basis(field.n, std::max(K, field.bandwidth()));
    const VectorXd v = synthesize(field, *basis);
    if (v.minCoeff() <= 0)
        throw DomainError("F^{q*-1} needs F > 0 at every node");
    const VectorXd g = v.array().pow(ps.q_star - 1).matrix();
    return analyze(g, *basis, K);
}

InequalityReport deficit_square(const ZonalField& field, const ParameterSet& ps, const std::string& descriptor)
{
    if (ps.regime != Regime::positive)
        inadmissible(InequalityKind::square, ps, "the duality estimate needs 0 < s < n");
    const int KG = std::max(64, 4 * field.bandwidth());
    auto basis = zonal_basis(field.n, KG);
    const VectorXd v = synthesize(field, *basis);
    if (v.minCoeff() <= 0)
        throw DomainError("deficit_square: F must be strictly positive");
    const double qs = ps.q_star;
    const VectorXd g = v.array().pow(qs - 1).matrix();
    const ZonalField G = analyze(g, *basis, KG);
    const VectorXd& w = basis->weights();

    const double gp = std::pow(w.dot(g.array().pow(ps.p).matrix()), 2.0 / ps.p);
    const double lhs = gp - quadratic_form(G, OperatorKind::InvK_s, ps);
    const double fq2 = std::pow(w.dot(v.array().pow(qs).matrix()), 2.0 / qs);
    const double rhs = std::pow(fq2, qs - 2) * (quadratic_form(field, OperatorKind::K_s, ps) - fq2);
    auto r = make_report(InequalityKind::square, lhs, rhs, ps, qs, descriptor);
    r.equality_case = is_constant(field);
    return r;
}

FunkHecke funk_hecke_mu(int n, double lambda, int k, int nodes)
{
    if (!(lambda > 0))
        throw DomainError("funk_hecke_mu: lambda must be positive");
    if (!(lambda < n))
        throw DomainError("funk_hecke_mu: the kernel |z|^{-lambda} is not integrable for lambda >= n");
    const double e = 0.5 * (n - 2);
    const auto rule = gauss_jacobi<double>(nodes, 0.5 * (n - 2 - lambda), e);
    const double alpha = 0.5 * (n - 1);
    const double ck1 = gegenbauer(k, alpha, 1.0);
    double acc = 0;
    for (Index i = 0; i < rule.size(); ++i)
        acc += rule.weights(i) * gegenbauer(k, alpha, rule.nodes(i)) / ck1;
    FunkHecke out;
    out.quadrature = std::pow(2.0, -0.5 * lambda) * acc / jacobi_mass(e, e);

    const double np = n - 0.5 * lambda; // n/p with p = 2n/(2n - lambda)
    const double A = std::exp(log_gamma(double(n)) + log_gamma(0.5 * (n - lambda)) - lambda * std::log(2.0) -
                              log_gamma(0.5 * n) - log_gamma(np));
    out.closed_form = A * gamma_k(n, np, k);
    return out;
}

double riesz_energy(const ZonalField& field, double lambda)
{
    double acc = 0;
    for (Index k = 0; k < field.coeffs.size(); ++k) {
        const double c = field.coeffs(k);
        if (c != 0)
            acc += funk_hecke_mu(field.n, lambda, int(k)).quadrature * c * c;
    }
    return acc;
}

double linearization_probe(const ParameterSet& params, double eps)
{
    if (!(eps > 0) || eps > 0.1)
        throw DomainError("linearization_probe: eps must lie in (0, 0.1]");
    return quotient(ZonalField::one_plus_eps_y1(params.n, eps), params) * params.sharp_constant - 1;
}

double taylor_case_one_constant(double q)
{
    if (q < 3)
        return 1.0; // ∫(1−σ)²σ^{q−3} = B(q−2, 3) cancels the prefactor
    const double I = 4 * (std::pow(2.0, q - 2) - 1) / (q - 2) - 4 * (std::pow(2.0, q - 1) - 1) / (q - 1) +
                     (std::pow(2.0, q) - 1) / q;
    return 0.5 * q * (q - 1) * (q - 2) * I;
}

TaylorRemainder taylor_remainder(double t, double q)
{
    if (!(q > 2))
        throw DomainError("taylor_remainder: q must exceed 2");
    TaylorRemainder out;
    out.t = t;
    out.q = q;
    const double lin = q * t, quad = 0.5 * q * (q - 1) * t * t;
    const double head = t > -1 ? std::expm1(q * std::log1p(t)) : std::pow(std::abs(1 + t), q) - 1;
    out.r = head - lin - quad;
    const double eps = std::numeric_limits<double>::epsilon();
    out.roundoff = 8 * eps * (std::abs(head) + 1 + std::abs(lin) + quad);

    const double at = std::abs(t);
    const double at_q = std::pow(at, q);
    if (at < 1) {
        out.region = t > 0 ? "ii" : (t < 0 ? "iii" : "0");
        out.bound = q * (q - 1) * (q - 2) / 6 * std::max(1.0, std::pow(2.0, q - 3)) * at * at * at;
        if (t > 0)
            out.sign_ok = out.r > -out.roundoff;
        else if (t < 0)
            out.sign_ok = out.r < out.roundoff;
        else
            out.sign_ok = out.r == 0;
    } else if (t >= 1) {
        out.region = "i";
        out.bound = taylor_case_one_constant(q) * at_q;
        out.sign_ok = out.r > 0;
    } else {
        // t <= -1: −½(q−1)(q−2)|t|^q ≤ r ≤ |t|^q
        out.region = "iv";
        const double lower = 0.5 * (q - 1) * (q - 2) * at_q;
        out.bound = std::max(1.0, 0.5 * (q - 1) * (q - 2)) * at_q;
        out.sign_ok = out.r >= -lower - out.roundoff && out.r <= at_q + out.roundoff;
    }
    out.within_bound = std::abs(out.r) <= out.bound + out.roundoff;
    return out;
}

namespace {

ZonalField random_field(Rng& rng, int n, bool positive)
{
    const int K = rng.integer(1, 12);
    VectorXd c = VectorXd::Zero(K + 1);
    c(0) = rng.uniform(0.5, 2.0);
    const double amp = rng.uniform(0.05, positive ? 0.4 : 0.9);
    for (int k = 1; k <= K; ++k)
        c(k) = c(0) * amp * rng.uniform(-1, 1) / (k + 1);
    ZonalField f(n, c);
    if (positive) {
        auto basis = zonal_basis(n, K);
        while (synthesize(f, *basis).minCoeff() <= 0.05 * c(0))
            f.coeffs.tail(K) *= 0.5;
    }
    return f;
}

ParameterSet random_params(Rng& rng, InequalityKind kind, int n)
{
    auto positive_s = [&] { return n * rng.uniform(0.05, 0.95); };
    auto negative_s = [&] { return -n * rng.uniform(0.05, 0.95); };
    auto q_off_two = [&](double lo, double hi) {
        double q = rng.uniform(lo, hi);
        if (std::abs(q - 2) < 0.05)
            q = q < 2 ? 1.95 : 2.05;
        return std::min(std::max(q, lo), hi);
    };
    switch (kind) {
    case InequalityKind::interpolation: {
        const int pick = rng.integer(0, 2);
        if (pick == 0) {
            const double s = positive_s();
            const double qs = 2.0 * n / (n - s);
            const double q = rng.uniform() < 0.15 ? qs : q_off_two(1.0, qs);
            return derive_params(n, s, q);
        }
        if (pick == 1)
            return derive_params(n, double(n), q_off_two(1.0, 8.0));
        const double s = negative_s();
        const double qs = 2.0 * n / (n - s);
        return derive_params(n, s, rng.uniform(1.0, qs - 1e-9 - 0.01 * (qs - 1)));
    }
    case InequalityKind::sobolev:
    case InequalityKind::square:
        return derive_params(n, positive_s(), 2.0);
    case InequalityKind::hls:
        return derive_params(n, negative_s(), 1.0);
    case InequalityKind::poincare: {
        const int pick = rng.integer(0, 3);
        if (pick == 0)
            return derive_params(n, positive_s(), 2.0);
        if (pick == 1)
            return derive_params(n, double(n), 2.0);
        if (pick == 2)
            return derive_params(n, negative_s(), 1.0);
        return derive_params(n, 0.0, 2.0);
    }
    case InequalityKind::logsob:
        return derive_params(n, rng.uniform() < 0.25 ? double(n) : positive_s(), 2.0);
    case InequalityKind::logsob_critical:
        return derive_params(n, 0.0, 2.0);
    case InequalityKind::s0_subcritical:
        return derive_params(n, 0.0, rng.uniform(1.0, 1.95));
    case InequalityKind::improved: {
        if (rng.uniform() < 0.25)
            return derive_params(n, double(n), q_off_two(1.0, 8.0));
        const double s = positive_s();
        const double qs = 2.0 * n / (n - s);
        return derive_params(n, s, q_off_two(1.0, qs - 0.01 * (qs - 1)));
    }
    case InequalityKind::thm16:
        break;
    }
    throw ParameterError("random_params: unsupported kind");
}

} // namespace

std::vector<SuiteCase> random_suite(int count, std::uint64_t seed)
{
    Rng rng(seed);
    const auto& kinds = sphere_inequality_kinds();
    std::vector<SuiteCase> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        SuiteCase c;
        c.kind = kinds[i % kinds.size()];
        const int n = rng.integer(1, 5);
        c.params = random_params(rng, c.kind, n);
        const bool equality = (i / int(kinds.size())) % 5 == 4;
        if (equality) {
            if (c.kind == InequalityKind::poincare) {
                VectorXd v(2);
                v << rng.uniform(0.5, 2.0), rng.uniform(-1, 1);
                c.field = ZonalField(n, v);
            } else {
                c.field = ZonalField::constant(n, rng.uniform(0.5, 2.0));
            }
            c.expected_equality = true;
        } else {
            c.field = random_field(rng, n, c.kind == InequalityKind::square);
        }
        std::ostringstream os;
        os << "suite:" << seed << ":" << i << (equality ? ":equality" : "");
        c.descriptor = os.str();
        out.push_back(std::move(c));
    }
    return out;
}

InequalityReport evaluate(const SuiteCase& c)
{
    return deficit(c.kind, c.field, c.params, c.descriptor);
}

} // namespace fracsphere
