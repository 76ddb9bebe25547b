#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracsphere/field.hpp"

namespace fracsphere {

enum class InequalityKind {
    interpolation,
    sobolev,
    hls,
    poincare,
    logsob,
    logsob_critical,
    s0_subcritical,
    improved,
    square,
    thm16
};

const char* to_string(InequalityKind kind);
InequalityKind inequality_kind_from_string(const std::string& name);
const std::vector<InequalityKind>& sphere_inequality_kinds();

struct InequalityReport {
    InequalityKind kind = InequalityKind::interpolation;
    double lhs = 0;
    double rhs = 0;
    double deficit = 0;          // rhs - lhs
    double relative_deficit = 0; // deficit / max(|rhs|, eps)
    ParameterSet params;
    double q_used = 2;           // exponent actually evaluated (q_star for sobolev/hls, 2 for log kinds)
    std::string field_descriptor;
    bool equality_case = false;

    /// deficit >= -tol * max(1, |rhs|)
    bool holds(double tol) const;
};

InequalityReport make_report(InequalityKind kind, double lhs, double rhs, const ParameterSet& params, double q_used,
                             std::string descriptor);

/// Default deficit tolerance 1e-10, overridden by FRACSPHERE_TOL.
double deficit_tolerance();

/// Kinds dividing by q - 2 refuse |q - 2| below this.
inline constexpr double q_two_exclusion = 1e-8;

InequalityReport deficit(InequalityKind kind, const ZonalField& field, const ParameterSet& params,
                         const std::string& descriptor = "");

/// ‖G‖_p² − ∫G K_s^{-1} G versus ‖F‖_{q*}^{2(q*−2)} (∫F K_s F − ‖F‖_{q*}²), G = F^{q*−1}.
InequalityReport deficit_square(const ZonalField& field, const ParameterSet& params,
                                const std::string& descriptor = "");

/// G = F^{q*-1} analyzed to bandwidth K (needs F > 0 at the nodes).
ZonalField critical_power(const ZonalField& field, const ParameterSet& params, int K);

struct FunkHecke {
    double quadrature = 0;
    double closed_form = 0;
};

/// Eigenvalue of the kernel |ζ−η|^{−λ} on degree-k harmonics.
FunkHecke funk_hecke_mu(int n, double lambda, int k, int nodes = 48);

/// ∬ G(ζ)|ζ−η|^{−λ}G(η) dμ dμ summed degree by degree from quadrature eigenvalues.
double riesz_energy(const ZonalField& field, double lambda);

/// Q[1 + eps·Y_1]·C − 1
double linearization_probe(const ParameterSet& params, double eps);

struct TaylorRemainder {
    double t = 0;
    double q = 0;
    double r = 0;
    double bound = 0;     // bound on |r| for the case containing t
    double roundoff = 0;  // floating-point error bound for r
    const char* region = "";
    bool within_bound = false;
    bool sign_ok = false; // r > 0 on t > 0, r < 0 on (-1, 0), lower bracket on t <= -1
};

/// r(t) = |1+t|^q − 1 − qt − ½q(q−1)t² with the case constants of the remainder lemma.
TaylorRemainder taylor_remainder(double t, double q);

/// Case (i) constant c_q (t >= 1).
double taylor_case_one_constant(double q);

struct SuiteCase {
    InequalityKind kind;
    ParameterSet params;
    ZonalField field;
    std::string descriptor;
    bool expected_equality = false;
};

/// Seeded random band-limited fields over all sphere inequality kinds.
std::vector<SuiteCase> random_suite(int count, std::uint64_t seed);

InequalityReport evaluate(const SuiteCase& c);

} // namespace fracsphere
