#include <cmath>
#include <limits>
#include <sstream>

#include "fracsphere/spectrum.hpp"

namespace fracsphere {

const char* to_string(Regime r)
{
    switch (r) {
    case Regime::positive: return "positive";
    case Regime::endpoint: return "endpoint";
    case Regime::negative: return "negative";
    case Regime::zero: return "zero";
    }
    return "?";
}

namespace {

[[noreturn]] void reject(const std::string& theorem, int n, double s, double q, const std::string& range)
{
    std::ostringstream os;
    os.precision(17);
    os << "(n, s, q) = (" << n << ", " << s << ", " << q << ") is outside the " << theorem
       << ", which requires " << range;
    throw ParameterError(os.str());
}

} // namespace

ParameterSet derive_params(int n, double s, double q)
{
    if (n < 1)
        throw ParameterError("dimension n must be a positive integer");
    if (!std::isfinite(s) || !std::isfinite(q))
        throw ParameterError("s and q must be finite");
    if (!(s > -n) || s > n) {
        std::ostringstream os;
        os.precision(17);
        os << "order s = " << s << " must lie in (-n, n] with n = " << n;
        throw ParameterError(os.str());
    }

    ParameterSet ps;
    ps.n = n;
    ps.s = s;
    ps.q = q;
    const double inf = std::numeric_limits<double>::infinity();

    if (s == 0) {
        ps.regime = Regime::zero;
        if (!(q >= 1 && q <= 2))
            reject("zero-order inequality on the sphere", n, s, q,
                   "q in [1, 2) (q = 2 is the conformally invariant logarithmic Sobolev case)");
        ps.q_star = 2;
        ps.p = 2;
        ps.lambda = n;
        ps.x_crit = 0.5 * n;
        ps.kappa = 1;
        ps.sharp_constant = 0.5 * n;
        return ps;
    }

    if (s == n) {
        ps.regime = Regime::endpoint;
        if (!(q >= 1))
            reject("sharp interpolation theorem at s = n", n, s, q, "q in [1, 2) or (2, inf) (q = 2: logarithmic Sobolev)");
        ps.q_star = inf;
        ps.p = 1;
        ps.lambda = 0;
        ps.x_crit = 0;
        ps.kappa = inf;
        ps.sharp_constant = sharp_constant(n, s);
        return ps;
    }

    ps.q_star = 2.0 * n / (n - s);
    ps.p = 2.0 * n / (n + s);
    ps.lambda = n - s;
    ps.x_crit = 0.5 * (n - s);
    ps.kappa = gamma_ratio(0.5 * (n - s), 0.5 * (n + s));
    ps.sharp_constant = sharp_constant(n, s);

    if (s > 0) {
        ps.regime = Regime::positive;
        if (!(q >= 1 && q <= ps.q_star))
            reject("sharp interpolation theorem for 0 < s < n", n, s, q,
                   "q in [1, 2) or (2, 2n/(n-s)] (q = 2: logarithmic Sobolev)");
    } else {
        ps.regime = Regime::negative;
        if (!(q >= 1 && q < ps.q_star))
            reject("interpolation theorem for -n < s < 0", n, s, q, "q in [1, 2n/(n-s))");
    }
    return ps;
}

ParameterSet derive_params(int n, double s)
{
    if (s < 0)
        return derive_params(n, s, 1.0);
    return derive_params(n, s, 2.0);
}

} // namespace fracsphere
