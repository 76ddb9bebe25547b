#include "fracsphere/specfun.hpp"

namespace fracsphere {

template double log_gamma<double>(double);
template double gamma_ratio<double>(double, double);
template double gegenbauer<double>(int, double, double);
template Vector<double> gegenbauer_sequence<double>(int, double, double);
template std::pair<double, double> jacobi_p<double>(int, double, double, double);
template double hurwitz_zeta<double>(double, double);
template double jacobi_mass<double>(double, double);
template QuadratureRule<double> gauss_jacobi<double>(int, double, double);
template QuadratureRule<double> sphere_rule<double>(int, int);
template double sphere_area<double>(int);

} // namespace fracsphere
