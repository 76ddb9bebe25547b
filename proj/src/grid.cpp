#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "fracsphere/grid.hpp"

namespace fracsphere {

bool is_power_of_two(Index n)
{
    return n > 0 && (n & (n - 1)) == 0;
}

GridField::GridField(GridSpec g, VectorXd v) : grid(g), values(std::move(v))
{
    if (grid.N < 2 || !(grid.L > 0))
        throw DomainError("grid needs N >= 2 and L > 0");
    if (values.size() != grid.N)
        throw DomainError("grid value count does not match N");
    if (!values.allFinite())
        throw DomainError("grid values must be finite");
}

VectorXd GridField::abscissae() const
{
    VectorXd x(grid.N);
    for (Index j = 0; j < grid.N; ++j)
        x(j) = grid.x(j);
    return x;
}

VectorXd convolve(const VectorXd& a, const VectorXd& b)
{
    const Index out = a.size() + b.size() - 1;
    Index size = 1;
    while (size < out)
        size <<= 1;
    std::vector<double> pa(size, 0.0), pb(size, 0.0);
    for (Index i = 0; i < a.size(); ++i)
        pa[i] = a(i);
    for (Index i = 0; i < b.size(); ++i)
        pb[i] = b(i);
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> fa, fb;
    fft.fwd(fa, pa);
    fft.fwd(fb, pb);
    for (std::size_t i = 0; i < fa.size(); ++i)
        fa[i] *= fb[i];
    std::vector<double> r;
    fft.inv(r, fa);
    VectorXd c(out);
    for (Index i = 0; i < out; ++i)
        c(i) = r[i];
    return c;
}

VectorXd fft_frequencies(Index size, double dx)
{
    VectorXd xi(size);
    for (Index i = 0; i < size; ++i) {
        const Index k = i < (size + 1) / 2 ? i : i - size;
        xi(i) = double(k) / (double(size) * dx);
    }
    return xi;
}

VectorXd apply_multiplier_impl(const VectorXd& v, const VectorXd& multiplier)
{
    std::vector<double> in(v.data(), v.data() + v.size());
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spec;
    fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
    fft.fwd(spec, in);
    for (std::size_t i = 0; i < spec.size(); ++i)
        spec[i] *= multiplier(Index(i));
    std::vector<double> out;
    fft.inv(out, spec, v.size());
    return Eigen::Map<const VectorXd>(out.data(), Index(out.size()));
}

} // namespace fracsphere
