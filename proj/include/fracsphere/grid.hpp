#pragma once

#include "fracsphere/specfun.hpp"

namespace fracsphere {

struct GridSpec {
    double L = 60;    // half width
    Index N = 32768;  // samples, power of two

    double dx() const { return 2 * L / double(N); }
    double x(Index j) const { return -L + dx() * double(j); }
};

/// Uniform samples x_j = −L + 2Lj/N, j = 0..N−1.
struct GridField {
    GridSpec grid;
    VectorXd values;

    GridField() = default;
    GridField(GridSpec g, VectorXd v);

    Index size() const { return values.size(); }
    double x(Index j) const { return grid.x(j); }
    VectorXd abscissae() const;
};

template <typename Fn>
GridField sample(const GridSpec& grid, Fn&& f)
{
    VectorXd v(grid.N);
    for (Index j = 0; j < grid.N; ++j)
        v(j) = f(grid.x(j));
    return {grid, v};
}

/// Full linear convolution (length a.size() + b.size() − 1) through a power-of-two FFT.
VectorXd convolve(const VectorXd& a, const VectorXd& b);

/// DFT frequencies (cycles per unit length) in numpy fftfreq order.
VectorXd fft_frequencies(Index size, double dx);

/// Applies a real even multiplier given in fftfreq order; only the first size/2 + 1 entries are read.
VectorXd apply_multiplier_impl(const VectorXd& v, const VectorXd& multiplier);

/// Periodic real even Fourier multiplier m(ξ), ξ in cycles per unit length.
template <typename Multiplier>
VectorXd apply_multiplier(const VectorXd& v, double dx, Multiplier&& m)
{
    const VectorXd xi = fft_frequencies(v.size(), dx);
    VectorXd mult(xi.size());
    for (Index i = 0; i < xi.size(); ++i)
        mult(i) = m(xi(i));
    return apply_multiplier_impl(v, mult);
}

bool is_power_of_two(Index n);

} // namespace fracsphere
