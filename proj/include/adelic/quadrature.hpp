#pragma once

// Real-line integrals against the Gaussian weight exp(-pi x^2).

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace adelic::quadrature {

/// Right end X of [0, X] such that exp(-pi X^2) X^{s} < 1e-14 for s <= 12.
inline constexpr double kGaussianCutoff = 7.0;

/// int_R exp(-pi x^2) |x|^{a-1} dx for real a > 0, by tanh-sinh on [0, X]
/// (handles the |x|^{a-1} endpoint behaviour) doubled for symmetry.
inline double gaussian_mellin(double a, std::size_t max_refinements = 15) {
    if (!(a > 0.0)) throw domain_error("gaussian_mellin: requires a > 0");
    boost::math::quadrature::tanh_sinh<double> integrator(max_refinements);
    auto f = [a](double x) { return std::exp(-std::numbers::pi * x * x) * std::pow(x, a - 1.0); };
    return 2.0 * integrator.integrate(f, 0.0, kGaussianCutoff, 1e-15);
}

/// int_R exp(-2 pi i k x) exp(-pi x^2) dx; the odd part vanishes, so this
/// is the cosine transform, by adaptive Gauss-Kronrod.
inline double gaussian_fourier(double k, unsigned max_depth = 20) {
    auto f = [k](double x) {
        return std::cos(2.0 * std::numbers::pi * k * x) * std::exp(-std::numbers::pi * x * x);
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    return 2.0 * GK::integrate(f, 0.0, kGaussianCutoff, max_depth, 1e-15);
}

}  // namespace adelic::quadrature
