#pragma once

/**
 * Local Gauss integrals and the constant-acceleration propagator.
 *
 *   int_{Q_v} chi_v(a x^2 + b x) d_v x = lambda_v(a) |2a|_v^{-1/2} chi_v(-b^2 / 4a)
 *
 *   K_v(x2, T; x1, 0) = lambda_v(-8T) |4T|_v^{-1/2}
 *        chi_v(-lambda^2 T^3 / 24 + [lambda (x2 + x1) - 2] T / 4 + (x2 - x1)^2 / 8T)
 *
 * Values are held exactly as (eighth root) x base^{-1/2} x (root of unity).
 * padic_gauss_oracle evaluates the left-hand integral by brute force over a
 * ball, independently of the closed form.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <set>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "local_fields.hpp"
#include "padic.hpp"
#include "quadrature.hpp"
#include "symbols.hpp"

namespace adelic {

/// root_part * magnitude_base^{-1/2} * phase_part.
struct ThreePartValue {
    EighthRoot root_part;
    Rational magnitude_base{1};
    RootOfUnity phase_part;

    ExactValue to_exact() const {
        return {root_part.to_root_of_unity() * phase_part, magnitude_base.inverse()};
    }
    std::complex<double> to_complex() const { return to_exact().to_complex(); }

    friend bool operator==(const ThreePartValue&, const ThreePartValue&) = default;

    std::string str() const {
        return root_part.str() + " * (" + magnitude_base.str() + ")^(-1/2) * " + phase_part.str();
    }
};

using GaussFactor = ThreePartValue;
using KernelValue = ThreePartValue;

inline GaussFactor gauss_factor(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero()) throw domain_error("gauss: a must be nonzero");
    return {lambda(a, v), abs(Rational(2) * a, v).value, character(-(b * b) / (Rational(4) * a), v)};
}

/// Outcome of an exact three-channel product check.
struct ThreePartProduct {
    bool holds = false;
    bool roots_cancel = false;       // eighth-root exponents sum to 0 mod 8
    bool magnitudes_cancel = false;  // product of bases is 1
    bool phases_cancel = false;      // phase sum is an integer
    std::vector<std::pair<Place, ThreePartValue>> factors;
};

namespace detail {

inline ThreePartProduct combine_three_part(std::vector<std::pair<Place, ThreePartValue>> factors) {
    ThreePartProduct out;
    EighthRoot roots;
    Rational bases(1);
    RootOfUnity phases;
    for (const auto& [v, f] : factors) {
        roots *= f.root_part;
        bases *= f.magnitude_base;
        phases *= f.phase_part;
    }
    out.roots_cancel = roots.is_one();
    out.magnitudes_cancel = bases == Rational(1);
    out.phases_cancel = phases.is_one();
    out.holds = out.roots_cancel && out.magnitudes_cancel && out.phases_cancel;
    out.factors = std::move(factors);
    return out;
}

inline std::vector<Place> places_from(std::set<std::uint64_t> primes) {
    primes.insert(2);
    std::vector<Place> out{Place::infinity()};
    for (auto p : primes) out.push_back(Place::at(p));
    return out;
}

}  // namespace detail

/// Places where a Gauss factor can differ from 1.
inline std::vector<Place> gauss_places(const Rational& a, const Rational& b) {
    if (a.is_zero()) throw domain_error("gauss: a must be nonzero");
    std::set<std::uint64_t> ps = support(a);
    ps.merge(denominator_primes(-(b * b) / (Rational(4) * a)));
    return detail::places_from(std::move(ps));
}

inline ThreePartProduct verify_gauss_product(const Rational& a, const Rational& b) {
    std::vector<std::pair<Place, ThreePartValue>> factors;
    for (const auto& v : gauss_places(a, b)) factors.emplace_back(v, gauss_factor(a, b, v));
    return detail::combine_three_part(std::move(factors));
}

/// Upper bound on the number of cosets the oracle will sum over.
inline constexpr std::uint64_t kGaussOracleMaxCosets = std::uint64_t{1} << 27;

/// Brute-force value of the integral of chi_p(a t^2 + b t) over the ball
/// p^{-N} Z_p: the integrand is constant on cosets of p^M Z_p, for
/// M >= max(N - nu(2a), ceil(-nu(a)/2), -nu(b), 0), so the integral is
/// p^{-M} times a finite character sum over t = k p^{-N}, 0 <= k < p^{N+M}.
inline std::complex<double> padic_gauss_oracle(const Rational& a, const Rational& b, Prime p, unsigned cutoff) {
    if (a.is_zero()) throw domain_error("gauss oracle: a must be nonzero");
    if (cutoff > 12) throw domain_error("gauss oracle: cutoff N > 12 rejected");
    const long long n = cutoff;
    const long long nu_a = valuation(a, p).value();
    const long long nu_2a = valuation(Rational(2) * a, p).value();
    const bool has_b = !b.is_zero();
    const long long nu_b = has_b ? valuation(b, p).value() : 0;

    long long m = std::max<long long>({0, n - nu_2a, (-nu_a + 1) / 2, has_b ? -nu_b : 0});

    const double log2p = std::log2(static_cast<double>(p.value()));
    if (static_cast<double>(n + m) * log2p > std::log2(static_cast<double>(kGaussOracleMaxCosets)))
        throw domain_error("gauss oracle: coset count exceeds cost guard");

    // a t^2 + b t with t = k / p^N, written as (alpha k^2 + beta k) / p^E mod 1.
    const long long ea = std::max<long long>(0, -nu_a);
    const long long eb = has_b ? std::max<long long>(0, -nu_b) : 0;
    const long long e = std::max(2 * n + ea, n + eb);
    if (static_cast<double>(e) * log2p > 62.0) throw domain_error("gauss oracle: modulus exceeds 64 bits");

    const BigInt pe = detail::pow(p.big(), static_cast<unsigned>(e));
    auto coefficient = [&](const Rational& c, long long t_power) -> std::uint64_t {
        // c / p^{t_power N} reduced to (integer mod p^E) / p^E.
        const Rational scaled = c * Rational(pe) / Rational(p.big()).pow(t_power * n);
        if (scaled.den() % p.big() == 0) throw domain_error("gauss oracle: internal scaling error");
        return residue(scaled, p, static_cast<unsigned>(e)).convert_to<std::uint64_t>();
    };
    const std::uint64_t alpha = coefficient(a, 2);
    const std::uint64_t beta = has_b ? coefficient(b, 1) : 0;
    const std::uint64_t mod = pe.convert_to<std::uint64_t>();
    const std::uint64_t count = detail::pow(p.big(), static_cast<unsigned>(n + m)).convert_to<std::uint64_t>();

    using u128 = unsigned __int128;
    const double scale = 2.0 * std::numbers::pi / static_cast<double>(mod);
    std::complex<double> sum = 0.0;
    for (std::uint64_t k = 0; k < count; ++k) {
        const std::uint64_t km = k % mod;
        const std::uint64_t sq = static_cast<std::uint64_t>(static_cast<u128>(km) * km % mod);
        const std::uint64_t phase =
            static_cast<std::uint64_t>((static_cast<u128>(alpha) * sq + static_cast<u128>(beta) * km) % mod);
        sum += std::polar(1.0, scale * static_cast<double>(phase));
    }
    return sum / std::pow(static_cast<double>(p.value()), static_cast<double>(m));
}

/// Argument of chi_v in the propagator.
inline Rational kernel_phase_argument(const Rational& x2, const Rational& t, const Rational& x1,
                                      const Rational& accel) {
    if (t.is_zero()) throw domain_error("kernel: T must be nonzero");
    const Rational dx = x2 - x1;
    return -(accel * accel * t.pow(3)) / Rational(24) + (accel * (x2 + x1) - Rational(2)) * t / Rational(4) +
           dx * dx / (Rational(8) * t);
}

inline KernelValue kernel(const Rational& x2, const Rational& t, const Rational& x1, const Rational& accel,
                          const Place& v) {
    if (t.is_zero()) throw domain_error("kernel: T must be nonzero");
    return {lambda(Rational(-8) * t, v), abs(Rational(4) * t, v).value,
            character(kernel_phase_argument(x2, t, x1, accel), v)};
}

inline std::vector<Place> kernel_places(const Rational& x2, const Rational& x1, const Rational& accel,
                                        const Rational& t) {
    if (t.is_zero()) throw domain_error("kernel: T must be nonzero");
    std::set<std::uint64_t> ps = support(t);
    ps.merge(denominator_primes(kernel_phase_argument(x2, t, x1, accel)));
    return detail::places_from(std::move(ps));
}

inline ThreePartProduct verify_kernel_product(const Rational& x2, const Rational& x1, const Rational& accel,
                                              const Rational& t) {
    std::vector<std::pair<Place, ThreePartValue>> factors;
    for (const auto& v : kernel_places(x2, x1, accel, t)) factors.emplace_back(v, kernel(x2, t, x1, accel, v));
    return detail::combine_three_part(std::move(factors));
}

/// Real factor times the product of Omega gates over all primes.
struct WaveFunctionValue {
    double real_factor = 0.0;
    int padic_gate = 0;

    double value() const { return padic_gate == 1 ? real_factor : 0.0; }
};

/// prod_p Omega(|x|_p): only primes of the denominator can close the gate.
inline int integrality_gate(const Rational& x) {
    for (auto p : denominator_primes(x))
        if (omega(x, Prime(p)) == 0) return 0;
    return 1;
}

/// psi_inf(x) prod_p Omega(|x|_p) for a caller-supplied real component.
template <typename RealComponent>
    requires std::is_invocable_r_v<double, RealComponent, const Rational&>
WaveFunctionValue ground_state(const Rational& x, RealComponent&& psi_inf) {
    return {static_cast<double>(std::invoke(psi_inf, x)), integrality_gate(x)};
}

/// 2^{1/4} exp(-pi x^2): the real component of the oscillator vacuum.
inline double gaussian_vacuum_real(double x) { return std::pow(2.0, 0.25) * std::exp(-std::numbers::pi * x * x); }

inline WaveFunctionValue oscillator_vacuum(const Rational& x) {
    return ground_state(x, [](const Rational& r) { return gaussian_vacuum_real(r.to_double()); });
}

struct FourierSelfMapCheck {
    bool holds = false;
    double transformed_real = 0.0;  // quadrature of the real component's transform at k
    double vacuum_real = 0.0;       // 2^{1/4} exp(-pi k^2)
    double real_residual = 0.0;
    int gate = 0;
};

/// The vacuum is its own Fourier transform: the real Gaussian by quadrature,
/// the Omega gates structurally (the transform of the Z_p indicator is itself).
inline FourierSelfMapCheck fourier_selfmap_check(const Rational& k, double tolerance = 1e-8) {
    FourierSelfMapCheck out;
    const double kd = k.to_double();
    out.transformed_real = std::pow(2.0, 0.25) * quadrature::gaussian_fourier(kd);
    out.vacuum_real = gaussian_vacuum_real(kd);
    out.real_residual = std::abs(out.transformed_real - out.vacuum_real);
    out.gate = integrality_gate(k);
    out.holds = out.real_residual < tolerance && oscillator_vacuum(k).padic_gate == out.gate;
    return out;
}

}  // namespace adelic
