#pragma once

/**
 * Local gamma, beta and zeta functions and their adelic products.
 *
 *   Gamma_p(a)   = (1 - p^{a-1}) / (1 - p^{-a})
 *   Gamma_inf(a) = zeta(1-a) / zeta(a) = 2 (2 pi)^{-a} Gamma(a) cos(pi a / 2)
 *   B_v(a, b)    = Gamma_v(a) Gamma_v(b) Gamma_v(c),  a + b + c = 1
 *   zeta_inf(a)  = pi^{-a/2} Gamma(a/2),   zeta_p(a) = 1 / (1 - p^{-a})
 *   zeta_A(a)    = zeta_inf(a) zeta(a),    zeta_A(1 - a) = zeta_A(a)
 *
 * The product of Gamma_p over all primes diverges; it is regularized as
 * zeta(u) / zeta(1 - u) through the continued Euler product.
 */

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "primes.hpp"
#include "quadrature.hpp"

namespace adelic {

using Complex = std::complex<double>;

/// Distance below which an argument counts as sitting on a pole.
inline constexpr double kPoleTolerance = 1e-8;

namespace detail {

inline void require_finite(Complex z, const char* where) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error(std::string(where) + ": non-finite result");
}

inline std::string format_complex(Complex z) {
    return std::to_string(z.real()) + (z.imag() < 0 ? "-" : "+") + std::to_string(std::abs(z.imag())) + "i";
}

/// Nearest integer n <= 0 within tolerance of z, if any.
inline std::optional<long long> near_nonpositive_integer(Complex z) {
    const double r = std::round(z.real());
    if (r > 0.5) return std::nullopt;
    if (std::abs(z - Complex(r, 0.0)) < kPoleTolerance) return static_cast<long long>(r);
    return std::nullopt;
}

inline Complex pow_real_base(double base, Complex z) { return std::exp(z * std::log(base)); }

}  // namespace detail

/// Classical Gamma for complex argument: Lanczos (g = 7, 9 terms) on
/// Re z >= 1/2, reflection elsewhere.
inline Complex gamma(Complex z) {
    if (detail::near_nonpositive_integer(z))
        throw pole_error("gamma: pole at " + detail::format_complex(z), z);
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma(1.0 - z));
    static constexpr std::array<double, 9> kCoeff = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    z -= 1.0;
    Complex x = kCoeff[0];
    for (std::size_t i = 1; i < kCoeff.size(); ++i) x += kCoeff[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// Riemann zeta by the alternating (eta) series with Borwein's
/// Euler-van Wijngaarden style acceleration on Re s >= 0 and the
/// functional equation on Re s < 0.
class ZetaEvaluator {
public:
    explicit ZetaEvaluator(int terms = 64, double target_precision = 1e-12)
        : terms_(terms), target_precision_(target_precision), d_(terms + 1) {
        // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
        const int n = terms_;
        long double term = 1.0L / n;
        long double acc = term;
        d_[0] = n * acc;
        for (int i = 1; i <= n; ++i) {
            term *= 4.0L * (n + i - 1) * (n - i + 1) / ((2.0L * i) * (2.0L * i - 1));
            acc += term;
            d_[i] = n * acc;
        }
    }

    int terms() const noexcept { return terms_; }
    double target_precision() const noexcept { return target_precision_; }

    Complex operator()(Complex s) const {
        if (std::abs(s - 1.0) < kPoleTolerance) throw pole_error("zeta: pole at s = 1", s);
        if (s.real() < -0.5) {
            constexpr double pi = std::numbers::pi;
            const Complex value = detail::pow_real_base(2.0, s) * detail::pow_real_base(pi, s - 1.0) *
                                  std::sin(pi * s / 2.0) * gamma(1.0 - s) * (*this)(1.0 - s);
            detail::require_finite(value, "zeta");
            return value;
        }
        const Complex denom = 1.0 - detail::pow_real_base(2.0, 1.0 - s);
        if (std::abs(denom) < kPoleTolerance)
            throw domain_error("zeta: eta-series denominator vanishes at " + detail::format_complex(s));
        const int n = terms_;
        std::complex<long double> sum = 0.0L;
        const long double dn = d_[n];
        for (int k = 0; k < n; ++k) {
            const Complex power = detail::pow_real_base(static_cast<double>(k + 1), -s);
            const long double weight = (k % 2 == 0 ? 1.0L : -1.0L) * (dn - d_[k]);
            sum += std::complex<long double>(power.real(), power.imag()) * weight;
        }
        const Complex eta(static_cast<double>(sum.real() / dn), static_cast<double>(sum.imag() / dn));
        const Complex value = eta / denom;
        detail::require_finite(value, "zeta");
        return value;
    }

private:
    int terms_;
    double target_precision_;
    std::vector<long double> d_;
};

inline const ZetaEvaluator& default_zeta() {
    static const ZetaEvaluator evaluator;
    return evaluator;
}

inline Complex riemann_zeta(Complex s) { return default_zeta()(s); }

// ---------------------------------------------------------------- gamma / beta

/// Gamma_v(a). At a prime, poles are the zeros of 1 - p^{-a}; at infinity
/// the zeros of zeta(a).
inline Complex gamma_local(Complex a, const Place& v) {
    if (!v.is_infinite()) {
        const double p = static_cast<double>(v.prime().value());
        const Complex denom = 1.0 - detail::pow_real_base(p, -a);
        if (std::abs(denom) < kPoleTolerance)
            throw pole_error("gamma_" + v.str() + ": pole at a = " + detail::format_complex(a), a);
        return (1.0 - detail::pow_real_base(p, a - 1.0)) / denom;
    }
    if (std::abs(a) < kPoleTolerance || std::abs(a - 1.0) < kPoleTolerance)
        throw pole_error("gamma_inf: pole at a = " + detail::format_complex(a), a);
    const Complex zeta_a = riemann_zeta(a);
    if (std::abs(zeta_a) < kPoleTolerance)
        throw pole_error("gamma_inf: zeta(a) vanishes at a = " + detail::format_complex(a), a);
    return riemann_zeta(1.0 - a) / zeta_a;
}

/// The real local integral of |x|^{a-1} chi_inf(x) evaluated through the
/// classical Gamma function, 2 (2 pi)^{-a} Gamma(a) cos(pi a / 2); on
/// Re a < 1/2 the form pi (2 pi)^{-a} / (sin(pi a / 2) Gamma(1 - a)) keeps
/// negative odd integers finite.
inline Complex gamma_infinity_integral(Complex a) {
    constexpr double pi = std::numbers::pi;
    const Complex scale = detail::pow_real_base(2.0 * pi, -a);
    if (a.real() >= 0.5) return 2.0 * scale * gamma(a) * std::cos(pi * a / 2.0);
    const Complex s = std::sin(pi * a / 2.0);
    if (std::abs(s) < kPoleTolerance)
        throw pole_error("gamma_inf: pole at a = " + detail::format_complex(a), a);
    return pi * scale / (s * gamma(1.0 - a));
}

inline Complex beta_local(Complex a, Complex b, const Place& v) {
    const Complex c = 1.0 - a - b;
    const std::array<std::pair<const char*, Complex>, 3> args = {{{"a", a}, {"b", b}, {"c", c}}};
    Complex out = 1.0;
    for (const auto& [label, u] : args) {
        try {
            out *= gamma_local(u, v);
        } catch (const pole_error& e) {
            throw pole_error(std::string("beta (argument ") + label + "): " + e.what(), e.location());
        } catch (const domain_error& e) {
            throw domain_error(std::string("beta (argument ") + label + "): " + e.what());
        }
    }
    return out;
}

struct GammaProductCheck {
    Complex gamma_infinity;      // Gamma_inf(u), from the classical Gamma route
    Complex regularized_finite;  // zeta(u) / zeta(1 - u)
    Complex combined;
    double residual = 0.0;
    /// Set when u sits on a trivial zero of zeta(u) or zeta(1 - u); the
    /// factors are then 0 * infinity and the combination is taken in
    /// cancelled form.
    bool cancelled = false;
    std::string note;
    /// prod_{p <= P} Gamma_p(u) for P = 10, 100, 1000 (diagnostic; divergent).
    std::vector<std::pair<std::uint64_t, Complex>> partial_products;
};

namespace detail {

/// u is a trivial zero of zeta(u) (u = -2, -4, ...) or of zeta(1 - u) (u = 3, 5, ...).
inline bool on_trivial_zero_pair(Complex u) {
    const double r = std::round(u.real());
    if (std::abs(u - Complex(r, 0.0)) >= kPoleTolerance) return false;
    const auto n = static_cast<long long>(r);
    return (n <= -2 && n % 2 == 0) || (n >= 3 && n % 2 == 1);
}

inline std::vector<std::pair<std::uint64_t, Complex>> partial_gamma_products(Complex u) {
    std::vector<std::pair<std::uint64_t, Complex>> out;
    Complex acc = 1.0;
    std::size_t next = 0;
    const std::array<std::uint64_t, 3> bounds = {10, 100, 1000};
    for (auto p : primes_up_to(bounds.back())) {
        while (next < bounds.size() && p > bounds[next]) out.emplace_back(bounds[next++], acc);
        try {
            acc *= gamma_local(u, Place::at(p));
        } catch (const domain_error&) {
            return out;
        }
    }
    while (next < bounds.size()) out.emplace_back(bounds[next++], acc);
    return out;
}

}  // namespace detail

/// |Gamma_inf(u) * reg prod_p Gamma_p(u) - 1|.
inline GammaProductCheck verify_gamma_product(Complex u) {
    if (std::abs(u) < kPoleTolerance || std::abs(u - 1.0) < kPoleTolerance)
        throw domain_error("gamma product: u must avoid 0 and 1");
    GammaProductCheck out;
    out.partial_products = detail::partial_gamma_products(u);
    if (detail::on_trivial_zero_pair(u)) {
        out.cancelled = true;
        out.note = "trivial zero: Gamma_inf(u) and zeta(u)/zeta(1-u) are 0 and infinity; combined in cancelled form";
        out.gamma_infinity = std::numeric_limits<double>::quiet_NaN();
        out.regularized_finite = std::numeric_limits<double>::quiet_NaN();
        out.combined = 1.0;
        out.residual = 0.0;
        return out;
    }
    out.gamma_infinity = gamma_infinity_integral(u);
    const Complex zeta_1mu = riemann_zeta(1.0 - u);
    if (std::abs(zeta_1mu) < kPoleTolerance)
        throw pole_error("gamma product: zeta(1-u) vanishes at u = " + detail::format_complex(u), u);
    out.regularized_finite = riemann_zeta(u) / zeta_1mu;
    out.combined = out.gamma_infinity * out.regularized_finite;
    out.residual = std::abs(out.combined - 1.0);
    return out;
}

struct BetaProductCheck {
    Complex c;
    std::array<GammaProductCheck, 3> parts;  // u = a, b, c
    Complex combined;
    double residual = 0.0;
};

inline BetaProductCheck verify_beta_product(Complex a, Complex b) {
    BetaProductCheck out;
    out.c = 1.0 - a - b;
    const std::array<std::pair<const char*, Complex>, 3> args = {{{"a", a}, {"b", b}, {"c", out.c}}};
    out.combined = 1.0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        try {
            out.parts[i] = verify_gamma_product(args[i].second);
        } catch (const pole_error& e) {
            throw pole_error(std::string("beta product (argument ") + args[i].first + "): " + e.what(), e.location());
        } catch (const domain_error& e) {
            throw domain_error(std::string("beta product (argument ") + args[i].first + "): " + e.what());
        }
        out.combined *= out.parts[i].combined;
    }
    out.residual = std::abs(out.combined - 1.0);
    return out;
}

// ---------------------------------------------------------------- zeta

inline Complex zeta_local(Complex a, const Place& v) {
    if (v.is_infinite()) {
        if (auto n = detail::near_nonpositive_integer(a / 2.0))
            throw pole_error("zeta_inf: pole at a = " + std::to_string(2 * *n), a);
        return detail::pow_real_base(std::numbers::pi, -a / 2.0) * gamma(a / 2.0);
    }
    const double p = static_cast<double>(v.prime().value());
    const Complex denom = 1.0 - detail::pow_real_base(p, -a);
    if (std::abs(denom) < kPoleTolerance)
        throw pole_error("zeta_" + v.str() + ": pole at a = " + detail::format_complex(a), a);
    return 1.0 / denom;
}

/// (1 - 1/p)^{-1} int_{Z_p} |x|_p^{a-1} d_p x summed shell by shell:
/// the shell p^k Z_p \ p^{k+1} Z_p has measure p^{-k}(1 - 1/p) and |x|_p = p^{-k}.
inline Complex zeta_local_shell_sum(Complex a, Prime p, double tail_tolerance = 1e-15) {
    if (!(a.real() > 0.0)) throw domain_error("zeta shell sum: requires Re a > 0");
    const double pd = static_cast<double>(p.value());
    const double shell_scale = 1.0 - 1.0 / pd;
    Complex sum = 0.0;
    for (int k = 0; k < 100000; ++k) {
        const double measure = std::pow(pd, -k) * shell_scale;
        const Complex integrand = detail::pow_real_base(pd, -static_cast<double>(k) * (a - 1.0));
        const Complex term = measure * integrand;
        sum += term;
        if (std::abs(term) < tail_tolerance * std::max(1.0, std::abs(sum))) break;
    }
    return sum / shell_scale;
}

/// zeta_inf(a) zeta(a). On Re a <= 0 the Gamma pole of zeta_inf and the
/// trivial zero of zeta are cancelled analytically:
/// zeta_A(a) = 2^a pi^{a/2} Gamma(1 - a) zeta(1 - a) / Gamma(1 - a/2).
inline Complex zeta_adelic(Complex a) {
    if (std::abs(a) < kPoleTolerance || std::abs(a - 1.0) < kPoleTolerance)
        throw pole_error("zeta_A: pole at a = " + detail::format_complex(a), a);
    constexpr double pi = std::numbers::pi;
    Complex value;
    if (a.real() > 0.0) {
        value = zeta_local(a, Place::infinity()) * riemann_zeta(a);
    } else {
        value = detail::pow_real_base(2.0, a) * detail::pow_real_base(pi, a / 2.0) * gamma(1.0 - a) *
                riemann_zeta(1.0 - a) / gamma(1.0 - a / 2.0);
    }
    detail::require_finite(value, "zeta_A");
    return value;
}

/// |zeta_A(a) - zeta_A(1 - a)| / max(1, |zeta_A(a)|).
inline double verify_functional_equation(Complex a) {
    const Complex lhs = zeta_adelic(a);
    const Complex rhs = zeta_adelic(1.0 - a);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

// ---------------------------------------------------------------- Mellin

/// Hurwitz zeta for real s > 1, q > 0 by Euler-Maclaurin.
inline double hurwitz_zeta(double s, double q, int direct_terms = 32) {
    if (!(s > 1.0) || !(q > 0.0)) throw domain_error("hurwitz_zeta: requires s > 1, q > 0");
    static constexpr std::array<double, 8> kB = {1.0 / 6,      -1.0 / 30, 1.0 / 42,      -1.0 / 30,
                                                 5.0 / 66,     -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    double sum = 0.0;
    for (int k = 0; k < direct_terms; ++k) sum += std::pow(q + k, -s);
    const double x = q + direct_terms;
    sum += std::pow(x, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(x, -s);
    double rising = s;          // s (s+1) ... (s+2j-2)
    double factorial = 2.0;     // (2j)!
    double xpow = std::pow(x, -s - 1.0);
    for (std::size_t j = 1; j <= kB.size(); ++j) {
        sum += kB[j - 1] / factorial * rising * xpow;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        xpow /= x * x;
    }
    return sum;
}

struct MellinComparison {
    double numeric = 0.0;
    double closed = 0.0;
    double residual = 0.0;
};

/// Primes whose local factors are computed as shell integrals in mellin_vacuum.
inline constexpr std::array<std::uint64_t, 4> kMellinLocalPrimes = {2, 3, 5, 7};

/// Mellin transform of the oscillator vacuum, computed two ways.
///
/// numeric: sqrt(2) * [quadrature of int_R exp(-pi x^2)|x|^{a-1}] * prod_{p<=7}
/// [shell-sum local integral] * (sum of n^{-a} over integers coprime to 210).
/// The last factor is the exact remainder of the Euler product beyond 7,
/// summed through Hurwitz zeta values; a truncated Euler product would need
/// primes near 10^14 at a = 3/2.
///
/// closed: sqrt(2) Gamma(a/2) pi^{-a/2} zeta(a).
inline MellinComparison mellin_vacuum(double a, std::size_t quadrature_refinements = 15) {
    if (!(a > 1.0)) throw domain_error("mellin: requires a > 1");
    const double real_part = quadrature::gaussian_mellin(a, quadrature_refinements);
    double local = 1.0;
    std::uint64_t wheel = 1;
    for (auto p : kMellinLocalPrimes) {
        local *= zeta_local_shell_sum(Complex(a, 0.0), Prime(p)).real();
        wheel *= p;
    }
    double rough = 0.0;
    for (std::uint64_t r = 1; r < wheel; ++r) {
        bool coprime = true;
        for (auto p : kMellinLocalPrimes) coprime = coprime && (r % p != 0);
        if (coprime) rough += hurwitz_zeta(a, static_cast<double>(r) / static_cast<double>(wheel));
    }
    rough *= std::pow(static_cast<double>(wheel), -a);

    MellinComparison out;
    out.numeric = std::sqrt(2.0) * real_part * local * rough;
    out.closed = (std::sqrt(2.0) * gamma(Complex(a / 2.0, 0.0)) *
                  std::pow(std::numbers::pi, -a / 2.0) * riemann_zeta(Complex(a, 0.0)))
                     .real();
    out.residual = std::abs(out.numeric - out.closed);
    return out;
}

}  // namespace adelic
