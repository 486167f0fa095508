#pragma once

/**
 * Quadratic symbols and the eighth-root factors lambda_v.
 *
 * lambda_v(x) is the phase of the local Gauss integral of chi_v(x t^2):
 *
 *   lambda_inf(x) = exp(-pi i sgn(x) / 4)
 *   lambda_p(x)   = 1                          nu even, p odd
 *                 = eps_p (x_0 / p)            nu odd,  p odd
 *   lambda_2(x)   = exp(pi i (1/4 - x_1/2))    nu even
 *                 = exp(pi i (x_2 + x_1/2 + 1/4))  nu odd
 *
 * with eps_p = 1 for p = 1 mod 4 and i for p = 3 mod 4, and x_k the digits
 * of the unit part of x. Every branch is exp(i pi k / 4) for an integer k.
 */

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "local_fields.hpp"
#include "padic.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace adelic {

/// exp(i pi k / 4), k mod 8.
class EighthRoot {
public:
    EighthRoot() = default;
    explicit EighthRoot(long long k) : k_(static_cast<int>(((k % 8) + 8) % 8)) {}

    int k() const noexcept { return k_; }
    bool is_one() const noexcept { return k_ == 0; }

    friend EighthRoot operator*(EighthRoot a, EighthRoot b) { return EighthRoot(a.k_ + b.k_); }
    EighthRoot& operator*=(EighthRoot o) { return *this = *this * o; }
    friend bool operator==(EighthRoot, EighthRoot) = default;

    RootOfUnity to_root_of_unity() const { return RootOfUnity(Rational(k_, 8)); }
    std::complex<double> to_complex() const { return to_root_of_unity().to_complex(); }
    std::string str() const { return "e^(i pi*" + std::to_string(k_) + "/4)"; }

private:
    int k_ = 0;
};

/// Euler's criterion; p must be an odd prime.
inline int legendre(const BigInt& a, Prime p) {
    if (!p.is_odd()) throw domain_error("legendre: p must be an odd prime");
    const std::uint64_t r = detail::mod(a, p.big()).convert_to<std::uint64_t>();
    if (r == 0) return 0;
    return detail::pow_mod(r, (p.value() - 1) / 2, p.value()) == 1 ? 1 : -1;
}

namespace detail {

/// (u / p) for a p-adic unit rational u.
inline int legendre_of_unit(const Rational& u, Prime p) { return legendre(residue(u, p, 1), p); }

inline int sign_power(int s, long long e) { return (e % 2 == 0) ? 1 : s; }

}  // namespace detail

/// Local Hilbert symbol (x, y)_v for nonzero rationals.
inline int hilbert(const Rational& x, const Rational& y, const Place& v) {
    if (x.is_zero() || y.is_zero()) throw domain_error("hilbert: arguments must be nonzero");
    if (v.is_infinite()) return (x.sign() < 0 && y.sign() < 0) ? -1 : 1;
    const Prime p = v.prime();
    const auto [alpha, u] = unit_decomposition(x, p);
    const auto [beta, w] = unit_decomposition(y, p);
    if (p.is_odd()) {
        const long long eps = static_cast<long long>(((p.value() - 1) / 2) % 2);
        int s = ((alpha * beta * eps) % 2 == 0) ? 1 : -1;
        s *= detail::sign_power(detail::legendre_of_unit(u, p), beta);
        s *= detail::sign_power(detail::legendre_of_unit(w, p), alpha);
        return s;
    }
    const long long u8 = residue(u, p, 3).convert_to<long long>();
    const long long w8 = residue(w, p, 3).convert_to<long long>();
    auto eps = [](long long t) { return ((t - 1) / 2) % 2; };
    auto omg = [](long long t) { return ((t * t - 1) / 8) % 2; };
    const long long e = eps(u8) * eps(w8) + alpha * omg(w8) + beta * omg(u8);
    return (((e % 2) + 2) % 2 == 0) ? 1 : -1;
}

inline EighthRoot lambda(const Rational& x, const Place& v) {
    if (x.is_zero()) throw domain_error("lambda: x must be nonzero");
    if (v.is_infinite()) return EighthRoot(x.sign() > 0 ? -1 : 1);
    const Prime p = v.prime();
    const auto [nu, unit] = unit_decomposition(x, p);
    const bool even = nu % 2 == 0;
    if (p.is_odd()) {
        if (even) return EighthRoot(0);
        const int eps_k = (p.value() % 4 == 1) ? 0 : 2;  // sqrt((-1/p)): 1 or i
        const int sym_k = detail::legendre_of_unit(unit, p) == 1 ? 0 : 4;
        return EighthRoot(eps_k + sym_k);
    }
    const auto ds = digits(unit, p, 3).digits;
    const long long x1 = static_cast<long long>(ds[1]);
    const long long x2 = static_cast<long long>(ds[2]);
    if (even) return EighthRoot(1 - 2 * x1);
    return EighthRoot(4 * x2 + 2 * x1 + 1);
}

/// Even-valuation dyadic branch written literally as exp(pi i (x_1 + 1/4)).
/// It disagrees with the Gauss integral whenever x_1 = 1; kept so that the
/// discrepancy stays testable.
inline EighthRoot lambda_dyadic_as_printed(const Rational& x) {
    if (x.is_zero()) throw domain_error("lambda: x must be nonzero");
    const Prime two(2);
    const auto [nu, unit] = unit_decomposition(x, two);
    const auto ds = digits(unit, two, 3).digits;
    const long long x1 = static_cast<long long>(ds[1]);
    const long long x2 = static_cast<long long>(ds[2]);
    if (nu % 2 == 0) return EighthRoot(4 * x1 + 1);
    return EighthRoot(4 * x2 + 2 * x1 + 1);
}

template <typename Factor>
struct PlaceTable {
    bool holds = false;
    std::vector<std::pair<Place, Factor>> factors;
};

/// Places where lambda_v(x) can differ from 1: infinity, 2, and support(x).
inline std::vector<Place> lambda_places(const Rational& x) {
    std::set<std::uint64_t> ps = support(x);
    ps.insert(2);
    std::vector<Place> out{Place::infinity()};
    for (auto p : ps) out.push_back(Place::at(p));
    return out;
}

inline PlaceTable<EighthRoot> verify_lambda_product(const Rational& x) {
    if (x.is_zero()) throw domain_error("lambda product: x must be nonzero");
    PlaceTable<EighthRoot> out;
    EighthRoot total;
    for (const auto& v : lambda_places(x)) {
        const EighthRoot f = lambda(x, v);
        total *= f;
        out.factors.emplace_back(v, f);
    }
    out.holds = total.is_one();
    return out;
}

inline PlaceTable<int> verify_hilbert_product(const Rational& x, const Rational& y) {
    if (x.is_zero() || y.is_zero()) throw domain_error("hilbert product: arguments must be nonzero");
    std::set<std::uint64_t> ps = support(x);
    ps.merge(support(y));
    ps.insert(2);
    PlaceTable<int> out;
    int total = hilbert(x, y, Place::infinity());
    out.factors.emplace_back(Place::infinity(), total);
    for (auto p : ps) {
        const int h = hilbert(x, y, Place::at(p));
        total *= h;
        out.factors.emplace_back(Place::at(p), h);
    }
    out.holds = total == 1;
    return out;
}

}  // namespace adelic
