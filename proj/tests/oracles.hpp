#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call the closed forms they are compared against.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "adelic/rational.hpp"

namespace oracle {

using adelic::BigInt;
using adelic::Rational;

inline bool is_prime_naive(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Set of squares modulo m, by enumeration.
inline std::vector<bool> squares_mod(std::uint64_t m) {
    std::vector<bool> sq(m, false);
    for (std::uint64_t t = 0; t < m; ++t) sq[(t * t) % m] = true;
    return sq;
}

/// Legendre symbol from the table of squares.
inline int legendre_table(long long a, std::uint64_t p) {
    const long long r = ((a % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p);
    if (r == 0) return 0;
    static thread_local std::uint64_t cached_p = 0;
    static thread_local std::vector<bool> table;
    if (cached_p != p) {
        table = squares_mod(p);
        cached_p = p;
    }
    return table[static_cast<std::size_t>(r)] ? 1 : -1;
}

/// p-adic valuation by repeated division, and the remaining unit as n/d.
inline long long nu(BigInt n, BigInt d, std::uint64_t p, BigInt* unit_num = nullptr, BigInt* unit_den = nullptr) {
    long long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    if (unit_num) *unit_num = n;
    if (unit_den) *unit_den = d;
    return v;
}

/// n * d^{-1} mod m by search over the inverse (m small).
inline std::uint64_t unit_residue(const BigInt& n, const BigInt& d, std::uint64_t m) {
    const BigInt mm(m);
    const std::uint64_t nr = static_cast<std::uint64_t>(((n % mm) + mm) % mm);
    const std::uint64_t dr = static_cast<std::uint64_t>(((d % mm) + mm) % mm);
    for (std::uint64_t inv = 1; inv < m; ++inv)
        if ((static_cast<unsigned __int128>(dr) * inv) % m == 1) return static_cast<std::uint64_t>((static_cast<unsigned __int128>(nr) * inv) % m);
    throw std::logic_error("unit_residue: not invertible");
}

/// Representative of x modulo squares in Q_p, as an integer mod p^k: p^(nu mod 2) * unit.
inline std::uint64_t square_class_rep(const Rational& x, std::uint64_t p, unsigned k) {
    BigInt un, ud;
    const long long v = nu(x.num(), x.den(), p, &un, &ud);
    const std::uint64_t m = ipow(p, k);
    std::uint64_t r = unit_residue(un, ud, m);
    if (((v % 2) + 2) % 2 == 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * p) % m);
    return r;
}

/// +1 iff z^2 = x u^2 + y w^2 has a primitive solution modulo p^k, searching
/// (u, w) not both divisible by p. With x, y reduced to p-adic valuation 0 or 1
/// any primitive solution has this shape.
inline int hilbert_by_solvability(const Rational& x, const Rational& y, std::uint64_t p, unsigned k) {
    const std::uint64_t m = ipow(p, k);
    const std::uint64_t a = square_class_rep(x, p, k);
    const std::uint64_t b = square_class_rep(y, p, k);
    const std::vector<bool> sq = squares_mod(m);
    for (std::uint64_t u = 0; u < m; ++u) {
        const std::uint64_t au2 = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * (u * u % m) % m);
        for (std::uint64_t w = 0; w < m; ++w) {
            if (u % p == 0 && w % p == 0) continue;
            const std::uint64_t r = (au2 + static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * (w * w % m) % m)) % m;
            if (sq[r]) return 1;
        }
    }
    return -1;
}

/// Canonical p-adic digits of x by long division in Z/p^{nu+n}: returns
/// (nu, digits) such that x - p^nu sum d_j p^j has valuation >= nu + n.
inline std::pair<long long, std::vector<std::uint64_t>> digits_by_division(const Rational& x, std::uint64_t p, unsigned n) {
    BigInt un, ud;
    const long long v = nu(x.num(), x.den(), p, &un, &ud);
    std::vector<std::uint64_t> out;
    // Peel digits: u = d0 + p * u', with d0 = u mod p, u' = (u - d0) / p.
    Rational u(un, ud);
    for (unsigned j = 0; j < n; ++j) {
        std::uint64_t d = 0;
        for (; d < p; ++d) {
            const Rational diff = u - Rational(static_cast<long long>(d));
            if (diff.is_zero()) break;
            BigInt a, b;
            if (nu(diff.num(), diff.den(), p, &a, &b) >= 1) break;
        }
        out.push_back(d);
        u = (u - Rational(static_cast<long long>(d))) / Rational(static_cast<long long>(p));
    }
    return {v, out};
}

/// Random rational with |num|, den <= h.
inline Rational random_rational(std::mt19937_64& rng, long long h, bool nonzero = true) {
    std::uniform_int_distribution<long long> num(-h, h), den(1, h);
    for (;;) {
        Rational r(num(rng), den(rng));
        if (!nonzero || !r.is_zero()) return r;
    }
}

/// Riemann zeta by direct summation plus Euler-Maclaurin tail (real s > 1).
inline double zeta_direct(double s) {
    const int n = 1000;
    double sum = 0.0;
    for (int k = 1; k < n; ++k) sum += std::pow(k, -s);
    const double N = n;
    sum += std::pow(N, 1 - s) / (s - 1) + 0.5 * std::pow(N, -s) + s / 12.0 * std::pow(N, -s - 1) -
           s * (s + 1) * (s + 2) / 720.0 * std::pow(N, -s - 3);
    return sum;
}

}  // namespace oracle
