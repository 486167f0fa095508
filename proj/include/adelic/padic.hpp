#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace adelic {

/// nu_p(x) in Z, or +infinity for x = 0.
class Valuation {
public:
    static Valuation plus_infinity() { return Valuation(); }
    explicit Valuation(long long v) : value_(v) {}

    bool is_infinite() const noexcept { return !value_.has_value(); }
    long long value() const {
        if (!value_) throw domain_error("valuation of zero is +infinity");
        return *value_;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return plus_infinity();
        return Valuation(*a.value_ + *b.value_);
    }

    std::string str() const { return value_ ? std::to_string(*value_) : "+inf"; }

private:
    Valuation() = default;
    std::optional<long long> value_;
};

namespace detail {

inline long long strip_prime(BigInt& n, const BigInt& p) {
    long long count = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++count;
    }
    return count;
}

}  // namespace detail

inline Valuation valuation(const Rational& x, Prime p) {
    if (x.is_zero()) return Valuation::plus_infinity();
    const BigInt pb = p.big();
    BigInt n = x.num(), d = x.den();
    // Reduced form: p divides at most one of numerator and denominator.
    const long long up = detail::strip_prime(n, pb);
    if (up != 0) return Valuation(up);
    return Valuation(-detail::strip_prime(d, pb));
}

/// x = p^nu * unit with |unit|_p = 1; unit is returned as a reduced rational.
struct UnitDecomposition {
    long long valuation;
    Rational unit;
};

inline UnitDecomposition unit_decomposition(const Rational& x, Prime p) {
    if (x.is_zero()) throw domain_error("zero has no unit part");
    BigInt n = x.num(), d = x.den();
    const BigInt pb = p.big();
    const long long up = detail::strip_prime(n, pb);
    const long long down = detail::strip_prime(d, pb);
    return {up - down, Rational(n, d)};
}

/// Residue of a p-adic unit (or integer) u modulo p^k, in [0, p^k).
inline BigInt residue(const Rational& u, Prime p, unsigned k) {
    const BigInt modulus = detail::pow(p.big(), k);
    if (u.den() % p.big() == 0) throw domain_error("residue: not a p-adic integer");
    return detail::mod(u.num() * detail::mod_inverse(u.den(), modulus), modulus);
}

/// Truncated canonical expansion x = p^nu * sum_{k<n} digit_k p^k + O(p^{nu+n}).
struct DigitExpansion {
    long long valuation;
    std::vector<std::uint64_t> digits;
    Prime prime;
    unsigned length;

    /// p^nu * sum digit_k p^k as an exact rational.
    Rational partial_sum() const {
        BigInt acc = 0, scale = 1;
        for (auto dgt : digits) {
            acc += scale * dgt;
            scale *= prime.value();
        }
        return Rational(acc) * Rational(prime.big()).pow(valuation);
    }
};

inline DigitExpansion digits(const Rational& x, Prime p, unsigned n) {
    if (x.is_zero()) throw domain_error("digits: zero has no canonical expansion");
    const auto [nu, unit] = unit_decomposition(x, p);
    BigInt r = n == 0 ? BigInt(0) : residue(unit, p, n);
    DigitExpansion out{nu, {}, p, n};
    out.digits.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        out.digits.push_back((r % p.value()).convert_to<std::uint64_t>());
        r /= p.value();
    }
    return out;
}

/// Primes with |x|_p != 1.
inline std::set<std::uint64_t> support(const Rational& x) {
    if (x.is_zero()) throw domain_error("support: x must be nonzero");
    std::set<std::uint64_t> out;
    for (const auto& [p, e] : factorize(x.num())) out.insert(p);
    for (const auto& [p, e] : factorize(x.den())) out.insert(p);
    return out;
}

/// Primes dividing the denominator of x (empty for integers, including 0).
inline std::set<std::uint64_t> denominator_primes(const Rational& x) {
    std::set<std::uint64_t> out;
    for (const auto& [p, e] : factorize(x.den())) out.insert(p);
    return out;
}

}  // namespace adelic
