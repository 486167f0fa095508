#pragma once

/**
 * Exact rational numbers over arbitrary-precision integers.
 *
 * Every Rational is kept in lowest terms with a positive denominator, and
 * zero is uniquely 0/1. All later p-adic and adelic quantities are computed
 * from these canonical numerators and denominators, so equality of values
 * is equality of representations.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace adelic {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline BigInt abs(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

/// Floor division for a positive divisor.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    if ((n % d != 0) && (n < 0)) --q;
    return q;
}

/// Representative of n mod m in [0, m), m > 0.
inline BigInt mod(const BigInt& n, const BigInt& m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_s - q * s;
        old_s = std::move(s);
        s = std::move(t);
    }
    if (old_r != 1) throw domain_error("mod_inverse: argument not invertible");
    return mod(old_s, m);
}

inline BigInt pow(BigInt base, unsigned exponent) {
    BigInt result = 1;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent != 0) base *= base;
    }
    return result;
}

/// Exact integer square root if n is a perfect square.
inline bool is_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root != nullptr) *root = r;
    return true;
}

}  // namespace detail

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design of the numeric tower
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    /// Accepts "n", "n/d", "-n/d" (with optional leading '+'); no decimals.
    static Rational parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw domain_error("division by zero rational");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(detail::abs(num_), den_, already_reduced{}); }
    Rational inverse() const { return Rational(1) / *this; }

    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow(long long exponent) const {
        if (exponent < 0) {
            if (is_zero()) throw domain_error("negative power of zero");
            return inverse().pow(-exponent);
        }
        const auto e = static_cast<unsigned>(exponent);
        return Rational(detail::pow(num_, e), detail::pow(den_, e), already_reduced{});
    }

    /// Fractional part in [0, 1) in the ordinary archimedean sense.
    Rational frac_mod_one() const {
        return Rational(detail::mod(num_, den_), den_);
    }

    double to_double() const {
        return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
    }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    struct already_reduced {};
    Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(detail::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view digits, bool allow_sign) -> BigInt {
        std::size_t i = 0;
        bool negative = false;
        if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            negative = digits[0] == '-';
            i = 1;
        }
        if (i == digits.size()) throw domain_error("malformed rational '" + std::string(text) + "'");
        BigInt value = 0;
        for (; i < digits.size(); ++i) {
            const char c = digits[i];
            if (c < '0' || c > '9') throw domain_error("malformed rational '" + std::string(text) + "'");
            value = value * 10 + (c - '0');
        }
        return negative ? BigInt(-value) : value;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    const BigInt n = parse_int(text.substr(0, slash), true);
    const BigInt d = parse_int(text.substr(slash + 1), false);
    if (d == 0) throw domain_error("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

}  // namespace adelic
