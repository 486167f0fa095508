#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace adelic {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases cover all of uint64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : kBases) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// A validated prime p < 2^64.
class Prime {
public:
    explicit Prime(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    }

    static Prime parse(const BigInt& n) {
        if (n < 2 || n > BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw domain_error(n.str() + " is not a prime below 2^64");
        return Prime(n.convert_to<std::uint64_t>());
    }

    std::uint64_t value() const noexcept { return p_; }
    BigInt big() const { return BigInt(p_); }
    bool is_odd() const noexcept { return p_ != 2; }

    friend auto operator<=>(const Prime&, const Prime&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Prime& p) { return os << p.p_; }

private:
    std::uint64_t p_;
};

/// Index v of a completion of Q: the archimedean place or a prime.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place at(Prime p) { return Place(p); }
    static Place at(std::uint64_t p) { return Place(Prime(p)); }

    /// "inf" (or "oo", "infinity") or a prime integer.
    static Place parse(const std::string& token) {
        if (token == "inf" || token == "oo" || token == "infinity") return infinity();
        try {
            return Place(Prime::parse(Rational::parse(token).num()));
        } catch (const domain_error&) {
            throw domain_error("invalid place '" + token + "' (expected inf or a prime)");
        }
    }

    bool is_infinite() const noexcept { return !prime_.has_value(); }
    Prime prime() const {
        if (!prime_) throw domain_error("archimedean place has no prime");
        return *prime_;
    }

    std::string str() const { return prime_ ? std::to_string(prime_->value()) : "inf"; }

    // Infinity orders before every prime.
    friend bool operator==(const Place&, const Place&) = default;
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
        if (a.is_infinite() || b.is_infinite()) return b.is_infinite() <=> a.is_infinite();
        return a.prime_->value() <=> b.prime_->value();
    }
    friend std::ostream& operator<<(std::ostream& os, const Place& v) { return os << v.str(); }

private:
    Place() = default;
    explicit Place(Prime p) : prime_(p) {}
    std::optional<Prime> prime_;
};

/// Prime factorization of |n| by trial division, stopping early once the
/// cofactor is a 64-bit prime.
inline std::map<std::uint64_t, unsigned> factorize(const BigInt& n) {
    if (n == 0) throw domain_error("factorize: n must be nonzero");
    std::map<std::uint64_t, unsigned> factors;
    BigInt m = detail::abs(n);
    bool changed = true;
    auto strip = [&](std::uint64_t p) {
        while (m % p == 0) {
            m /= p;
            ++factors[p];
            changed = true;
        }
    };
    strip(2);
    strip(3);
    const BigInt kU64Max(std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t p = 5; m > 1; p += 6) {
        if (changed && m <= kU64Max && is_prime(m.convert_to<std::uint64_t>())) {
            ++factors[m.convert_to<std::uint64_t>()];
            break;
        }
        if (BigInt(p) * p > m) {
            ++factors[m.convert_to<std::uint64_t>()];
            break;
        }
        changed = false;
        strip(p);
        strip(p + 2);
    }
    return factors;
}

/// All primes <= bound, ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace adelic
