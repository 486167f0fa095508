#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "padic.hpp"
#include "primes.hpp"
#include "rational.hpp"

namespace adelic {

/// |x|_v as an exact non-negative rational. At a prime it is p^{-nu} or 0.
struct AbsoluteValue {
    Rational value;

    friend bool operator==(const AbsoluteValue&, const AbsoluteValue&) = default;
};

inline AbsoluteValue abs(const Rational& x, const Place& v) {
    if (v.is_infinite()) return {x.abs()};
    if (x.is_zero()) return {Rational(0)};
    return {Rational(v.prime().big()).pow(-valuation(x, v.prime()).value())};
}

/// {x}_p: the tail of the canonical expansion carrying negative powers of p.
inline Rational frac_part(const Rational& x, Prime p) {
    if (x.is_zero()) return Rational(0);
    BigInt d = x.den();
    const long long e = detail::strip_prime(d, p.big());
    if (e == 0) return Rational(0);
    const BigInt modulus = detail::pow(p.big(), static_cast<unsigned>(e));
    // x = n / (p^e d') ; {x}_p = (n d'^{-1} mod p^e) / p^e
    return Rational(detail::mod(x.num() * detail::mod_inverse(d, modulus), modulus), modulus);
}

/// Exact exp(2 pi i * phase) with phase reduced into [0, 1).
class RootOfUnity {
public:
    RootOfUnity() = default;
    explicit RootOfUnity(const Rational& phase) : phase_(phase.frac_mod_one()) {}

    const Rational& phase() const noexcept { return phase_; }
    bool is_one() const noexcept { return phase_.is_zero(); }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        return RootOfUnity(a.phase_ + b.phase_);
    }
    RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }
    RootOfUnity inverse() const { return RootOfUnity(-phase_); }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

    /// Display only; never compare these.
    std::complex<double> to_complex() const {
        const double t = 2.0 * std::numbers::pi * phase_.to_double();
        return {std::cos(t), std::sin(t)};
    }

    std::string str() const { return is_one() ? "1" : "e^(2pi i*" + phase_.str() + ")"; }

private:
    Rational phase_;
};

/// chi_inf(x) = exp(-2 pi i x), chi_p(x) = exp(2 pi i {x}_p).
inline RootOfUnity character(const Rational& x, const Place& v) {
    if (v.is_infinite()) return RootOfUnity(-x);
    return RootOfUnity(frac_part(x, v.prime()));
}

/// Indicator of Z_p.
inline int omega(const Rational& x, Prime p) {
    return x.is_zero() || x.den() % p.big() != 0 ? 1 : 0;
}

/// A complex value known exactly as a root of unity times a positive real
/// whose square is rational. This is the closed multiplicative group in which
/// every exact adelic product lives.
struct ExactValue {
    RootOfUnity phase;
    Rational modulus_squared{1};

    static ExactValue one() { return {}; }

    friend ExactValue operator*(const ExactValue& a, const ExactValue& b) {
        return {a.phase * b.phase, a.modulus_squared * b.modulus_squared};
    }
    ExactValue& operator*=(const ExactValue& o) { return *this = *this * o; }
    friend bool operator==(const ExactValue&, const ExactValue&) = default;

    bool is_one() const { return phase.is_one() && modulus_squared == Rational(1); }

    std::complex<double> to_complex() const {
        return std::sqrt(modulus_squared.to_double()) * phase.to_complex();
    }
};

/// Finite-support adele: a rational at infinity with an explicit list of
/// prime components; every unlisted component equals the real one, read in Z_p.
class FiniteAdele {
public:
    static FiniteAdele principal(Rational x) { return FiniteAdele(std::move(x), {}); }

    FiniteAdele(Rational real_component, std::map<std::uint64_t, Rational> exceptional)
        : real_(std::move(real_component)), exceptional_(std::move(exceptional)) {
        for (const auto& [p, value] : exceptional_) {
            if (!is_prime(p)) throw domain_error("adele component key " + std::to_string(p) + " is not prime");
        }
    }

    /// Principal adele with the listed primes carried explicitly.
    static FiniteAdele principal(const Rational& x, const std::set<std::uint64_t>& listed) {
        std::map<std::uint64_t, Rational> ex;
        for (auto p : listed) ex.emplace(p, x);
        return FiniteAdele(x, std::move(ex));
    }

    const Rational& real_component() const noexcept { return real_; }
    const std::map<std::uint64_t, Rational>& exceptional() const noexcept { return exceptional_; }

    Rational component(Prime p) const {
        auto it = exceptional_.find(p.value());
        return it == exceptional_.end() ? real_ : it->second;
    }

    /// Principal when every listed component agrees with the real one.
    bool is_principal() const {
        for (const auto& [p, value] : exceptional_)
            if (value != real_) return false;
        return true;
    }

private:
    Rational real_;
    std::map<std::uint64_t, Rational> exceptional_;
};

struct AdeleCheck {
    bool valid;
    std::set<std::uint64_t> violating;  // unlisted primes where a component leaves Z_p (or U_p)
};

/// Membership in A(P) with P the listed primes.
inline AdeleCheck adele_is_valid(const FiniteAdele& alpha) {
    AdeleCheck out{true, {}};
    for (auto p : denominator_primes(alpha.real_component())) {
        if (!alpha.exceptional().contains(p)) out.violating.insert(p);
    }
    out.valid = out.violating.empty();
    return out;
}

/// Membership in A^x(P): nonzero components, units at every unlisted prime.
inline AdeleCheck idele_is_valid(const FiniteAdele& eta) {
    if (eta.real_component().is_zero()) return {false, {}};
    for (const auto& [p, value] : eta.exceptional())
        if (value.is_zero()) return {false, {p}};
    AdeleCheck out{true, {}};
    for (auto p : support(eta.real_component())) {
        if (!eta.exceptional().contains(p)) out.violating.insert(p);
    }
    out.valid = out.violating.empty();
    return out;
}

}  // namespace adelic
