#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "local_fields.hpp"
#include "padic.hpp"
#include "rational.hpp"

namespace adelic {

/// f(x) = (a x + b) / (c x + d) with a d - b c = 1.
class MoebiusMap {
public:
    MoebiusMap(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (a_ * d_ - b_ * c_ != Rational(1))
            throw domain_error("moebius map requires ad - bc = 1 (got " + (a_ * d_ - b_ * c_).str() + ")");
    }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Rational& c() const noexcept { return c_; }
    const Rational& d() const noexcept { return d_; }

    /// x = x and x = -x matrices both act trivially.
    bool is_identity() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

    /// f(x), or nullopt when x is the pole -d/c.
    std::optional<Rational> apply(const Rational& x) const {
        const Rational denom = c_ * x + d_;
        if (denom.is_zero()) return std::nullopt;
        return (a_ * x + b_) / denom;
    }

    /// f'(x) = 1 / (c x + d)^2.
    Rational derivative(const Rational& x) const {
        const Rational denom = c_ * x + d_;
        if (denom.is_zero()) throw domain_error("derivative at the pole");
        return (denom * denom).inverse();
    }

    /// (this o g)(x) = this(g(x)).
    MoebiusMap compose(const MoebiusMap& g) const {
        return {a_ * g.a_ + b_ * g.c_, a_ * g.b_ + b_ * g.d_, c_ * g.a_ + d_ * g.c_, c_ * g.b_ + d_ * g.d_};
    }

    MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }

    /// Sample (a, b, c), solve d = (1 + b c) / a.
    static MoebiusMap from_abc(const Rational& a, const Rational& b, const Rational& c) {
        if (a.is_zero()) throw domain_error("from_abc: a must be nonzero");
        return {a, b, c, (Rational(1) + b * c) / a};
    }

    std::string str() const { return "(" + a_.str() + "x + " + b_.str() + ")/(" + c_.str() + "x + " + d_.str() + ")"; }

private:
    Rational a_, b_, c_, d_;
};

struct FixedPoint {
    enum class Kind { rational, at_infinity, irrational };

    Kind kind = Kind::rational;
    Rational point;                      // for rational points
    Rational discriminant;               // (a + d)^2 - 4
    std::optional<Rational> multiplier;  // absent for irrational points

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

inline std::optional<Rational> rational_sqrt(const Rational& q) {
    BigInt rn, rd;
    if (!detail::is_square(q.num(), &rn) || !detail::is_square(q.den(), &rd)) return std::nullopt;
    return Rational(rn, rd);
}

/// Solutions of c x^2 + (d - a) x - b = 0 together with their multipliers.
inline std::vector<FixedPoint> fixed_points(const MoebiusMap& f) {
    if (f.is_identity()) throw domain_error("fixed points: identity map fixes everything");
    const Rational trace = f.a() + f.d();
    const Rational disc = trace * trace - Rational(4);
    std::vector<FixedPoint> out;
    if (f.c().is_zero()) {
        // Chart y = 1/x near infinity: y -> d y / (a + b y), multiplier d / a = 1 / a^2.
        out.push_back({FixedPoint::Kind::at_infinity, Rational(0), disc, (f.a() * f.a()).inverse()});
        if (f.d() != f.a()) {
            const Rational x = f.b() / (f.d() - f.a());
            out.push_back({FixedPoint::Kind::rational, x, disc, f.derivative(x)});
        }
        return out;
    }
    const auto root = rational_sqrt(disc);
    if (!root) {
        out.push_back({FixedPoint::Kind::irrational, Rational(0), disc, std::nullopt});
        return out;
    }
    const Rational two_c = Rational(2) * f.c();
    std::vector<Rational> xs{(f.a() - f.d() - *root) / two_c};
    if (!root->is_zero()) xs.push_back((f.a() - f.d() + *root) / two_c);
    if (xs.size() == 2 && xs[1] < xs[0]) std::swap(xs[0], xs[1]);
    for (const auto& x : xs) {
        // c x* + d = 0 is impossible at a genuine fixed point when ad - bc = 1.
        if ((f.c() * x + f.d()).is_zero()) throw std::logic_error("fixed point at the pole");
        out.push_back({FixedPoint::Kind::rational, x, disc, f.derivative(x)});
    }
    return out;
}

enum class Stability { attractive, indifferent, repelling };

inline std::string to_string(Stability s) {
    switch (s) {
        case Stability::attractive: return "attractive";
        case Stability::indifferent: return "indifferent";
        case Stability::repelling: return "repelling";
    }
    return "?";
}

inline Stability classify_multiplier(const Rational& multiplier, const Place& v) {
    const Rational norm = abs(multiplier, v).value;
    if (norm < Rational(1)) return Stability::attractive;
    if (norm > Rational(1)) return Stability::repelling;
    return Stability::indifferent;
}

struct FixedPointReport {
    FixedPoint point;
    Rational multiplier;
    /// Infinity and every prime of support(multiplier); all other primes are indifferent.
    std::map<Place, Stability> per_place;
    std::set<Place> exceptional_set;

    friend bool operator==(const FixedPointReport&, const FixedPointReport&) = default;
};

struct Classification {
    std::vector<FixedPointReport> reports;
    std::optional<Rational> irrational_discriminant;
    std::string note;
};

inline FixedPointReport report_for(const FixedPoint& fp) {
    FixedPointReport r{fp, *fp.multiplier, {}, {}};
    std::vector<Place> places{Place::infinity()};
    if (!r.multiplier.is_zero())
        for (auto p : support(r.multiplier)) places.push_back(Place::at(p));
    for (const auto& v : places) {
        const Stability s = classify_multiplier(r.multiplier, v);
        r.per_place.emplace(v, s);
        if (s != Stability::indifferent) r.exceptional_set.insert(v);
    }
    return r;
}

inline Classification classify(const MoebiusMap& f) {
    Classification out;
    for (const auto& fp : fixed_points(f)) {
        if (fp.kind == FixedPoint::Kind::irrational) {
            out.irrational_discriminant = fp.discriminant;
            out.note = "no rational fixed point: discriminant " + fp.discriminant.str() + " is not a rational square";
            continue;
        }
        out.reports.push_back(report_for(fp));
    }
    return out;
}

struct OrbitProbe {
    std::vector<Valuation> valuations;  // nu_p(x_k - x*) for k = 0 .. last iterate
    std::optional<std::size_t> escaped_at;  // iterate index that hit the pole -d/c
};

inline void require_fixed(const MoebiusMap& f, const Rational& fixed) {
    const auto image = f.apply(fixed);
    if (!image || *image != fixed) throw domain_error("orbit probe: " + fixed.str() + " is not a fixed point");
}

/// Exact iteration from x0 reporting the p-adic distance to x*.
inline OrbitProbe orbit_probe(const MoebiusMap& f, const Rational& fixed, const Rational& x0, Prime p,
                              std::size_t steps) {
    require_fixed(f, fixed);
    if (x0 == fixed) throw domain_error("orbit probe: x0 must differ from the fixed point");
    if (valuation(x0 - fixed, p) < Valuation(1))
        throw domain_error("orbit probe: x0 must satisfy nu_p(x0 - x*) >= 1");
    OrbitProbe out;
    Rational x = x0;
    out.valuations.push_back(valuation(x - fixed, p));
    for (std::size_t k = 1; k <= steps; ++k) {
        const auto next = f.apply(x);
        if (!next) {
            out.escaped_at = k;
            break;
        }
        x = *next;
        out.valuations.push_back(valuation(x - fixed, p));
    }
    return out;
}

/// Archimedean analogue: |x_k - x*| along the exact orbit.
inline std::vector<double> orbit_probe_real(const MoebiusMap& f, const Rational& fixed, const Rational& x0,
                                            std::size_t steps) {
    require_fixed(f, fixed);
    std::vector<double> out;
    Rational x = x0;
    out.push_back((x - fixed).abs().to_double());
    for (std::size_t k = 1; k <= steps; ++k) {
        const auto next = f.apply(x);
        if (!next) break;
        x = *next;
        out.push_back((x - fixed).abs().to_double());
    }
    return out;
}

/// Whether an orbit's valuation trend matches a stability label: strictly
/// increasing for attractive, strictly decreasing for repelling, constant
/// for indifferent. Only steps where the orbit has not escaped are read.
inline bool orbit_matches(const OrbitProbe& probe, Stability expected) {
    if (probe.valuations.size() < 2) return false;
    for (std::size_t k = 1; k < probe.valuations.size(); ++k) {
        const auto& prev = probe.valuations[k - 1];
        const auto& cur = probe.valuations[k];
        if (prev.is_infinite() || cur.is_infinite()) return false;
        switch (expected) {
            case Stability::attractive:
                if (!(cur > prev)) return false;
                break;
            case Stability::repelling:
                if (!(cur < prev)) return false;
                break;
            case Stability::indifferent:
                if (cur != prev) return false;
                break;
        }
    }
    return true;
}

}  // namespace adelic
