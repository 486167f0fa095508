#pragma once

/**
 * Generic adelic products  phi_inf(args) * prod_p phi_p(args) = C.
 *
 * An exact family supplies a per-place factor in the ExactValue group and
 * a finite set of places outside which the factor is exactly 1; the engine
 * multiplies the listed factors exactly and spot-checks one unlisted prime.
 * A numeric family (where the prime product needs regularization) supplies
 * its own evaluation and is judged against a tolerance.
 */

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "gauss_kernels.hpp"
#include "local_fields.hpp"
#include "padic.hpp"
#include "special_functions.hpp"
#include "symbols.hpp"

namespace adelic {

struct Arguments {
    std::vector<Rational> rationals;
    std::vector<Complex> complexes;
};

/// Portable seeded sampling (the std distributions are implementation-defined).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    /// Uniform double in [lo, hi).
    double real(double lo, double hi) {
        return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// n/d with |n| <= height, 1 <= d <= height.
    Rational rational(std::int64_t height) { return Rational(uniform(-height, height), uniform(1, height)); }

    Rational nonzero_rational(std::int64_t height) {
        for (;;) {
            Rational r = rational(height);
            if (!r.is_zero()) return r;
        }
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// A factor together with its human-readable rendering.
struct LocalFactor {
    ExactValue value;
    std::string display;
};

struct NumericEvaluation {
    std::vector<std::pair<std::string, Complex>> factors;  // labelled parts of the product
    Complex combined;
    double residual = 0.0;
    std::string note;
};

enum class FamilyKind { exact, numeric };

struct ProductFamily {
    std::string name;
    std::string summary;
    FamilyKind kind = FamilyKind::exact;
    std::size_t rational_arity = 0;
    std::size_t complex_arity = 0;
    /// Domain checks; throws domain_error naming the offending argument.
    std::function<void(const Arguments&)> validate;
    // exact families
    std::function<LocalFactor(const Place&, const Arguments&)> factor;
    std::function<std::vector<Place>(const Arguments&)> relevant_places;
    ExactValue expected = ExactValue::one();
    // numeric families
    std::function<NumericEvaluation(const Arguments&)> evaluate;
    /// Argument generator for random suites.
    std::function<Arguments(SampleRng&, std::int64_t height)> sample;
};

enum class Verdict { exact_pass, numeric_pass, fail };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::exact_pass: return "ExactPass";
        case Verdict::numeric_pass: return "NumericPass";
        case Verdict::fail: return "Fail";
    }
    return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "ExactPass") return Verdict::exact_pass;
    if (s == "NumericPass") return Verdict::numeric_pass;
    if (s == "Fail") return Verdict::fail;
    throw domain_error("unknown verdict '" + s + "'");
}

struct FactorEntry {
    std::string place;
    std::string display;
    std::optional<ExactValue> exact;
    std::optional<Complex> numeric;

    friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct VerificationReport {
    std::string family;
    std::vector<std::string> args;
    std::vector<FactorEntry> factors;
    std::string combined;
    std::string expected;
    Verdict verdict = Verdict::fail;
    std::optional<double> residual;
    std::string diagnostic;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// ---------------------------------------------------------------- JSON

inline nlohmann::json to_json(const ExactValue& v) {
    return {{"phase", v.phase.phase().str()}, {"modulus_squared", v.modulus_squared.str()}};
}

inline ExactValue exact_value_from_json(const nlohmann::json& j) {
    return {RootOfUnity(Rational::parse(j.at("phase").get<std::string>())),
            Rational::parse(j.at("modulus_squared").get<std::string>())};
}

inline nlohmann::json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline Complex complex_from_json(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : r.factors) {
        nlohmann::json value = {{"display", f.display}};
        if (f.exact) value["exact"] = to_json(*f.exact);
        if (f.numeric) value["numeric"] = to_json(*f.numeric);
        factors.push_back({{"place", f.place}, {"value", value}});
    }
    nlohmann::json j = {{"family", r.family},     {"args", r.args},         {"factors", factors},
                        {"combined", r.combined}, {"expected", r.expected}, {"verdict", to_string(r.verdict)}};
    if (r.residual) j["residual"] = *r.residual;
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.family = j.at("family").get<std::string>();
    r.args = j.at("args").get<std::vector<std::string>>();
    for (const auto& f : j.at("factors")) {
        FactorEntry e;
        e.place = f.at("place").get<std::string>();
        const auto& value = f.at("value");
        e.display = value.at("display").get<std::string>();
        if (value.contains("exact")) e.exact = exact_value_from_json(value.at("exact"));
        if (value.contains("numeric")) e.numeric = complex_from_json(value.at("numeric"));
        r.factors.push_back(std::move(e));
    }
    r.combined = j.at("combined").get<std::string>();
    r.expected = j.at("expected").get<std::string>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    if (j.contains("residual")) r.residual = j.at("residual").get<double>();
    if (j.contains("diagnostic")) r.diagnostic = j.at("diagnostic").get<std::string>();
    return r;
}

// ---------------------------------------------------------------- rendering helpers

inline std::string render(const ExactValue& v) {
    // Pure positive rationals print as rationals; otherwise phase and modulus.
    const std::string modulus = v.modulus_squared == Rational(1) ? "" : "sqrt(" + v.modulus_squared.str() + ")";
    if (v.phase.is_one()) return modulus.empty() ? "1" : modulus;
    if (v.phase.phase() == Rational(1, 2)) return modulus.empty() ? "-1" : "-" + modulus;
    return (modulus.empty() ? "" : modulus + "*") + v.phase.str();
}

inline std::string render(Complex z) { return detail::format_complex(z); }

inline std::string to_arg_string(const Complex& z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

// ---------------------------------------------------------------- registry

struct FamilyHandle {
    std::size_t index;
};

struct SuiteFailure {
    std::size_t index;
    VerificationReport report;
};

struct SuiteReport {
    std::string family;
    std::size_t trials = 0;
    std::int64_t height = 0;
    std::uint64_t seed = 0;
    std::size_t exact_passes = 0;
    std::size_t numeric_passes = 0;
    std::vector<SuiteFailure> failures;
    std::vector<std::string> errors;  // domain errors raised by sampled arguments

    bool all_passed() const { return failures.empty() && errors.empty(); }
};

inline nlohmann::json to_json(const SuiteReport& s) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : s.failures) failures.push_back({{"index", f.index}, {"report", to_json(f.report)}});
    return {{"family", s.family},         {"trials", s.trials},         {"height", s.height},
            {"seed", s.seed},             {"exact_passes", s.exact_passes}, {"numeric_passes", s.numeric_passes},
            {"failures", failures},       {"errors", s.errors}};
}

class ProductRegistry {
public:
    /// Registry holding every built-in family.
    static ProductRegistry with_builtins();

    FamilyHandle add(ProductFamily family) {
        if (family.name.empty()) throw std::invalid_argument("product family needs a name");
        if (index_.contains(family.name))
            throw std::invalid_argument("product family '" + family.name + "' already registered");
        index_.emplace(family.name, families_.size());
        families_.push_back(std::move(family));
        return {families_.size() - 1};
    }

    std::optional<FamilyHandle> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return FamilyHandle{it->second};
    }

    const ProductFamily& family(FamilyHandle h) const { return families_.at(h.index); }
    const std::vector<ProductFamily>& families() const noexcept { return families_; }

    VerificationReport verify(FamilyHandle h, const Arguments& args, double tolerance = 1e-8) const;

    SuiteReport random_suite(FamilyHandle h, std::size_t trials, std::int64_t height, std::uint64_t seed,
                             double tolerance = 1e-8) const;

private:
    std::vector<ProductFamily> families_;
    std::map<std::string, std::size_t> index_;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& text, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::vector<std::string> arg_strings(const Arguments& args) {
    std::vector<std::string> out;
    for (const auto& r : args.rationals) out.push_back(r.str());
    for (const auto& z : args.complexes) out.push_back(to_arg_string(z));
    return out;
}

/// A prime below 1000 outside `listed`, chosen deterministically from the arguments.
inline Prime off_support_prime(const std::vector<Place>& listed, std::uint64_t salt) {
    static const std::vector<std::uint64_t> pool = primes_up_to(1000);
    std::set<std::uint64_t> used;
    for (const auto& v : listed)
        if (!v.is_infinite()) used.insert(v.prime().value());
    SampleRng rng(salt);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const auto p = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
        if (!used.contains(p)) return Prime(p);
    }
    for (std::uint64_t p = 1009;; p += 2)
        if (is_prime(p) && !used.contains(p)) return Prime(p);
}

}  // namespace detail

inline VerificationReport ProductRegistry::verify(FamilyHandle h, const Arguments& args, double tolerance) const {
    const ProductFamily& fam = family(h);
    if (args.rationals.size() != fam.rational_arity || args.complexes.size() != fam.complex_arity)
        throw domain_error(fam.name + " expects " + std::to_string(fam.rational_arity) + " rational and " +
                           std::to_string(fam.complex_arity) + " complex arguments");
    if (fam.validate) fam.validate(args);

    VerificationReport r;
    r.family = fam.name;
    r.args = detail::arg_strings(args);

    if (fam.kind == FamilyKind::numeric) {
        const NumericEvaluation ev = fam.evaluate(args);
        for (const auto& [label, value] : ev.factors) r.factors.push_back({label, render(value), std::nullopt, value});
        r.combined = render(ev.combined);
        r.expected = "1";
        r.residual = ev.residual;
        r.verdict = ev.residual < tolerance ? Verdict::numeric_pass : Verdict::fail;
        r.diagnostic = ev.note;
        return r;
    }

    const std::vector<Place> places = fam.relevant_places(args);
    ExactValue total = ExactValue::one();
    for (const auto& v : places) {
        LocalFactor f;
        try {
            f = fam.factor(v, args);
        } catch (const domain_error& e) {
            throw domain_error("at place " + v.str() + ": " + e.what());
        }
        total *= f.value;
        r.factors.push_back({v.str(), f.display, f.value, std::nullopt});
    }
    r.combined = render(total);
    r.expected = render(fam.expected);

    std::uint64_t salt = detail::fnv1a(fam.name);
    for (const auto& s : r.args) salt = detail::fnv1a(s + ";", salt);
    const Prime off = detail::off_support_prime(places, salt);
    const LocalFactor spot = fam.factor(Place::at(off), args);
    if (!spot.value.is_one()) {
        r.verdict = Verdict::fail;
        r.diagnostic = "relevant_places unsound: factor at p=" + std::to_string(off.value()) + " is " + spot.display;
        return r;
    }
    r.verdict = total == fam.expected ? Verdict::exact_pass : Verdict::fail;
    if (r.verdict == Verdict::fail) r.diagnostic = "product " + r.combined + " != " + r.expected;
    return r;
}

inline SuiteReport ProductRegistry::random_suite(FamilyHandle h, std::size_t trials, std::int64_t height,
                                                 std::uint64_t seed, double tolerance) const {
    const ProductFamily& fam = family(h);
    SuiteReport s{fam.name, trials, height, seed, 0, 0, {}, {}};
    SampleRng rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const Arguments args = fam.sample(rng, height);
        try {
            VerificationReport r = verify(h, args, tolerance);
            if (r.verdict == Verdict::exact_pass) ++s.exact_passes;
            else if (r.verdict == Verdict::numeric_pass) ++s.numeric_passes;
            else s.failures.push_back({i, std::move(r)});
        } catch (const domain_error& e) {
            s.errors.push_back("seed " + std::to_string(seed) + " index " + std::to_string(i) + ": " + e.what());
        }
    }
    return s;
}

// ---------------------------------------------------------------- built-in families

namespace families {

inline void require_nonzero(const Rational& x, const char* name) {
    if (x.is_zero()) throw domain_error(std::string(name) + " must be a nonzero rational");
}

inline std::vector<Place> places_of(std::set<std::uint64_t> primes, bool with_two) {
    if (with_two) primes.insert(2);
    std::vector<Place> out{Place::infinity()};
    for (auto p : primes) out.push_back(Place::at(p));
    return out;
}

inline LocalFactor from_eighth_root(EighthRoot e) { return {{e.to_root_of_unity(), Rational(1)}, e.str()}; }

inline LocalFactor from_three_part(const ThreePartValue& t) { return {t.to_exact(), t.str()}; }

inline ProductFamily norm_product() {
    ProductFamily f;
    f.name = "norm-product";
    f.summary = "|x|_inf * prod_p |x|_p = 1 for x in Q^x";
    f.rational_arity = 1;
    f.validate = [](const Arguments& a) { require_nonzero(a.rationals[0], "x"); };
    f.factor = [](const Place& v, const Arguments& a) -> LocalFactor {
        const Rational n = abs(a.rationals[0], v).value;
        return {{RootOfUnity(), n * n}, n.str()};
    };
    f.relevant_places = [](const Arguments& a) { return places_of(support(a.rationals[0]), false); };
    f.sample = [](SampleRng& rng, std::int64_t h) { return Arguments{{rng.nonzero_rational(h)}, {}}; };
    return f;
}

inline ProductFamily character_product() {
    ProductFamily f;
    f.name = "character-product";
    f.summary = "chi_inf(x) * prod_p chi_p(x) = 1, i.e. x - sum_p {x}_p is an integer";
    f.rational_arity = 1;
    f.factor = [](const Place& v, const Arguments& a) -> LocalFactor {
        const RootOfUnity c = character(a.rationals[0], v);
        return {{c, Rational(1)}, c.str()};
    };
    f.relevant_places = [](const Arguments& a) { return places_of(denominator_primes(a.rationals[0]), false); };
    f.sample = [](SampleRng& rng, std::int64_t h) { return Arguments{{rng.rational(h)}, {}}; };
    return f;
}

inline ProductFamily lambda_product() {
    ProductFamily f;
    f.name = "lambda-product";
    f.summary = "lambda_inf(x) * prod_p lambda_p(x) = 1";
    f.rational_arity = 1;
    f.validate = [](const Arguments& a) { require_nonzero(a.rationals[0], "x"); };
    f.factor = [](const Place& v, const Arguments& a) { return from_eighth_root(lambda(a.rationals[0], v)); };
    f.relevant_places = [](const Arguments& a) { return lambda_places(a.rationals[0]); };
    f.sample = [](SampleRng& rng, std::int64_t h) { return Arguments{{rng.nonzero_rational(h)}, {}}; };
    return f;
}

inline ProductFamily hilbert_product() {
    ProductFamily f;
    f.name = "hilbert-product";
    f.summary = "(x,y)_inf * prod_p (x,y)_p = 1";
    f.rational_arity = 2;
    f.validate = [](const Arguments& a) {
        require_nonzero(a.rationals[0], "x");
        require_nonzero(a.rationals[1], "y");
    };
    f.factor = [](const Place& v, const Arguments& a) -> LocalFactor {
        const int h = hilbert(a.rationals[0], a.rationals[1], v);
        return {{RootOfUnity(h == 1 ? Rational(0) : Rational(1, 2)), Rational(1)}, std::to_string(h)};
    };
    f.relevant_places = [](const Arguments& a) {
        std::set<std::uint64_t> ps = support(a.rationals[0]);
        ps.merge(support(a.rationals[1]));
        return places_of(std::move(ps), true);
    };
    f.sample = [](SampleRng& rng, std::int64_t h) {
        return Arguments{{rng.nonzero_rational(h), rng.nonzero_rational(h)}, {}};
    };
    return f;
}

inline ProductFamily gauss_product() {
    ProductFamily f;
    f.name = "gauss-product";
    f.summary = "prod_v int chi_v(a x^2 + b x) d_v x = 1 for a in Q^x, b in Q";
    f.rational_arity = 2;
    f.validate = [](const Arguments& a) { require_nonzero(a.rationals[0], "a"); };
    f.factor = [](const Place& v, const Arguments& a) {
        return from_three_part(gauss_factor(a.rationals[0], a.rationals[1], v));
    };
    f.relevant_places = [](const Arguments& a) { return gauss_places(a.rationals[0], a.rationals[1]); };
    f.sample = [](SampleRng& rng, std::int64_t h) {
        return Arguments{{rng.nonzero_rational(h), rng.rational(h)}, {}};
    };
    return f;
}

/// Arguments x2, x1, lambda, T.
inline ProductFamily kernel_product() {
    ProductFamily f;
    f.name = "kernel-product";
    f.summary = "K_inf(x2,T;x1,0) * prod_p K_p(x2,T;x1,0) = 1";
    f.rational_arity = 4;
    f.validate = [](const Arguments& a) { require_nonzero(a.rationals[3], "T"); };
    f.factor = [](const Place& v, const Arguments& a) {
        const auto& r = a.rationals;
        return from_three_part(kernel(r[0], r[3], r[1], r[2], v));
    };
    f.relevant_places = [](const Arguments& a) {
        const auto& r = a.rationals;
        return kernel_places(r[0], r[1], r[2], r[3]);
    };
    f.sample = [](SampleRng& rng, std::int64_t h) {
        return Arguments{{rng.rational(h), rng.rational(h), rng.rational(h), rng.nonzero_rational(h)}, {}};
    };
    return f;
}

inline Complex sample_complex(SampleRng& rng) {
    for (;;) {
        const Complex z(rng.real(-5.0, 5.0), rng.real(-5.0, 5.0));
        if (std::abs(z) <= 5.0) return z;
    }
}

inline ProductFamily gamma_product() {
    ProductFamily f;
    f.name = "gamma-product";
    f.summary = "Gamma_inf(u) * reg prod_p Gamma_p(u) = 1, u != 0, 1";
    f.kind = FamilyKind::numeric;
    f.complex_arity = 1;
    f.evaluate = [](const Arguments& a) {
        const GammaProductCheck c = verify_gamma_product(a.complexes[0]);
        NumericEvaluation ev;
        if (!c.cancelled) ev.factors = {{"inf", c.gamma_infinity}, {"reg", c.regularized_finite}};
        ev.combined = c.combined;
        ev.residual = c.residual;
        ev.note = c.note;
        return ev;
    };
    f.sample = [](SampleRng& rng, std::int64_t) { return Arguments{{}, {sample_complex(rng)}}; };
    return f;
}

inline ProductFamily beta_product() {
    ProductFamily f;
    f.name = "beta-product";
    f.summary = "B_inf(a,b) * reg prod_p B_p(a,b) = 1 with c = 1 - a - b";
    f.kind = FamilyKind::numeric;
    f.complex_arity = 2;
    f.evaluate = [](const Arguments& a) {
        const BetaProductCheck c = verify_beta_product(a.complexes[0], a.complexes[1]);
        NumericEvaluation ev;
        const char* labels[] = {"a", "b", "c"};
        for (std::size_t i = 0; i < 3; ++i) {
            if (c.parts[i].cancelled) {
                ev.note += std::string(ev.note.empty() ? "" : "; ") + labels[i] + ": " + c.parts[i].note;
                continue;
            }
            ev.factors.emplace_back(std::string("inf(") + labels[i] + ")", c.parts[i].gamma_infinity);
            ev.factors.emplace_back(std::string("reg(") + labels[i] + ")", c.parts[i].regularized_finite);
        }
        ev.combined = c.combined;
        ev.residual = c.residual;
        return ev;
    };
    f.sample = [](SampleRng& rng, std::int64_t) {
        return Arguments{{}, {sample_complex(rng), sample_complex(rng)}};
    };
    return f;
}

inline ProductFamily functional_equation() {
    ProductFamily f;
    f.name = "functional-equation";
    f.summary = "zeta_A(1 - a) = zeta_A(a)";
    f.kind = FamilyKind::numeric;
    f.complex_arity = 1;
    f.evaluate = [](const Arguments& a) {
        const Complex s = a.complexes[0];
        NumericEvaluation ev;
        const Complex lhs = zeta_adelic(s);
        const Complex rhs = zeta_adelic(1.0 - s);
        ev.factors = {{"zeta_A(a)", lhs}, {"zeta_A(1-a)", rhs}};
        ev.combined = lhs / rhs;
        ev.residual = verify_functional_equation(s);
        return ev;
    };
    f.sample = [](SampleRng& rng, std::int64_t) { return Arguments{{}, {sample_complex(rng)}}; };
    return f;
}

}  // namespace families

inline ProductRegistry ProductRegistry::with_builtins() {
    ProductRegistry r;
    r.add(families::norm_product());
    r.add(families::character_product());
    r.add(families::lambda_product());
    r.add(families::hilbert_product());
    r.add(families::gauss_product());
    r.add(families::kernel_product());
    r.add(families::gamma_product());
    r.add(families::beta_product());
    r.add(families::functional_equation());
    return r;
}

}  // namespace adelic
