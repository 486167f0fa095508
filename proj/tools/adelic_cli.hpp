#pragma once

// Command-line front end. run_cli() is separate from main() so the test
// suite can drive it with captured streams.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "adelic/adelic.hpp"

namespace adelic::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct Options {
    bool json = false;
    std::string places;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::int64_t height = 1000000;
    double tol = 1e-8;
};

/// "re", "re+imi", "re-imi", "imi".
inline Complex parse_complex(const std::string& token) {
    static const std::regex kPattern(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
    static const std::regex kPureImag(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i\s*$)");
    std::smatch m;
    if (std::regex_match(token, m, kPureImag)) return {0.0, std::stod(m[1].str())};
    if (!std::regex_match(token, m, kPattern) || token.empty() || !m[1].matched)
        throw domain_error("malformed complex number '" + token + "'");
    const double re = std::stod(m[1].str());
    double im = 0.0;
    if (m[2].matched) {
        im = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-") im = -im;
    }
    return {re, im};
}

inline std::vector<Place> parse_places(const std::string& list) {
    std::vector<Place> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(Place::parse(item));
    }
    return out;
}

inline Prime parse_prime(const std::string& token) {
    try {
        const Rational r = Rational::parse(token);
        if (!r.is_integer()) throw domain_error("");
        return Prime::parse(r.num());
    } catch (const domain_error&) {
        throw domain_error("invalid prime '" + token + "'");
    }
}

inline std::string place_list_str(const std::set<Place>& s) {
    std::string out = "{";
    for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v.str();
    return out + "}";
}

inline json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

inline std::string fmt(Complex z) {
    if (z.imag() == 0.0) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    void need(const std::vector<std::string>& args, std::size_t n, const char* usage) const {
        if (args.size() != n) throw domain_error(std::string("usage: ") + usage);
    }

    std::vector<Place> places_or(std::vector<Place> fallback) const {
        return opt_.places.empty() ? fallback : parse_places(opt_.places);
    }

    int emit(const json& j, const std::string& text, int code = kOk) const {
        if (opt_.json) out_ << j.dump(2) << "\n";
        else out_ << text;
        return code;
    }

    int norm(const std::vector<std::string>& a) {
        need(a, 1, "norm <x>");
        const Rational x = Rational::parse(a[0]);
        std::vector<Place> fallback{Place::infinity()};
        if (!x.is_zero())
            for (auto p : support(x)) fallback.push_back(Place::at(p));
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : places_or(fallback)) {
            const Rational n = abs(x, v).value;
            values.push_back({{"place", v.str()}, {"value", n.str()}});
            text << "|" << x << "|_" << v << " = " << n << "\n";
        }
        return emit({{"x", x.str()}, {"values", values}}, text.str());
    }

    int digits_cmd(const std::vector<std::string>& a) {
        need(a, 3, "digits <x> <p> <n>");
        const Rational x = Rational::parse(a[0]);
        if (x.is_zero()) throw domain_error("x must be a nonzero rational");
        const Prime p = parse_prime(a[1]);
        const long n = std::stol(a[2]);
        if (n < 0 || n > 10000) throw domain_error("digit count must be in [0, 10000]");
        const DigitExpansion d = digits(x, p, static_cast<unsigned>(n));
        std::ostringstream text;
        text << x << " = " << p << "^" << d.valuation << " * (";
        for (std::size_t k = 0; k < d.digits.size(); ++k) text << (k ? " " : "") << d.digits[k];
        text << " ...)\n";
        return emit({{"x", x.str()}, {"prime", p.value()}, {"valuation", d.valuation}, {"digits", d.digits}},
                    text.str());
    }

    int frac(const std::vector<std::string>& a) {
        need(a, 2, "frac <x> <p>");
        const Rational x = Rational::parse(a[0]);
        const Prime p = parse_prime(a[1]);
        const Rational f = frac_part(x, p);
        std::ostringstream text;
        text << "{" << x << "}_" << p << " = " << f << "\n";
        return emit({{"x", x.str()}, {"prime", p.value()}, {"frac", f.str()}}, text.str());
    }

    int character_cmd(const std::vector<std::string>& a) {
        need(a, 1, "char <x>");
        const Rational x = Rational::parse(a[0]);
        std::vector<Place> fallback{Place::infinity()};
        for (auto p : denominator_primes(x)) fallback.push_back(Place::at(p));
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : places_or(fallback)) {
            const RootOfUnity c = character(x, v);
            values.push_back({{"place", v.str()}, {"phase", c.phase().str()}});
            text << "chi_" << v << "(" << x << ") = " << c.str() << "\n";
        }
        return emit({{"x", x.str()}, {"values", values}}, text.str());
    }

    int legendre_cmd(const std::vector<std::string>& a) {
        need(a, 2, "legendre <a> <p>");
        const Rational n = Rational::parse(a[0]);
        if (!n.is_integer()) throw domain_error("legendre: a must be an integer");
        const Prime p = parse_prime(a[1]);
        const int s = legendre(n.num(), p);
        std::ostringstream text;
        text << "(" << n << "/" << p << ") = " << s << "\n";
        return emit({{"a", n.str()}, {"p", p.value()}, {"symbol", s}}, text.str());
    }

    int hilbert_cmd(const std::vector<std::string>& a) {
        need(a, 2, "hilbert <x> <y>");
        const Rational x = Rational::parse(a[0]), y = Rational::parse(a[1]);
        if (x.is_zero() || y.is_zero()) throw domain_error("x and y must be nonzero rationals");
        std::vector<Place> fallback;
        for (const auto& [v, h] : verify_hilbert_product(x, y).factors) fallback.push_back(v);
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : places_or(fallback)) {
            const int h = hilbert(x, y, v);
            values.push_back({{"place", v.str()}, {"symbol", h}});
            text << "(" << x << "," << y << ")_" << v << " = " << h << "\n";
        }
        return emit({{"x", x.str()}, {"y", y.str()}, {"values", values}}, text.str());
    }

    int lambda_cmd(const std::vector<std::string>& a) {
        need(a, 1, "lambda <x>");
        const Rational x = Rational::parse(a[0]);
        if (x.is_zero()) throw domain_error("x must be a nonzero rational");
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : places_or(lambda_places(x))) {
            const EighthRoot l = lambda(x, v);
            values.push_back({{"place", v.str()}, {"k", l.k()}, {"display", l.str()}});
            text << "lambda_" << v << "(" << x << ") = " << l.str() << "\n";
        }
        return emit({{"x", x.str()}, {"values", values}}, text.str());
    }

    json three_part_json(const Place& v, const ThreePartValue& t) const {
        return {{"place", v.str()},
                {"root_k", t.root_part.k()},
                {"magnitude_base", t.magnitude_base.str()},
                {"phase", t.phase_part.phase().str()},
                {"value", complex_json(t.to_complex())}};
    }

    int gauss(const std::vector<std::string>& a) {
        need(a, 2, "gauss <a> <b>");
        const Rational qa = Rational::parse(a[0]), qb = Rational::parse(a[1]);
        if (qa.is_zero()) throw domain_error("a must be a nonzero rational");
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : places_or(gauss_places(qa, qb))) {
            const GaussFactor g = gauss_factor(qa, qb, v);
            values.push_back(three_part_json(v, g));
            text << "gauss_" << v << "(" << qa << ", " << qb << ") = " << g.str() << "\n";
        }
        return emit({{"a", qa.str()}, {"b", qb.str()}, {"values", values}}, text.str());
    }

    int kernel_cmd(const std::vector<std::string>& a) {
        need(a, 4, "kernel <x2> <x1> <lambda> <T>");
        const Rational x2 = Rational::parse(a[0]), x1 = Rational::parse(a[1]);
        const Rational accel = Rational::parse(a[2]), t = Rational::parse(a[3]);
        if (t.is_zero()) throw domain_error("T must be a nonzero rational");
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : places_or(kernel_places(x2, x1, accel, t))) {
            const KernelValue k = kernel(x2, t, x1, accel, v);
            values.push_back(three_part_json(v, k));
            text << "K_" << v << " = " << k.str() << "\n";
        }
        return emit({{"x2", x2.str()}, {"x1", x1.str()}, {"lambda", accel.str()}, {"T", t.str()}, {"values", values}},
                    text.str());
    }

    std::vector<Place> default_numeric_places() const {
        return places_or({Place::infinity(), Place::at(2), Place::at(3), Place::at(5)});
    }

    int gamma_cmd(const std::vector<std::string>& a) {
        need(a, 1, "gamma <u>");
        const Complex u = parse_complex(a[0]);
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : default_numeric_places()) {
            const Complex g = gamma_local(u, v);
            values.push_back({{"place", v.str()}, {"value", complex_json(g)}});
            text << "Gamma_" << v << "(" << a[0] << ") = " << fmt(g) << "\n";
        }
        return emit({{"u", complex_json(u)}, {"values", values}}, text.str());
    }

    int beta_cmd(const std::vector<std::string>& a) {
        need(a, 2, "beta <a> <b>");
        const Complex ca = parse_complex(a[0]), cb = parse_complex(a[1]);
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : default_numeric_places()) {
            const Complex b = beta_local(ca, cb, v);
            values.push_back({{"place", v.str()}, {"value", complex_json(b)}});
            text << "B_" << v << "(" << a[0] << ", " << a[1] << ") = " << fmt(b) << "\n";
        }
        return emit({{"a", complex_json(ca)}, {"b", complex_json(cb)}, {"c", complex_json(1.0 - ca - cb)},
                     {"values", values}},
                    text.str());
    }

    int zeta_cmd(const std::vector<std::string>& a) {
        need(a, 1, "zeta <a>");
        const Complex s = parse_complex(a[0]);
        json values = json::array();
        std::ostringstream text;
        for (const auto& v : default_numeric_places()) {
            const Complex z = zeta_local(s, v);
            values.push_back({{"place", v.str()}, {"value", complex_json(z)}});
            text << "zeta_" << v << "(" << a[0] << ") = " << fmt(z) << "\n";
        }
        const Complex riemann = riemann_zeta(s);
        const Complex adelic = zeta_adelic(s);
        text << "zeta(" << a[0] << ") = " << fmt(riemann) << "\n";
        text << "zeta_A(" << a[0] << ") = " << fmt(adelic) << "\n";
        return emit({{"a", complex_json(s)},
                     {"local", values},
                     {"riemann", complex_json(riemann)},
                     {"adelic", complex_json(adelic)}},
                    text.str());
    }

    int mellin(const std::vector<std::string>& a) {
        need(a, 1, "mellin <a>");
        const double s = std::stod(a[0]);
        const MellinComparison m = mellin_vacuum(s);
        std::ostringstream text;
        text << "numeric = " << fmt(m.numeric) << "\nclosed  = " << fmt(m.closed) << "\nresidual = " << m.residual
             << "\n";
        return emit({{"a", s}, {"numeric", m.numeric}, {"closed", m.closed}, {"residual", m.residual}}, text.str(),
                    m.residual < opt_.tol ? kOk : kVerificationFailed);
    }

    int wavefn(const std::vector<std::string>& a) {
        need(a, 1, "wavefn <x>");
        const Rational x = Rational::parse(a[0]);
        const WaveFunctionValue w = oscillator_vacuum(x);
        const FourierSelfMapCheck f = fourier_selfmap_check(x, opt_.tol);
        std::ostringstream text;
        text << "psi(" << x << ") = " << fmt(w.value()) << " (real factor " << fmt(w.real_factor) << ", gate "
             << w.padic_gate << ")\n"
             << "fourier self-map: " << (f.holds ? "holds" : "FAILS") << " (residual " << f.real_residual << ")\n";
        return emit({{"x", x.str()},
                     {"real_factor", w.real_factor},
                     {"gate", w.padic_gate},
                     {"value", w.value()},
                     {"fourier_selfmap", f.holds},
                     {"fourier_residual", f.real_residual}},
                    text.str(), f.holds ? kOk : kVerificationFailed);
    }

    int dynamics(const std::vector<std::string>& a) {
        if (a.empty()) throw domain_error("usage: dynamics <fixed|classify|orbit> a b c d [x* x0 place steps]");
        const std::string action = a[0];
        if ((action == "fixed" || action == "classify") && a.size() != 5)
            throw domain_error("usage: dynamics " + action + " a b c d");
        if (action == "orbit" && a.size() != 9) throw domain_error("usage: dynamics orbit a b c d x* x0 place steps");
        if (action != "fixed" && action != "classify" && action != "orbit")
            throw domain_error("unknown dynamics action '" + action + "'");
        const MoebiusMap f(Rational::parse(a[1]), Rational::parse(a[2]), Rational::parse(a[3]), Rational::parse(a[4]));
        const json map_json = {{"a", f.a().str()}, {"b", f.b().str()}, {"c", f.c().str()}, {"d", f.d().str()}};
        std::ostringstream text;

        if (action == "fixed") {
            json pts = json::array();
            for (const auto& fp : fixed_points(f)) {
                pts.push_back(fixed_point_json(fp));
                text << fixed_point_text(fp) << "\n";
            }
            return emit({{"map", map_json}, {"fixed_points", pts}}, text.str());
        }
        if (action == "classify") {
            const Classification c = classify(f);
            json j = classification_json(c);
            j["map"] = map_json;
            for (const auto& r : c.reports) {
                text << "fixed point " << fixed_point_text(r.point) << "\n";
                for (const auto& [v, s] : r.per_place) text << "  " << v << ": " << to_string(s) << "\n";
                text << "  all other primes: indifferent\n  exceptional set " << place_list_str(r.exceptional_set)
                     << "\n";
            }
            if (!c.note.empty()) text << c.note << "\n";
            return emit(j, text.str());
        }
        const Rational fixed = Rational::parse(a[5]), x0 = Rational::parse(a[6]);
        const Place v = Place::parse(a[7]);
        const auto steps = static_cast<std::size_t>(std::stoul(a[8]));
        if (v.is_infinite()) {
            const auto dist = orbit_probe_real(f, fixed, x0, steps);
            for (std::size_t k = 0; k < dist.size(); ++k) text << k << ": |x_k - x*| = " << fmt(dist[k]) << "\n";
            return emit({{"map", map_json}, {"place", "inf"}, {"distances", dist}}, text.str());
        }
        const OrbitProbe probe = orbit_probe(f, fixed, x0, v.prime(), steps);
        json vals = json::array();
        for (std::size_t k = 0; k < probe.valuations.size(); ++k) {
            const auto& val = probe.valuations[k];
            vals.push_back(val.is_infinite() ? json("+inf") : json(val.value()));
            text << k << ": nu_" << v << "(x_k - x*) = " << val.str() << "\n";
        }
        json j = {{"map", map_json}, {"place", v.str()}, {"valuations", vals}};
        if (probe.escaped_at) {
            j["escaped_at"] = *probe.escaped_at;
            text << "orbit hit the pole at step " << *probe.escaped_at << "\n";
        }
        return emit(j, text.str());
    }

    int verify(const ProductRegistry& registry, const std::vector<std::string>& a) {
        if (a.empty()) throw domain_error("usage: verify <family> <args...>");
        const auto handle = registry.find(a[0]);
        if (!handle) throw domain_error("unknown family '" + a[0] + "'");
        const ProductFamily& fam = registry.family(*handle);
        if (a.size() != 1 + fam.rational_arity + fam.complex_arity)
            throw domain_error(fam.name + " takes " + std::to_string(fam.rational_arity + fam.complex_arity) +
                               " argument(s)");
        Arguments args;
        for (std::size_t i = 0; i < fam.rational_arity; ++i) args.rationals.push_back(Rational::parse(a[1 + i]));
        for (std::size_t i = 0; i < fam.complex_arity; ++i)
            args.complexes.push_back(parse_complex(a[1 + fam.rational_arity + i]));
        const VerificationReport r = registry.verify(*handle, args, opt_.tol);
        const int code = r.verdict == Verdict::fail ? kVerificationFailed : kOk;
        return emit(to_json(r), report_text(r), code);
    }

    int suite(const ProductRegistry& registry, const std::vector<std::string>& a) {
        need(a, 1, "suite <family>");
        const auto handle = registry.find(a[0]);
        if (!handle) throw domain_error("unknown family '" + a[0] + "'");
        const SuiteReport s = registry.random_suite(*handle, opt_.trials, opt_.height, opt_.seed, opt_.tol);
        std::ostringstream text;
        text << s.family << ": " << (s.exact_passes + s.numeric_passes) << "/" << s.trials << " passed (seed "
             << s.seed << ", height " << s.height << ")\n";
        for (const auto& f : s.failures)
            text << "  FAIL index " << f.index << ": " << f.report.diagnostic << "\n";
        for (const auto& e : s.errors) text << "  ERROR " << e << "\n";
        return emit(to_json(s), text.str(), s.all_passed() ? kOk : kVerificationFailed);
    }

    static std::string report_text(const VerificationReport& r) {
        std::ostringstream text;
        text << r.expected << " =";
        for (std::size_t i = 0; i < r.factors.size(); ++i) text << (i ? " × " : " ") << r.factors[i].display;
        switch (r.verdict) {
            case Verdict::exact_pass: text << " ✓ exact"; break;
            case Verdict::numeric_pass: text << " ✓ numeric (residual " << *r.residual << ")"; break;
            case Verdict::fail: text << " ✗ FAIL: " << r.diagnostic; break;
        }
        text << "\n";
        return text.str();
    }

    static json fixed_point_json(const FixedPoint& fp) {
        json j;
        switch (fp.kind) {
            case FixedPoint::Kind::rational: j["kind"] = "rational"; j["point"] = fp.point.str(); break;
            case FixedPoint::Kind::at_infinity: j["kind"] = "infinity"; j["point"] = "inf"; break;
            case FixedPoint::Kind::irrational: j["kind"] = "irrational"; break;
        }
        j["discriminant"] = fp.discriminant.str();
        if (fp.multiplier) j["multiplier"] = fp.multiplier->str();
        return j;
    }

    static std::string fixed_point_text(const FixedPoint& fp) {
        switch (fp.kind) {
            case FixedPoint::Kind::rational: return fp.point.str() + " (multiplier " + fp.multiplier->str() + ")";
            case FixedPoint::Kind::at_infinity: return "inf (multiplier " + fp.multiplier->str() + ")";
            case FixedPoint::Kind::irrational: return "irrational (discriminant " + fp.discriminant.str() + ")";
        }
        return "?";
    }

    static json classification_json(const Classification& c) {
        json reports = json::array();
        for (const auto& r : c.reports) {
            json per_place = json::object();
            for (const auto& [v, s] : r.per_place) per_place[v.str()] = to_string(s);
            json exceptional = json::array();
            for (const auto& v : r.exceptional_set) exceptional.push_back(v.str());
            json fp = fixed_point_json(r.point);
            fp["per_place"] = per_place;
            fp["exceptional_set"] = exceptional;
            reports.push_back(fp);
        }
        json j = {{"fixed_points", reports}};
        if (c.irrational_discriminant) j["irrational_discriminant"] = c.irrational_discriminant->str();
        if (!c.note.empty()) j["note"] = c.note;
        return j;
    }

private:
    const Options& opt_;
    std::ostream& out_;
};

/// Parses the argument vector (without the program name) and runs it.
inline int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact local and adelic quantities over Q", "adelic"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "emit JSON");
    app.add_option("--places", opt.places, "comma-separated places, e.g. inf,2,3");
    app.add_option("--trials", opt.trials, "suite trials");
    app.add_option("--seed", opt.seed, "suite seed");
    app.add_option("--height", opt.height, "bound on numerators and denominators in suites");
    app.add_option("--tol", opt.tol, "tolerance for numeric verdicts");

    struct Sub {
        const char* name;
        const char* help;
    };
    static constexpr Sub kSubs[] = {
        {"norm", "|x|_v at the chosen places"},
        {"digits", "canonical p-adic digits: digits <x> <p> <n>"},
        {"frac", "p-adic fractional part: frac <x> <p>"},
        {"char", "additive characters chi_v(x)"},
        {"legendre", "Legendre symbol: legendre <a> <p>"},
        {"hilbert", "Hilbert symbols: hilbert <x> <y>"},
        {"lambda", "lambda_v(x)"},
        {"gauss", "closed-form Gauss integrals: gauss <a> <b>"},
        {"kernel", "propagator kernel: kernel <x2> <x1> <lambda> <T>"},
        {"gamma", "local gamma functions: gamma <u>"},
        {"beta", "local beta functions: beta <a> <b>"},
        {"zeta", "local, Riemann and adelic zeta: zeta <a>"},
        {"mellin", "Mellin transform of the vacuum, numeric vs closed: mellin <a>"},
        {"wavefn", "oscillator vacuum value and Fourier self-map: wavefn <x>"},
        {"dynamics", "Moebius maps: dynamics <fixed|classify|orbit> a b c d [x* x0 place steps]"},
        {"verify", "verify an adelic product: verify <family> <args...>"},
        {"suite", "seeded random suite: suite <family>"},
    };
    std::map<std::string, std::vector<std::string>> positionals;
    std::map<std::string, CLI::App*> subs;
    for (const auto& s : kSubs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->fallthrough();
        sub->add_option("args", positionals[s.name], "arguments");
        subs[s.name] = sub;
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    static const ProductRegistry registry = ProductRegistry::with_builtins();
    Runner run(opt, out);
    try {
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            const auto& a = positionals[name];
            if (name == "norm") return run.norm(a);
            if (name == "digits") return run.digits_cmd(a);
            if (name == "frac") return run.frac(a);
            if (name == "char") return run.character_cmd(a);
            if (name == "legendre") return run.legendre_cmd(a);
            if (name == "hilbert") return run.hilbert_cmd(a);
            if (name == "lambda") return run.lambda_cmd(a);
            if (name == "gauss") return run.gauss(a);
            if (name == "kernel") return run.kernel_cmd(a);
            if (name == "gamma") return run.gamma_cmd(a);
            if (name == "beta") return run.beta_cmd(a);
            if (name == "zeta") return run.zeta_cmd(a);
            if (name == "mellin") return run.mellin(a);
            if (name == "wavefn") return run.wavefn(a);
            if (name == "dynamics") return run.dynamics(a);
            if (name == "verify") return run.verify(registry, a);
            if (name == "suite") return run.suite(registry, a);
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid number: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: number out of range: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no subcommand\n";
    return kUsageError;
}

}  // namespace adelic::cli
