// Acceptance run: one PASS/FAIL line per criterion, tolerances and time
// limits fixed below. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "adelic/adelic.hpp"
#include "adelic_cli.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

using namespace adelic;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const ProductRegistry& registry() {
    static const ProductRegistry r = ProductRegistry::with_builtins();
    return r;
}

SuiteReport suite(const char* name, std::size_t trials, std::int64_t height, std::uint64_t seed) {
    return registry().random_suite(*registry().find(name), trials, height, seed);
}

void require_suite(Outcome& o, const SuiteReport& s) {
    o.require(s.all_passed() && s.exact_passes == s.trials,
              s.family + ": " + std::to_string(s.exact_passes) + "/" + std::to_string(s.trials) + " exact passes");
}

Complex random_complex(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> d(-radius, radius);
    for (;;) {
        const Complex z(d(rng), d(rng));
        if (std::abs(z) <= radius) return z;
    }
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

bool near_pole(Complex a) { return std::abs(a) < 0.05 || std::abs(a - 1.0) < 0.05; }

std::vector<double> documented_grid() {
    std::vector<double> g;
    for (double u = -2.5; u <= 3.5 + 1e-12; u += 0.25)
        if (std::abs(u) > 1e-9 && std::abs(u - 1) > 1e-9) g.push_back(u);
    return g;
}

// ---------------------------------------------------------------- criteria

Outcome norm_product() {
    Outcome o;
    require_suite(o, suite("norm-product", 1000, 1000000, 42));
    return o;
}

Outcome character_product() {
    Outcome o;
    require_suite(o, suite("character-product", 1000, 1000000, 42));
    SampleRng rng(42);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = rng.rational(1000000);
        Rational s = x;
        for (auto p : denominator_primes(x)) s -= frac_part(x, Prime(p));
        o.require(s.is_integer(), "x - sum frac_p(x) not integral at x = " + x.str());
    }
    return o;
}

Outcome lambda_product() {
    Outcome o;
    require_suite(o, suite("lambda-product", 1000, 1000000, 42));
    return o;
}

Outcome hilbert_product() {
    Outcome o;
    require_suite(o, suite("hilbert-product", 1000, 1000000, 42));
    std::mt19937_64 rng(4);
    const std::vector<std::pair<std::uint64_t, unsigned>> grid{{2, 8}, {3, 5}, {5, 4}, {7, 3}};
    for (const auto& [p, k] : grid) {
        for (int i = 0; i < 200; ++i) {
            const Rational x = oracle::random_rational(rng, 1000);
            const Rational y = oracle::random_rational(rng, 1000);
            o.require(hilbert(x, y, Place::at(p)) == oracle::hilbert_by_solvability(x, y, p, k),
                      "hilbert(" + x.str() + ", " + y.str() + ")_" + std::to_string(p) + " disagrees with oracle");
        }
    }
    return o;
}

Outcome legendre_table() {
    Outcome o;
    for (auto p : primes_up_to(97)) {
        if (p == 2) continue;
        for (std::uint64_t a = 0; a < p; ++a)
            o.require(legendre(BigInt(a), Prime(p)) == oracle::legendre_table(static_cast<long long>(a), p),
                      "legendre(" + std::to_string(a) + ", " + std::to_string(p) + ")");
    }
    return o;
}

Outcome gauss_product() {
    Outcome o;
    require_suite(o, suite("gauss-product", 500, 10000, 7));
    std::mt19937_64 rng(6);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7};
    double worst = 0.0;
    for (int i = 0; i < 50;) {
        const std::uint64_t p = primes[static_cast<std::size_t>(i) % primes.size()];
        const Prime pp(p);
        const Rational a = oracle::random_rational(rng, 60);
        const Rational b = oracle::random_rational(rng, 60, false);
        if (std::abs(valuation(a, pp).value()) > 2) continue;
        const long long nb = b.is_zero() ? 0 : valuation(b, pp).value();
        const unsigned cut = static_cast<unsigned>(std::max<long long>(
            p == 2 ? 5 : 2, valuation(a, pp).value() + std::max<long long>(0, -nb) + (p == 2 ? 3 : 1)));
        const auto brute = padic_gauss_oracle(a, b, pp, cut);
        const auto closed = gauss_factor(a, b, Place::at(p)).to_complex();
        worst = std::max(worst, std::abs(brute - closed));
        o.require(std::abs(brute - closed) < 1e-9,
                  "oracle mismatch at a=" + a.str() + " b=" + b.str() + " p=" + std::to_string(p));
        ++i;
    }
    if (o.ok) o.detail = "worst oracle gap " + sci(worst);
    return o;
}

Outcome kernel_product() {
    Outcome o;
    require_suite(o, suite("kernel-product", 500, 10000, 13));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Rational x2 = oracle::random_rational(rng, 500, false);
        const Rational x1 = oracle::random_rational(rng, 500, false);
        const Rational t = oracle::random_rational(rng, 500);
        for (const auto& v : kernel_places(x2, x1, Rational(0), t)) {
            const auto k = kernel(x2, t, x1, Rational(0), v);
            const auto g = gauss_factor(Rational(-2) * t, x2 - x1, v);
            o.require(k.root_part == g.root_part && k.magnitude_base == g.magnitude_base &&
                          k.phase_part == g.phase_part * character(-t / Rational(2), v),
                      "lambda = 0 reduction failed at place " + v.str());
        }
    }
    return o;
}

Outcome vacuum_gate() {
    Outcome o;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = oracle::random_rational(rng, 1000, false);
        o.require((oscillator_vacuum(x).padic_gate == 1) == x.is_integer(), "gate wrong at " + x.str());
    }
    double worst = 0.0;
    for (long long k : {0, 1, 2}) {
        const auto c = fourier_selfmap_check(Rational(k), 1e-8);
        worst = std::max(worst, c.real_residual);
        o.require(c.holds && c.real_residual < 1e-8, "fourier self-map residual at k=" + std::to_string(k));
    }
    if (o.ok) o.detail = "max quadrature residual " + sci(worst);
    return o;
}

Outcome gamma_beta() {
    Outcome o;
    std::mt19937_64 rng(9);
    for (std::uint64_t p : {2, 3, 5}) {
        int done = 0;
        while (done < 100) {
            const Complex a = random_complex(rng, 5.0);
            Complex r;
            try {
                r = gamma_local(a, Place::at(p)) * gamma_local(1.0 - a, Place::at(p));
            } catch (const pole_error&) {
                continue;
            }
            o.require(std::abs(r - 1.0) < 1e-12, "Gamma_p reflection at p=" + std::to_string(p));
            ++done;
        }
    }
    const auto grid = documented_grid();
    for (double u : grid) o.require(verify_gamma_product(u).residual < 1e-9, "gamma product at " + std::to_string(u));
    for (double a : grid) {
        for (double b : grid) {
            const double c = 1.0 - a - b;
            if (std::abs(c) < 1e-9 || std::abs(c - 1) < 1e-9) continue;
            const auto r = verify_beta_product(a, b);
            o.require(r.c == Complex(1.0) - Complex(a) - Complex(b), "beta: a + b + c != 1");
            o.require(r.residual < 1e-9, "beta product at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    }
    return o;
}

Outcome functional_equation() {
    Outcome o;
    const auto grid = documented_grid();
    for (std::size_t i = 0; i < 20; ++i) {
        const double a = grid[i];
        o.require(verify_functional_equation(a) < 1e-8, "functional equation at " + std::to_string(a));
    }
    std::mt19937_64 rng(10);
    for (int done = 0; done < 100;) {
        const Complex a = random_complex(rng, 5.0);
        if (near_pole(a)) continue;
        o.require(verify_functional_equation(a) < 1e-8, "functional equation at random point");
        ++done;
    }
    constexpr double pi = std::numbers::pi;
    o.require(std::abs(riemann_zeta(2.0) - pi * pi / 6) < 1e-10, "zeta(2)");
    o.require(std::abs(riemann_zeta(-1.0) + 1.0 / 12) < 1e-10, "zeta(-1)");
    o.require(std::abs(riemann_zeta(3.0) - 1.2020569032) < 1e-10, "zeta(3)");
    return o;
}

Outcome mellin() {
    Outcome o;
    double worst = 0.0;
    for (double a : {1.5, 2.0, 3.0, 4.0}) {
        const auto m = mellin_vacuum(a);
        worst = std::max(worst, m.residual);
        o.require(m.residual < 1e-8, "mellin residual at a=" + std::to_string(a));
    }
    if (o.ok) o.detail = "max residual " + sci(worst);
    return o;
}

Outcome dynamics() {
    Outcome o;
    std::mt19937_64 rng(12);
    int probes = 0;
    for (int i = 0; i < 200; ++i) {
        const auto f = oracle::random_map_with_rational_fixed_points(rng);
        for (const auto& r : classify(f).reports) {
            std::set<Place> allowed{Place::infinity()};
            for (auto p : support(r.multiplier)) allowed.insert(Place::at(p));
            for (const auto& v : r.exceptional_set)
                o.require(allowed.contains(v), "exceptional place outside support for " + f.str());
            for (std::uint64_t p : {2, 3, 5}) {
                const Stability expected = classify_multiplier(r.multiplier, Place::at(p));
                const Rational x0 = oracle::probe_start(f, r.point.point, r.multiplier, p, 3);
                o.require(orbit_matches(orbit_probe(f, r.point.point, x0, Prime(p), 3), expected),
                          "orbit disagrees with " + to_string(expected) + " for " + f.str() + " at " +
                              std::to_string(p));
                ++probes;
            }
        }
    }
    const auto c = classify(MoebiusMap(Rational(2), Rational(0), Rational(1), Rational(1, 2)));
    const std::set<Place> exc{Place::infinity(), Place::at(2)};
    o.require(c.reports.size() == 2, "worked map: two fixed points");
    if (c.reports.size() == 2) {
        const auto& z = c.reports[0];
        const auto& h = c.reports[1];
        o.require(z.point.point == Rational(0) && z.multiplier == Rational(4) &&
                      z.per_place == std::map<Place, Stability>{{Place::infinity(), Stability::repelling},
                                                                {Place::at(2), Stability::attractive}} &&
                      z.exceptional_set == exc,
                  "worked map: fixed point 0 report");
        o.require(h.point.point == Rational(3, 2) && h.multiplier == Rational(1, 4) &&
                      h.per_place == std::map<Place, Stability>{{Place::infinity(), Stability::attractive},
                                                                {Place::at(2), Stability::repelling}} &&
                      h.exceptional_set == exc,
                  "worked map: fixed point 3/2 report");
    }
    if (o.ok) o.detail = std::to_string(probes) + " orbit probes";
    return o;
}

Outcome cli_invocations() {
    Outcome o;
    auto run = [](std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
        std::ostringstream os, es;
        const int code = cli::run_cli(args, os, es);
        if (out) *out = os.str();
        if (err) *err = es.str();
        return code;
    };
    std::string out, err;
    o.require(run({"verify", "norm-product", "12"}, &out) == 0 && out == "1 = 12 × 1/4 × 1/3 ✓ exact\n",
              "verify norm-product 12");
    o.require(run({"dynamics", "classify", "2", "0", "1", "1/2", "--json"}, &out) == 0, "dynamics classify exit");
    try {
        const auto j = nlohmann::json::parse(out);
        o.require(j["fixed_points"][0]["point"] == "0" && j["fixed_points"][1]["point"] == "3/2" &&
                      j["fixed_points"][0]["exceptional_set"] == nlohmann::json::array({"inf", "2"}),
                  "dynamics classify content");
    } catch (const std::exception&) {
        o.require(false, "dynamics classify json");
    }
    o.require(run({"verify", "norm-product", "0"}, nullptr, &err) == 2 &&
                  err.find("x must be a nonzero rational") != std::string::npos,
              "verify norm-product 0");

    const std::vector<std::vector<std::string>> exercised{
        {"suite", "norm-product", "--trials", "100"},
        {"suite", "character-product", "--trials", "100"},
        {"suite", "lambda-product", "--trials", "100"},
        {"suite", "hilbert-product", "--trials", "100"},
        {"legendre", "3", "7"},
        {"suite", "gauss-product", "--trials", "100", "--height", "10000", "--seed", "7"},
        {"gauss", "1/3", "0", "--places", "3"},
        {"suite", "kernel-product", "--trials", "100"},
        {"kernel", "0", "0", "0", "1"},
        {"wavefn", "2"},
        {"gamma", "0.3+1i"},
        {"beta", "0.3", "0.45"},
        {"verify", "gamma-product", "3"},
        {"verify", "beta-product", "0.3", "0.45"},
        {"zeta", "-1"},
        {"verify", "functional-equation", "3+0.5i"},
        {"mellin", "1.5"},
        {"dynamics", "fixed", "2", "0", "1", "1/2"},
        {"dynamics", "orbit", "2", "0", "1", "1/2", "0", "2", "2", "5"},
        {"norm", "12"},
        {"digits", "7/8", "2", "3"},
        {"frac", "7/8", "2"},
        {"char", "7/8"},
        {"hilbert", "2", "5"},
        {"lambda", "3"},
    };
    for (auto args : exercised) {
        std::string text;
        const int text_code = run(args, &text);
        args.push_back("--json");
        const int json_code = run(args, &out);
        bool round_trip = false;
        try {
            const auto j = nlohmann::json::parse(out);
            round_trip = j.dump(2) + "\n" == out;
            if (args[0] == "verify") round_trip = round_trip && to_json(report_from_json(j)) == j;
        } catch (const std::exception&) {
        }
        o.require(text_code == 0 && json_code == 0 && round_trip, "json round trip for " + args[0] + " " + args[1]);
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;  // 0: no limit stated
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "norm product, 1000 exact trials", 1.0, norm_product},
        {2, "character product, 1000 exact trials", 1.0, character_product},
        {3, "lambda product, 1000 exact trials", 5.0, lambda_product},
        {4, "hilbert product and solvability oracle", 30.0, hilbert_product},
        {5, "legendre vs squares table, odd p <= 97", 0.0, legendre_table},
        {6, "gauss product and p-adic integral oracle", 60.0, gauss_product},
        {7, "kernel product and free-case reduction", 10.0, kernel_product},
        {8, "ground-state gate and fourier self-map", 0.0, vacuum_gate},
        {9, "gamma reflection, gamma/beta products", 0.0, gamma_beta},
        {10, "functional equation and zeta reference values", 0.0, functional_equation},
        {11, "mellin transform of the vacuum", 0.0, mellin},
        {12, "moebius fixed points and orbit probes", 0.0, dynamics},
        {13, "cli invocations and json round trips", 0.0, cli_invocations},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.ok = false;
            o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s";
        }
        failures += !o.ok;
        std::printf("%s  %2d  %-48s %7.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
