#include <gtest/gtest.h>

#include "adelic/gauss_kernels.hpp"
#include "adelic/symbols.hpp"
#include "oracles.hpp"

using namespace adelic;

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(BigInt(2), Prime(7)), 1);
    EXPECT_EQ(legendre(BigInt(3), Prime(7)), -1);
    EXPECT_EQ(legendre(BigInt(14), Prime(7)), 0);
    EXPECT_EQ(legendre(BigInt(-1), Prime(5)), 1);
    EXPECT_EQ(legendre(BigInt(-1), Prime(7)), -1);
    EXPECT_THROW(legendre(BigInt(3), Prime(2)), domain_error);
}

TEST(Legendre, MatchesSquaresTable) {
    for (auto p : primes_up_to(97)) {
        if (p == 2) continue;
        int residues = 0;
        for (std::uint64_t a = 0; a < p; ++a) {
            const int s = legendre(BigInt(a), Prime(p));
            EXPECT_EQ(s, oracle::legendre_table(static_cast<long long>(a), p)) << a << " mod " << p;
            residues += s == 1;
        }
        EXPECT_EQ(residues, static_cast<int>((p - 1) / 2));
    }
}

TEST(Legendre, Multiplicative) {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long long> dist(-100000, 100000);
    for (std::uint64_t p : {3, 5, 7, 11, 13, 101, 1009}) {
        for (int i = 0; i < 100; ++i) {
            const BigInt a(dist(rng)), b(dist(rng));
            if (a % p == 0 || b % p == 0) continue;
            EXPECT_EQ(legendre(a * b, Prime(p)), legendre(a, Prime(p)) * legendre(b, Prime(p)));
        }
    }
}

TEST(Hilbert, Examples) {
    EXPECT_EQ(hilbert(Rational(-1), Rational(-1), Place::infinity()), -1);
    EXPECT_EQ(hilbert(Rational(-1), Rational(-1), Place::at(2)), -1);
    EXPECT_EQ(oracle::hilbert_by_solvability(Rational(-1), Rational(-1), 2, 6), -1);
    EXPECT_EQ(hilbert(Rational(2), Rational(7), Place::at(7)), 1);
    EXPECT_EQ(oracle::hilbert_by_solvability(Rational(2), Rational(7), 7, 3), 1);
    EXPECT_EQ(hilbert(Rational(1), Rational(-5, 3), Place::at(3)), 1);
    EXPECT_THROW(hilbert(Rational(0), Rational(1), Place::at(3)), domain_error);
}

TEST(Hilbert, AgreesWithSolvabilityOracle) {
    // Exponent k per prime keeps p^{2k} enumeration cheap while exceeding
    // the precision at which square classes are decided.
    const std::vector<std::pair<std::uint64_t, unsigned>> grid{{2, 7}, {3, 4}, {5, 3}, {7, 3}};
    std::mt19937_64 rng(59);
    for (const auto& [p, k] : grid) {
        for (int i = 0; i < 40; ++i) {
            const Rational x = oracle::random_rational(rng, 200);
            const Rational y = oracle::random_rational(rng, 200);
            EXPECT_EQ(hilbert(x, y, Place::at(p)), oracle::hilbert_by_solvability(x, y, p, k))
                << "(" << x << ", " << y << ")_" << p;
        }
    }
}

TEST(Hilbert, SymmetricAndBilinear) {
    std::mt19937_64 rng(61);
    const std::vector<Place> places{Place::infinity(), Place::at(2), Place::at(3), Place::at(5), Place::at(13)};
    for (int i = 0; i < 300; ++i) {
        const Rational x = oracle::random_rational(rng, 10000);
        const Rational y = oracle::random_rational(rng, 10000);
        const Rational z = oracle::random_rational(rng, 10000);
        for (const auto& v : places) {
            EXPECT_EQ(hilbert(x, y, v), hilbert(y, x, v));
            EXPECT_EQ(hilbert(x, y * z, v), hilbert(x, y, v) * hilbert(x, z, v));
            EXPECT_EQ(hilbert(x, -x, v), 1);
        }
    }
}

TEST(HilbertProduct, Examples) {
    const auto mm = verify_hilbert_product(Rational(-1), Rational(-1));
    EXPECT_TRUE(mm.holds);
    for (const auto& [v, h] : mm.factors) EXPECT_EQ(h, (v.is_infinite() || v == Place::at(2)) ? -1 : 1);

    const auto one = verify_hilbert_product(Rational(1), Rational(-35, 4));
    EXPECT_TRUE(one.holds);
    for (const auto& [v, h] : one.factors) EXPECT_EQ(h, 1);

    const auto two_five = verify_hilbert_product(Rational(2), Rational(5));
    EXPECT_TRUE(two_five.holds);
    for (const auto& [v, h] : two_five.factors) {
        if (!v.is_infinite()) {
            EXPECT_EQ(h, oracle::hilbert_by_solvability(Rational(2), Rational(5), v.prime().value(), 4));
        }
    }
}

TEST(HilbertProduct, RandomPairs) {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 500; ++i)
        EXPECT_TRUE(verify_hilbert_product(oracle::random_rational(rng, 1000000), oracle::random_rational(rng, 1000000)).holds);
}

TEST(Lambda, Examples) {
    EXPECT_EQ(lambda(Rational(1), Place::at(2)).k(), 1);
    EXPECT_EQ(lambda(Rational(5), Place::at(5)).k(), 0);
    EXPECT_EQ(lambda(Rational(-1), Place::infinity()).k(), 1);
    EXPECT_EQ(lambda(Rational(1), Place::infinity()).k(), 7);
    // p = 3 = 3 mod 4, nu odd: sqrt((-1/3)) = i, (1/3) = 1.
    EXPECT_EQ(lambda(Rational(3), Place::at(3)).k(), 2);
    // (2/3) = -1.
    EXPECT_EQ(lambda(Rational(6), Place::at(3)).k(), 6);
    EXPECT_EQ(lambda(Rational(7), Place::at(3)).k(), 0);
    EXPECT_THROW(lambda(Rational(0), Place::at(3)), domain_error);
}

TEST(Lambda, MatchesBruteForceGaussIntegral) {
    // lambda_p(a) = (integral of chi_p(a t^2)) * |2a|_p^{1/2}, the integral
    // summed directly over a large ball.
    std::vector<std::pair<std::uint64_t, unsigned>> grid{{2, 6}, {3, 4}, {5, 3}, {7, 2}};
    const std::vector<long long> nums{1, -1, 2, 3, 5, 6, 7, 10, 14, -3, 9, 12, 18, 50};
    for (const auto& [p, n] : grid) {
        for (long long num : nums) {
            for (long long den : {1LL, 2LL, 3LL, 4LL}) {
                const Rational a(num, den);
                const auto val = valuation(a, Prime(p)).value();
                if (std::abs(val) > 2) continue;
                const auto integral = padic_gauss_oracle(a, Rational(0), Prime(p), n);
                const double mag = std::sqrt(abs(Rational(2) * a, Place::at(p)).value.to_double());
                const auto expected = lambda(a, Place::at(p)).to_complex();
                EXPECT_NEAR(std::abs(integral * mag - expected), 0.0, 1e-9) << "a=" << a << " p=" << p;
            }
        }
    }
}

TEST(Lambda, LiteralEvenDyadicBranchFailsTheProduct) {
    // exp(pi i (x_1 + 1/4)) for even valuation breaks the product formula at
    // units congruent to 3 mod 4 and disagrees with the Gauss integral.
    for (long long x : {3LL, -1LL, 7LL, 12LL}) {
        const Rational q(x);
        EighthRoot total = lambda(q, Place::infinity()) * lambda_dyadic_as_printed(q);
        for (auto p : support(q))
            if (p != 2) total *= lambda(q, Place::at(p));
        EXPECT_FALSE(total.is_one()) << x;
        EXPECT_TRUE(verify_lambda_product(q).holds) << x;
    }
    // Even branch with x_1 = 0 and every odd branch agree with the literal form.
    for (long long x : {1LL, 5LL, 2LL, 6LL, 10LL, 14LL, 4LL})
        EXPECT_EQ(lambda(Rational(x), Place::at(2)), lambda_dyadic_as_printed(Rational(x))) << x;
}

TEST(LambdaProduct, Examples) {
    const auto one = verify_lambda_product(Rational(1));
    EXPECT_TRUE(one.holds);
    ASSERT_EQ(one.factors.size(), 2u);
    EXPECT_EQ(one.factors[0].second.k(), 7);
    EXPECT_EQ(one.factors[1].second.k(), 1);

    const auto minus_one = verify_lambda_product(Rational(-1));
    EXPECT_TRUE(minus_one.holds);
    std::complex<double> prod = 1.0;
    for (const auto& [v, f] : minus_one.factors) prod *= f.to_complex();
    EXPECT_LT(std::abs(prod - 1.0), 1e-12);

    EXPECT_TRUE(verify_lambda_product(Rational(4)).holds);
    EXPECT_EQ(lambda(Rational(4), Place::at(2)).k(), 1);
    for (long long p : {3, 7, 11, 19, 5, 13}) EXPECT_TRUE(verify_lambda_product(Rational(p)).holds) << p;
    EXPECT_THROW(verify_lambda_product(Rational(0)), domain_error);
}

TEST(LambdaProduct, RandomRationals) {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 1000; ++i) {
        const Rational x = oracle::random_rational(rng, 1000000);
        EXPECT_TRUE(verify_lambda_product(x).holds) << x;
    }
}

TEST(Lambda, InvariantUnderSquares) {
    std::mt19937_64 rng(73);
    const std::vector<Place> places{Place::infinity(), Place::at(2), Place::at(3), Place::at(5), Place::at(7)};
    for (int i = 0; i < 300; ++i) {
        const Rational x = oracle::random_rational(rng, 10000);
        const Rational t = oracle::random_rational(rng, 100);
        for (const auto& v : places) EXPECT_EQ(lambda(x * t * t, v), lambda(x, v));
    }
}
