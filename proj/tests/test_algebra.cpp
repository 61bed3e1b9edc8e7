#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tpe/algebra.hpp"

using namespace tpe;

namespace {

std::vector<std::int64_t> small(const PolyQ& f) {
    std::vector<std::int64_t> out;
    for (const auto& c : f.coefficients()) out.push_back(c.get_num().get_si());
    return out;
}

PolyQ random_poly(std::mt19937& rng, int degree, int bound) {
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::vector<Integer> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(coef(rng));
    if (c.back() == 0) c.back() = 1;
    return poly_q(c);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("7")), "7");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_THROW(parse_integer("1.5"), InputError);
}

TEST(Rational, ReductionModP) {
    EXPECT_EQ(reduce_mod(Rational(-1), 7), 6u);
    EXPECT_EQ(reduce_mod(make_rational(1, 2), 7), 4u);
    EXPECT_TRUE(is_p_integral(make_rational(3, 5), 7));
    EXPECT_FALSE(is_p_integral(make_rational(3, 14), 7));
    EXPECT_THROW(reduce_mod(make_rational(1, 7), 7), NonIntegralError);
}

TEST(Rational, Primality) {
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 2147483647ull, 1000000007ull, 18446744073709551557ull};
    for (auto p : primes) EXPECT_TRUE(is_prime_u64(p)) << p;
    for (std::uint64_t n : {0ull, 1ull, 4ull, 561ull, 3215031751ull, 18446744073709551615ull}) EXPECT_FALSE(is_prime_u64(n)) << n;
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) trial = false;
        EXPECT_EQ(is_prime_u64(n), trial) << n;
    }
}

TEST(PrimeField, Arithmetic) {
    PrimeField k(11);
    FpElt a = k.from_int(3), b = k.from_int(-4);
    EXPECT_EQ((a + b).value(), 10u);
    EXPECT_EQ((a * b).value(), 10u);
    EXPECT_EQ((a * a.inverse()).value(), 1u);
    EXPECT_EQ(a.pow(10).value(), 1u);
    EXPECT_THROW(k.zero().inverse(), DivisionByZero);
    EXPECT_THROW(a + FpElt(1, 13), DomainError);
    EXPECT_THROW(PrimeField(9), DomainError);
    EXPECT_THROW(PrimeField(2), DomainError);
}

TEST(PrimeField, LegendreMatchesSquares) {
    for (std::uint64_t p : {3ull, 7ull, 11ull, 31ull}) {
        PrimeField k(p);
        std::vector<bool> square(p, false);
        for (std::uint64_t y = 1; y < p; ++y) square[y * y % p] = true;
        for (std::uint64_t a = 1; a < p; ++a) EXPECT_EQ(legendre_symbol(k.from_int(static_cast<long>(a))), square[a] ? 1 : -1);
        EXPECT_EQ(legendre_symbol(k.zero()), 0);
    }
}

TEST(Polynomial, DivisionAndGcd) {
    PolyQ a = poly_q({-1, 0, 0, 1});  // x^3 - 1
    PolyQ b = poly_q({-1, 1});        // x - 1
    auto qr = divmod(a, b);
    EXPECT_EQ(qr.quotient, poly_q({1, 1, 1}));
    EXPECT_TRUE(qr.remainder.is_zero());
    EXPECT_EQ(gcd(a, poly_q({-1, 0, 1})), b);
    EXPECT_EQ(derivative(a), poly_q({0, 0, 3}));
    EXPECT_THROW(divmod(a, PolyQ{}), DivisionByZero);
}

TEST(Polynomial, ExtendedGcdIdentity) {
    std::mt19937 rng(7);
    RationalField q;
    for (int i = 0; i < 50; ++i) {
        PolyQ a = random_poly(rng, 4, 9), b = random_poly(rng, 3, 9);
        auto e = poly::xgcd(q, a, b);
        EXPECT_EQ(e.s * a + e.t * b, e.g);
        EXPECT_TRUE(poly::divides(q, e.g, a));
        EXPECT_TRUE(poly::divides(q, e.g, b));
    }
}

TEST(Polynomial, ToText) {
    EXPECT_EQ(to_text(poly_q({12, 4, -15, -5, 3, 1})), "x^5 + 3*x^4 - 5*x^3 - 15*x^2 + 4*x + 12");
    EXPECT_EQ(to_text(poly_q({-1, 0, 0, 0, 0, -1})), "-x^5 - 1");
    EXPECT_EQ(to_text(PolyQ{}), "0");
}

TEST(Resultant, MatchesSylvesterOracle) {
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        PolyQ a = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
        PolyQ b = random_poly(rng, 1 + static_cast<int>(rng() % 6), 20);
        EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a.coefficients(), b.coefficients()))
            << a << " " << b;
    }
}

TEST(Resultant, Examples) {
    EXPECT_EQ(discriminant(poly_q({-15, 0, 1})), 60);
    EXPECT_EQ(discriminant(poly_q({1, 0, 0, 0, 0, 1})), 3125);
    EXPECT_EQ(discriminant(poly_q({12, 4, -15, -5, 3, 1})), 8294400);
    EXPECT_EQ(resultant(poly_q({-1, 0, 1}), poly_q({-1, 1})), 0);
    EXPECT_THROW(discriminant(poly_q({1, 1})), DomainError);
}

TEST(Resultant, SquarefreeAgreesWithDiscriminant) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        PolyQ f = random_poly(rng, 2 + static_cast<int>(rng() % 4), 3);
        EXPECT_EQ(is_squarefree(f), discriminant(f) != 0) << f;
    }
    EXPECT_FALSE(is_squarefree(poly_q({1, 2, 1})));
}

TEST(Splitting, AgreesWithRootCountOracle) {
    std::mt19937 rng(99);
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (int i = 0; i < 100; ++i) {
            PolyQ g = random_poly(rng, 1 + static_cast<int>(rng() % 4), 12);
            if (reduce_mod(g.leading(), p) == 0) {
                EXPECT_THROW(splits_completely_mod_p(g, p), DomainError);
                continue;
            }
            EXPECT_EQ(splits_completely_mod_p(g, p), oracle::brute_force_splits(small(g), static_cast<std::int64_t>(p)))
                << g << " mod " << p;
            PrimeField k(p);
            std::vector<std::int64_t> roots;
            for (const auto& r : roots_mod_p(reduce_mod_p(g, k), k)) roots.push_back(static_cast<std::int64_t>(r.value()));
            EXPECT_EQ(roots, oracle::brute_force_roots(small(g), static_cast<std::int64_t>(p)));
        }
    }
}

TEST(Splitting, Examples) {
    EXPECT_TRUE(splits_completely_mod_p(cyclotomic(5), 11));
    EXPECT_TRUE(splits_completely_mod_p(poly_q({-15, 0, 1}), 7));
    EXPECT_FALSE(splits_completely_mod_p(poly_q({-2, 0, 1}), 11));
    EXPECT_FALSE(splits_completely_mod_p(poly_q({0, 0, 1}), 11));  // repeated root
    EXPECT_THROW(splits_completely_mod_p(poly_q({1, 0, 7}), 7), DomainError);
    EXPECT_THROW(splits_completely_mod_p(PolyQ({Rational(1), make_rational(1, 7), Rational(1)}), 7), NonIntegralError);
}

TEST(Cyclotomic, QuotientRecursion) {
    EXPECT_EQ(cyclotomic(1), poly_q({-1, 1}));
    EXPECT_EQ(cyclotomic(4), poly_q({1, 0, 1}));
    EXPECT_EQ(cyclotomic(5), poly_q({1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic(6), poly_q({1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), poly_q({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic(16), poly_q({1, 0, 0, 0, 0, 0, 0, 0, 1}));
    for (unsigned n = 1; n <= 30; ++n) {
        PolyQ prod = poly_q({1});
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        std::vector<Integer> xn(n + 1, 0);
        xn[0] = -1;
        xn[n] = 1;
        EXPECT_EQ(prod, poly_q(xn)) << n;
    }
    EXPECT_THROW(cyclotomic(0), DomainError);
}

TEST(PowerClassification, Cases) {
    auto c = integer_power_classification(100);
    EXPECT_TRUE(c.perfect_square);
    EXPECT_FALSE(c.perfect_fifth_power);
    EXPECT_TRUE(c.tenth_power_free);
    c = integer_power_classification(-32);
    EXPECT_FALSE(c.perfect_square);
    EXPECT_TRUE(c.perfect_fifth_power);
    c = integer_power_classification(1024 * 3);
    EXPECT_FALSE(c.tenth_power_free);
    c = integer_power_classification(1);
    EXPECT_TRUE(c.perfect_square && c.perfect_fifth_power && c.tenth_power_free);
    EXPECT_THROW(integer_power_classification(0), DomainError);
}

TEST(RationalRoots, MatchesEvaluation) {
    EXPECT_EQ(rational_roots(poly_q({-1, 0, 0, 0, 0, 0, 1})), (std::vector<Rational>{-1, 1}));
    EXPECT_EQ(rational_roots(poly_q({0, -1, 0, 0, 0, 1})), (std::vector<Rational>{-1, 0, 1}));
    EXPECT_EQ(rational_roots(poly_q({-3, 2})), (std::vector<Rational>{make_rational(3, 2)}));
    EXPECT_TRUE(rational_roots(poly_q({-1, 0, 0, 42, 0, 0, 1})).empty());
    EXPECT_EQ(rational_roots(poly_q({12, 4, -15, -5, 3, 1})), (std::vector<Rational>{-3, -2, -1, 1, 2}));
}
