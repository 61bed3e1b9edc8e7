#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tpe/curve.hpp"

using namespace tpe;

namespace {

HyperellipticCurve x5_plus(long d) { return make_curve(poly_q({d, 0, 0, 0, 0, 1})); }

const PolyQ kQuintic = poly_q({12, 4, -15, -5, 3, 1});  // (x^2 - 1)(x^2 - 4)(x + 3)

}  // namespace

TEST(Curve, Construction) {
    auto c = x5_plus(18);
    EXPECT_EQ(c.genus, 2);
    EXPECT_TRUE(c.is_odd());
    auto e = make_curve(poly_q({-1, 0, 0, 42, 0, 0, 1}));
    EXPECT_EQ(e.genus, 2);
    EXPECT_FALSE(e.is_odd());
    EXPECT_THROW(make_curve(poly_q({1, 0, 0, 1})), DomainError);
    EXPECT_THROW(make_curve(poly_q({0, 0, 1, 0, 0, 1})), DomainError);  // x^2 | f
    auto ell = make_curve(poly_q({1, 0, 0, 1}), true);
    EXPECT_TRUE(ell.low_genus_warning);
}

TEST(Curve, Membership) {
    auto c = make_curve(kQuintic);
    TowerPtr t = TowerSpec::make({{"s", poly_q({-15, 0, 1})}});
    auto s = TowerElement::generator(t, "s");
    auto three = TowerElement(t, Rational(3));
    EXPECT_TRUE(on_curve(AffinePoint{three, TowerElement(t, Rational(4)) * s}, c));
    EXPECT_FALSE(on_curve(AffinePoint{three, TowerElement(t, Rational(3)) * s}, c));
    EXPECT_TRUE(on_curve(InfinityOdd{}, c));
    EXPECT_FALSE(on_curve(InfinityEvenPlus{}, c));
    auto e = make_curve(poly_q({-1, 0, 0, 42, 0, 0, 1}));
    EXPECT_TRUE(on_curve(InfinityEvenMinus{}, e));
    EXPECT_FALSE(on_curve(InfinityOdd{}, e));
    EXPECT_FALSE(on_curve(InfinityEvenPlus{}, make_curve(poly_q({-1, 0, 0, 0, 0, 0, 2}))));
}

TEST(Curve, WeierstrassPoints) {
    auto c = make_curve(kQuintic);
    TowerPtr q = TowerSpec::rationals();
    EXPECT_TRUE(is_weierstrass(AffinePoint{{q, Rational(-3)}, {q, Rational(0)}}, c));
    EXPECT_TRUE(is_weierstrass(InfinityOdd{}, c));
    EXPECT_FALSE(is_weierstrass(InfinityEvenPlus{}, make_curve(poly_q({-1, 0, 0, 0, 0, 0, 1}))));
}

TEST(Curve, GoodReduction) {
    EXPECT_TRUE(has_good_reduction(make_curve(kQuintic), 7));
    EXPECT_FALSE(has_good_reduction(make_curve(kQuintic), 5));  // 5 | disc
    EXPECT_FALSE(has_good_reduction(x5_plus(22), 11));
    EXPECT_THROW(has_good_reduction(x5_plus(7), 2), DomainError);
    EXPECT_THROW(count_points_mod_p(x5_plus(22), 11), BadReductionError);
}

TEST(Curve, CountsForXFivePlusD) {
    const std::map<std::uint64_t, std::uint64_t> expected{{1, 8}, {2, 21}, {3, 13}, {4, 23}, {5, 13}, {6, 11},
                                                          {7, 1}, {8, 11}, {9, 3},  {10, 16}};
    for (long d = -30; d <= 30; ++d) {
        if (d % 11 == 0) continue;
        const auto r = static_cast<std::uint64_t>(((d % 11) + 11) % 11);
        EXPECT_EQ(count_points_mod_p(x5_plus(d), 11), expected.at(r)) << d;
    }
}

TEST(Curve, CountsForOtherFamilies) {
    EXPECT_EQ(count_points_mod_p(make_curve(kQuintic), 7), 8u);
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        std::vector<Integer> c(p + 1, 0);
        c[1] = -1;
        c[p] = 1;
        EXPECT_EQ(count_points_mod_p(make_curve(poly_q(c)), p), p + 1);
    }
    for (long d : {0, 42, 70, 98})
        EXPECT_EQ(count_points_mod_p(make_curve(poly_q({-1, 0, 0, d, 0, 0, 1})), 7), 8u);
}

// Property: Legendre-sum count agrees with enumeration of all (x, y).
TEST(Curve, CountMatchesBruteForceOracle) {
    std::mt19937 rng(31337);
    const std::vector<std::int64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int tested = 0;
    while (tested < 80) {
        const int deg = 5 + static_cast<int>(rng() % 4);
        std::vector<std::int64_t> f(static_cast<std::size_t>(deg) + 1);
        for (auto& c : f) c = static_cast<std::int64_t>(rng() % 41) - 20;
        if (f.back() == 0) f.back() = 1;
        std::vector<Integer> coeffs;
        for (auto c : f) coeffs.emplace_back(static_cast<long>(c));
        PolyQ poly = poly_q(coeffs);
        if (!is_squarefree(poly)) continue;
        auto curve = make_curve(poly);
        const std::int64_t p = primes[rng() % primes.size()];
        if (!has_good_reduction(curve, static_cast<std::uint64_t>(p))) continue;
        EXPECT_EQ(count_points_mod_p(curve, static_cast<std::uint64_t>(p)), oracle::brute_force_count(f, p))
            << poly << " mod " << p;
        ++tested;
    }
}

TEST(Curve, ReducePoint) {
    auto c = make_curve(kQuintic);
    TowerPtr t = TowerSpec::make({{"s", poly_q({-15, 0, 1})}});
    auto s = TowerElement::generator(t, "s");
    CurvePoint p = AffinePoint{TowerElement(t, Rational(3)), TowerElement(t, Rational(4)) * s};
    auto places = split_places(*t, 7);
    auto r0 = std::get<ReducedAffine>(reduce_point(p, c, places[0]));
    auto r1 = std::get<ReducedAffine>(reduce_point(p, c, places[1]));
    EXPECT_EQ(r0.x.value(), 3u);
    EXPECT_EQ(r0.y.value(), 4u);
    EXPECT_EQ(r1.y.value(), 3u);
    EXPECT_EQ(to_string(reduce_point(InfinityOdd{}, c, places[0])), "P_inf");
}
