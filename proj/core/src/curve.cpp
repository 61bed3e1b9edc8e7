#include "tpe/curve.hpp"

#include <fmt/format.h>

#include "tpe/detail/overloaded.hpp"

namespace tpe {

namespace {

using detail::overloaded;

bool leading_is_rational_square(const PolyQ& f) {
    const Rational& a = f.leading();
    return sgn(a) > 0 && mpz_perfect_square_p(a.get_num_mpz_t()) && mpz_perfect_square_p(a.get_den_mpz_t());
}

}  // namespace

HyperellipticCurve make_curve(const PolyQ& f, bool allow_genus_one) {
    const int n = f.degree();
    if (n < 5 && !(allow_genus_one && n >= 3))
        throw DomainError(fmt::format("hyperelliptic model needs deg f >= 5, got {}", n));
    if (!is_squarefree(f)) throw DomainError("f is not squarefree");
    HyperellipticCurve c;
    c.f = f;
    c.genus = (n + 1) / 2 - 1;
    c.parity = n % 2 ? ModelParity::Odd : ModelParity::Even;
    c.low_genus_warning = c.genus < 2;
    return c;
}

std::string to_string(const CurvePoint& p) {
    return std::visit(overloaded{
                          [](const AffinePoint& a) { return fmt::format("({}, {})", to_string(a.x), to_string(a.y)); },
                          [](const InfinityOdd&) { return std::string("P_inf"); },
                          [](const InfinityEvenPlus&) { return std::string("P_+inf"); },
                          [](const InfinityEvenMinus&) { return std::string("P_-inf"); },
                      },
                      p);
}

bool on_curve(const CurvePoint& p, const HyperellipticCurve& c) {
    return std::visit(overloaded{
                          [&](const AffinePoint& a) {
                              if (!same_tower(a.x.tower(), a.y.tower())) return false;
                              TowerElement fx = lift(c.f, a.x.tower()).evaluate(a.x, zero_like(a.x));
                              return a.y * a.y == fx;
                          },
                          [&](const InfinityOdd&) { return c.is_odd(); },
                          [&](const InfinityEvenPlus&) { return !c.is_odd() && leading_is_rational_square(c.f); },
                          [&](const InfinityEvenMinus&) { return !c.is_odd() && leading_is_rational_square(c.f); },
                      },
                      p);
}

bool is_weierstrass(const CurvePoint& p, const HyperellipticCurve& c) {
    (void)c;
    return std::visit(overloaded{
                          [](const AffinePoint& a) { return a.y.is_zero(); },
                          [](const InfinityOdd&) { return true; },
                          [](const InfinityEvenPlus&) { return false; },
                          [](const InfinityEvenMinus&) { return false; },
                      },
                      p);
}

bool has_good_reduction(const HyperellipticCurve& c, std::uint64_t p) {
    if (p == 2) throw DomainError("good reduction is only decided for odd primes");
    PrimeField k(p);
    for (const auto& coef : c.f.coefficients())
        if (!is_p_integral(coef, p)) return false;
    if (k.from_rational(c.f.leading()).is_zero()) return false;
    Rational disc = discriminant(c.f);
    return is_p_integral(disc, p) && !k.from_rational(disc).is_zero();
}

std::uint64_t count_points_mod_p(const HyperellipticCurve& c, std::uint64_t p) {
    if (!has_good_reduction(c, p)) throw BadReductionError(fmt::format("curve has bad reduction at {}", p));
    PrimeField k(p);
    PolyFp f = reduce_mod_p(c.f, k);
    std::uint64_t count = 0;
    for (std::uint64_t xv = 0; xv < p; ++xv) count += 1 + legendre_symbol(f.evaluate(FpElt{xv, p}, k.zero()));
    if (c.is_odd())
        count += 1;
    else if (legendre_symbol(f.leading()) == 1)
        count += 2;
    return count;
}

std::string to_string(const ReducedPoint& p) {
    return std::visit(overloaded{
                          [](const ReducedAffine& a) { return fmt::format("({}, {})", a.x.value(), a.y.value()); },
                          [](const InfinityOdd&) { return std::string("P_inf"); },
                          [](const InfinityEvenPlus&) { return std::string("P_+inf"); },
                          [](const InfinityEvenMinus&) { return std::string("P_-inf"); },
                      },
                      p);
}

bool reduced_less(const ReducedPoint& a, const ReducedPoint& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* pa = std::get_if<ReducedAffine>(&a)) return *pa < std::get<ReducedAffine>(b);
    return false;
}

bool on_reduced_curve(const ReducedPoint& p, const HyperellipticCurve& c, const PrimeField& k) {
    PolyFp f = reduce_mod_p(c.f, k);
    return std::visit(overloaded{
                          [&](const ReducedAffine& a) { return a.y * a.y == f.evaluate(a.x, k.zero()); },
                          [&](const InfinityOdd&) { return c.is_odd(); },
                          [&](const InfinityEvenPlus&) { return !c.is_odd() && legendre_symbol(f.leading()) == 1; },
                          [&](const InfinityEvenMinus&) { return !c.is_odd() && legendre_symbol(f.leading()) == 1; },
                      },
                      p);
}

ReducedPoint reduce_point(const CurvePoint& p, const HyperellipticCurve& c, const ResidueAssignment& w) {
    if (!has_good_reduction(c, w.p)) throw BadReductionError(fmt::format("curve has bad reduction at {}", w.p));
    ReducedPoint out = std::visit(overloaded{
                                      [&](const AffinePoint& a) -> ReducedPoint {
                                          return ReducedAffine{reduce_element(a.x, w), reduce_element(a.y, w)};
                                      },
                                      [](const InfinityOdd& i) -> ReducedPoint { return i; },
                                      [](const InfinityEvenPlus& i) -> ReducedPoint { return i; },
                                      [](const InfinityEvenMinus& i) -> ReducedPoint { return i; },
                                  },
                                  p);
    if (!on_reduced_curve(out, c, PrimeField(w.p)))
        throw DomainError(fmt::format("reduction {} of {} is not on the reduced curve", to_string(out), to_string(p)));
    return out;
}

}  // namespace tpe
