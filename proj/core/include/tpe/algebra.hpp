#pragma once

// Number-theoretic predicates on polynomials over Q and F_p.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tpe/polynomial.hpp"
#include "tpe/prime_field.hpp"
#include "tpe/rational.hpp"

namespace tpe {

class RationalField {
public:
    using Element = Rational;
    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long n) const { return n; }
    Element from_rational(const Rational& q) const { return q; }
    Element inv(const Element& a) const {
        if (is_zero(a)) throw DivisionByZero("inverse of 0 in Q");
        return 1 / a;
    }
};

using PolyQ = Poly<Rational>;
using PolyFp = Poly<FpElt>;

/// Builds a polynomial from integer coefficients, low to high.
PolyQ poly_q(std::initializer_list<long> coeffs);
PolyQ poly_q(const std::vector<Integer>& coeffs);

PolyQ derivative(const PolyQ& f);
PolyQ gcd(const PolyQ& a, const PolyQ& b);
DivMod<Rational> divmod(const PolyQ& a, const PolyQ& b);
Rational evaluate(const PolyQ& f, const Rational& at);

/// res(a, b) by the Euclidean remainder sequence over Q.
Rational resultant(const PolyQ& a, const PolyQ& b);

/// (-1)^(n(n-1)/2) res(f, f') / lc(f). Throws DomainError when deg f < 2.
Rational discriminant(const PolyQ& f);

bool is_squarefree(const PolyQ& f);

/// Image in F_p[x]. Throws NonIntegralError on a coefficient with p | den.
PolyFp reduce_mod_p(const PolyQ& f, const PrimeField& field);

/// True iff the reduction of g is a product of deg g distinct linear
/// factors: x^p = x mod g and gcd(g, g') = 1. Throws DomainError when p
/// divides lc(g) and NonIntegralError on non-integral coefficients.
bool splits_completely_mod_p(const PolyQ& g, std::uint64_t p);
bool splits_completely(const PolyFp& g, const PrimeField& field);

/// All roots in [0, p) by enumeration, ascending.
std::vector<FpElt> roots_mod_p(const PolyFp& g, const PrimeField& field);

struct PowerClassification {
    bool tenth_power_free = false;
    bool perfect_square = false;
    bool perfect_fifth_power = false;
    friend bool operator==(const PowerClassification&, const PowerClassification&) = default;
};

/// Throws DomainError for d = 0.
PowerClassification integer_power_classification(const Integer& d);

/// Phi_n via the quotient recursion, memoized per process.
PolyQ cyclotomic(unsigned n);

/// Distinct rational roots, ascending. Candidates come from divisors of the
/// cleared constant and leading coefficients.
std::vector<Rational> rational_roots(const PolyQ& h);

/// Human-readable form in x, highest degree first, e.g. "x^5 - 3*x + 1/2".
std::string to_text(const PolyQ& f, std::string_view var = "x");

/// Positive divisors of |n| by trial division (n != 0).
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace tpe
