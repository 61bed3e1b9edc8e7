#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "tpe/polynomial.hpp"
#include "tpe/rational.hpp"

namespace tpe {

/// Element of F_p. Carries its modulus so that values from different
/// fields can never be mixed silently.
class FpElt {
public:
    FpElt() = default;
    /// `value` is reduced mod `modulus`.
    FpElt(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    FpElt operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }
    FpElt& operator+=(const FpElt& b);
    FpElt& operator-=(const FpElt& b);
    FpElt& operator*=(const FpElt& b);

    friend FpElt operator+(FpElt a, const FpElt& b) { return a += b; }
    friend FpElt operator-(FpElt a, const FpElt& b) { return a -= b; }
    friend FpElt operator*(FpElt a, const FpElt& b) { return a *= b; }
    friend bool operator==(const FpElt&, const FpElt&) = default;
    friend auto operator<=>(const FpElt&, const FpElt&) = default;

    FpElt pow(std::uint64_t e) const;
    FpElt pow(const Integer& e) const;
    /// Throws DivisionByZero on 0.
    FpElt inverse() const;

private:
    void check_same(const FpElt& b) const;

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 1;
};

inline bool is_zero(const FpElt& a) { return a.is_zero(); }
inline FpElt zero_like(const FpElt& a) { return {0, a.modulus()}; }
std::ostream& operator<<(std::ostream& os, const FpElt& a);

/// Legendre symbol via Euler's criterion a^((p-1)/2). Returns -1, 0 or 1.
int legendre_symbol(const FpElt& a);

/// Context object for polynomial algorithms over F_p.
class PrimeField {
public:
    using Element = FpElt;

    /// Throws DomainError unless p is an odd prime below 2^63.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    Element zero() const { return {0, p_}; }
    Element one() const { return {1, p_}; }
    Element from_int(long n) const;
    Element from_rational(const Rational& q) const { return {reduce_mod(q, p_), p_}; }
    Element inv(const Element& a) const { return a.inverse(); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

}  // namespace tpe
