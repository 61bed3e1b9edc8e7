#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tpe {

using Integer = mpz_class;
/// Always canonical: gcd(|num|, den) = 1, den >= 1. gmpxx keeps results of
/// arithmetic canonical; values built from a raw num/den pair go through
/// make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "123", "-7", "3/4". Throws InputError on anything else.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True iff p does not divide the denominator.
bool is_p_integral(const Rational& q, std::uint64_t p);

/// Image of q in Z/pZ. Throws NonIntegralError if p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& n, std::uint64_t p);

bool fits_u64(const Integer& n);
bool fits_i64(const Integer& n);
std::uint64_t to_u64(const Integer& n);
std::int64_t to_i64(const Integer& n);

/// Exact k-th root if n is a perfect k-th power (k >= 1). Negative n is
/// accepted for odd k.
std::optional<Integer> exact_root(const Integer& n, unsigned long k);

/// Deterministic Miller-Rabin; correct for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Same test for an arbitrary integer; throws DomainError beyond 64 bits.
bool is_prime(const Integer& n);

/// Number of decimal digits of the larger of |num| and den.
std::size_t height_digits(const Rational& q);

}  // namespace tpe
