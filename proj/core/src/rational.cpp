#include "tpe/rational.hpp"

#include <array>
#include <cctype>

#include <fmt/format.h>

#include "tpe/errors.hpp"

namespace tpe {

namespace {

bool valid_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text) {
    if (!valid_integer_literal(text))
        throw InputError(fmt::format("not an integer: '{}'", text));
    std::string s(text.front() == '+' ? text.substr(1) : text);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw InputError(fmt::format("signed denominator in '{}'", text));
    Integer den = parse_integer(den_text);
    if (den == 0) throw InputError(fmt::format("zero denominator in '{}'", text));
    return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(10); }
std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_p_integral(const Rational& q, std::uint64_t p) {
    return mpz_divisible_ui_p(q.get_den_mpz_t(), p) == 0;
}

std::uint64_t reduce_mod(const Integer& n, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(n.get_mpz_t(), p);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
    if (!is_p_integral(q, p))
        throw NonIntegralError(fmt::format("{} is not integral at {}", to_string(q), p));
    std::uint64_t num = reduce_mod(q.get_num(), p);
    std::uint64_t den = reduce_mod(q.get_den(), p);
    // p prime and den a unit mod p: den^(p-2) is its inverse.
    return mulmod(num, powmod(den, p - 2, p), p);
}

bool fits_u64(const Integer& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

bool fits_i64(const Integer& n) {
    static const Integer lo("-9223372036854775808", 10);
    static const Integer hi("9223372036854775807", 10);
    return n >= lo && n <= hi;
}

std::uint64_t to_u64(const Integer& n) {
    if (!fits_u64(n)) throw DomainError(fmt::format("{} does not fit in 64 bits", to_string(n)));
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, n.get_mpz_t());
    return out;
}

std::int64_t to_i64(const Integer& n) {
    if (!fits_i64(n)) throw DomainError(fmt::format("{} does not fit in 64 bits", to_string(n)));
    Integer a = abs(n);
    std::uint64_t mag = 0;
    mpz_export(&mag, nullptr, -1, sizeof mag, 0, 0, a.get_mpz_t());
    return sgn(n) < 0 ? static_cast<std::int64_t>(0 - mag) : static_cast<std::int64_t>(mag);
}

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
    if (k == 0) throw DomainError("0-th root");
    if (sgn(n) < 0 && k % 2 == 0) return std::nullopt;
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : witnesses) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Integer& n) {
    if (sgn(n) <= 0) return false;
    if (!fits_u64(n)) throw DomainError("primality test limited to 64-bit inputs");
    return is_prime_u64(to_u64(n));
}

std::size_t height_digits(const Rational& q) {
    auto num = mpz_sizeinbase(q.get_num_mpz_t(), 10);
    auto den = mpz_sizeinbase(q.get_den_mpz_t(), 10);
    return num > den ? num : den;
}

}  // namespace tpe
