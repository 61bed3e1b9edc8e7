#include "tpe/prime_field.hpp"

#include <fmt/format.h>

#include "tpe/errors.hpp"

namespace tpe {

void FpElt::check_same(const FpElt& b) const {
    if (modulus_ != b.modulus_)
        throw DomainError(fmt::format("mixing F_{} and F_{}", modulus_, b.modulus_));
}

FpElt& FpElt::operator+=(const FpElt& b) {
    check_same(b);
    std::uint64_t s = value_ + b.value_;
    if (s >= modulus_ || s < value_) s -= modulus_;
    value_ = s;
    return *this;
}

FpElt& FpElt::operator-=(const FpElt& b) {
    check_same(b);
    value_ = value_ >= b.value_ ? value_ - b.value_ : value_ + (modulus_ - b.value_);
    return *this;
}

FpElt& FpElt::operator*=(const FpElt& b) {
    check_same(b);
    value_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * b.value_ % modulus_);
    return *this;
}

FpElt FpElt::pow(std::uint64_t e) const {
    FpElt r{1, modulus_}, b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

FpElt FpElt::pow(const Integer& e) const {
    if (sgn(e) < 0) return inverse().pow(Integer(-e));
    if (fits_u64(e)) return pow(to_u64(e));
    FpElt r{1, modulus_}, b = *this;
    for (auto bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
        r *= r;
        if (mpz_tstbit(e.get_mpz_t(), bit)) r *= b;
    }
    return r;
}

FpElt FpElt::inverse() const {
    if (value_ == 0) throw DivisionByZero(fmt::format("inverse of 0 in F_{}", modulus_));
    return pow(modulus_ - 2);
}

std::ostream& operator<<(std::ostream& os, const FpElt& a) { return os << a.value(); }

int legendre_symbol(const FpElt& a) {
    if (a.is_zero()) return 0;
    return a.pow((a.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p == 2 || p >= (std::uint64_t{1} << 63) || !is_prime_u64(p))
        throw DomainError(fmt::format("{} is not an odd prime below 2^63", p));
}

PrimeField::Element PrimeField::from_int(long n) const {
    auto m = static_cast<long long>(p_);
    long long r = static_cast<long long>(n) % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r), p_};
}

}  // namespace tpe
