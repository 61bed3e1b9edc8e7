#pragma once

// Dense univariate polynomials over an arbitrary coefficient ring.
//
// Ring operations only need the element type's operators. Anything that
// divides (divmod, gcd, powmod, ...) takes a field context `k` providing
// zero(), one(), from_int(long) and inv(e); see PrimeField, RationalField
// and TowerField.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "tpe/errors.hpp"
#include "tpe/rational.hpp"

namespace tpe {

inline Rational zero_like(const Rational&) { return Rational(0); }

namespace detail {
// Poly has a member is_zero() that would hide the free overloads.
template <class E>
bool coeff_is_zero(const E& e) {
    return is_zero(e);
}
}  // namespace detail

/// Coefficients are stored low to high; the zero polynomial is empty and the
/// leading stored coefficient is never zero.
template <class E>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<E>& coefficients() const { return c_; }
    const E& operator[](std::size_t i) const { return c_[i]; }
    const E& leading() const { return c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly& operator+=(const Poly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), zero_like(b.c_.back()));
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), zero_like(b.c_.back()));
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<E> out(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    /// Multiply every coefficient by the scalar s.
    friend Poly operator*(const E& s, const Poly& a) {
        std::vector<E> out;
        out.reserve(a.c_.size());
        for (const auto& x : a.c_) out.push_back(s * x);
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    /// Horner evaluation; `zero` fixes the result type's context.
    E evaluate(const E& at, const E& zero) const {
        E acc = zero;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<E> c_;
};

template <class E>
std::ostream& operator<<(std::ostream& os, const Poly<E>& a) {
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
    return os << ']';
}

template <class E>
struct DivMod {
    Poly<E> quotient;
    Poly<E> remainder;
};

/// s*a + t*b = g with g monic (or zero when a = b = 0).
template <class E>
struct ExtendedGcd {
    Poly<E> g;
    Poly<E> s;
    Poly<E> t;
};

namespace poly {

template <class Field>
Poly<typename Field::Element> constant(const Field& k, const typename Field::Element& c) {
    (void)k;
    return Poly<typename Field::Element>({c});
}

template <class Field>
Poly<typename Field::Element> monomial(const Field& k, const typename Field::Element& c, std::size_t degree) {
    std::vector<typename Field::Element> v(degree + 1, k.zero());
    v[degree] = c;
    return Poly<typename Field::Element>(std::move(v));
}

/// x - a
template <class Field>
Poly<typename Field::Element> linear(const Field& k, const typename Field::Element& a) {
    return Poly<typename Field::Element>({-a, k.one()});
}

template <class Field>
Poly<typename Field::Element> x(const Field& k) {
    return monomial(k, k.one(), 1);
}

template <class Field>
DivMod<typename Field::Element> divmod(const Field& k, const Poly<typename Field::Element>& a,
                                       const Poly<typename Field::Element>& b) {
    using E = typename Field::Element;
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<E>{}, a};
    E lead_inv = k.inv(b.leading());
    std::vector<E> rem = a.coefficients();
    std::vector<E> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), k.zero());
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (is_zero(rem[i])) continue;
        E q = rem[i] * lead_inv;
        quo[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b[j];
    }
    rem.resize(db, k.zero());
    return {Poly<E>(std::move(quo)), Poly<E>(std::move(rem))};
}

template <class Field>
Poly<typename Field::Element> rem(const Field& k, const Poly<typename Field::Element>& a,
                                  const Poly<typename Field::Element>& b) {
    return divmod(k, a, b).remainder;
}

/// a / b, which must be exact.
template <class Field>
Poly<typename Field::Element> exact_div(const Field& k, const Poly<typename Field::Element>& a,
                                        const Poly<typename Field::Element>& b) {
    auto qr = divmod(k, a, b);
    if (!qr.remainder.is_zero()) throw DomainError("polynomial division is not exact");
    return std::move(qr.quotient);
}

template <class Field>
bool divides(const Field& k, const Poly<typename Field::Element>& d, const Poly<typename Field::Element>& a) {
    return divmod(k, a, d).remainder.is_zero();
}

template <class Field>
Poly<typename Field::Element> monic(const Field& k, const Poly<typename Field::Element>& a) {
    if (a.is_zero()) return a;
    return k.inv(a.leading()) * a;
}

template <class Field>
Poly<typename Field::Element> derivative(const Field& k, const Poly<typename Field::Element>& a) {
    using E = typename Field::Element;
    if (a.degree() < 1) return {};
    std::vector<E> out;
    out.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(k.from_int(static_cast<long>(i)) * a[i]);
    return Poly<E>(std::move(out));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class Field>
Poly<typename Field::Element> gcd(const Field& k, Poly<typename Field::Element> a, Poly<typename Field::Element> b) {
    while (!b.is_zero()) {
        auto r = rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, a);
}

template <class Field>
ExtendedGcd<typename Field::Element> xgcd(const Field& k, const Poly<typename Field::Element>& a,
                                          const Poly<typename Field::Element>& b) {
    using P = Poly<typename Field::Element>;
    P r0 = a, r1 = b;
    P s0 = constant(k, k.one()), s1;
    P t0, t1 = constant(k, k.one());
    while (!r1.is_zero()) {
        auto qr = divmod(k, r0, r1);
        P s2 = s0 - qr.quotient * s1;
        P t2 = t0 - qr.quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {P{}, P{}, P{}};
    auto c = k.inv(r0.leading());
    return {c * r0, c * s0, c * t0};
}

template <class Field>
Poly<typename Field::Element> pow(const Field& k, Poly<typename Field::Element> base, std::uint64_t e) {
    auto result = constant(k, k.one());
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

/// base^e mod m by square-and-multiply.
template <class Field>
Poly<typename Field::Element> powmod(const Field& k, const Poly<typename Field::Element>& base, const Integer& e,
                                     const Poly<typename Field::Element>& m) {
    if (sgn(e) < 0) throw DomainError("negative exponent in powmod");
    auto result = rem(k, constant(k, k.one()), m);
    auto b = rem(k, base, m);
    for (auto bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
        result = rem(k, result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), bit)) result = rem(k, result * b, m);
    }
    return result;
}

/// Coefficient-wise image under a ring map.
template <class Out, class In, class Fn>
Poly<Out> map(const Poly<In>& a, Fn&& fn) {
    std::vector<Out> out;
    out.reserve(a.size());
    for (const auto& c : a.coefficients()) out.push_back(fn(c));
    return Poly<Out>(std::move(out));
}

}  // namespace poly

}  // namespace tpe
