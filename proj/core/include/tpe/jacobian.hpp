#pragma once

// Divisor-class arithmetic on Jacobians of odd-degree models y^2 = f(x),
// in Mumford representation, by Cantor's algorithm.
//
// A class is (u, v) with u monic, deg u <= g, deg v < deg u and
// u | v^2 - f. The identity is (1, 0) and the base point is the unique point
// at infinity.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include <fmt/format.h>

#include "tpe/curve.hpp"
#include "tpe/polynomial.hpp"
#include "tpe/prime_field.hpp"
#include "tpe/tower.hpp"

namespace tpe {

template <class E>
struct MumfordDivisor {
    Poly<E> u;
    Poly<E> v;
    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
};

template <class Field>
class Jacobian {
public:
    using Element = typename Field::Element;
    using P = Poly<Element>;
    using Divisor = MumfordDivisor<Element>;
    using Observer = std::function<void(const Divisor&)>;

    Jacobian(Field k, P f) : k_(std::move(k)), f_(std::move(f)) {
        if (f_.degree() < 3 || f_.degree() % 2 == 0)
            throw DomainError("Cantor arithmetic needs an odd-degree model");
        genus_ = (f_.degree() - 1) / 2;
    }

    const Field& field() const { return k_; }
    const P& f() const { return f_; }
    int genus() const { return genus_; }

    Divisor identity() const { return {poly::constant(k_, k_.one()), P{}}; }

    bool is_identity(const Divisor& d) const { return d.u.degree() == 0; }

    /// [(a, b) - P_inf]. Throws DomainError if (a, b) is not on the curve.
    Divisor point(const Element& a, const Element& b) const {
        if (!(b * b == f_.evaluate(a, k_.zero()))) throw DomainError("point is not on the curve");
        return {poly::linear(k_, a), P({b})};
    }

    bool is_valid(const Divisor& d) const {
        if (d.u.is_zero() || !(d.u.leading() == k_.one())) return false;
        if (d.u.degree() > genus_ || d.v.degree() >= d.u.degree()) return false;
        return poly::divides(k_, d.u, d.v * d.v - f_);
    }

    Divisor negate(const Divisor& d) const { return {d.u, -d.v}; }

    Divisor add(const Divisor& a, const Divisor& b) const {
        auto e = poly::xgcd(k_, a.u, b.u);  // e.s a.u + e.t b.u = e.g
        auto c = poly::xgcd(k_, e.g, a.v + b.v);
        const P& d = c.g;
        P s1 = c.s * e.s;
        P s2 = c.s * e.t;
        const P& s3 = c.t;

        P u = poly::exact_div(k_, a.u * b.u, d * d);
        P v = poly::exact_div(k_, s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_), d);
        v = poly::rem(k_, v, u);
        while (u.degree() > genus_) {
            u = poly::exact_div(k_, f_ - v * v, u);
            v = poly::rem(k_, -v, u);
        }
        u = poly::monic(k_, u);
        v = poly::rem(k_, v, u);
        return {std::move(u), std::move(v)};
    }

    Divisor sub(const Divisor& a, const Divisor& b) const { return add(a, negate(b)); }

    /// Left-to-right double-and-add; n may be negative. The observer sees
    /// every intermediate result.
    Divisor scalar_mul(const Integer& n, const Divisor& d, const Observer& observe = {}) const {
        if (sgn(n) < 0) return scalar_mul(Integer(-n), negate(d), observe);
        Divisor acc = identity();
        for (auto bit = mpz_sizeinbase(n.get_mpz_t(), 2); sgn(n) != 0 && bit-- > 0;) {
            acc = add(acc, acc);
            if (observe) observe(acc);
            if (mpz_tstbit(n.get_mpz_t(), bit)) {
                acc = add(acc, d);
                if (observe) observe(acc);
            }
        }
        return acc;
    }

private:
    Field k_;
    P f_;
    int genus_ = 0;
};

using FpJacobian = Jacobian<PrimeField>;
using TowerJacobian = Jacobian<TowerField>;
using FpDivisor = FpJacobian::Divisor;
using TowerDivisor = TowerJacobian::Divisor;

/// Jacobian of the reduction of an odd-model curve mod p.
FpJacobian reduced_jacobian(const HyperellipticCurve& c, std::uint64_t p);

/// Jacobian over the tower ring (exact; inversion may hit zero divisors).
TowerJacobian tower_jacobian(const HyperellipticCurve& c, const TowerPtr& tower);

/// iota(P) = P - P_inf: (1, 0) for P_inf, (x - a, b) for (a, b). Throws
/// DomainError for even-model points or points off the curve.
TowerDivisor embed_point(const TowerJacobian& jac, const CurvePoint& p);
FpDivisor embed_point(const FpJacobian& jac, const ReducedPoint& p);

/// Coefficient-wise reduction at a place.
FpDivisor reduce_divisor(const TowerDivisor& d, const ResidueAssignment& w);

/// ceil((sqrt(p) + 1)^(2g)), an upper bound for #J(F_p).
std::uint64_t hasse_weil_bound(std::uint64_t p, int genus);

/// Smallest n >= 1 with n D = 0, by incremental addition up to the
/// Hasse-Weil bound. Throws Error if the bound is exceeded.
std::uint64_t order_of_reduced(const FpJacobian& jac, const FpDivisor& d);

struct CertifiedTorsion {
    std::uint64_t order = 0;
};
struct NotTorsion {
    std::uint64_t reduced_order = 0;
};
struct Undecidable {
    std::string reason;
};
using TorsionVerdict = std::variant<CertifiedTorsion, NotTorsion, Undecidable>;

std::string to_string(const TorsionVerdict& v);

struct TorsionOptions {
    /// Exact arithmetic gives up (Undecidable) once any coefficient of an
    /// intermediate divisor exceeds this many decimal digits.
    std::size_t height_ceiling_digits = 1'000'000;
};

/// Decides whether iota(P) is torsion in J(F) using injectivity of reduction
/// on torsion at an odd, completely split prime of good reduction: with
/// n = ord(reduction of iota(P)), iota(P) is torsion iff n iota(P) = 0
/// exactly, and then its order is n.
///
/// Throws DomainError/BadReductionError on precondition violations (p not an
/// odd prime, w not a place of the tower over p, bad reduction, point off the
/// curve or not w-integral). Unsupported shapes (even models, towers with
/// two or more generators) and zero divisors yield Undecidable.
TorsionVerdict torsion_decide(const CurvePoint& p, const HyperellipticCurve& c, const TowerPtr& tower,
                              const ResidueAssignment& w, const TorsionOptions& options = {});

}  // namespace tpe
