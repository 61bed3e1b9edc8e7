#pragma once

// Hyperelliptic curves y^2 = f(x) over Q, their points over tower rings and
// their reductions mod p.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tpe/algebra.hpp"
#include "tpe/prime_field.hpp"
#include "tpe/tower.hpp"

namespace tpe {

enum class ModelParity { Odd, Even };

struct HyperellipticCurve {
    PolyQ f;
    int genus = 0;
    ModelParity parity = ModelParity::Odd;
    /// Set when the curve was built with genus 1 (test use only).
    bool low_genus_warning = false;

    bool is_odd() const { return parity == ModelParity::Odd; }
};

/// g = ceil(deg f / 2) - 1. Throws DomainError when f is not squarefree or
/// deg f < 5 (deg f in {3, 4} is accepted with allow_genus_one).
HyperellipticCurve make_curve(const PolyQ& f, bool allow_genus_one = false);

struct AffinePoint {
    TowerElement x;
    TowerElement y;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};
struct InfinityOdd {
    friend bool operator==(const InfinityOdd&, const InfinityOdd&) = default;
};
struct InfinityEvenPlus {
    friend bool operator==(const InfinityEvenPlus&, const InfinityEvenPlus&) = default;
};
struct InfinityEvenMinus {
    friend bool operator==(const InfinityEvenMinus&, const InfinityEvenMinus&) = default;
};

using CurvePoint = std::variant<AffinePoint, InfinityOdd, InfinityEvenPlus, InfinityEvenMinus>;

std::string to_string(const CurvePoint& p);

/// Exact membership: y^2 = f(x) as a tower-ring identity for affine points;
/// infinity points must match the model (even-model points need lc(f) to be
/// a square in Q).
bool on_curve(const CurvePoint& p, const HyperellipticCurve& c);

/// y = 0 for affine points; true for the odd-model point at infinity, false
/// for the two even-model ones.
bool is_weierstrass(const CurvePoint& p, const HyperellipticCurve& c);

/// Sufficient criterion p does not divide 2 lc(f) disc(f), with f integral at
/// p. Throws DomainError for p = 2 or p not prime.
bool has_good_reduction(const HyperellipticCurve& c, std::uint64_t p);

/// sum over x in F_p of (1 + (f(x)/p)), plus the points at infinity: one on
/// odd models, two or zero on even models depending on whether lc(f) is a
/// square mod p. Throws BadReductionError.
std::uint64_t count_points_mod_p(const HyperellipticCurve& c, std::uint64_t p);

struct ReducedAffine {
    FpElt x;
    FpElt y;
    friend bool operator==(const ReducedAffine&, const ReducedAffine&) = default;
    friend auto operator<=>(const ReducedAffine&, const ReducedAffine&) = default;
};

using ReducedPoint = std::variant<ReducedAffine, InfinityOdd, InfinityEvenPlus, InfinityEvenMinus>;

std::string to_string(const ReducedPoint& p);
/// Strict weak order used for sorting and duplicate detection.
bool reduced_less(const ReducedPoint& a, const ReducedPoint& b);

/// True iff the reduced point satisfies y^2 = f(x) mod p.
bool on_reduced_curve(const ReducedPoint& p, const HyperellipticCurve& c, const PrimeField& k);

/// Coordinate-wise reduction at w. Throws NonIntegralError when a coordinate
/// is not w-integral and BadReductionError when the curve is bad at w.p.
ReducedPoint reduce_point(const CurvePoint& p, const HyperellipticCurve& c, const ResidueAssignment& w);

}  // namespace tpe
