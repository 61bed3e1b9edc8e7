#pragma once

// Number fields presented as Q[t_1, ..., t_k] / (m_1(t_1), ..., m_k(t_k))
// with monic rational relations, and their reductions at completely split
// places.
//
// The ring need not be a field (a relation may be reducible, or two
// relations may generate overlapping fields). Identities proved in the ring
// hold in every quotient field, so verification stays sound; only inversion
// can fail, and it reports the zero divisor it hits.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tpe/algebra.hpp"
#include "tpe/prime_field.hpp"
#include "tpe/rational.hpp"

namespace tpe {

struct Generator {
    std::string name;
    PolyQ relation;  // monic, degree >= 1
};

class TowerSpec;
using TowerPtr = std::shared_ptr<const TowerSpec>;

class TowerSpec {
public:
    /// Throws InputError when a relation is not monic of degree >= 1, or a
    /// name is not an identifier or is repeated.
    explicit TowerSpec(std::vector<Generator> generators);

    static TowerPtr make(std::vector<Generator> generators);
    /// The trivial tower, k = 0, i.e. Q itself.
    static TowerPtr rationals();

    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(std::size_t i) const { return gens_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Product of the relation degrees; dimension over Q.
    std::size_t dimension() const { return dim_; }
    std::size_t degree(std::size_t i) const { return static_cast<std::size_t>(gens_[i].relation.degree()); }
    std::size_t stride(std::size_t i) const { return strides_[i]; }

    /// Exponent vector of a dense coefficient index.
    const std::vector<std::uint32_t>& exponents(std::size_t index) const { return exps_[index]; }
    std::size_t index(const std::vector<std::uint32_t>& exponents) const;

    /// t_i^n reduced by m_i, as coefficients of 1, t_i, ..., t_i^(d_i - 1).
    /// Valid for n <= 2 (d_i - 1).
    const std::vector<Rational>& reduced_power(std::size_t i, std::size_t n) const { return powers_[i][n]; }

    /// Describes why the tower is not a well-formed product of separable
    /// algebras (a non-squarefree relation), or nullopt when it is.
    std::optional<std::string> well_formedness_problem() const;

    friend bool operator==(const TowerSpec& a, const TowerSpec& b);

private:
    std::vector<Generator> gens_;
    std::size_t dim_ = 1;
    std::vector<std::size_t> strides_;
    std::vector<std::vector<std::uint32_t>> exps_;
    std::vector<std::vector<std::vector<Rational>>> powers_;
};

bool same_tower(const TowerPtr& a, const TowerPtr& b);

class TowerElement {
public:
    TowerElement() = default;
    TowerElement(TowerPtr tower, const Rational& constant);
    TowerElement(TowerPtr tower, std::vector<Rational> dense_coefficients);

    static TowerElement generator(const TowerPtr& tower, std::size_t i);
    static TowerElement generator(const TowerPtr& tower, std::string_view name);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const;

    /// The constant coefficient if every other coefficient vanishes.
    std::optional<Rational> as_rational() const;

    /// Exact inverse of rational elements in any tower, and of any element
    /// when there is at most one generator. Throws DivisionByZero on 0,
    /// ZeroDivisorError when the representative shares a factor with the
    /// relation, DomainError for other elements when k >= 2.
    TowerElement inverse() const;

    TowerElement pow(std::uint64_t e) const;

    TowerElement operator-() const;
    TowerElement& operator+=(const TowerElement& b);
    TowerElement& operator-=(const TowerElement& b);
    TowerElement& operator*=(const TowerElement& b);
    friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
    friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    friend bool operator==(const TowerElement& a, const TowerElement& b);

    /// Largest decimal size among numerators and denominators.
    std::size_t height_digits() const;

private:
    void check_same(const TowerElement& b) const;

    TowerPtr tower_;
    std::vector<Rational> c_;
};

inline bool is_zero(const TowerElement& a) { return a.is_zero(); }
inline TowerElement zero_like(const TowerElement& a) { return {a.tower(), Rational(0)}; }

/// Canonical text form, e.g. "1/2 - 3*s", "-z^2*u". Round-trips through
/// parse_element.
std::string to_string(const TowerElement& a);
std::ostream& operator<<(std::ostream& os, const TowerElement& a);

/// Parses +, -, *, /, ^ (non-negative integer exponent), parentheses,
/// integer literals and generator names. Throws InputError.
TowerElement parse_element(const TowerPtr& tower, std::string_view text);

/// A place over p: one root of each relation mod p.
struct ResidueAssignment {
    std::uint64_t p = 0;
    std::vector<FpElt> residues;  // one per generator, same order as the tower
    friend bool operator==(const ResidueAssignment&, const ResidueAssignment&) = default;
};

/// All places of the tower over p, ordered lexicographically by residues so
/// the first one is canonical. Empty iff some relation does not split
/// completely mod p. Throws DomainError for p = 2 or p dividing a relation
/// discriminant, NonIntegralError for relations not integral at p.
std::vector<ResidueAssignment> split_places(const TowerSpec& tower, std::uint64_t p);

/// Throws DomainError unless w is a root assignment for this tower.
void check_assignment(const TowerSpec& tower, const ResidueAssignment& w);

/// Image in F_p. Ring homomorphism; throws NonIntegralError when a
/// coefficient denominator is divisible by p.
FpElt reduce_element(const TowerElement& a, const ResidueAssignment& w);

/// Field context over a tower, for polynomial and Jacobian algorithms.
class TowerField {
public:
    using Element = TowerElement;
    explicit TowerField(TowerPtr tower) : tower_(std::move(tower)) {}

    const TowerPtr& tower() const { return tower_; }
    Element zero() const { return {tower_, Rational(0)}; }
    Element one() const { return {tower_, Rational(1)}; }
    Element from_int(long n) const { return {tower_, Rational(n)}; }
    Element from_rational(const Rational& q) const { return {tower_, q}; }
    Element inv(const Element& a) const { return a.inverse(); }

private:
    TowerPtr tower_;
};

using PolyTower = Poly<TowerElement>;

/// f with coefficients viewed as constants of the tower.
PolyTower lift(const PolyQ& f, const TowerPtr& tower);

}  // namespace tpe
