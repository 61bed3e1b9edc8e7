#pragma once

// Envelope generators for the families y^2 = x^5 + d, y^2 = x^(p-1) +
// d x^((p-1)/2) - 1 and y^2 = x^p - x, plus the expected rational points of
// the first family.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tpe/document.hpp"
#include "tpe/verifier.hpp"

namespace tpe {

/// The theorem does not apply to the requested member.
struct Inapplicable {
    std::string reason;
    std::optional<std::uint64_t> reduced_count;
};

struct FamilyResult {
    std::variant<TpeDocument, Inapplicable> outcome;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;

    bool applicable() const { return std::holds_alternative<TpeDocument>(outcome); }
    const TpeDocument& document() const { return std::get<TpeDocument>(outcome); }
};

/// y^2 = x^5 + d at p = 11. Throws DomainError for d = 0. A d that is not
/// tenth-power-free only produces a warning.
FamilyResult generate_cd(const Integer& d);

/// Exact discriminant of x^(p-1) + d x^((p-1)/2) - 1 next to the closed form
/// ((p-1)/2)^(p-1) (4 + d^2)^((p-1)/2).
struct DdDiscriminant {
    Integer discriminant;
    Integer closed_form;
    std::uint64_t residue = 0;  // discriminant mod p
};
DdDiscriminant dd_discriminant(std::uint64_t p, const Integer& d);

/// y^2 = x^(p-1) + d x^((p-1)/2) - 1 with p = 3 mod 4 prime and p | d.
/// Throws DomainError on violated preconditions.
FamilyResult generate_dd(std::uint64_t p, const Integer& d);

/// y^2 = x^p - x over Q(zeta_(p-1)); p prime, p >= 5.
FamilyResult generate_xpx(std::uint64_t p);

struct CaseAnalysis {
    std::vector<RationalPoint> points;  // sorted
    std::string case_label;
    std::optional<std::string> warning;
};

/// The rational points of y^2 = x^5 + d predicted by the case table when
/// rank J(Q) = 0 (or, with rank0 = false, the rational torsion points).
/// Throws DomainError unless d = 1, 7, 9 mod 11 and d is tenth-power-free.
CaseAnalysis corollary_case_analysis(const Integer& d, bool rank0);

}  // namespace tpe
