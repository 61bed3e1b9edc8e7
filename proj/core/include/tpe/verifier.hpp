#pragma once

// Verification of torsion packet envelopes and the conclusions they license.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tpe/document.hpp"
#include "tpe/jacobian.hpp"

namespace tpe {

struct VerifyOptions {
    /// Overrides the document's place with split_places(tower, p)[index].
    std::optional<std::size_t> place_index;
    TorsionOptions torsion;
};

struct ConditionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct EntryResult {
    std::size_t index = 0;
    std::string subject;      // point text, or "roots of h"
    std::string certificate;  // certificate or entry kind
    bool passed = false;
    /// Every member's image under iota has order dividing this.
    std::optional<std::uint64_t> order_divides;
    std::size_t members = 0;  // points this entry adds to T after deduplication
    std::vector<std::string> reductions;
    std::string detail;
};

struct VerificationReport {
    std::vector<ConditionResult> conditions;  // (1) to (5), in order
    bool consistent = false;
    std::string consistency_detail;
    std::optional<ResidueAssignment> place;
    std::optional<std::uint64_t> reduced_count;  // #C~(F_w)
    std::size_t torsion_packet_size = 0;         // #T
    std::vector<EntryResult> entries;
    std::vector<std::string> warnings;

    bool passed() const;
};

/// A point of C over Q.
struct RationalAffine {
    Rational x;
    Rational y;
    friend bool operator==(const RationalAffine&, const RationalAffine&) = default;
};
using RationalPoint = std::variant<RationalAffine, InfinityOdd, InfinityEvenPlus, InfinityEvenMinus>;

std::string to_string(const RationalPoint& p);
/// Affine points by (x, y), then the infinity points.
bool rational_less(const RationalPoint& a, const RationalPoint& b);
void sort_points(std::vector<RationalPoint>& pts);
Json point_to_json(const RationalPoint& p);

enum class RankConclusion { None, Equality, Inclusion };

struct Conclusion {
    /// C(Q) ∩ J(Q)_tors, which equals the rational members of T.
    std::vector<RationalPoint> rational_torsion_points;
    RankConclusion rank = RankConclusion::None;
    std::string rank_source;
    std::vector<std::string> statements;
};

/// Result of checking one torsion certificate.
struct CertificateResult {
    bool passed = false;
    std::optional<std::uint64_t> order_divides;
    std::string detail;
};

/// Checks the certificate of one entry. `w` is needed only for CantorChecked.
CertificateResult verify_certificate(const TorsionSetEntry& entry, const TpeDocument& doc,
                                     const std::optional<ResidueAssignment>& w, const TorsionOptions& options = {});

/// Never throws for document content: every failure is recorded in the report.
VerificationReport verify_tpe(const TpeDocument& doc, const VerifyOptions& options = {});

/// Throws DomainError unless report.passed().
Conclusion theorem_conclusion(const VerificationReport& report, const TpeDocument& doc);

Json to_json(const VerificationReport& report, const TpeDocument& doc, const std::optional<Conclusion>& conclusion);
std::string to_text(const VerificationReport& report, const TpeDocument& doc, const std::optional<Conclusion>& conclusion);
Json to_json(const Conclusion& c);

}  // namespace tpe
