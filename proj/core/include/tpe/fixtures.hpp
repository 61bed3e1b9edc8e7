#pragma once

// Externally computed rank-0 lists and the census of the y^2 = x^5 + d family.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpe/document.hpp"
#include "tpe/families.hpp"

namespace tpe {

/// Rank fixture JSON: one record or an array of records
///   {"family": "cd", "residue_class": "7", "rank0_values": [...],
///    "source": "...", "range": 200}
struct RankFixture {
    std::string family;
    std::map<std::string, std::vector<Integer>> classes;  // label -> sorted values
    std::string source;
    std::optional<Integer> range;  // |d| <= range

    bool contains(const Integer& d) const;
    std::optional<std::string> class_of(const Integer& d) const;
    std::size_t size() const;
};

/// Throws InputError on malformed fixtures, including values outside the
/// declared range.
RankFixture parse_rank_fixture(const Json& j);
RankFixture load_rank_fixture(const std::string& path);

struct CensusRow {
    std::string residue_class;
    std::vector<Integer> rank0_values;  // fixture values inside the range
    std::size_t envelopes = 0;          // d in the range and class with a verified envelope
    std::size_t failures = 0;           // d whose envelope failed to verify
    std::size_t disagreements = 0;      // rank-0 conclusions differing from the case table
};

struct CensusMismatch {
    Integer d;
    std::string detail;
};

struct Census {
    Integer from;
    Integer to;
    std::string source;
    std::vector<CensusRow> rows;  // classes 1, 7, 9
    std::size_t inapplicable = 0;
    std::vector<CensusMismatch> mismatches;

    bool clean() const { return mismatches.empty(); }
};

/// Generates and verifies the envelope of every d in [from, to] (d != 0),
/// concluding under rank 0 for fixture values and comparing with the case
/// table. Processed in increasing d.
Census sweep_cd(const Integer& from, const Integer& to, const RankFixture& fixture, const VerifyOptions& options = {});

Json to_json(const Census& c);
std::string to_text(const Census& c);

/// The rank-0 result for one d: generate, verify and conclude.
struct CdRun {
    FamilyResult family;
    std::optional<VerificationReport> report;
    std::optional<Conclusion> conclusion;
};
CdRun run_cd(const Integer& d, bool rank0, const std::string& rank_source, const VerifyOptions& options = {});

}  // namespace tpe
