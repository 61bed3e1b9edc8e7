#include <set>

#include <gtest/gtest.h>

#include "tpe/families.hpp"
#include "tpe/verifier.hpp"

using namespace tpe;

namespace {

std::string data_path(const std::string& rel) { return std::string(TPE_DATA_DIR) + "/" + rel; }

std::vector<TpeDocument> passing_documents() {
    std::vector<TpeDocument> docs;
    for (long d : {18, 9, 100, 64, 12, 1, -15})
        docs.push_back(generate_cd(d).document());
    for (long d : {0, 42})
        docs.push_back(generate_dd(7, d).document());
    for (std::uint64_t p : {5u, 13u})
        docs.push_back(generate_xpx(p).document());
    return docs;
}

bool rejected(const Json& j) {
    try {
        return !verify_tpe(parse_document(j)).passed();
    } catch (const Error&) {
        return true;
    }
}

/// A single-field change of one leaf, or nullopt when the leaf is not mutable.
std::optional<Json> mutate(const Json& leaf) {
    if (leaf.is_number_integer()) return Json(leaf.get<long long>() + 1);
    if (!leaf.is_string()) return std::nullopt;
    const auto s = leaf.get<std::string>();
    if (s == "infinity") return Json("infinity+");
    if (s == "infinity+") return Json("infinity-");
    if (s == "infinity-") return Json("infinity+");
    if (s == "first") return std::nullopt;
    return Json("(" + s + ") + 1");
}

}  // namespace

TEST(Verifier, GeneratedDocumentsPass) {
    for (const auto& doc : passing_documents()) {
        auto report = verify_tpe(doc);
        EXPECT_TRUE(report.passed()) << to_text(report, doc, std::nullopt);
        // Any passing report is consistent: #T = #C~(F_w) and T reduces injectively.
        ASSERT_TRUE(report.reduced_count);
        EXPECT_EQ(report.torsion_packet_size, *report.reduced_count);
        std::set<std::string> seen;
        for (const auto& e : report.entries)
            for (const auto& r : e.reductions) EXPECT_TRUE(seen.insert(r).second) << r;
        EXPECT_EQ(seen.size(), report.torsion_packet_size);
    }
}

TEST(Verifier, EveryPlaceGivesTheSameVerdict) {
    auto doc = generate_cd(100).document();
    auto places = split_places(*doc.tower, doc.p);
    ASSERT_EQ(places.size(), 20u);
    for (std::size_t i = 0; i < places.size(); ++i) EXPECT_TRUE(verify_tpe(doc, {i, {}}).passed()) << i;
    EXPECT_FALSE(verify_tpe(doc, {places.size(), {}}).passed());
}

TEST(Verifier, PrincipalDivisorCertificates) {
    for (long d : {9, 100, 64}) {
        auto doc = generate_cd(d).document();
        bool found = false;
        for (const auto& e : doc.entries) {
            const auto* pe = std::get_if<ExplicitPointEntry>(&e);
            if (!pe || !std::holds_alternative<PrincipalDivisorCert>(pe->certificate)) continue;
            auto r = verify_certificate(e, doc, std::nullopt);
            EXPECT_TRUE(r.passed) << r.detail;
            EXPECT_EQ(r.order_divides, 5u);
            found = true;
        }
        EXPECT_TRUE(found) << d;
    }
}

// Property: every single-leaf mutation of a passing document is rejected.
TEST(Verifier, CertificateMutationsAreRejected) {
    int mutations = 0;
    for (const auto& doc : passing_documents()) {
        const Json original = to_json(doc);
        const Json flat = original.flatten();
        const auto places = split_places(*doc.tower, doc.p);
        for (const auto& [path, leaf] : flat.items()) {
            if (path.rfind("/rank_assertion", 0) == 0 || path == "/tower/note" || path == "/format") continue;
            auto changed = mutate(leaf);
            if (!changed) continue;
            Json j = original;
            j[Json::json_pointer(path)] = *changed;
            // The hyperelliptic involution swaps the two points at infinity
            // and maps a valid packet to a valid packet.
            if (path == "/base_point" && leaf == "infinity+") continue;
            if (path.rfind("/place/", 0) == 0) {
                // Another root of the same relation is an equally valid place.
                try {
                    auto alt = parse_document(j);
                    const auto& chosen = std::get<ExplicitPlace>(alt.place);
                    bool is_place = false;
                    for (const auto& w : places) {
                        bool all = true;
                        for (std::size_t g = 0; g < doc.tower->generators().size(); ++g)
                            all = all && chosen.at(doc.tower->generators()[g].name) == w.residues[g].value();
                        is_place = is_place || all;
                    }
                    if (is_place) continue;
                } catch (const Error&) {
                }
            }
            EXPECT_TRUE(rejected(j)) << path << " -> " << changed->dump() << "\n" << original["curve"].dump();
            ++mutations;
        }
    }
    EXPECT_GE(mutations, 100);
}

TEST(Verifier, CollidingReductionsAreInconsistent) {
    // (0, s) with s^2 = 9 is a genuine 5-torsion point distinct from (0, 3),
    // but both reduce to (0, 3) at s -> 3.
    const char* text = R"({
      "format": "tpe-document/1",
      "curve": {"f": [9, 0, 0, 0, 0, 1]},
      "tower": {"generators": [{"name": "s", "relation": [-9, 0, 1]}]},
      "p": 11,
      "place": {"s": 3},
      "base_point": "infinity",
      "entries": [
        {"kind": "point", "point": "infinity", "certificate": {"type": "base-point"}},
        {"kind": "point", "point": {"x": "0", "y": "3"}, "certificate": {"type": "principal-divisor", "v": ["3"], "m": 5}},
        {"kind": "point", "point": {"x": "0", "y": "-3"}, "certificate": {"type": "principal-divisor", "v": ["-3"], "m": 5}},
        {"kind": "point", "point": {"x": "0", "y": "s"}, "certificate": {"type": "principal-divisor", "v": ["s"], "m": 5}}
      ],
      "rank_assertion": {"claimed": false, "source": ""}
    })";
    auto doc = parse_document_text(text);
    auto report = verify_tpe(doc);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.consistent);
    EXPECT_EQ(report.consistency_detail.rfind("inconsistent certificates: ", 0), 0u) << report.consistency_detail;
    EXPECT_THROW(theorem_conclusion(report, doc), DomainError);
}

TEST(Verifier, ShortPacketFailsConditionFive) {
    auto doc = generate_cd(100).document();
    doc.entries.pop_back();
    auto report = verify_tpe(doc);
    EXPECT_FALSE(report.conditions[4].passed);
    EXPECT_FALSE(report.passed());
}

TEST(Verifier, ConditionFailuresAreReported) {
    auto doc = generate_cd(18).document();
    doc.p = 13;  // 13 is good for x^5 + 18 but the packet is too small
    EXPECT_FALSE(verify_tpe(doc).conditions[4].passed);
    doc.p = 3;
    auto r = verify_tpe(doc);
    EXPECT_FALSE(r.conditions[2].passed);  // 3 | disc
    doc.p = 2;
    EXPECT_FALSE(verify_tpe(doc).conditions[1].passed);
}

TEST(Verifier, ConclusionsSatisfyTheCurveEquation) {
    for (const auto& doc : passing_documents()) {
        auto report = verify_tpe(doc);
        auto c = theorem_conclusion(report, doc);
        for (const auto& pt : c.rational_torsion_points) {
            if (const auto* a = std::get_if<RationalAffine>(&pt)) {
                EXPECT_EQ(a->y * a->y, doc.curve.f.evaluate(a->x, Rational(0))) << to_string(pt);
            }
        }
        EXPECT_LE(c.rational_torsion_points.size(), report.torsion_packet_size);
        EXPECT_EQ(c.rank, RankConclusion::None);
        TpeDocument claimed = doc;
        claimed.rank_assertion = {true, "test"};
        EXPECT_EQ(theorem_conclusion(report, claimed).rank,
                  doc.curve.is_odd() ? RankConclusion::Equality : RankConclusion::Inclusion);
    }
}

TEST(Verifier, ShippedQuinticDocumentFailsTorsionCondition) {
    auto doc = parse_document(parse_json_text(read_file(data_path("documents/quintic_sqrt15_p7.json")), "doc"));
    auto report = verify_tpe(doc);
    EXPECT_TRUE(report.conditions[0].passed);
    EXPECT_TRUE(report.conditions[1].passed);
    EXPECT_TRUE(report.conditions[2].passed);
    EXPECT_FALSE(report.conditions[3].passed);
    EXPECT_TRUE(report.consistent);
    EXPECT_EQ(report.torsion_packet_size, 8u);
    EXPECT_EQ(report.reduced_count, 8u);
}

TEST(Verifier, ReportJsonIsDeterministic) {
    auto doc = generate_cd(12).document();
    auto a = verify_tpe(doc), b = verify_tpe(doc);
    auto ca = theorem_conclusion(a, doc);
    EXPECT_EQ(to_json(a, doc, ca).dump(2), to_json(b, doc, theorem_conclusion(b, doc)).dump(2));
    EXPECT_EQ(to_json(a, doc, ca)["format"], "tpe-report/1");
}
