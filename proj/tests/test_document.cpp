#include <gtest/gtest.h>

#include "tpe/document.hpp"
#include "tpe/families.hpp"

using namespace tpe;

namespace {

std::string data_path(const std::string& rel) { return std::string(TPE_DATA_DIR) + "/" + rel; }

Json quintic_json() { return parse_json_text(read_file(data_path("documents/quintic_sqrt15_p7.json")), "quintic"); }

}  // namespace

TEST(Document, ParsesShippedQuinticDocument) {
    TpeDocument doc = parse_document(quintic_json());
    EXPECT_EQ(doc.p, 7u);
    EXPECT_EQ(doc.curve.genus, 2);
    EXPECT_EQ(doc.tower->dimension(), 2u);
    EXPECT_EQ(doc.entries.size(), 8u);
    EXPECT_TRUE(std::holds_alternative<InfinityOdd>(doc.base_point));
    EXPECT_EQ(std::get<ExplicitPlace>(doc.place).at("s"), 1u);
    EXPECT_TRUE(doc.rank_assertion.claimed);
    const auto& last = std::get<ExplicitPointEntry>(doc.entries.back());
    EXPECT_EQ(std::get<CantorCheckedCert>(last.certificate).expected_order, 6u);
}

TEST(Document, CanonicalFormIsAFixedPoint) {
    const std::string once = to_canonical_string(parse_document(quintic_json()));
    EXPECT_EQ(to_canonical_string(parse_document_text(once)), once);
    EXPECT_EQ(once, read_file(data_path("documents/quintic_sqrt15_p7.json")));
}

TEST(Document, GeneratedDocumentsRoundTrip) {
    for (long d : {18, 100, 12, -15, 1, 9}) {
        auto r = generate_cd(d);
        ASSERT_TRUE(r.applicable()) << d;
        const std::string text = to_canonical_string(r.document());
        EXPECT_EQ(to_canonical_string(parse_document_text(text)), text) << d;
    }
    for (auto r : {generate_dd(7, 42), generate_xpx(13)}) {
        const std::string text = to_canonical_string(r.document());
        EXPECT_EQ(to_canonical_string(parse_document_text(text)), text);
    }
}

TEST(Document, BigIntegersUseStrings) {
    Integer big("123456789012345678901234567890");
    EXPECT_TRUE(integer_to_json(big).is_string());
    EXPECT_EQ(integer_from_json(integer_to_json(big), "n"), big);
    EXPECT_EQ(integer_from_json(Json(-5), "n"), -5);
    EXPECT_EQ(integer_from_json(Json("-5"), "n"), -5);
    EXPECT_THROW(integer_from_json(Json(1.5), "n"), InputError);
    EXPECT_THROW(integer_from_json(Json("x"), "n"), InputError);
}

TEST(Document, PointEncoding) {
    TowerPtr t = TowerSpec::make({{"s", poly_q({-15, 0, 1})}});
    for (const char* text : {"\"infinity\"", "\"infinity+\"", "\"infinity-\"", R"({"x": "3", "y": "-4*s"})"}) {
        Json j = Json::parse(text);
        EXPECT_EQ(point_to_json(point_from_json(j, t)), j);
    }
    EXPECT_THROW(point_from_json(Json("origin"), t), InputError);
    EXPECT_THROW(point_from_json(Json::parse(R"({"x": "3"})"), t), InputError);
    EXPECT_THROW(point_from_json(Json::parse(R"({"x": "3", "y": "4*r"})"), t), InputError);
}

TEST(Document, MalformedInputsAreInputErrors) {
    const Json good = quintic_json();
    auto broken = [&](auto mutate) {
        Json j = good;
        mutate(j);
        return j;
    };
    const std::vector<Json> bad{
        broken([](Json& j) { j["format"] = "tpe-document/2"; }),
        broken([](Json& j) { j.erase("curve"); }),
        broken([](Json& j) { j["curve"]["f"] = Json::array({1, 0, 1}); }),
        broken([](Json& j) { j["curve"]["f"] = Json::array({0, 0, 1, 0, 0, 1}); }),
        broken([](Json& j) { j["curve"]["f"][0] = "1/2"; }),
        broken([](Json& j) { j["p"] = -7; }),
        broken([](Json& j) { j["p"] = "seven"; }),
        broken([](Json& j) { j["place"] = "last"; }),
        broken([](Json& j) { j["place"] = Json{{"t", 1}}; }),
        broken([](Json& j) { j["base_point"] = "nowhere"; }),
        broken([](Json& j) { j["entries"] = Json::object(); }),
        broken([](Json& j) { j["entries"][0]["kind"] = "curve"; }),
        broken([](Json& j) { j["entries"][0]["certificate"]["type"] = "magic"; }),
        broken([](Json& j) { j["entries"][6]["point"]["y"] = "4*s +"; }),
        broken([](Json& j) { j["entries"][6]["certificate"].erase("expected_order"); }),
        broken([](Json& j) { j["tower"]["generators"][0]["relation"] = Json::array({-15, 0, 2}); }),
        broken([](Json& j) { j["tower"]["generators"][0].erase("name"); }),
        broken([](Json& j) { j["rank_assertion"]["claimed"] = "yes"; }),
    };
    for (std::size_t i = 0; i < bad.size(); ++i) EXPECT_THROW(parse_document(bad[i]), InputError) << i;
    EXPECT_THROW(parse_document_text("{"), InputError);
    EXPECT_THROW(parse_document_text("[]"), InputError);
    EXPECT_THROW(read_file(data_path("does/not/exist.json")), InputError);
}

TEST(Document, FamilyEntryEncoding) {
    auto doc = generate_dd(7, 42).document();
    Json j = to_json(doc);
    EXPECT_EQ(j["entries"][0]["kind"], "weierstrass-family");
    EXPECT_EQ(j["entries"][0]["h"], Json::parse("[-1, 0, 0, 42, 0, 0, 1]"));
    EXPECT_EQ(j["tower"]["note"], "splitting field of f, certified split at p");
    EXPECT_EQ(j["base_point"], "infinity+");
}
