#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "tpe/document.hpp"

namespace {

std::string data_path(const std::string& rel) { return std::string(TPE_DATA_DIR) + "/" + rel; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run tpe_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = tpe::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, FamilyExitCodes) {
    auto r = tpe_cli({"family", "cd", "--d", "18", "--rank0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("P_inf"), std::string::npos);
    auto two = tpe_cli({"family", "cd", "--d", "2"});
    EXPECT_EQ(two.code, 2);
    EXPECT_NE((two.out + two.err).find("21"), std::string::npos);
    EXPECT_EQ(tpe_cli({"family", "cd", "--d", "22"}).code, 2);
    EXPECT_EQ(tpe_cli({"family", "dd", "--p", "5", "--d", "10"}).code, 3);
    EXPECT_EQ(tpe_cli({"family", "xpx", "--p", "5", "--rank0"}).code, 0);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(tpe_cli({}).code, 3);
    EXPECT_EQ(tpe_cli({"bogus"}).code, 3);
    EXPECT_EQ(tpe_cli({"family", "cd", "--d", "abc"}).code, 3);
    EXPECT_EQ(tpe_cli({"verify", data_path("missing.json")}).code, 3);
    EXPECT_EQ(tpe_cli({"verify", data_path("fixtures/xpx.json")}).code, 3);
    EXPECT_EQ(tpe_cli({"count", "--curve", data_path("curves/x5_plus_9.json"), "--p", "9"}).code, 3);
    EXPECT_EQ(tpe_cli({"sweep", "cd", "--range", "5..1", "--rank-fixture", data_path("fixtures/cd_rank0.json")}).code, 3);
}

TEST(Cli, CountAndTorsion) {
    auto c = tpe_cli({"count", "--curve", data_path("curves/quintic_p7.json"), "--p", "7"});
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("8"), std::string::npos);
    EXPECT_EQ(tpe_cli({"count", "--curve", data_path("curves/x5_plus_9.json"), "--p", "3"}).code, 2);
    EXPECT_EQ(tpe_cli({"torsion", "--curve", data_path("curves/x5_plus_9.json"), "--point", "0,3", "--p", "11"}).code, 0);
    EXPECT_EQ(tpe_cli({"torsion", "--curve", data_path("curves/quintic_p7.json"), "--point", "3,4*s", "--tower",
                       data_path("curves/sqrt15_tower.json"), "--p", "7"})
                  .code,
              1);
}

TEST(Cli, JsonOutputIsByteIdentical) {
    const std::vector<std::string> args{"--json", "family", "cd", "--d", "12", "--rank0"};
    auto a = tpe_cli(args), b = tpe_cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(tpe::Json::parse(a.out));
}

TEST(Cli, EmitThenVerify) {
    auto path = (std::filesystem::temp_directory_path() / "tpe_cli_emit_test.json").string();
    ASSERT_EQ(tpe_cli({"family", "cd", "--d", "100", "--emit", path}).code, 0);
    auto v = tpe_cli({"verify", path});
    EXPECT_EQ(v.code, 0) << v.out << v.err;
    auto emitted = tpe::read_file(path);
    ASSERT_EQ(tpe_cli({"family", "cd", "--d", "100", "--emit", path}).code, 0);
    EXPECT_EQ(tpe::read_file(path), emitted);
    std::filesystem::remove(path);
}

TEST(Cli, ShippedDocumentFailsVerification) {
    auto v = tpe_cli({"verify", data_path("documents/quintic_sqrt15_p7.json")});
    EXPECT_EQ(v.code, 1);
    EXPECT_NE(v.out.find("not torsion"), std::string::npos) << v.out;
}

TEST(Cli, SweepIsClean) {
    auto s = tpe_cli({"sweep", "cd", "--range", "-200..200", "--rank-fixture", data_path("fixtures/cd_rank0.json")});
    EXPECT_EQ(s.code, 0) << s.out << s.err;
}
