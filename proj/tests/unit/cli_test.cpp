#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "isob_cli/cli.hpp"
#include "isob_cli/verify_paper.hpp"

using isob::cli::run_cli;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~EnvGuard() { unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, Dim) {
  EXPECT_EQ(run({"dim", "A", "4", "--ambient", "2,0,0,0,0"}).out, "15\n");
  EXPECT_EQ(run({"dim", "E", "6", "--fundamental", "1,0,0,0,0,0"}).out, "27\n");
  EXPECT_EQ(run({"dim", "A", "1", "--fundamental", "0"}).out, "1\n");
  EXPECT_EQ(run({"dim", "E8", "--fundamental", "0,0,0,0,0,0,0,1"}).out, "248\n");
  EXPECT_EQ(run({"dim", "A", "2", "--fundamental", "-1,0"}).code, 3);
  EXPECT_EQ(run({"dim", "A", "2", "--fundamental", "x,0"}).code, 2);
  EXPECT_EQ(run({"dim", "A", "2"}).code, 2);
  EXPECT_EQ(run({"dim", "A", "2", "--ambient", "1,0,0", "--fundamental", "1,0"}).code, 2);
  EXPECT_EQ(run({"dim", "B", "1", "--fundamental", "1"}).code, 3);
}

TEST(Cli, Check) {
  const auto r = run({"check", "sl-so:5", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "NO_EXTENSION");
  EXPECT_EQ(j["dim_p"], "14");
  EXPECT_EQ(j["candidates"][1]["evidence"]["kind"], "lower_bound");
  EXPECT_EQ(j["candidates"][1]["evidence"]["value"], "50");
  EXPECT_EQ(j["candidates"][1]["family_direction"].size(), 5u);

  const auto e6 = run({"check", "e6-f4"});
  EXPECT_EQ(e6.code, 0);
  EXPECT_NE(e6.out.find("NO_EXTENSION"), std::string::npos);
  EXPECT_NE(e6.out.find("27 vs dim p 26"), std::string::npos);

  const auto g2 = Json::parse(run({"--json", "check", "complex:G2"}).out);
  EXPECT_EQ(g2["candidates"][0]["evidence"]["value"], "49");
  EXPECT_EQ(g2["dim_p"], "14");

  EXPECT_EQ(run({"check", "sl-xx:5"}).code, 2);
  EXPECT_EQ(run({"check", "sl-so:1"}).code, 3);
}

TEST(Cli, CheckAudit) {
  const auto j = Json::parse(run({"check", "sl-sp:2", "--audit", "--kernel-bound", "3", "--json"}).out);
  EXPECT_EQ(j["audit"]["kernel_search_bound"], 3);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string> args : {std::vector<std::string>{"check", "sl-so:7", "--json"},
                                              {"pair", "describe", "sl-sp:3", "--json"},
                                              {"freudenthal", "G", "2", "--fundamental", "1,1", "--json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    // parse and print again: nothing is lost
    EXPECT_EQ(Json::parse(a.out).dump(2) + "\n", a.out);
  }
}

TEST(Cli, Describe) {
  const auto j = Json::parse(run({"describe", "E", "8", "--json"}).out);
  EXPECT_EQ(j["dim"], "248");
  EXPECT_EQ(j["weyl_group_order"], "696729600");
  EXPECT_EQ(j["simple_roots"].size(), 8u);
  EXPECT_EQ(j["fundamental_weights"].size(), 8u);
  EXPECT_EQ(run({"describe", "G2"}).code, 0);
  EXPECT_EQ(run({"describe", "E", "9"}).code, 3);
}

TEST(Cli, OrbitAndFreudenthal) {
  EXPECT_EQ(run({"orbit", "A", "4", "--ambient", "3,1,1,1,0", "--count-only"}).out, "size 20\n");
  const auto j = Json::parse(run({"orbit", "A", "2", "--fundamental", "1,0", "--json"}).out);
  EXPECT_EQ(j["size"], "3");
  EXPECT_EQ(j["weights"].size(), 3u);
  EXPECT_EQ(run({"--orbit-cap", "10", "orbit", "E", "8", "--fundamental", "0,0,0,0,0,0,0,1"}).code, 3);
  const auto f = Json::parse(run({"freudenthal", "A", "2", "--fundamental", "1,1", "--json"}).out);
  EXPECT_EQ(f["dim"], "8");
  EXPECT_EQ(run({"--freudenthal-cap", "5", "freudenthal", "A", "2", "--fundamental", "1,1"}).code, 3);
}

TEST(Cli, Pair) {
  const auto j = Json::parse(run({"pair", "describe", "sl-so:5", "--json"}).out);
  EXPECT_EQ(j["dims"]["p"], "14");
  std::uint64_t total = 0;
  for (const auto& w : j["weights"]) total += w["multiplicity"].get<std::uint64_t>();
  EXPECT_EQ(total, 14u);
  EXPECT_TRUE(Json::parse(run({"pair", "describe", "e6-f4", "--json"}).out)["weights"].is_null());
  EXPECT_EQ(run({"pair", "restrict", "sl-so:5", "--ambient", "0,0,0,0,1"}).out, "(0, 0)\n");
  EXPECT_EQ(run({"pair", "restrict", "e6-f4", "--ambient", "1,0,0,0,0,0,0,0"}).code, 3);
  EXPECT_EQ(run({"pair"}).code, 2);
}

TEST(Cli, Chern) {
  const auto r = run({"chern", "--weights", "2;0;-2", "--against", "1;0;-1"});
  EXPECT_NE(r.out.find("c_2 = -4x1^2"), std::string::npos);
  EXPECT_NE(r.out.find("equal: no"), std::string::npos);
  const auto j = Json::parse(run({"chern", "--weights", "1,0;0,1", "--json"}).out);
  EXPECT_EQ(j["pieces"][2]["1,1"], "1");
  const auto k = Json::parse(run({"chern", "--flat-kernel", "4", "--json"}).out);
  EXPECT_EQ(k["kernel_generators"].size(), 2u);
  EXPECT_EQ(k["euler_square"]["name"], "e^2");
  EXPECT_EQ(run({"chern", "--weights", "1,0;1"}).code, 3);
  EXPECT_EQ(run({"chern"}).code, 2);
}

TEST(Cli, Classify) {
  const auto j = Json::parse(run({"classify", "SU(3,2)", "--json"}).out);
  EXPECT_EQ(j["group"], "SU(3,2)");
  EXPECT_EQ(j["type"], "Type1");
  EXPECT_EQ(Json::parse(run({"classify", "SL(5,R)", "--json"}).out)["type"], "Type2");
  EXPECT_EQ(Json::parse(run({"classify", "E6(-26)", "--json"}).out)["type"], "Type2");
  const auto bad = run({"classify", "SO(2,2)", "--json"});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(Json::parse(bad.out)["error"], "out_of_table");
  EXPECT_EQ(run({"classify", "SL(3,R)", "SU(2,1)"}).out, "SL(3,R) x SU(2,1): Type1\n");
  EXPECT_EQ(run({"classify", "nonsense"}).code, 2);
}

TEST(Cli, MilnorWood) {
  const auto j = Json::parse(run({"milnor-wood", "--k", "1", "--euler-tm", "-2", "--euler-e", "3", "--json"}).out);
  EXPECT_EQ(j["bound"], "1");
  EXPECT_EQ(j["obstructs_flat"], true);
  EXPECT_NEAR(j["smillie_ratio"].get<double>(), 0.5, 1e-12);
  const auto k2 = Json::parse(run({"milnor-wood", "--k", "2", "--euler-tm", "4", "--volume", "0.268935", "--json"}).out);
  EXPECT_GT(k2["smillie_ratio"].get<double>(), 1.0);
  EXPECT_EQ(run({"milnor-wood", "--k", "2", "--euler-tm", "4", "--volume", "0"}).code, 3);
}

TEST(Cli, EnvironmentAndFlags) {
  {
    EnvGuard env("ISOB_OUTPUT_FORMAT", "json");
    EXPECT_EQ(Json::parse(run({"classify", "SU(2,1)"}).out)["type"], "Type1");
    EXPECT_EQ(run({"--format", "text", "classify", "SU(2,1)"}).out, "SU(2,1): Type1\n");
  }
  {
    EnvGuard env("ISOB_ORBIT_CAP", "10");
    EXPECT_EQ(run({"orbit", "E", "8", "--fundamental", "0,0,0,0,0,0,0,1"}).code, 3);
    EXPECT_EQ(run({"--orbit-cap", "1000", "orbit", "E", "8", "--fundamental", "0,0,0,0,0,0,0,1", "--count-only"}).code, 0);
  }
  {
    EnvGuard env("ISOB_OUTPUT_FORMAT", "yaml");
    EXPECT_EQ(run({"classify", "SU(2,1)"}).code, 2);
  }
  EXPECT_EQ(run({"--orbit-cap", "0", "describe", "A2"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_NE(run({"--help"}).out.find("verify-paper"), std::string::npos);
}

TEST(Cli, VerifyPaperSelections) {
  const auto r = run({"verify-paper", "--pairs", "sl-so:2..9", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["items"].size(), 8u);
  EXPECT_EQ(j["failed"], 0);
  const auto c = run({"verify-paper", "--classify-sample"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("PASS classify SU(2,1): Type1"), std::string::npos);
  EXPECT_NE(c.out.find("PASS classify SL(4,R): Type2"), std::string::npos);
  const auto t = run({"verify-paper", "--table"});
  EXPECT_NE(t.out.find("so_5"), std::string::npos);
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(run({"verify-paper", "--pairs", "sl-so:5..2"}).code, 2);
}

TEST(Cli, PairSelectionParser) {
  const auto ids = isob::cli::parse_pair_selection("sl-so:2..4, e6-f4,complex:G2");
  ASSERT_EQ(ids.size(), 5u);
  EXPECT_EQ(isob::to_string(ids[3]), "e6-f4");
  EXPECT_THROW(isob::cli::parse_pair_selection("sl-so:a..3"), isob::Error);
}
