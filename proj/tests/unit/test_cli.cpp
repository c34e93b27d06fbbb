#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "molsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = molsym::cli::run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"species", "--no-such-flag"}).code, 2);
  EXPECT_EQ(invoke({"species", "--group", "Q7"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  const auto r = invoke({"species", "--molecule", "NoSuchMolecule"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);
}

TEST(Cli, WaterMarkdown) {
  const auto r = invoke({"species", "--molecule", "H2O", "--format", "markdown-table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("a*"), std::string::npos);
  EXPECT_NE(r.out.find("b*"), std::string::npos);
  EXPECT_EQ(r.out.rfind("<!--", 0), 0u);
}

TEST(Cli, SpeciesJsonSchema) {
  const auto j = json_of(invoke({"species", "--molecule", "BF3"}));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("command"), "species");
  EXPECT_TRUE(j.at("config").contains("threads"));
  EXPECT_TRUE(j.at("config").contains("version"));
  EXPECT_EQ(j.at("species").size(), 2u);
  EXPECT_EQ(j.at("sigma"), "a2");
}

TEST(Cli, BoronTrifluorideFractions) {
  const auto r = invoke({"fraction", "--molecule", "BF3", "--cutoffs", "2,4,8,inf", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto dump = r.out;
  for (const char* v : {"0.429", "0.444", "0.491", "1/2"}) EXPECT_NE(dump.find(v), std::string::npos) << v;
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"multiplicities", "--group", "O", "--lmax", "12"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> conj = {"conjecture", "--group", "T"};
  EXPECT_EQ(invoke(conj).out, invoke(conj).out);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "molsym_cli_test.csv";
  std::filesystem::remove(path);
  const auto r = invoke({"multiplicities", "--group", "D3", "--lmax", "4", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.rfind("# {", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, RegressGreenTables) {
  for (const char* t : {"buckeyball-weights", "fractions", "species"}) {
    const auto r = invoke({"regress", "--table", t, "--format", "json"});
    EXPECT_EQ(r.code, 0) << t << r.err;
    EXPECT_TRUE(json_of(r).at("passed").get<bool>()) << t;
  }
}

TEST(Cli, RegressKnownMismatchesAreConfined) {
  // the fixtures keep printed values verbatim; these are the cells where they disagree with the computation
  auto r = invoke({"regress", "--table", "buckeyball-mult", "--mismatches-only", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  auto rows = json_of(r).at("rows");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["row"], "l=5");
  EXPECT_EQ(rows[0]["column"], "h");

  r = invoke({"regress", "--table", "monodromy-groups", "--mismatches-only", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  rows = json_of(r).at("rows");
  EXPECT_FALSE(rows.empty());
  for (const auto& row : rows) {
    EXPECT_EQ(row["column"], "G_mon") << row.dump();
    EXPECT_NE(row["row"].get<std::string>().find("e"), std::string::npos) << row.dump();
  }
}

TEST(Cli, RegressUnknownTable) { EXPECT_EQ(invoke({"regress", "--table", "nope"}).code, 2); }

TEST(Cli, PhysicsSubcommands) {
  auto j = json_of(invoke({"toy2d", "--species", "ortho"}));
  EXPECT_EQ(j.at("command"), "toy2d");
  auto r = invoke({"fringe", "--group", "Dinf", "--species", "a2", "--l", "1", "--axis", "y"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(invoke({"fringe", "--group", "Dinf", "--species", "a2", "--l", "1", "--m", "1"}).code, 2);
  r = invoke({"monodromy", "--group", "C3", "--irrep", "2e"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = invoke({"fourier-check", "--group", "D3", "--species", "e*", "--lmax", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  r = invoke({"strobe", "--pulses", "2", "--lmax", "16"});
  EXPECT_EQ(r.code, 0) << r.err;
}
