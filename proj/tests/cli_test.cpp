#include "borel/cli.hpp"
#include "borel/ideals.hpp"
#include "borel/json_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace borel::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = main(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesByteForByteForEveryJobCount) {
  const auto& c = GetParam();
  const std::string expected = read_file(std::filesystem::path(BOREL_GOLDEN_DIR) / c.file);
  ASSERT_FALSE(expected.empty()) << c.file;
  for (const char* jobs : {"1", "4"}) {
    auto args = c.args;
    args.insert(args.end(), {"--jobs", jobs});
    const auto r = invoke(args);
    EXPECT_EQ(r.status, kExitOk) << r.err;
    EXPECT_EQ(r.out, expected) << c.file << " with --jobs " << jobs;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cli, GoldenTest,
    ::testing::Values(
        GoldenCase{"roots_A2.txt", {"roots", "A", "2"}},
        GoldenCase{"roots_G2.txt", {"roots", "G", "2"}},
        GoldenCase{"roots_F4.json", {"roots", "F", "4", "--format", "json"}},
        GoldenCase{"ideals_A2.txt", {"ideals", "A", "2"}},
        GoldenCase{"ideals_B2.txt", {"ideals", "B", "2"}},
        GoldenCase{"ideals_G2.txt", {"ideals", "G", "2"}},
        GoldenCase{"ideals_A2_zero.json", {"ideals", "A", "2", "--include-zero", "--format", "json"}},
        GoldenCase{"abelian_F4.txt", {"abelian", "F", "4"}},
        GoldenCase{"abelian_B2.json", {"abelian", "B", "2", "--format", "json"}},
        GoldenCase{"classify_A2.txt", {"classify", "A", "2"}},
        GoldenCase{"classify_B2.json", {"classify", "B", "2", "--format", "json"}},
        GoldenCase{"lattice_B2.txt", {"lattice", "B", "2"}},
        GoldenCase{"lattice_A2.json", {"lattice", "A", "2", "--format", "json"}},
        GoldenCase{"lattice_A2.dot", {"lattice", "A", "2", "--format", "dot"}},
        GoldenCase{"normalizer_B2_a2.txt", {"normalizer", "B", "2", "--set", "a2"}},
        GoldenCase{"centralizer_G2_a1.txt", {"centralizer", "G", "2", "--set", "a1"}},
        GoldenCase{"check_B3.txt", {"check", "B", "3"}},
        GoldenCase{"check_A2_set.txt", {"check", "A", "2", "--set", "a1,a1+a2"}}),
    [](const auto& info) {
      std::string name = info.param.file;
      std::replace(name.begin(), name.end(), '.', '_');
      return name;
    });

TEST(CliTest, LineCounts) {
  EXPECT_EQ(line_count(invoke({"ideals", "A", "2"}).out), 4u);
  EXPECT_EQ(line_count(invoke({"ideals", "A", "2", "--include-zero"}).out), 5u);
  EXPECT_EQ(line_count(invoke({"ideals", "B", "2"}).out), 5u);
  EXPECT_EQ(line_count(invoke({"abelian", "F", "4"}).out), 16u);
}

TEST(CliTest, UnknownFamilyIsInvalidInput) {
  const auto r = invoke({"roots", "Z", "9"});
  EXPECT_EQ(r.status, kExitInvalidInput);
  EXPECT_NE(r.err.find("'Z'"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, InvalidInputs) {
  const std::vector<std::vector<std::string>> cases = {
      {"roots", "B", "1"},
      {"roots", "E", "5"},
      {"roots", "A", "two"},
      {"roots", "A", "0"},
      {"ideals", "A", "2", "--format", "dot"},
      {"ideals", "A", "2", "--format", "yaml"},
      {"ideals", "A", "2", "--jobs", "0"},
      {"normalizer", "A", "2"},
      {"normalizer", "A", "2", "--set", "a1,a2"},
      {"check", "A", "2", "--set", "a1+a3"},
      {"frobnicate", "A", "2"},
      {"roots", "A"},
  };
  for (const auto& args : cases) {
    const auto r = invoke(args);
    EXPECT_EQ(r.status, kExitInvalidInput) << args[0] << " " << (args.size() > 1 ? args[1] : "");
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliTest, BruteForceOverCapacity) {
  const auto r = invoke({"check", "F", "4"});
  EXPECT_EQ(r.status, kExitCapacity);
  EXPECT_NE(r.err.find("24"), std::string::npos) << r.err;
}

TEST(CliTest, HelpSucceeds) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE((r.out + r.err).find("ideals"), std::string::npos);
}

TEST(CliTest, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "borel_cli_out_test.txt";
  std::filesystem::remove(path);
  const auto r = invoke({"ideals", "B", "2", "--out", path.string()});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), read_file(std::filesystem::path(BOREL_GOLDEN_DIR) / "ideals_B2.txt"));
  std::filesystem::remove(path);
}

TEST(CliTest, IdealsJsonRoundTrip) {
  for (auto [family, rank] : {std::pair{"B", 3}, std::pair{"G", 2}, std::pair{"D", 4}}) {
    const auto r = invoke({"ideals", family, std::to_string(rank), "--format", "json"});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    const auto doc = json_io::json::parse(r.out);
    const RootSystem rs(parse_family(family), rank);
    std::vector<MonomialIdeal> read;
    for (const auto& j : doc.at("ideals")) read.push_back(json_io::ideal_from_json(j, rs));
    EXPECT_EQ(read, enumerate_nilradical_ideals(rs));
    EXPECT_EQ(doc.at("counts").at("total_nonzero").get<std::size_t>(), read.size());
  }
}

TEST(CliTest, ClassifyJsonKernelRoundTrip) {
  const RootSystem rs(Family::G, 2);
  const auto r = invoke({"classify", "G", "2", "--format", "json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto doc = json_io::json::parse(r.out);
  const auto expected = full_ideal_classification(rs);
  ASSERT_EQ(doc.at("ideals").size(), expected.entries.size());
  for (std::size_t i = 0; i < expected.entries.size(); ++i) {
    const auto& j = doc.at("ideals")[i];
    EXPECT_EQ(json_io::ideal_from_json(j, rs), expected.entries[i].ideal);
    const auto kernel = json_io::kernel_from_json(j.at("kernel_basis"), rs.cartan().rows());
    EXPECT_EQ(kernel.vectors, expected.entries[i].kernel.vectors);
    EXPECT_EQ(j.at("kernel_dimension").get<int>(), expected.entries[i].kernel.dimension());
    EXPECT_EQ(j.at("mixed").get<bool>(), expected.entries[i].mixed);
  }
}

TEST(CliTest, UnicodeRendering) {
  const auto r = invoke({"ideals", "G", "2", "--unicode"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("3α₁+2α₂"), std::string::npos) << r.out;
}

TEST(JsonIoTest, RejectsNonRoots) {
  const RootSystem rs(Family::A, 2);
  EXPECT_THROW(json_io::ideal_from_json(json_io::json::parse("[[1,1],[2,0]]"), rs), InvalidInput);
  EXPECT_THROW(json_io::ideal_from_json(json_io::json::parse("[[1,0]]"), rs), InvalidInput);
  EXPECT_THROW(json_io::kernel_from_json(json_io::json::parse("[[1,2,3]]"), 2), InvalidInput);
}

} // namespace
} // namespace borel::cli
