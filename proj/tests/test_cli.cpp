#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sproots/serialization.hpp"

namespace sproots {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SPROOTS_TEST_DATA) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sproots_test_" + name);
}

TEST(CliGenField, PrintsCanonicalField) {
  const Result r = run({"gen-field", "-n", "2"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.out, "{\n  \"n\": 2,\n  \"modulus_hex\": \"7\"\n}\n");
  EXPECT_EQ(run({"gen-field", "-n", "1"}).out, "{\n  \"n\": 1,\n  \"modulus_hex\": \"2\"\n}\n");
  EXPECT_EQ(run({"gen-field", "-n", "37"}).out, run({"gen-field", "-n", "37"}).out);
}

TEST(CliGenField, UsageErrors) {
  EXPECT_EQ(run({"gen-field", "-n", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"gen-field", "-n", "65"}).code, cli::kUsageError);
  EXPECT_EQ(run({"gen-field"}).code, cli::kUsageError);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(CliReduce, WritesReductionJson) {
  const Result r = run({"reduce"}, "p cnf 3 1\n1 2 3 0\n");
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  const ReductionOutput out = reduction_from_json(r.out);
  EXPECT_EQ(out.field().degree(), 3u);
  EXPECT_LE(out.poly.size(), 8u * 8u);
  EXPECT_NE(r.err.find("n=3"), std::string::npos);
  EXPECT_NE(r.err.find("bit_size="), std::string::npos);
}

TEST(CliReduce, PadsAndWritesToFile) {
  const auto path = temp_file("padded.json");
  const Result r = run({"reduce", "--out", path.string()}, "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 0\n");
  ASSERT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  const std::string text{std::istreambuf_iterator<char>(file), {}};
  const ReductionOutput out = reduction_from_json(text);
  EXPECT_EQ(out.field().degree(), 6u);
  EXPECT_EQ(out.provenance.s, 2u);
  std::filesystem::remove(path);
}

TEST(CliReduce, ParseErrorReportsLine) {
  const Result r = run({"reduce", data("width4.cnf")});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"reduce", data("does_not_exist.cnf")}).code, cli::kUsageError);
}

TEST(CliCountRoots, AcceptsPolynomialAndReductionDocuments) {
  const Result reduced = run({"reduce", data("x1_or_x2.cnf")});
  ASSERT_EQ(reduced.code, cli::kSuccess);
  const Result roots = run({"count-roots"}, reduced.out);
  EXPECT_EQ(roots.code, cli::kSuccess);
  EXPECT_EQ(roots.out, "3\n");

  const ReductionOutput out = reduction_from_json(reduced.out);
  EXPECT_EQ(run({"count-roots", "-"}, poly_to_json(out.poly)).out, "3\n");
}

TEST(CliCountRoots, OracleExamples) {
  const std::string field = R"({"field": {"n": 3, "modulus_hex": "b"}, "terms": )";
  EXPECT_EQ(run({"count-roots"}, field + "[]}").out, "8\n");
  EXPECT_EQ(run({"count-roots"}, field + R"([{"coeff_hex": "1", "exp": "0"}]})").out, "0\n");
  EXPECT_EQ(run({"count-roots"},
                field + R"([{"coeff_hex": "1", "exp": "1"}, {"coeff_hex": "1", "exp": "8"}]})")
                .out,
            "8\n");
}

TEST(CliCountRoots, GuardAndFormatErrors) {
  const Result r = run({"count-roots", data("n17_poly.json")});
  EXPECT_EQ(r.code, cli::kGuardExceeded);
  EXPECT_NE(r.err.find("17"), std::string::npos);
  EXPECT_EQ(run({"count-roots"}, "not json").code, cli::kUsageError);
}

TEST(CliCountSat, CountsAndGuards) {
  EXPECT_EQ(run({"count-sat"}, "p cnf 3 0\n").out, "8\n");
  EXPECT_EQ(run({"count-sat", data("single_clause.cnf")}).out, "7\n");
  EXPECT_EQ(run({"count-sat", data("unsat_x1.cnf")}).out, "0\n");
  EXPECT_EQ(run({"count-sat"}, "p cnf 25 1\n1 0\n").code, cli::kGuardExceeded);
}

TEST(CliVerify, Examples) {
  const Result empty = run({"verify", data("empty_v2.cnf")});
  EXPECT_EQ(empty.code, cli::kSuccess);
  EXPECT_NE(empty.out.find("models=4 roots=4 PASS"), std::string::npos) << empty.out;

  const Result single = run({"verify", data("single_clause.cnf")});
  EXPECT_EQ(single.code, cli::kSuccess);
  EXPECT_NE(single.out.find("models=7 roots=7 PASS"), std::string::npos);
  EXPECT_NE(single.out.find("models≡roots (mod 2)"), std::string::npos);

  const Result unsat = run({"verify", data("unsat_x1.cnf")});
  EXPECT_EQ(unsat.code, cli::kSuccess);
  EXPECT_NE(unsat.out.find("n=3"), std::string::npos);
  EXPECT_NE(unsat.out.find("models=0 roots=0 PASS"), std::string::npos);
}

TEST(CliVerify, RandomInstanceFromSeed) {
  const Result a = run({"verify", "--seed", "7"});
  EXPECT_EQ(a.code, cli::kSuccess) << a.out;
  EXPECT_EQ(a.out, run({"verify", "--seed", "7"}).out);
  EXPECT_NE(a.out, run({"verify", "--seed", "8"}).out);
  EXPECT_EQ(run({"verify"}).code, cli::kSuccess);
}

TEST(CliVerify, GuardAndMismatch) {
  EXPECT_EQ(run({"verify", data("seventeen_vars.cnf")}).code, cli::kGuardExceeded);
  const Result bad =
      run({"verify", data("x1_or_x2.cnf"), "--poly", data("x1_or_x2_corrupted.json")});
  EXPECT_EQ(bad.code, cli::kVerificationMismatch);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);

  const Result good = run({"reduce", data("x1_or_x2.cnf")});
  const auto path = temp_file("good.json");
  std::ofstream(path) << good.out;
  EXPECT_EQ(run({"verify", data("x1_or_x2.cnf"), "--poly", path.string()}).code, cli::kSuccess);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace sproots
