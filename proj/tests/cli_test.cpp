#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "symdeg/json_io.hpp"

namespace symdeg {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "symdeg");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("symdeg_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseRange, Forms) {
  EXPECT_EQ(cli::parse_range("3..6"), std::make_pair(3, 6));
  EXPECT_EQ(cli::parse_range("4"), std::make_pair(4, 4));
  EXPECT_THROW((void)cli::parse_range("6..3"), std::invalid_argument);
  EXPECT_THROW((void)cli::parse_range("a..b"), std::invalid_argument);
}

TEST(Cli, DegreeJson) {
  const Result r = run({"degree", "--property", "ed", "--n", "2", "--m", "2", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = io::Json::parse(r.out);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["eps_min"][1]["eps_min"], "1/2");
}

TEST(Cli, DegreeAlwaysOne) {
  const Result r = run({"degree", "--property", "always-one", "--n", "3", "--m", "3", "--json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(io::Json::parse(r.out)["degree"], 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"degree", "--property", "ed", "--n", "2", "--m", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"degree", "--property", "ed", "--n", "2", "--m", "2", "--eps", "1/2"}).code, cli::kUsage);
  EXPECT_EQ(run({"degree", "--property", "nope", "--n", "2", "--m", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"degree", "--n", "2", "--m", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"sweep", "--property", "ed", "--n", "5", "--m", "6..3"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, SweepFlat) {
  const Result r = run({"sweep", "--property", "ed", "--n", "5", "--m", "5..8", "--assert-flat"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "m,degree,query_lower_bound,eps_min");
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.substr(0, 2), std::to_string(5 + rows) + ",");
    EXPECT_EQ(line.substr(2, 4), "4,2,");
    ++rows;
  }
  EXPECT_EQ(rows, 4);
}

TEST(Cli, SweepCollisionAndDeterminism) {
  const std::vector<std::string> args{"sweep", "--property", "collision", "--n", "4", "--m", "4..6"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 4);
}

TEST(Cli, PropertyFile) {
  TempDir dir;
  const auto path = dir.write("p.json", R"({"n":2,"classes":[{"partition":[2],"label":"Zero"},{"partition":[1,1],"label":"One"}]})");
  const Result r = run({"degree", "--property-file", path, "--n", "2", "--m", "3", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(io::Json::parse(r.out)["degree"], 2);
}

TEST(Cli, TransformPipeline) {
  TempDir dir;
  const auto y = dir.write("y.json", R"({"namespace":"y","n":2,"m":2,"terms":[
      {"factors":[[1,1],[2,2]],"coeff":"1"},{"factors":[[1,2],[2,1]],"coeff":"1"}]})");
  ASSERT_EQ(run({"symmetrize", "-i", y, "-o", dir.file("z.json")}).code, cli::kOk);
  const auto z = io::sym_polynomial_from_json(io::read_file(dir.file("z.json")));
  EXPECT_EQ(z, SymPolynomial::basis(2, Partition{1, 1}));

  ASSERT_EQ(run({"extend", "-i", dir.file("z.json"), "--m", "4", "-o", dir.file("z4.json")}).code, cli::kOk);
  ASSERT_EQ(run({"restrict", "-i", dir.file("z4.json"), "--n", "2", "-o", dir.file("z2.json")}).code, cli::kOk);
  EXPECT_EQ(slurp(dir.file("z2.json")), slurp(dir.file("z.json")));

  EXPECT_EQ(run({"verify", "-i", y, "--property", "ed", "--eps", "0"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "-i", dir.file("z4.json"), "--property", "ed", "--n", "2", "--eps", "0"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "-i", dir.file("z4.json"), "--property", "collision", "--n", "2", "--eps", "0"}).code,
            cli::kOk);
  const auto half = dir.write("h.json", R"({"namespace":"z","m":2,"terms":[{"partition":[],"coeff":"1/2"}]})");
  EXPECT_EQ(run({"verify", "-i", half, "--property", "ed", "--n", "2"}).code, cli::kCheckFailed);

  const Result t = run({"transfer", "-i", y, "--property", "ed", "--m", "3", "--eps", "0", "--json"});
  ASSERT_EQ(t.code, cli::kOk) << t.err;
  EXPECT_EQ(io::Json::parse(t.out)["status"], "verified");
}

TEST(Cli, AndOr) {
  TempDir dir;
  const auto x = dir.write("x.json", R"({"namespace":"x","n":2,"terms":[{"factors":[1,4],"coeff":"1"}]})");
  const Result r = run({"andor-reduce", "-i", x, "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto y = io::y_polynomial_from_json(io::Json::parse(r.out));
  YPolynomial expected({2, 2});
  expected.add_term(YMonomial{{1, 1}, {2, 2}}, Rational(1));
  EXPECT_EQ(y, expected);
  EXPECT_EQ(run({"andor-reduce", "-i", x, "--n", "3"}).code, cli::kUsage);
  const Result b = run({"andor-bound", "--n", "2", "--json"});
  ASSERT_EQ(b.code, cli::kOk);
  EXPECT_EQ(io::Json::parse(b.out)["andor_degree_lower_bound"], 2);
}

TEST(Cli, BudgetExit) {
  TempDir dir;
  const auto y = dir.write("one.json", R"({"namespace":"y","n":4,"m":4,"terms":[{"factors":[],"coeff":"1"}]})");
  ::setenv("SYMDEG_BUDGET", "10", 1);
  const Result r = run({"verify", "-i", y, "--property", "always-one"});
  ::unsetenv("SYMDEG_BUDGET");
  EXPECT_EQ(r.code, cli::kBudget);
  EXPECT_EQ(run({"verify", "-i", y, "--property", "always-one"}).code, cli::kOk);
}

}  // namespace
}  // namespace symdeg
