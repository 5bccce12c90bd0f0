#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "adhm/cli.hpp"
#include "adhm/io.hpp"
#include "adhm/strata.hpp"

using namespace adhm;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const char* const kOnePoint =
    R"({"c":1,"r":1,"A":[["0"]],"B":[["0"]],"I":[["1"]],"J":[["0"]]})";
const char* const kNonSolution =
    R"({"c":1,"r":1,"A":[["0"]],"B":[["0"]],"I":[["1"]],"J":[["1"]]})";

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    write_file(path, content);
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("datum serialization round trip") {
  Rng rng(71);
  for (std::size_t c = 0; c <= 3; ++c) {
    for (std::size_t r = 1; r <= 2; ++r) {
      AdhmDatum x(c, r, random_matrix(c, c, 9, rng), random_matrix(c, c, 9, rng),
                  random_matrix(c, r, 9, rng), random_matrix(r, c, 9, rng));
      if (c > 0) x.A.at(0, 0) = Rational(5, 3);  // exercise fractions
      CHECK(parse_datum(serialize_datum(x)) == x);
    }
  }
}

TEST_CASE("parse errors name the offending location") {
  CHECK_THROWS_WITH_AS(parse_datum(R"({"c":1,"r":1,"A":[["0"]],"I":[["1"]],"J":[["0"]]})"),
                       doctest::Contains("B"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_datum(R"({"c":2,"r":1,"A":[["0"]],"B":[["0","0"],["0","0"]],"I":[["1"],["0"]],"J":[["0","0"]]})"),
      doctest::Contains("A"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_datum(R"({"c":1,"r":1,"A":[["0"]],"B":[["0"]],"I":[["1/0"]],"J":[["0"]]})"),
      doctest::Contains("I"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_datum("not json at all"), doctest::Contains("invalid JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_datum(R"({"r":1,"A":[],"B":[],"I":[],"J":[]})"),
                       doctest::Contains("c"), std::invalid_argument);
}

TEST_CASE("matrix json uses rational strings") {
  Matrix m(1, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(-3);
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == R"([["1/2","-3"]])");
}

TEST_CASE("text rendering is alphabetical") {
  Json report;
  report["zeta"] = 1;
  report["alpha"] = "x";
  CHECK(render_text(report) == "alpha: x\nzeta: 1\n");
}

TEST_CASE("support point formatting") {
  CHECK(format_point(SupportPoint{Rational(1, 2), Rational(-3), 2}) == "(1/2,-3) x2");
}

TEST_CASE("cli help and usage errors") {
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"--help"}).out.find("check") != std::string::npos);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"check"}).code == 2);                      // missing --in
  CHECK(cli({"check", "--bogus", "x"}).code == 2);      // unknown flag
  CHECK(cli({"check", "--in", "no_such_file.json"}).code == 2);
}

TEST_CASE("cli check distinguishes solutions") {
  const TempFile good("cli_check_good.json", kOnePoint);
  const TempFile bad("cli_check_bad.json", kNonSolution);

  const CliResult ok = cli({"check", "--in", good.path});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("solution: true") != std::string::npos);

  const CliResult fail = cli({"check", "--in", bad.path});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("solution: false") != std::string::npos);
  CHECK(fail.out.find(R"(mu: [["1"]])") != std::string::npos);  // the defect itself is shown

  const TempFile broken("cli_check_broken.json", "{");
  const CliResult error = cli({"check", "--in", broken.path});
  CHECK(error.code == 2);
  CHECK(error.err.find("error") != std::string::npos);
}

TEST_CASE("cli classify emits json on request") {
  const TempFile file("cli_classify.json", kOnePoint);
  const CliResult text = cli({"classify", "--in", file.path});
  CHECK(text.code == 0);
  CHECK(text.out.find("stable: true") != std::string::npos);

  const CliResult json = cli({"classify", "--in", file.path, "--json"});
  const Json parsed = Json::parse(json.out);
  CHECK(parsed.at("is_solution").get<bool>());
  CHECK(parsed.at("stable").get<bool>());
  CHECK(!parsed.at("costable").get<bool>());
  CHECK(parsed.at("sigma_dim").get<std::size_t>() == 1);
}

TEST_CASE("cli sample is seeded and honors the stratum request") {
  const CliResult first = cli({"sample", "--r", "2", "--c", "3", "--seed", "7", "--count", "2"});
  REQUIRE(first.code == 0);
  const CliResult second = cli({"sample", "--r", "2", "--c", "3", "--seed", "7", "--count", "2"});
  CHECK(first.out == second.out);
  const CliResult other = cli({"sample", "--r", "2", "--c", "3", "--seed", "8", "--count", "2"});
  CHECK(first.out != other.out);

  std::istringstream lines(first.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const AdhmDatum x = parse_datum(line);
    CHECK(is_solution(x));
    CHECK(is_stable(x));
    ++count;
  }
  CHECK(count == 2);

  const CliResult stratum = cli({"sample", "--r", "2", "--c", "3", "--s", "1", "--seed", "7"});
  REQUIRE(stratum.code == 0);
  std::istringstream stratum_lines(stratum.out);
  REQUIRE(std::getline(stratum_lines, line));
  CHECK(stabilizing_subspace(parse_datum(line)).dim() == 1);

  CHECK(cli({"sample", "--r", "2", "--c", "3", "--s", "5"}).code == 2);
  CHECK(cli({"sample", "--r", "0", "--c", "3"}).code == 2);
}

TEST_CASE("cli sample respects the seed environment variable") {
  REQUIRE(setenv("ADHM_SEED", "7", 1) == 0);
  const CliResult from_env = cli({"sample", "--r", "1", "--c", "2"});
  REQUIRE(unsetenv("ADHM_SEED") == 0);
  const CliResult from_flag = cli({"sample", "--r", "1", "--c", "2", "--seed", "7"});
  CHECK(from_env.code == 0);
  CHECK(from_env.out == from_flag.out);
}

TEST_CASE("cli sample writes files on request") {
  const CliResult result = cli({"sample", "--r", "1", "--c", "2", "--seed", "3", "--count", "2",
                                "--out", "cli_sample_test"});
  REQUIRE(result.code == 0);
  CHECK(result.out.find("wrote cli_sample_test_0.json") != std::string::npos);
  for (const char* path : {"cli_sample_test_0.json", "cli_sample_test_1.json"}) {
    const AdhmDatum x = load_datum(path);
    CHECK(is_solution(x));
    std::remove(path);
  }
}

TEST_CASE("cli audit dimensions") {
  const CliResult result = cli({"audit-dimensions", "--rmax", "2", "--cmax", "3"});
  CHECK(result.code == 0);
  CHECK(result.out.find("all rows consistent") != std::string::npos);

  const CliResult json = cli({"audit-dimensions", "--rmax", "1", "--cmax", "1", "--json"});
  const Json rows = Json::parse(json.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 3);  // (1,0,0), (1,1,0), (1,1,1)
}

TEST_CASE("cli monad subcommands") {
  const TempFile file("cli_monad.json", kOnePoint);

  const CliResult h0 = cli({"monad", "--in", file.path, "h0", "--n", "1"});
  CHECK(h0.code == 0);
  CHECK(h0.out.find("sections: 2") != std::string::npos);

  const CliResult fiber =
      cli({"monad", "--in", file.path, "fiber", "--point", "0,0,1"});
  CHECK(fiber.code == 0);
  CHECK(fiber.out.find("alpha_injective: false") != std::string::npos);

  CHECK(cli({"monad", "--in", file.path, "fiber", "--point", "1,2"}).code == 2);
  CHECK(cli({"monad", "--in", file.path, "fiber", "--point", "0,0,0"}).code == 2);
  CHECK(cli({"monad", "--in", file.path}).code == 2);  // missing subcommand

  const CliResult support = cli({"monad", "--in", file.path, "support", "--json"});
  CHECK(support.code == 0);
  const Json parsed = Json::parse(support.out);
  CHECK(parsed.at("singular_support").at("points").size() == 0);
  CHECK(parsed.at("non_costable_locus").at("points").size() == 1);

  const CliResult invariants = cli({"monad", "--in", file.path, "invariants"});
  CHECK(invariants.code == 0);
  CHECK(invariants.out.find("rank: 1") != std::string::npos);
  CHECK(invariants.out.find("charge: 1") != std::string::npos);
  CHECK(invariants.out.find("length: 0") != std::string::npos);

  // The quadratic equation is enforced for monad reports.
  const TempFile bad("cli_monad_bad.json", kNonSolution);
  CHECK(cli({"monad", "--in", bad.path, "invariants"}).code == 2);
}

TEST_CASE("cli uhlenbeck") {
  Rng rng(72);
  const AdhmDatum x = sample_stable(2, 3, rng);
  const TempFile file("cli_uhlenbeck.json", serialize_datum(x));

  const CliResult result = cli({"uhlenbeck", "--in", file.path, "--json"});
  REQUIRE(result.code == 0);
  const Json parsed = Json::parse(result.out);
  CHECK(parsed.at("regular_size").get<std::size_t>() == 0);
  CHECK(parsed.at("cloud_size").get<std::size_t>() == 3);
  CHECK(parsed.at("points").size() == 3);

  // The regular part can be split off into its own loadable datum file.
  const CliResult split =
      cli({"uhlenbeck", "--in", file.path, "--out", "cli_uhlenbeck_regular.json"});
  REQUIRE(split.code == 0);
  const AdhmDatum regular = load_datum("cli_uhlenbeck_regular.json");
  CHECK(regular.c == 0);
  CHECK(is_regular(regular));
  std::remove("cli_uhlenbeck_regular.json");

  // Unstable input is a domain error.
  const TempFile dead("cli_uhlenbeck_dead.json",
                      R"({"c":1,"r":1,"A":[["0"]],"B":[["0"]],"I":[["0"]],"J":[["0"]]})");
  CHECK(cli({"uhlenbeck", "--in", dead.path}).code == 2);
}

TEST_CASE("cli borderline family reports") {
  const CliResult result = cli({"remark-experiment"});
  CHECK(result.code == 0);
  CHECK(result.out.find("family one") != std::string::npos);
  CHECK(result.out.find("family two") != std::string::npos);
  CHECK(result.out.find("stabilizer_basis") != std::string::npos);
  CHECK(result.out.find("witness_found: true") != std::string::npos);
  CHECK(result.out.find("witness_fixes_datum: true") != std::string::npos);
}
