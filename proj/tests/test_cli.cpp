#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "lerch/engine.hpp"

using lerch::Complex;
using nlohmann::json;
namespace cli = lerch::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Complex complex_of(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

}  // namespace

TEST_CASE("parse_complex") {
  CHECK(cli::parse_complex("0.5,0") == Complex(0.5, 0));
  CHECK(cli::parse_complex("-2,-1e-3") == Complex(-2, -1e-3));
  CHECK(cli::parse_complex("3") == Complex(3, 0));
  CHECK_FALSE(cli::parse_complex("1,").has_value());
  CHECK_FALSE(cli::parse_complex("a,b").has_value());
  CHECK_FALSE(cli::parse_complex("1,2,3").has_value());
  CHECK_FALSE(cli::parse_complex("").has_value());
}

TEST_CASE("csv quoting") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("eval") {
  auto r = run({"eval", "--z", "0.5,0", "--n", "1", "--a", "1,0", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(std::abs(complex_of(j["value"]) - 2.0 * std::log(2.0)) <= 1e-10);
  CHECK(j["method"] == "series");

  r = run({"eval", "--z", "0,0", "--n", "3", "--a", "2,0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(complex_of(json::parse(r.out)["value"]) == Complex(0.125, 0));

  r = run({"eval", "--z", "1,0", "--n", "1", "--a", "0.5,0"});
  CHECK(r.code == cli::kExitDomain);
  CHECK(r.err.find("singular stratum z=1, n=1") != std::string::npos);

  // Negative components parse as values, not as flags.
  r = run({"eval", "--z", "-2,0", "--n", "1", "--a", "1,0", "--format", "csv"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rfind("z_re,z_im,n,a_re,a_im,value_re", 0) == 0);
  CHECK(rows[1].find("integer-a") != std::string::npos);

  r = run({"eval", "--z", "0.5,0", "--n", "2", "--a", "0.3,0", "--method", "pv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("method    = pv") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"eval", "--z", "0.5,0", "--n", "1"}).code == cli::kExitUsage);
  CHECK(run({"eval", "--z", "zero", "--n", "1", "--a", "1"}).code == cli::kExitUsage);
  CHECK(run({"eval", "--z", "0.5", "--n", "1", "--a", "1", "--method", "magic"}).code ==
        cli::kExitUsage);
  CHECK(run({"eval", "--z", "0.5", "--n", "1", "--a", "1", "--tol", "-1"}).code ==
        cli::kExitUsage);
  CHECK(run({"check", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sweep", "--help"}).code == 0);
}

TEST_CASE("LERCH_TOL overrides the default tolerance") {
  ::setenv("LERCH_TOL", "1e-4", 1);
  auto loose = run({"eval", "--z", "0.9,0", "--n", "1", "--a", "1", "--format", "json"});
  ::setenv("LERCH_TOL", "not-a-number", 1);
  auto broken = run({"eval", "--z", "0.9,0", "--n", "1", "--a", "1"});
  ::unsetenv("LERCH_TOL");
  auto tight = run({"eval", "--z", "0.9,0", "--n", "1", "--a", "1", "--format", "json"});
  CHECK(loose.code == 0);
  CHECK(broken.code == cli::kExitUsage);
  CHECK(json::parse(loose.out)["work"] < json::parse(tight.out)["work"]);
  CHECK(cli::default_tolerance() == 1e-10);
}

TEST_CASE("compare") {
  auto r = run({"compare", "--z", "0,0.5", "--n", "1", "--a", "0.3,0", "--format", "json"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(json::parse(rows[0])["method"] == "series");
  CHECK(json::parse(rows[1])["method"] == "integral");
  CHECK(json::parse(rows[2])["method"] == "pv");
  CHECK(json::parse(rows[3])["max_deviation"].get<double>() <= 1e-9);

  r = run({"compare", "--z", "0,2", "--n", "2", "--a", "0.25,0", "--format", "json"});
  CHECK(r.code == 0);
  rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(json::parse(rows[0])["method"] == "integral");
  CHECK(json::parse(rows[1])["method"] == "inverse");

  r = run({"compare", "--z", "0.5,0", "--n", "2", "--a", "-0.5,0", "--format", "csv"});
  CHECK(r.code == 0);
  rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].rfind("series,", 0) == 0);
  CHECK(rows[2].rfind("pv,", 0) == 0);
  CHECK(rows[3].rfind("max-deviation,", 0) == 0);

  // Nothing admits z = 3 on the cut.
  CHECK(run({"compare", "--z", "3,0", "--n", "2", "--a", "0.5,0"}).code == cli::kExitDomain);
}

TEST_CASE("check emits JSON lines") {
  auto r = run({"check", "--suite", "reflections", "--grid", "20"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 41);
  bool spot = false;
  for (const auto& row : rows) {
    const auto j = json::parse(row);
    CHECK(j["pass"] == true);
    if (j["identity"] == "hurwitz_spot") spot = true;
  }
  CHECK(spot);

  r = run({"check", "--suite", "symmetry", "--grid", "50", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 50);
  r = run({"check", "--suite", "theorem1", "--grid", "20"});
  CHECK(r.code == 0);
  for (const auto& row : lines(r.out)) CHECK(json::parse(row)["residual"].get<double>() <= 1e-8);
}

TEST_CASE("sweep") {
  const auto dir = std::filesystem::temp_directory_path() / "lerch_cli_test";
  std::filesystem::create_directories(dir);

  SUBCASE("grid inside the disc is series-routed") {
    const auto path = (dir / "disc.csv").string();
    auto r = run({"sweep", "--n", "2", "--r-min", "0.05", "--r-max", "0.9", "--r-steps", "10",
                  "--arg-min", "-3", "--arg-max", "3", "--arg-steps", "10", "--a-re-min",
                  "0.5", "--a-re-max", "0.5", "--out", path});
    CHECK(r.code == 0);
    const auto rows = lines(slurp(path));
    REQUIRE(rows.size() == 101);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].find(",series,") != std::string::npos);
      CHECK(rows[i].back() == '\r');  // RFC 4180 line ends
    }
  }
  SUBCASE("ring outside the disc is inverse-routed and cross-checked") {
    const double step = 2.0 * lerch::kPi / 16.0;
    auto r = run({"sweep", "--n", "3", "--r-min", "2", "--r-max", "2", "--arg-min",
                  std::to_string(step - lerch::kPi), "--arg-max",
                  std::to_string(lerch::kPi - 0.5 * step), "--arg-steps", "16",
                  "--a-re-min", "0.4", "--a-re-max", "0.4", "--cross-check", "--format",
                  "json"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 16);
    for (const auto& row : rows) {
      const auto j = json::parse(row);
      CHECK(j["method"] == "inverse");
      CHECK(j["check"] == "ok");
    }
  }
  SUBCASE("empty grid writes only the header") {
    const auto path = (dir / "empty.csv").string();
    auto r = run({"sweep", "--n", "2", "--r-steps", "0", "--out", path});
    CHECK(r.code == 0);
    CHECK(slurp(path) ==
          "z_re,z_im,n,a_re,a_im,value_re,value_im,err,method,work,converged,check,"
          "check_method,error\r\n");
  }
  SUBCASE("domain errors stay in their rows, quoted") {
    auto r = run({"sweep", "--n", "1", "--r-min", "1", "--r-max", "1"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].find("\"DomainError: singular stratum z=1, n=1") != std::string::npos);
  }
  SUBCASE("json output round-trips") {
    auto r = run({"sweep", "--n", "2", "--random", "25", "--seed", "5", "--r-min", "0.1",
                  "--r-max", "3", "--arg-min", "-3", "--arg-max", "3", "--a-re-min", "0.1",
                  "--a-re-max", "1.9", "--a-im-min", "-0.5", "--a-im-max", "0.5", "--format",
                  "json"});
    CHECK(r.code == 0);
    for (const auto& row : lines(r.out)) {
      const auto j = json::parse(row);
      CHECK(j.dump() == row);
      if (j.contains("value")) {
        const Complex v = complex_of(j["value"]);
        const auto direct = lerch::phi({complex_of(j["z"]), 2, complex_of(j["a"])});
        CHECK(v == direct.value);
      }
    }
  }
  SUBCASE("byte-identical reruns") {
    const std::vector<std::string> args = {"sweep", "--n", "3", "--random", "40", "--seed",
                                           "9", "--r-min", "0.1", "--r-max", "4",
                                           "--arg-min", "-3.1", "--arg-max", "3.1",
                                           "--a-re-min", "0.05", "--a-re-max", "2"};
    CHECK(run(args).out == run(args).out);
  }
  SUBCASE("unwritable output path") {
    auto r = run({"sweep", "--n", "2", "--out", "/nonexistent-dir/x.csv"});
    CHECK(r.code == cli::kExitUsage);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = LERCH_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("eval --z 0.5,0 --n 1 --a 1,0") == 0);
  CHECK(status("eval --z 0.5,0 --n 1") == 1);
  CHECK(status("eval --z 1,0 --n 1 --a 0.5,0") == 2);
  CHECK(status("compare --z 0.5,0.5 --n 2 --a 0.3,0") == 0);
}
