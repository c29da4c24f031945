#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "hbe/cli.hpp"

using namespace hbe;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<const char *> args) {
  args.insert(args.begin(), "hbe");
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

Outcome run_config(const std::vector<const char *> &args, const Catalog &catalog) {
  std::vector<const char *> argv = {"hbe"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const auto parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
  REQUIRE(parsed.config);
  const int code = cli::run(*parsed.config, catalog, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("list prints every identity") {
  const auto r = run_cli({"list"});
  CHECK(r.code == cli::kExitPass);
  for (const auto &d : registry()) {
    CHECK(r.out.find(d.id) != std::string::npos);
  }
}

TEST_CASE("eval") {
  CHECK(run_cli({"eval", "--sum", "U", "--d", "1", "--n", "2"}).out == "22/3\n");
  CHECK(run_cli({"eval", "--sum", "V", "--d", "0", "--n", "2"}).out == "6\n");
  CHECK(run_cli({"eval", "--identity", "I-cb0", "--n", "2"}).out == "17/3\n");
  CHECK(run_cli({"eval", "--identity", "I-thm21", "--side", "rhs", "--m", "1/2", "--n", "0"}).out ==
        "2 - 2*ln2\n");
}

TEST_CASE("fit prints the d = 2 coefficients") {
  const auto r = run_cli({"fit", "--d", "2"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("-1") != std::string::npos);
  CHECK(r.out.find("346") != std::string::npos);
  CHECK(r.out.find("105") != std::string::npos);
}

TEST_CASE("verify exits 0 on a clean run") {
  const auto r = run_cli({"verify", "--identity", "I-thm21", "--n-max", "12", "--m", "1/2", "--m",
                          "3/2", "--m", "4/2"});
  CHECK(r.code == cli::kExitPass);
}

TEST_CASE("verify exits 1 when a closed form is wrong") {
  Catalog broken;
  Identity bad = default_catalog().get("I-cb0");
  const auto good_rhs = bad.rhs;
  bad.rhs = [good_rhs](const EvalPoint &p) {
    SideValue v = good_rhs(p);
    if (p.n == 7) {
      v.value += SymValue(Rational(1, 1000));
    }
    return v;
  };
  broken.add(bad);
  const auto r = run_config({"verify", "--identity", "I-cb0", "--n-max", "10"}, broken);
  CHECK(r.code == cli::kExitMismatch);
  CHECK(r.out.find("7") != std::string::npos);

  const auto j = run_config({"verify", "--identity", "I-cb0", "--n-max", "10", "--format", "json",
                             "--no-timing"},
                            broken);
  CHECK(j.code == cli::kExitMismatch);
  const auto doc = nlohmann::json::parse(j.out);
  int failures = 0;
  for (const auto &row : doc) {
    failures += row.at("equal").get<bool>() ? 0 : 1;
  }
  CHECK(failures == 1);
}

TEST_CASE("json output is byte-identical without timing") {
  const std::vector<const char *> args = {"verify",  "--identity", "I-thm41", "--n-max", "15",
                                          "--m",     "0/2",        "--m",     "3/2",     "--format",
                                          "json",    "--no-timing"};
  const auto a = run_cli(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto b = run_cli(threaded);
  CHECK(a.code == cli::kExitPass);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  REQUIRE(doc.is_array());
  CHECK(doc.front().at("t_lhs_ns").is_null());
}

TEST_CASE("csv output has the documented header") {
  const auto r = run_cli({"verify", "--identity", "I-riordan", "--n-max", "3", "--format", "csv"});
  CHECK(r.out.rfind(std::string(kReportCsvHeader) + "\n", 0) == 0);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run_cli({"verify", "--identity", "I-nope"}).code == cli::kExitUsage);
  CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"eval", "--sum", "W", "--n", "2"}).code == cli::kExitUsage);
  CHECK(run_cli({"verify", "--m", "-3/2"}).code == cli::kExitUsage);
  CHECK(run_cli({"eval", "--identity", "I-chujin", "--m", "0", "--n", "2"}).code ==
        cli::kExitUsage);
  CHECK(run_cli({"fit", "--d", "0"}).code == cli::kExitUsage);
}

TEST_CASE("numeric with explicit points") {
  const auto r = run_cli({"numeric", "--identity", "I-thm21", "--m", "0.37", "--n", "6"});
  CHECK(r.code == cli::kExitPass);
}
