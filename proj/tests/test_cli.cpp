#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bowvar/cli.hpp"

namespace {

using nlohmann::json;

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = bowvar::cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

constexpr const char* kMixed = "/2\\2/2\\4/3/3/4\\3/2\\2\\";

}  // namespace

TEST_CASE("cli: parse echoes the canonical diagram and charges") {
  const RunResult r = run({"parse", kMixed});
  CHECK(r.code == 0);
  CHECK(r.out.find(kMixed) != std::string::npos);
  CHECK(r.out.find("row charges: 2 1 1 2 3 2") != std::string::npos);
  CHECK(r.out.find("col charges: 5 2 2 0 2") != std::string::npos);
  CHECK(r.out.find("/2/3/4/6/9/11\\6\\4\\2\\2\\") != std::string::npos);
  CHECK(r.err.empty());

  // The alias alphabet parses to the same canonical text.
  const RunResult alias = run({"parse", "s2b2s2b4s3s3s4b3s2b2b"});
  CHECK(alias.code == 0);
  CHECK(alias.out == r.out);
}

TEST_CASE("cli: domain errors exit 1 and name the invariant") {
  const RunResult r = run({"parse", "/2x\\"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("MalformedDiagram") != std::string::npos);

  const RunResult range = run({"weights", kMixed, "--fixed-point", "999"});
  CHECK(range.code == 1);
  CHECK(range.err.find("out of range") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"parse"}).code == 2);                                   // missing diagram
  CHECK(run({"curves", kMixed}).code == 2);                          // missing --fixed-point
  CHECK(run({"parse", kMixed, "--format", "yaml"}).code == 2);       // bad format
  CHECK(run({"fixed-points", kMixed, "--format", "dot"}).code == 2); // dot is skeleton-only
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"skeleton", "--help"}).code == 0);
}

TEST_CASE("cli: weights agree with the oracle on every point") {
  const RunResult r = run({"weights", "/2/3/5\\3\\2\\", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("point 3: 6 weights") != std::string::npos);
}

TEST_CASE("cli: the sixteen reference weights are printed") {
  const RunResult r = run({"weights", kMixed, "--fixed-point", "108"});
  CHECK(r.code == 0);
  CHECK(r.out.find("16 weights") != std::string::npos);
  CHECK(r.out.find("u3^-1*u5\n") != std::string::npos);
  CHECK(r.out.find("u2*u5^-1*h^4") != std::string::npos);
}

TEST_CASE("cli: fixed point selection by subset alias") {
  const RunResult by_label = run({"curves", "/1/2/3/4/5\\2\\", "--fixed-point", "13", "--label"});
  CHECK(by_label.code == 0);
  CHECK(by_label.out.find("point 13") != std::string::npos);
  CHECK(by_label.out.find("endpoint 23") != std::string::npos);
  CHECK(by_label.out.find("available 1, required 2") != std::string::npos);

  // Without --label the same argument is an out-of-range index.
  CHECK(run({"curves", "/1/2/3/4/5\\2\\", "--fixed-point", "13"}).code == 1);
}

TEST_CASE("cli: json outputs parse and carry the documented fields") {
  const RunResult fp = run({"fixed-points", "/1/2/3/4/5\\2\\", "--format", "json"});
  CHECK(fp.code == 0);
  const json jfp = json::parse(fp.out);
  CHECK(jfp["count"] == 10);
  CHECK(jfp["points"].size() == 10);
  CHECK(jfp["points"][1]["label"] == "13");
  CHECK(jfp["points"][1]["bits"][0] == json::array({0, 1}));

  const json jw = json::parse(run({"weights", "/2/3/5\\3\\2\\", "--format", "json"}).out);
  CHECK(jw["count"] == 5);
  CHECK(jw["points"][2]["weights"].size() == 6);

  const json jc =
      json::parse(run({"curves", "/2/3/5\\3\\2\\", "--fixed-point", "3", "--format", "json"}).out);
  CHECK(jc["curves"].size() == 6);
  CHECK(jc["blocked"].size() == 1);
  CHECK(jc["blocked"][0]["required"] == 2);

  const json js = json::parse(run({"skeleton", "/1/2/3/4/5\\2\\", "--format", "json"}).out);
  CHECK(js["fixed_points"].size() == 10);
  CHECK(js["edges"].size() == 14);
  CHECK(js["rays"].size() == 12);
  // Endpoints in JSON are 1-based indices into the fixed-point list.
  CHECK(js["edges"][0]["p1"] == 1);

  const json jst = json::parse(run({"selftest", "--count", "4", "--format", "json"}).out);
  CHECK(jst["ok"] == true);
  CHECK(jst["suites"].size() == 11);
}

TEST_CASE("cli: dot export draws nodes, edges, and dangling rays") {
  const RunResult r = run({"skeleton", "/1/2\\1\\", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.find("graph skeleton {") != std::string::npos);
  CHECK(r.out.find("p1 -- p2") != std::string::npos);
  CHECK(r.out.find("style=dashed") != std::string::npos);
}

TEST_CASE("cli: selftest reports per-suite counts and exits 0") {
  const RunResult r = run({"selftest", "--count", "6", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite butterfly_oracle: OK") != std::string::npos);
  CHECK(r.out.find("suite surgery_oracle: OK") != std::string::npos);
  CHECK(r.out.find("selftest: OK") != std::string::npos);

  const RunResult skip = run({"selftest", "--count", "4", "--skip-surgery-oracle"});
  CHECK(skip.code == 0);
  CHECK(skip.out.find("surgery_oracle") == std::string::npos);
}

TEST_CASE("cli: output is byte-deterministic") {
  const std::vector<std::vector<std::string>> invocations = {
      {"skeleton", kMixed},
      {"weights", kMixed, "--fixed-point", "all"},
      {"selftest", "--count", "5", "--seed", "11"},
  };
  for (const auto& argv : invocations) {
    const RunResult first = run(argv);
    const RunResult second = run(argv);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
  }
}

TEST_CASE("cli: separate and hw expose the transition trace") {
  const RunResult sep = run({"separate", kMixed});
  CHECK(sep.code == 0);
  CHECK(sep.out.find("sigma: 5 4 1 0 0") != std::string::npos);

  const RunResult hw = run({"hw", kMixed, "--at", "1"});
  CHECK(hw.code == 0);
  CHECK(hw.out.find("\\1/2/2\\4/3/3/4\\3/2\\2\\") != std::string::npos);

  const RunResult bad = run({"hw", "/2/3\\", "--at", "1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("SameKind") != std::string::npos);
}
