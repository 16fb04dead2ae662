// Copyright 2026 The artin-parabolic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "artin/artin_word.hpp"
#include "artin/cli.hpp"
#include "artin/presentation.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = artin::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(ARTIN_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(ARTIN_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("documented command examples") {
  const std::string a2 = data("a2.txt");
  Result r = run({"-p", a2, "retract", "--x", "a", "b a b^-1"});
  CHECK(r.status == 0);
  CHECK(r.out == "a^-1\n");

  r = run({"-p", a2, "reduce", "a a"});
  CHECK(r.status == 0);
  CHECK(r.out == "\n");

  r = run({"-p", a2, "--format", "json", "theorem", "--x", "a", "--y", "b",
           "b a"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["Yprime"] == nlohmann::json::array({"a"}));
  CHECK(j["gamma"] == "");
}

TEST_CASE("golden outputs") {
  const std::string a2 = data("a2.txt");
  const std::vector<std::string> trace = {
      "-p", a2, "--format", "json", "retract", "--x", "a", "b a b^-1",
      "--trace"};
  const Result r = run(trace);
  CHECK(r.status == 0);
  CHECK(r.out == golden("retract_a2_trace.json"));
  CHECK(run(trace).out == r.out);

  CHECK(run({"-p", a2, "--format", "json", "theorem", "--x", "a", "--y", "b",
             "b a"})
            .out == golden("theorem_a2.json"));
  CHECK(run({"-p", a2, "--format", "json", "transport", "--x", "a", "--y",
             "b", "a b a"})
            .out == golden("transport_a2.json"));
  CHECK(run({"-p", data("a3.txt"), "--format", "json", "--seed", "7",
             "generate", "--x-size", "2", "--y-size", "1", "--pad", "2",
             "--w-search-len", "5"})
            .out == golden("generate_a3_seed7.json"));
}

TEST_CASE("JSON words re-parse to the same values") {
  const std::string a3 = data("a3.txt");
  const artin::Presentation p = artin::parse_presentation(read_file(a3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<std::string> args = {
        "-p", a3, "--format", "json", "--seed", std::to_string(seed),
        "generate", "--x-size", "2", "--pad", "3"};
    const Result r = run(args);
    if (r.status != 0) continue;
    CHECK(run(args).out == r.out);
    const auto inst = nlohmann::json::parse(r.out);
    const std::string alpha = inst["alpha"];
    CHECK(artin::format_artin_word(p, artin::parse_artin_word(p, alpha)) ==
          alpha);

    std::string x, y;
    for (const auto& n : inst["X"])
      x += (x.empty() ? "" : ",") + n.get<std::string>();
    for (const auto& n : inst["Y"])
      y += (y.empty() ? "" : ",") + n.get<std::string>();
    const Result t = run({"-p", a3, "--format", "json", "theorem", "--x", x,
                          "--y", y, "--verify", alpha});
    CHECK(t.status == 0);
    const auto res = nlohmann::json::parse(t.out);
    const std::string gamma = res["gamma"];
    CHECK(artin::format_artin_word(p, artin::parse_artin_word(p, gamma)) ==
          gamma);
    CHECK(res["verification"]["support"]["status"] == "pass");
    CHECK(res["verification"]["coxeter_level"]["status"] == "pass");
    const std::string trace_word = res["audit"]["pi_of_beta1"];
    CHECK(artin::parse_artin_word(p, trace_word).size() <=
          res["audit"]["trace"].size());
  }
}

TEST_CASE("Coxeter commands") {
  const std::string a2 = data("a2.txt");
  CHECK(run({"-p", a2, "reduce", "a b a b"}).out == "b a\n");
  CHECK(run({"-p", a2, "length", "a b a b"}).out == "2\n");
  CHECK(run({"-p", a2, "descents", "b a"}).out == "left: b\nright: a\n");
  CHECK(run({"-p", a2, "iota", "b a b"}).out == "a b a\n");
  CHECK(run({"-p", a2, "theta", "b a b^-1"}).out == "a b a\n");
  CHECK(run({"-p", a2, "decompose", "--x", "a", "a b a"}).out ==
        "v: a\nw: b a\n");
  CHECK(run({"-p", a2, "double-coset", "--x", "a", "--y", "b", "a b a"}).out ==
        "u1: a\nw0: b a\nu2: \n");
  const Result e = run({"-p", a2, "--format", "json", "enumerate"});
  CHECK(nlohmann::json::parse(e.out)["count"] == 6);
  CHECK(nlohmann::json::parse(e.out)["finite"] == true);
  const Result inf =
      run({"-p", data("free3.txt"), "enumerate", "--cap", "5"});
  CHECK(inf.out.find("# truncated at 5") != std::string::npos);
  CHECK(run({"-p", data("raag-square.json"), "equals", "a b", "b a"}).out ==
        "Equal\n");
  CHECK(run({"-p", data("triangle3.txt"), "equals", "a a b b c c",
             "c c b b a a"})
            .out == "Unknown\n");
}

TEST_CASE("exit codes and diagnostics") {
  const std::string a2 = data("a2.txt");
  Result r = run({"-p", a2, "reduce", "a z"});
  CHECK(r.status == artin::cli::kExitDomainError);
  CHECK(r.err == "error: UnknownGenerator: unknown generator 'z'\n");

  r = run({"-p", a2, "transport", "--x", "a", "--y", "b", ""});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: PreconditionViolated: ", 0) == 0);

  r = run({"-p", a2, "retract", "--x", "a", "a^2"});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: MalformedSyntax: ", 0) == 0);

  r = run({"-p", data("missing.txt"), "reduce", "a"});
  CHECK(r.status == 1);

  CHECK(run({"-p", a2, "reduce", "a", "--bogus"}).status == 2);
  CHECK(run({"-p", a2}).status == 2);
  CHECK(run({"-p", a2, "frobnicate"}).status == 2);
  CHECK(run({"-p", a2, "retract", "a"}).status == 2);
  CHECK(run({"reduce", "a"}).status == 2);
  CHECK(run({"-p", a2, "--format", "xml", "reduce", "a"}).status == 2);
  CHECK(run({"verify", "--suite", "nope"}).status == 2);

  r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("retract") != std::string::npos);
}

TEST_CASE("bad presentation files are domain errors") {
  const std::string path = std::string(ARTIN_BINARY_DIR) + "/bad.txt";
  {
    std::ofstream f(path);
    f << "vertices: a b\nedge: a b 1\n";
  }
  const Result r = run({"-p", path, "reduce", "a"});
  CHECK(r.status == 1);
  CHECK(r.err == "error: LabelTooSmall: line 2: label < 2\n");
}

TEST_CASE("verify suites") {
  Result r = run({"verify", "--suite", "coxeter-oracle"});
  CHECK(r.status == 0);
  CHECK(r.out.find("coxeter-oracle: PASS") != std::string::npos);
  r = run({"--format", "json", "verify", "--suite", "lemma21"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"][0]["failed"] == 0);
}
