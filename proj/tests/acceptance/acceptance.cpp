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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "artin/cli.hpp"
#include "artin/verify.hpp"

namespace {

using artin::SectionResult;
using artin::SuiteReport;

int failures = 0;

void report(int id, const std::string& title, bool ok,
            const std::string& detail) {
  std::printf("criterion %d: %s  %s (%s)\n", id, ok ? "PASS" : "FAIL",
              title.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string seconds(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

void dump_failures(const SuiteReport& r) {
  for (const SectionResult& s : r.sections) {
    for (const std::string& f : s.failures) {
      std::printf("    %s/%s: %s\n", r.name.c_str(), s.label.c_str(),
                  f.c_str());
    }
  }
}

bool sections_clean(const SuiteReport& r, const std::string& prefix,
                     std::size_t min_passed, std::size_t* count,
                     std::size_t* total) {
  bool ok = true;
  *count = 0;
  *total = 0;
  for (const SectionResult& s : r.sections) {
    if (s.label.rfind(prefix, 0) != 0) continue;
    ++*count;
    *total += s.passed;
    ok = ok && s.failed == 0 && s.undecided == 0 && s.passed >= min_passed;
  }
  return ok && *count > 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  const artin::SuiteOptions options{0};

  {
    const SuiteReport r = artin::run_coxeter_oracle_suite(options);
    bool ok = r.ok() && r.seconds < 30.0 && r.sections.size() == 5;
    std::size_t expected = 0;
    for (std::size_t order : {6, 8, 10, 4, 24}) expected += order * order;
    ok = ok && r.passed() == expected;
    report(1, "Coxeter word problem matches the reflection-group tables", ok,
           std::to_string(r.passed()) + "/" + std::to_string(expected) +
               " products, " + seconds(r.seconds));
    dump_failures(r);
  }

  {
    const SuiteReport r = artin::run_double_coset_suite(options);
    const SectionResult* a3 = r.section("A3");
    const bool ok = r.ok() && r.seconds < 60.0 && a3 != nullptr &&
                    a3->passed == 24 * 8 * 8;
    report(2, "unique minimal double-coset representatives in W(A3)", ok,
           std::to_string(a3 ? a3->passed : 0) + " (u, X, Y) triples, " +
               seconds(r.seconds));
    dump_failures(r);
  }

  {
    const SuiteReport r = artin::run_retraction_suite(options);
    const SectionResult* id = r.section("identity");
    const SectionResult* trace = r.section("trace");
    const bool ok3 = id && trace && id->failed == 0 && id->passed >= 1000 &&
                     trace->failed == 0;
    report(3, "retraction is the identity on words over X", ok3,
           std::to_string(id ? id->passed : 0) + " words, " +
               std::to_string(trace ? trace->passed : 0) + " traces");

    std::size_t n = 0, total = 0;
    const bool ok4 = sections_clean(r, "well-defined/", 500, &n, &total) &&
                     n == 6 && r.seconds < 120.0;
    report(4, "retraction is independent of the word", ok4,
           std::to_string(total) + " pairs over " + std::to_string(n) +
               " presentations, " + seconds(r.seconds));

    const bool ok5 = sections_clean(r, "colored-hom/", 200, &n, &total) &&
                     n == 5;
    report(5, "retraction is multiplicative on colored words", ok5,
           std::to_string(total) + " pairs over " + std::to_string(n) +
               " presentations");
    dump_failures(r);
  }

  {
    const SuiteReport r = artin::run_transport_suite(options);
    const SectionResult* a3 = r.section("A3");
    std::size_t n = 0, total = 0;
    const bool ok = r.ok() && a3 && a3->passed == 24 * 8 * 8 &&
                    sections_clean(r, "dihedral", 1, &n, &total) && n == 4;
    report(6, "transport of parabolics by iota(w)", ok,
           std::to_string(a3 ? a3->passed : 0) + " A3 cases, " +
               std::to_string(total) + " dihedral Artin-level cases");
    dump_failures(r);
  }

  {
    const SuiteReport r = artin::run_conjugation_suite(options);
    const SuiteReport lemma = artin::run_colored_conjugation_suite(options);
    bool ok = r.ok() && lemma.ok() && r.seconds + lemma.seconds < 300.0;
    std::size_t instances = 0;
    for (const SectionResult& s : r.sections) {
      if (s.label == "worked-example") {
        ok = ok && s.passed == 1;
        continue;
      }
      const bool decidable =
          s.label != "triangle3" && s.label != "a3-path";
      ok = ok && s.passed + s.undecided >= 100;
      if (decidable) ok = ok && s.undecided == 0;
      instances += s.passed + s.undecided;
    }
    ok = ok && r.sections.size() == 7;
    report(7, "conjugation into a standard parabolic, end to end", ok,
           std::to_string(instances) + " instances over 6 presentations, " +
               seconds(r.seconds + lemma.seconds));
    dump_failures(r);
    dump_failures(lemma);
  }

  {
    const std::vector<std::string> args = {
        "-p", std::string(ARTIN_DATA_DIR) + "/a2.txt", "--format", "json",
        "retract", "--x", "a", "b a b^-1", "--trace"};
    std::ostringstream out1, out2, err;
    const int s1 = artin::cli::run(args, out1, err);
    const int s2 = artin::cli::run(args, out2, err);
    bool ok = s1 == 0 && s2 == 0 && out1.str() == out2.str() &&
              out1.str() ==
                  read_file(std::string(ARTIN_GOLDEN_DIR) +
                            "/retract_a2_trace.json");
    try {
      const auto j = nlohmann::json::parse(out1.str());
      const auto& t = j.at("trace");
      ok = ok && j.at("word") == "a^-1" && t.size() == 3 &&
           t[0].at("t") == "b" && t[0].at("t_in_SX") == false &&
           t[1].at("t_in_SX") == false && t[2].at("t") == "a" &&
           t[2].at("t_in_SX") == true && t[2].at("tau") == "a^-1";
    } catch (const std::exception&) {
      ok = false;
    }
    report(8, "golden retraction trace on A2", ok,
           "byte-identical across runs and against the golden file");
  }

  std::printf("%s: %d of 8 criteria failed\n",
              failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
