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

#ifndef ARTIN_VERIFY_HPP_
#define ARTIN_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

// Counts for one family of checks inside a suite.
struct SectionResult {
  explicit SectionResult(std::string name) : label(std::move(name)) {}

  std::string label;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Checks no procedure could decide. Suites count these as failures
  // wherever a decision is required.
  std::size_t undecided = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  void pass() { ++passed; }
  void fail(std::string why);
  void skip() { ++undecided; }
  std::size_t total() const noexcept { return passed + failed + undecided; }
};

struct SuiteReport {
  std::string name;
  std::vector<SectionResult> sections;
  double seconds = 0.0;

  bool ok() const noexcept;
  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept;
  const SectionResult* section(std::string_view label) const noexcept;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
};

// Coxeter word problem against multiplication tables built from the
// geometric representation of A2, B2, I2(5), A1xA1 and A3.
SuiteReport run_coxeter_oracle_suite(const SuiteOptions& options);
// Unique minimal double-coset representatives and length additivity,
// exhaustively over W(A3) and W(B2).
SuiteReport run_double_coset_suite(const SuiteOptions& options);
// The retraction: identity on A_X words, independence from the word chosen
// for an element, multiplicativity on colored words, trace invariants.
SuiteReport run_retraction_suite(const SuiteOptions& options);
// Transport of parabolics by iota(w): exhaustive over W(A3), Artin level on
// dihedral groups.
SuiteReport run_transport_suite(const SuiteOptions& options);
// beta alpha beta^-1 = pi(beta) alpha pi(beta)^-1 on pipeline instances.
SuiteReport run_colored_conjugation_suite(const SuiteOptions& options);
// End-to-end conjugation into a parabolic on generated instances.
SuiteReport run_conjugation_suite(const SuiteOptions& options);

// Suite names accepted by run_suite, in run order (without "all").
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

// One line per section plus a summary line.
std::string format_report(const SuiteReport& report);

}  // namespace artin

#endif  // ARTIN_VERIFY_HPP_
