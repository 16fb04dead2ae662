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

#ifndef ARTIN_RETRACTION_HPP_
#define ARTIN_RETRACTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/artin_word.hpp"
#include "artin/coxeter.hpp"
#include "artin/oracle.hpp"
#include "artin/parabolic.hpp"
#include "artin/presentation.hpp"

namespace artin {

// One letter sigma_z^e of the input word and the data it produced.
struct TraceStep {
  ArtinLetter letter;
  CoxeterElement prefix;      // u_i = u_{i-1} s_z
  CoxeterElement vpart;       // u_i = v_i w_i, v_i in W_X
  CoxeterElement wpart;       // (X, {})-minimal
  CoxeterElement reflection;  // w_{i-1} s_z w_{i-1}^-1 if e = +1, else w_i s_z w_i^-1
  std::optional<ArtinLetter> emitted;  // set iff the reflection lies in S_X
};

struct RetractionTrace {
  std::vector<TraceStep> steps;
};

struct Retraction {
  ArtinWord word;  // over Sigma_X and its inverses
  RetractionTrace trace;
};

// The retraction A -> A_X evaluated on a word. Each letter sigma_z^e emits
// sigma_x^e when its reflection is s_x with x in X and nothing otherwise.
// The output depends only on the element of A represented by `w`, is `w`
// itself letter for letter when `w` is supported on X, and is multiplicative
// on the colored subgroup.
Retraction pi_hat(const CoxeterKernel& kernel, const GeneratorSubset& x,
                  const ArtinWord& w);

// Conjugation of A_Y into A_X by iota(w), in reduced form.
struct TransportResult {
  GeneratorSubset y_prime;
  // (y, f(y)) for y in Y, ascending in y. f is injective.
  std::vector<std::pair<Generator, Generator>> f;
  DoubleCosetDecomposition decomposition;  // w = u1 w0 u2
  ArtinWord alpha;                         // iota(u1), positive over Sigma_X
};

// Requires w s_y w^-1 in W_X for every y in Y (PreconditionViolated names the
// first y that fails). Then iota(w) A_Y iota(w)^-1 = alpha A_{Y'} alpha^-1.
TransportResult transport(const CoxeterKernel& kernel, const GeneratorSubset& x,
                          const GeneratorSubset& y, const CoxeterElement& w);

struct ConjugationAudit {
  CoxeterElement w;        // theta(alpha)
  TransportResult transport;
  ArtinWord beta1;         // alpha iota(w)^-1, colored
  ArtinWord beta2;         // iota(u1)
  Retraction pi_of_beta1;
  // The hypothesis alpha A_Y alpha^-1 in A_X splits into a part that can be
  // checked in W and a part that is taken on trust.
  std::string checked_precondition;
  std::string trusted_precondition;
};

struct ConjugationResult {
  GeneratorSubset y_prime;
  ArtinWord gamma;  // pi_X(beta1) beta2
  ConjugationAudit audit;
};

// Given alpha with alpha A_Y alpha^-1 inside A_X (trusted), returns Y' in X
// and gamma in A_X with alpha A_Y alpha^-1 = gamma A_{Y'} gamma^-1. Throws
// PreconditionViolated when theta(alpha) fails to conjugate W_Y into W_X,
// which rules the hypothesis out.
ConjugationResult conjugate_into_parabolic(const CoxeterKernel& kernel,
                                           const GeneratorSubset& x,
                                           const GeneratorSubset& y,
                                           const ArtinWord& alpha);

struct ColoredConjugationReport {
  EqualityVerdict verdict;
  ArtinWord lhs;  // beta alpha beta^-1
  ArtinWord rhs;  // pi_X(beta) alpha pi_X(beta)^-1
  ArtinWord pi_of_beta;
};

// For colored beta and alpha in A_X with beta alpha beta^-1 in A_X (trusted),
// compares beta alpha beta^-1 with pi_X(beta) alpha pi_X(beta)^-1. Throws
// PreconditionViolated if beta is not colored or alpha leaves X.
ColoredConjugationReport verify_colored_conjugation(
    const CoxeterKernel& kernel, const GeneratorSubset& x,
    const ArtinWord& alpha, const ArtinWord& beta);

struct InstanceParams {
  std::size_t x_size = 1;
  std::size_t y_size = 1;
  std::size_t pad_len = 2;
  std::size_t w_search_len = 4;
  std::size_t candidates_per_length = 32;
};

// alpha = beta iota(w) kappa with beta in A_X, kappa in A_Y and
// w W_Y w^-1 in W_X, so alpha A_Y alpha^-1 lies in A_X.
struct Instance {
  GeneratorSubset x;
  GeneratorSubset y;
  CoxeterElement w;
  ArtinWord alpha;
};

// Deterministic in `seed`. Candidate w are searched from a seeded starting
// length upward, then downward, in seeded random order within a length.
// Throws SearchExhausted if no w admits a Y of the requested size.
Instance generate_instance(const CoxeterKernel& kernel, std::uint64_t seed,
                           const InstanceParams& params);

enum class CheckStatus { Pass, Fail, Undecided };
std::string_view to_string(CheckStatus s) noexcept;

struct CheckOutcome {
  CheckStatus status = CheckStatus::Undecided;
  std::string detail;
};

struct ConjugationReport {
  CheckOutcome support;        // gamma over Sigma_X
  CheckOutcome coxeter_level;  // theta(gamma) W_Y' theta(gamma)^-1 = theta(alpha) W_Y theta(alpha)^-1
  CheckOutcome artin_level;    // gamma A_Y' gamma^-1 = alpha A_Y alpha^-1

  bool any_failed() const noexcept {
    return support.status == CheckStatus::Fail ||
           coxeter_level.status == CheckStatus::Fail ||
           artin_level.status == CheckStatus::Fail;
  }
};

// Checks the conclusion alpha A_Y alpha^-1 = gamma A_Y' gamma^-1 at every
// level that can be decided, generator by generator in both directions.
ConjugationReport verify_conjugation(const CoxeterKernel& kernel,
                                     const GeneratorSubset& x,
                                     const GeneratorSubset& y,
                                     const ArtinWord& alpha,
                                     const ConjugationResult& result);

}  // namespace artin

#endif  // ARTIN_RETRACTION_HPP_
