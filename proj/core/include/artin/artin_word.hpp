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

#ifndef ARTIN_ARTIN_WORD_HPP_
#define ARTIN_ARTIN_WORD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/presentation.hpp"

namespace artin {

// sigma_x^{+1} or sigma_x^{-1}.
struct ArtinLetter {
  Generator generator;
  std::int8_t sign;

  ArtinLetter inverse() const noexcept {
    return {generator, static_cast<std::int8_t>(-sign)};
  }
  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
  friend auto operator<=>(const ArtinLetter&, const ArtinLetter&) = default;
};

inline ArtinLetter pos(Generator x) { return {x, 1}; }
inline ArtinLetter neg(Generator x) { return {x, -1}; }

// Raw word in the free monoid on Sigma and Sigma^-1. Never reduced
// implicitly.
using ArtinWord = std::vector<ArtinLetter>;

// Tokens `a`, `a^-1`, `a^1`, `a'`, separated by whitespace.
ArtinWord parse_artin_word(const Presentation& p, std::string_view text);
// "a b^-1"
std::string format_artin_word(const Presentation& p, const ArtinWord& w);

ArtinWord free_reduce(const ArtinWord& w);
ArtinWord invert_word(const ArtinWord& w);
ArtinWord concat(const ArtinWord& a, const ArtinWord& b);
template <typename... Words>
ArtinWord concat(const ArtinWord& a, const ArtinWord& b, const Words&... rest) {
  return concat(concat(a, b), rest...);
}

GeneratorSubset support(const ArtinWord& w);
bool supported_on(const ArtinWord& w, const GeneratorSubset& x);

// Image in W under sigma_x -> s_x.
CoxeterElement theta(const CoxeterKernel& kernel, const ArtinWord& w);
// Positive lift of the canonical reduced expression.
ArtinWord iota(const CoxeterElement& u);
bool is_colored(const CoxeterKernel& kernel, const ArtinWord& w);
// w iota(theta(w))^-1, which always lies in the colored subgroup.
ArtinWord color(const CoxeterKernel& kernel, const ArtinWord& w);

// Exponent sum of each generator.
std::vector<std::int64_t> abelianization(const Presentation& p,
                                         const ArtinWord& w);

// Exponent sums over the classes of generators joined by odd-labeled edges.
// This is the abelianization of A itself, so it is an invariant of the group
// element (the per-generator sums are not when some label is odd).
struct MergedAbelianization {
  // class_of[x] is the least generator index in x's class.
  std::vector<Generator> class_of;
  // Indexed by generator; nonzero only at class representatives.
  std::vector<std::int64_t> sums;

  friend bool operator==(const MergedAbelianization&,
                         const MergedAbelianization&) = default;
};
MergedAbelianization merged_abelianization(const Presentation& p,
                                           const ArtinWord& w);

// Applies `steps` random moves that preserve the element of A: insertion of a
// cancelling pair, free cancellation, and a braid-relation swap of an
// all-positive or all-negative alternating block of length m. Deterministic
// in (seed, steps).
ArtinWord fuzz_rewrite(const Presentation& p, const ArtinWord& w,
                       std::uint64_t seed, std::size_t steps);

}  // namespace artin

#endif  // ARTIN_ARTIN_WORD_HPP_
