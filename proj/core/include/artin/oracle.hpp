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

#ifndef ARTIN_ORACLE_HPP_
#define ARTIN_ORACLE_HPP_

#include <string>
#include <string_view>
#include <utility>

#include "artin/artin_word.hpp"
#include "artin/coxeter.hpp"
#include "artin/presentation.hpp"

namespace artin {

enum class Verdict { Equal, NotEqual, Unknown };

std::string_view to_string(Verdict v) noexcept;

// Equal and NotEqual come only from sound procedures; `witness` names the
// procedure or the invariant that separated the words.
struct EqualityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string witness;
};

// Presentation classes with a complete word-problem procedure here.
enum class DecidableClass { Free, RightAngled, Dihedral, None };

std::string_view to_string(DecidableClass c) noexcept;
DecidableClass classify(const Presentation& p) noexcept;

// Rewrites a word supported on `subset` over the generators of
// induced(p, subset).
ArtinWord localize(const ArtinWord& w, const GeneratorSubset& subset);

// Word problem in A for the decidable subclasses. The procedure is chosen by
// the class of the subgraph spanned by the letters of both words: the
// standard parabolic A_Z is the Artin group of that subgraph, so deciding
// there decides in A. Outside the subclasses, theta images and merged
// abelianizations can still separate the words; otherwise Unknown.
EqualityVerdict equals_oracle(const CoxeterKernel& kernel, const ArtinWord& a,
                              const ArtinWord& b);

enum class Decision { Yes, No, Unknown };
std::string_view to_string(Decision d) noexcept;

struct MembershipVerdict {
  Decision decision = Decision::Unknown;
  std::string witness;
};

// Is the element represented by h in the standard parabolic A_Z? Decided
// when the subgraph spanned by Z and the letters of h is free, right-angled
// or dihedral. For a one-generator Z in the dihedral case the only candidate
// power of sigma_z is read off the abelianization.
MembershipVerdict member_artin_parabolic(const CoxeterKernel& kernel,
                                         const GeneratorSubset& z,
                                         const ArtinWord& h);

}  // namespace artin

#endif  // ARTIN_ORACLE_HPP_
