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

#ifndef ARTIN_NORMAL_FORMS_HPP_
#define ARTIN_NORMAL_FORMS_HPP_

#include <cstdint>
#include <vector>

#include "artin/artin_word.hpp"
#include "artin/presentation.hpp"

namespace artin {

// Normal form in a right-angled Artin group (every label is 2; free groups
// included). Letters x^e ... x^-e whose separating letters all commute with x
// are cancelled, then the letters are listed as the lexicographically least
// linear extension of the remaining heap, ordered by (generator, sign).
// Two words are equal in A iff their normal forms are identical. Throws
// WrongPresentationClass if some label exceeds 2.
ArtinWord raag_normal_form(const Presentation& p, const ArtinWord& w);

// Simple element of the two-generator Artin monoid: the alternating word of
// `length` letters starting at `start`. Length 0 is the identity, length m is
// Delta; both are stored with start 0.
struct SimpleElement {
  Generator start = 0;
  std::uint32_t length = 0;

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;
};

// Delta^delta_power p_1 ... p_k, each p_i a proper simple (neither 1 nor
// Delta) and every pair p_i p_{i+1} left-weighted.
struct DihedralNormalForm {
  std::int64_t delta_power = 0;
  std::vector<SimpleElement> factors;

  friend bool operator==(const DihedralNormalForm&,
                         const DihedralNormalForm&) = default;
};

// Left-greedy Garside normal form for <x, y | Prod(x,y,m) = Prod(y,x,m)>.
// `p` must have exactly two generators joined by an edge; otherwise throws
// WrongPresentationClass.
DihedralNormalForm dihedral_normal_form(const Presentation& p,
                                        const ArtinWord& w);

ArtinWord to_word(const Presentation& p, const DihedralNormalForm& nf);

}  // namespace artin

#endif  // ARTIN_NORMAL_FORMS_HPP_
