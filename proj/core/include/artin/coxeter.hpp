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

#ifndef ARTIN_COXETER_HPP_
#define ARTIN_COXETER_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "artin/presentation.hpp"

namespace artin {

// A word s_{x1} s_{x2} ... s_{xp} in the Coxeter generators.
using CoxeterWord = std::vector<Generator>;

struct WordHash {
  std::size_t operator()(const CoxeterWord& w) const noexcept;
};

// Element of W, stored as its ShortLex-least reduced expression. Equality is
// equality of canonical words. Only a CoxeterKernel creates non-identity
// elements.
class CoxeterElement {
 public:
  // The identity.
  CoxeterElement() = default;

  const CoxeterWord& word() const noexcept { return canonical_; }
  std::size_t length() const noexcept { return canonical_.size(); }
  bool is_identity() const noexcept { return canonical_.empty(); }

  friend bool operator==(const CoxeterElement&,
                         const CoxeterElement&) = default;
  // ShortLex.
  friend std::strong_ordering operator<=>(const CoxeterElement& a,
                                          const CoxeterElement& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.canonical_ <=> b.canonical_;
  }

 private:
  friend class CoxeterKernel;
  explicit CoxeterElement(CoxeterWord canonical)
      : canonical_(std::move(canonical)) {}

  CoxeterWord canonical_;
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& u) const noexcept {
    return WordHash{}(u.word());
  }
};

struct Enumeration {
  std::vector<CoxeterElement> elements;  // BFS discovery order
  bool finite = false;
};

// Word problem for W[Gamma] by Tits' solution: a word is reduced iff no word
// in its braid-move closure contains a factor s s, and two reduced words
// represent the same element iff they have the same closure.
//
// Products are computed one generator at a time. For reduced u and a
// generator s, u s is not reduced iff some member of closure(u) ends in s; in
// that case u s is that member with its last letter removed. The closure of
// every element seen is computed once; what is kept from it (descents with
// their witnesses and memoized products) lives in a mutex-guarded cache, so a
// kernel may be shared between threads.
class CoxeterKernel {
 public:
  static constexpr std::size_t kDefaultClosureCap = 200'000;

  explicit CoxeterKernel(Presentation p,
                         std::size_t closure_cap = kDefaultClosureCap);
  ~CoxeterKernel();

  CoxeterKernel(const CoxeterKernel&) = delete;
  CoxeterKernel& operator=(const CoxeterKernel&) = delete;

  const Presentation& presentation() const noexcept { return presentation_; }
  std::size_t closure_cap() const noexcept { return cap_; }
  std::size_t rank() const noexcept { return presentation_.rank(); }

  // All words reachable from `reduced` by braid moves Prod(x,y,m) ->
  // Prod(y,x,m), sorted lexicographically. Throws ClosureCapExceeded.
  std::vector<CoxeterWord> braid_closure(std::span<const Generator> reduced) const;

  CoxeterElement identity() const { return CoxeterElement(); }
  CoxeterElement generator(Generator x) const;

  CoxeterElement reduce(std::span<const Generator> word) const;
  CoxeterElement multiply(const CoxeterElement& u, const CoxeterElement& v) const;
  CoxeterElement multiply(const CoxeterElement& u, Generator s) const;
  CoxeterElement multiply(Generator s, const CoxeterElement& u) const;
  CoxeterElement invert(const CoxeterElement& u) const;
  // u v u^-1
  CoxeterElement conjugate(const CoxeterElement& u,
                           const CoxeterElement& v) const;

  std::size_t length(const CoxeterElement& u) const noexcept {
    return u.length();
  }

  bool is_left_descent(const CoxeterElement& u, Generator x) const;
  bool is_right_descent(const CoxeterElement& u, Generator x) const;
  GeneratorSubset left_descents(const CoxeterElement& u) const;
  GeneratorSubset right_descents(const CoxeterElement& u) const;

  // BFS from the identity by right multiplication, generators in index
  // order. `finite` is set iff the BFS closed without exceeding `cap`.
  Enumeration enumerate(std::size_t cap) const;

  std::size_t cached_elements() const;

 private:
  struct Node;

  void check_word(std::span<const Generator> w) const;
  // Canonical form of an element given by a reduced word.
  CoxeterElement canonicalize(const CoxeterWord& reduced) const;
  CoxeterElement right_step(const CoxeterElement& u, Generator s) const;
  CoxeterElement left_step(Generator s, const CoxeterElement& u) const;
  std::string describe(std::span<const Generator> w) const;

  Presentation presentation_;
  std::size_t cap_;
  std::vector<std::uint32_t> labels_;  // rank x rank, 0 = infinity

  mutable std::mutex mutex_;
  mutable std::unordered_map<CoxeterWord, std::unique_ptr<Node>, WordHash>
      cache_;
};

// Whitespace-separated generator names. Throws UnknownGenerator.
CoxeterWord parse_coxeter_word(const Presentation& p, std::string_view text);
std::string format_coxeter_word(const Presentation& p,
                                std::span<const Generator> w);

}  // namespace artin

#endif  // ARTIN_COXETER_HPP_
