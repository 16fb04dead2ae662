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

#ifndef ARTIN_PRESENTATION_HPP_
#define ARTIN_PRESENTATION_HPP_

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace artin {

// Index of a vertex of the defining graph. Indices are dense, 0..n-1, in
// declaration order; this order is also the letter order used for every
// ShortLex comparison in the library.
using Generator = std::uint32_t;

// Coxeter label m(x, y) extended by m(x, x) = 1 and m(x, y) = infinity for
// non-adjacent vertices.
class Label {
 public:
  static constexpr Label infinity() noexcept { return Label(0); }
  static constexpr Label finite(std::uint32_t m) noexcept { return Label(m); }

  constexpr bool is_infinite() const noexcept { return m_ == 0; }
  constexpr bool is_finite() const noexcept { return m_ != 0; }
  // Meaningless for infinite labels.
  constexpr std::uint32_t value() const noexcept { return m_; }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(m_);
  }

  friend constexpr bool operator==(Label, Label) noexcept = default;

 private:
  constexpr explicit Label(std::uint32_t m) noexcept : m_(m) {}
  std::uint32_t m_;
};

// Sorted, duplicate-free set of generators.
class GeneratorSubset {
 public:
  GeneratorSubset() = default;
  explicit GeneratorSubset(std::vector<Generator> members);
  GeneratorSubset(std::initializer_list<Generator> members)
      : GeneratorSubset(std::vector<Generator>(members)) {}

  // {0, ..., n-1}
  static GeneratorSubset range(std::size_t n);

  bool contains(Generator x) const noexcept;
  bool is_subset_of(const GeneratorSubset& other) const noexcept;

  std::span<const Generator> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Generator operator[](std::size_t i) const { return members_[i]; }

  GeneratorSubset unite(const GeneratorSubset& other) const;
  GeneratorSubset intersect(const GeneratorSubset& other) const;

  friend bool operator==(const GeneratorSubset&,
                         const GeneratorSubset&) = default;
  friend auto operator<=>(const GeneratorSubset&,
                          const GeneratorSubset&) = default;

 private:
  std::vector<Generator> members_;
};

struct Edge {
  Generator u;
  Generator v;
  std::uint32_t m;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A labeled simplicial graph. Defines both the Coxeter group W and the Artin
// group A. Immutable once built.
class Presentation {
 public:
  // The empty graph: presentation of the trivial group.
  Presentation() = default;

  // Throws ParseError (line 0) for duplicate names, empty or whitespace
  // names, unknown endpoints, self-loops, repeated edges and labels < 2.
  Presentation(std::vector<std::string> names, std::vector<Edge> edges);

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Generator x) const;

  std::optional<Generator> find(std::string_view name) const;
  // Throws UnknownGenerator.
  Generator index_of(std::string_view name) const;

  // Throws UnknownGenerator for indices outside the presentation.
  Label label(Generator x, Generator y) const;
  bool adjacent(Generator x, Generator y) const;

  // Edges with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool is_edgeless() const noexcept { return edges_.empty(); }
  bool is_right_angled() const noexcept;

  GeneratorSubset all() const { return GeneratorSubset::range(rank()); }

  // Comma-separated generator names; empty string is the empty set.
  GeneratorSubset parse_subset(std::string_view csv) const;
  std::string format_subset(const GeneratorSubset& subset) const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void check(Generator x) const;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  // rank x rank, 0 = no edge, 1 on the diagonal.
  std::vector<std::uint32_t> matrix_;
};

// Text form:
//   # comment
//   vertices: a b c
//   edge: a b 3
Presentation parse_presentation(std::string_view text);

// {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}
Presentation parse_presentation_json(std::string_view text);

// Dispatches on the first non-blank character: '{' selects JSON.
Presentation load_presentation(std::string_view text);

std::string format_presentation(const Presentation& p);

// Full subgraph spanned by `subset`. Generators are renumbered 0..k-1 in the
// order inherited from `p`; `subset[i]` is the parent index of generator i.
Presentation induced(const Presentation& p, const GeneratorSubset& subset);

// (Prod(x, y, m), Prod(y, x, m)). Throws NoEdge when m(x, y) is not finite
// or x == y.
std::pair<std::vector<Generator>, std::vector<Generator>> braid_relation_pair(
    const Presentation& p, Generator x, Generator y);

// Alternating word x y x ... of the given length.
std::vector<Generator> alternating(Generator x, Generator y,
                                   std::size_t length);

}  // namespace artin

#endif  // ARTIN_PRESENTATION_HPP_
