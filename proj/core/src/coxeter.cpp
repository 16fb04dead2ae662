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

#include "artin/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "artin/error.hpp"

namespace artin {

std::size_t WordHash::operator()(const CoxeterWord& w) const noexcept {
  // FNV-1a over the letters.
  std::size_t h = 14695981039346656037ULL;
  for (Generator x : w) {
    h ^= static_cast<std::size_t>(x) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

struct CoxeterKernel::Node {
  explicit Node(std::size_t rank)
      : right_strip(rank), left_strip(rank), right_product(rank),
        left_product(rank) {}

  // right_strip[s] is set iff s is a right descent; it holds a reduced word
  // for u s (a closure member ending in s, minus that letter).
  std::vector<std::optional<CoxeterWord>> right_strip;
  std::vector<std::optional<CoxeterWord>> left_strip;
  // Memoized canonical words of u s and s u.
  std::vector<std::optional<CoxeterWord>> right_product;
  std::vector<std::optional<CoxeterWord>> left_product;
  std::optional<CoxeterWord> inverse;
};

CoxeterKernel::CoxeterKernel(Presentation p, std::size_t closure_cap)
    : presentation_(std::move(p)), cap_(closure_cap) {
  const std::size_t n = presentation_.rank();
  labels_.assign(n * n, 0);
  for (Generator x = 0; x < n; ++x) {
    for (Generator y = 0; y < n; ++y) {
      const Label m = presentation_.label(x, y);
      labels_[x * n + y] = m.is_finite() ? m.value() : 0;
    }
  }
  cache_.emplace(CoxeterWord{}, std::make_unique<Node>(n));
}

CoxeterKernel::~CoxeterKernel() = default;

void CoxeterKernel::check_word(std::span<const Generator> w) const {
  for (Generator x : w) {
    if (x >= rank()) {
      throw UnknownGenerator("generator index " + std::to_string(x) +
                             " outside presentation of rank " +
                             std::to_string(rank()));
    }
  }
}

std::string CoxeterKernel::describe(std::span<const Generator> w) const {
  return format_coxeter_word(presentation_, w);
}

std::vector<CoxeterWord> CoxeterKernel::braid_closure(
    std::span<const Generator> reduced) const {
  check_word(reduced);
  const std::size_t n = rank();
  CoxeterWord start(reduced.begin(), reduced.end());
  std::unordered_set<CoxeterWord, WordHash> seen{start};
  std::deque<CoxeterWord> queue{start};
  while (!queue.empty()) {
    CoxeterWord w = std::move(queue.front());
    queue.pop_front();
    const std::size_t len = w.size();
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const Generator x = w[i];
      const Generator y = w[i + 1];
      if (x == y) continue;
      const std::uint32_t m = labels_[x * n + y];
      if (m == 0 || i + m > len) continue;
      bool alternates = true;
      for (std::size_t k = 2; k < m && alternates; ++k) {
        alternates = w[i + k] == (k % 2 == 0 ? x : y);
      }
      if (!alternates) continue;
      CoxeterWord next = w;
      for (std::size_t k = 0; k < m; ++k) next[i + k] = (k % 2 == 0 ? y : x);
      if (seen.insert(next).second) {
        if (seen.size() > cap_) {
          throw ClosureCapExceeded("braid closure of '" + describe(start) +
                                   "' exceeds the cap of " +
                                   std::to_string(cap_) + " words");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<CoxeterWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

CoxeterElement CoxeterKernel::canonicalize(const CoxeterWord& reduced) const {
  std::vector<CoxeterWord> closure = braid_closure(reduced);
  CoxeterWord canonical = closure.front();
  {
    std::lock_guard lock(mutex_);
    if (cache_.contains(canonical)) return CoxeterElement(std::move(canonical));
  }
  auto node = std::make_unique<Node>(rank());
  for (const CoxeterWord& w : closure) {
    if (w.empty()) continue;
    auto& left = node->left_strip[w.front()];
    if (!left) left = CoxeterWord(w.begin() + 1, w.end());
    auto& right = node->right_strip[w.back()];
    if (!right) right = CoxeterWord(w.begin(), w.end() - 1);
  }
  std::lock_guard lock(mutex_);
  cache_.try_emplace(canonical, std::move(node));
  return CoxeterElement(std::move(canonical));
}

CoxeterElement CoxeterKernel::right_step(const CoxeterElement& u,
                                         Generator s) const {
  Node* node = nullptr;
  std::optional<CoxeterWord> strip;
  {
    std::unique_lock lock(mutex_);
    auto it = cache_.find(u.word());
    if (it == cache_.end()) {
      lock.unlock();
      canonicalize(u.word());
      lock.lock();
      it = cache_.find(u.word());
      if (it == cache_.end()) {
        throw InternalAssertion("element '" + describe(u.word()) +
                                "' is not in canonical form");
      }
    }
    node = it->second.get();
    if (node->right_product[s]) {
      return CoxeterElement(*node->right_product[s]);
    }
    strip = node->right_strip[s];
  }
  CoxeterWord w;
  if (strip) {
    w = std::move(*strip);
  } else {
    w = u.word();
    w.push_back(s);
  }
  CoxeterElement result = canonicalize(w);
  std::lock_guard lock(mutex_);
  node->right_product[s] = result.word();
  return result;
}

CoxeterElement CoxeterKernel::left_step(Generator s,
                                        const CoxeterElement& u) const {
  Node* node = nullptr;
  std::optional<CoxeterWord> strip;
  {
    std::unique_lock lock(mutex_);
    auto it = cache_.find(u.word());
    if (it == cache_.end()) {
      lock.unlock();
      canonicalize(u.word());
      lock.lock();
      it = cache_.find(u.word());
      if (it == cache_.end()) {
        throw InternalAssertion("element '" + describe(u.word()) +
                                "' is not in canonical form");
      }
    }
    node = it->second.get();
    if (node->left_product[s]) {
      return CoxeterElement(*node->left_product[s]);
    }
    strip = node->left_strip[s];
  }
  CoxeterWord w;
  if (strip) {
    w = std::move(*strip);
  } else {
    w.reserve(u.length() + 1);
    w.push_back(s);
    w.insert(w.end(), u.word().begin(), u.word().end());
  }
  CoxeterElement result = canonicalize(w);
  std::lock_guard lock(mutex_);
  node->left_product[s] = result.word();
  return result;
}

CoxeterElement CoxeterKernel::generator(Generator x) const {
  check_word(std::span<const Generator>(&x, 1));
  return right_step(identity(), x);
}

CoxeterElement CoxeterKernel::reduce(std::span<const Generator> word) const {
  check_word(word);
  CoxeterElement u;
  try {
    for (Generator s : word) u = right_step(u, s);
  } catch (const ClosureCapExceeded& e) {
    throw ClosureCapExceeded(std::string(e.what()) + " while reducing '" +
                             describe(word) + "'");
  }
  return u;
}

CoxeterElement CoxeterKernel::multiply(const CoxeterElement& u,
                                       const CoxeterElement& v) const {
  CoxeterElement out = u;
  for (Generator s : v.word()) out = right_step(out, s);
  return out;
}

CoxeterElement CoxeterKernel::multiply(const CoxeterElement& u,
                                       Generator s) const {
  check_word(std::span<const Generator>(&s, 1));
  return right_step(u, s);
}

CoxeterElement CoxeterKernel::multiply(Generator s,
                                       const CoxeterElement& u) const {
  check_word(std::span<const Generator>(&s, 1));
  return left_step(s, u);
}

CoxeterElement CoxeterKernel::invert(const CoxeterElement& u) const {
  if (u.is_identity()) return u;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(u.word());
    if (it != cache_.end() && it->second->inverse) {
      return CoxeterElement(*it->second->inverse);
    }
  }
  CoxeterWord reversed(u.word().rbegin(), u.word().rend());
  CoxeterElement result = canonicalize(reversed);
  canonicalize(u.word());
  std::lock_guard lock(mutex_);
  cache_.at(u.word())->inverse = result.word();
  cache_.at(result.word())->inverse = u.word();
  return result;
}

CoxeterElement CoxeterKernel::conjugate(const CoxeterElement& u,
                                        const CoxeterElement& v) const {
  return multiply(multiply(u, v), invert(u));
}

bool CoxeterKernel::is_left_descent(const CoxeterElement& u,
                                    Generator x) const {
  return multiply(x, u).length() < u.length();
}

bool CoxeterKernel::is_right_descent(const CoxeterElement& u,
                                     Generator x) const {
  return multiply(u, x).length() < u.length();
}

GeneratorSubset CoxeterKernel::left_descents(const CoxeterElement& u) const {
  std::vector<Generator> out;
  for (Generator x = 0; x < rank(); ++x) {
    if (is_left_descent(u, x)) out.push_back(x);
  }
  return GeneratorSubset(std::move(out));
}

GeneratorSubset CoxeterKernel::right_descents(const CoxeterElement& u) const {
  std::vector<Generator> out;
  for (Generator x = 0; x < rank(); ++x) {
    if (is_right_descent(u, x)) out.push_back(x);
  }
  return GeneratorSubset(std::move(out));
}

Enumeration CoxeterKernel::enumerate(std::size_t cap) const {
  Enumeration out;
  if (cap == 0) return out;
  std::unordered_set<CoxeterElement, CoxeterElementHash> seen{identity()};
  out.elements.push_back(identity());
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const CoxeterElement u = out.elements[head];
    for (Generator s = 0; s < rank(); ++s) {
      CoxeterElement next = right_step(u, s);
      if (seen.contains(next)) continue;
      if (out.elements.size() == cap) return out;
      seen.insert(next);
      out.elements.push_back(std::move(next));
    }
  }
  out.finite = true;
  return out;
}

std::size_t CoxeterKernel::cached_elements() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

CoxeterWord parse_coxeter_word(const Presentation& p, std::string_view text) {
  CoxeterWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) w.push_back(p.index_of(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string format_coxeter_word(const Presentation& p,
                                std::span<const Generator> w) {
  std::string out;
  for (Generator x : w) {
    if (!out.empty()) out += ' ';
    out += p.name(x);
  }
  return out;
}

}  // namespace artin
