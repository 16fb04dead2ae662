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

#include "artin/normal_forms.hpp"

#include <algorithm>

#include "artin/error.hpp"

namespace artin {

ArtinWord raag_normal_form(const Presentation& p, const ArtinWord& w) {
  if (!p.is_right_angled()) {
    throw WrongPresentationClass(
        "right-angled normal form needs every label to be 2");
  }
  auto commute = [&](Generator x, Generator y) { return p.adjacent(x, y); };

  // Incremental reduction: a new letter cancels against the last occurrence
  // of its generator when everything after that occurrence commutes with it.
  ArtinWord reduced;
  for (const ArtinLetter& l : w) {
    bool cancelled = false;
    for (std::size_t j = reduced.size(); j-- > 0;) {
      const ArtinLetter r = reduced[j];
      if (r.generator == l.generator) {
        if (r.sign != l.sign) {
          reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!commute(r.generator, l.generator)) break;
    }
    if (!cancelled) reduced.push_back(l);
  }

  // Least linear extension of the dependence order.
  const std::size_t n = reduced.size();
  std::vector<std::size_t> blockers(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!commute(reduced[i].generator, reduced[j].generator)) ++blockers[j];
    }
  }
  std::vector<bool> used(n, false);
  ArtinWord out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || blockers[j] != 0) continue;
      if (best == n || reduced[j] < reduced[best]) best = j;
    }
    used[best] = true;
    out.push_back(reduced[best]);
    for (std::size_t j = best + 1; j < n; ++j) {
      if (!used[j] &&
          !commute(reduced[best].generator, reduced[j].generator)) {
        --blockers[j];
      }
    }
  }
  return out;
}

namespace {

// Simple elements of the dihedral Artin monoid with labels 0 and 1.
class DihedralSimples {
 public:
  explicit DihedralSimples(std::uint32_t m) : m_(m) {}

  SimpleElement make(Generator start, std::uint32_t length) const {
    if (length == 0 || length == m_) return {0, length};
    return {start, length};
  }
  SimpleElement identity() const { return {0, 0}; }
  SimpleElement delta() const { return {0, m_}; }
  bool is_delta(SimpleElement s) const { return s.length == m_; }

  static Generator other(Generator g) { return 1 - g; }

  // Conjugation by Delta: swaps the generators when m is odd.
  SimpleElement tau(SimpleElement s) const {
    if (m_ % 2 == 1 && s.length != 0 && s.length != m_) {
      return {other(s.start), s.length};
    }
    return s;
  }
  Generator tau(Generator g) const { return m_ % 2 == 1 ? other(g) : g; }

  // s^-1 Delta.
  SimpleElement complement(SimpleElement s) const {
    if (s.length == 0) return delta();
    const Generator start = s.length % 2 == 1 ? other(s.start) : s.start;
    return make(start, m_ - s.length);
  }

  SimpleElement gcd(SimpleElement a, SimpleElement b) const {
    if (a.length == 0 || b.length == 0) return identity();
    if (is_delta(a)) return b;
    if (is_delta(b)) return a;
    if (a.start != b.start) return identity();
    return make(a.start, std::min(a.length, b.length));
  }

  // s g, where g left-divides complement(s).
  SimpleElement extend(SimpleElement s, SimpleElement g) const {
    if (s.length == 0) return g;
    return make(s.start, s.length + g.length);
  }

  // g^-1 t, where g left-divides t.
  SimpleElement strip(SimpleElement g, SimpleElement t) const {
    if (g.length == 0) return t;
    if (is_delta(t)) return complement(g);
    const Generator start = g.length % 2 == 0 ? t.start : other(t.start);
    return make(start, t.length - g.length);
  }

  // Delta z^-1, the alternating prefix of Delta of length m - 1 that is
  // completed to Delta by z.
  SimpleElement delta_over(Generator z) const {
    return make(m_ % 2 == 1 ? z : other(z), m_ - 1);
  }

 private:
  std::uint32_t m_;
};

std::uint32_t dihedral_label(const Presentation& p) {
  if (p.rank() != 2 || !p.label(0, 1).is_finite()) {
    throw WrongPresentationClass(
        "dihedral normal form needs exactly two generators joined by an "
        "edge");
  }
  return p.label(0, 1).value();
}

}  // namespace

DihedralNormalForm dihedral_normal_form(const Presentation& p,
                                        const ArtinWord& w) {
  const std::uint32_t m = dihedral_label(p);
  const DihedralSimples simples(m);

  // w = Delta^k P with P positive, using z^-1 = Delta^-1 (Delta z^-1) and
  // P Delta^-1 = Delta^-1 tau(P).
  std::int64_t k = 0;
  std::vector<Generator> positive;
  for (const ArtinLetter& l : w) {
    if (l.generator > 1) {
      throw UnknownGenerator("letter outside the dihedral presentation");
    }
    if (l.sign > 0) {
      positive.push_back(l.generator);
      continue;
    }
    for (Generator& g : positive) g = simples.tau(g);
    --k;
    const SimpleElement s = simples.delta_over(l.generator);
    for (std::uint32_t i = 0; i < s.length; ++i) {
      positive.push_back(i % 2 == 0 ? s.start : DihedralSimples::other(s.start));
    }
  }

  // Left-greedy factorization: append each letter as a factor and restore
  // left-weightedness by a right-to-left sweep.
  std::vector<SimpleElement> factors;
  for (Generator g : positive) {
    factors.push_back(simples.make(g, 1));
    for (std::size_t i = factors.size() - 1; i-- > 0;) {
      const SimpleElement s = factors[i];
      const SimpleElement t = factors[i + 1];
      const SimpleElement g2 = simples.gcd(simples.complement(s), t);
      if (g2.length == 0) break;
      factors[i] = simples.extend(s, g2);
      factors[i + 1] = simples.strip(g2, t);
    }
    // A factor absorbed whole into its left neighbour leaves a 1 behind;
    // dropping it keeps the sequence left-weighted.
    std::erase_if(factors, [](SimpleElement s) { return s.length == 0; });
  }

  DihedralNormalForm nf;
  std::size_t lead = 0;
  while (lead < factors.size() && simples.is_delta(factors[lead])) ++lead;
  nf.delta_power = k + static_cast<std::int64_t>(lead);
  for (std::size_t i = lead; i < factors.size(); ++i) {
    if (simples.is_delta(factors[i])) {
      throw InternalAssertion("Delta factor after a proper simple");
    }
    nf.factors.push_back(factors[i]);
  }
  return nf;
}

ArtinWord to_word(const Presentation& p, const DihedralNormalForm& nf) {
  const std::uint32_t m = dihedral_label(p);
  ArtinWord out;
  ArtinWord delta;
  for (Generator g : alternating(0, 1, m)) delta.push_back(pos(g));
  const ArtinWord delta_inv = invert_word(delta);
  for (std::int64_t i = 0; i < (nf.delta_power < 0 ? -nf.delta_power
                                                    : nf.delta_power);
       ++i) {
    const ArtinWord& d = nf.delta_power < 0 ? delta_inv : delta;
    out.insert(out.end(), d.begin(), d.end());
  }
  for (const SimpleElement& s : nf.factors) {
    for (Generator g : alternating(s.start, 1 - s.start, s.length)) {
      out.push_back(pos(g));
    }
  }
  return out;
}

}  // namespace artin
