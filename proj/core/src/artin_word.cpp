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

#include "artin/artin_word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "artin/error.hpp"
#include "artin/random.hpp"

namespace artin {

ArtinWord parse_artin_word(const Presentation& p, std::string_view text) {
  ArtinWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i) break;
    std::string_view tok = text.substr(i, j - i);
    const std::string_view original = tok;
    i = j;
    std::int8_t sign = 1;
    if (tok.ends_with("^-1")) {
      sign = -1;
      tok.remove_suffix(3);
    } else if (tok.ends_with("^1")) {
      tok.remove_suffix(2);
    } else if (tok.ends_with('\'')) {
      sign = -1;
      tok.remove_suffix(1);
    }
    if (tok.empty() || tok.find('^') != std::string_view::npos ||
        tok.find('\'') != std::string_view::npos) {
      throw ParseError("MalformedSyntax", 0,
                       "malformed Artin letter '" + std::string(original) +
                           "'");
    }
    w.push_back({p.index_of(tok), sign});
  }
  return w;
}

std::string format_artin_word(const Presentation& p, const ArtinWord& w) {
  std::string out;
  for (const ArtinLetter& l : w) {
    if (!out.empty()) out += ' ';
    out += p.name(l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

ArtinWord free_reduce(const ArtinWord& w) {
  ArtinWord out;
  out.reserve(w.size());
  for (const ArtinLetter& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

ArtinWord invert_word(const ArtinWord& w) {
  ArtinWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

ArtinWord concat(const ArtinWord& a, const ArtinWord& b) {
  ArtinWord out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GeneratorSubset support(const ArtinWord& w) {
  std::vector<Generator> gens;
  gens.reserve(w.size());
  for (const ArtinLetter& l : w) gens.push_back(l.generator);
  return GeneratorSubset(std::move(gens));
}

bool supported_on(const ArtinWord& w, const GeneratorSubset& x) {
  return std::all_of(w.begin(), w.end(), [&](const ArtinLetter& l) {
    return x.contains(l.generator);
  });
}

CoxeterElement theta(const CoxeterKernel& kernel, const ArtinWord& w) {
  CoxeterWord letters;
  letters.reserve(w.size());
  for (const ArtinLetter& l : w) letters.push_back(l.generator);
  return kernel.reduce(letters);
}

ArtinWord iota(const CoxeterElement& u) {
  ArtinWord out;
  out.reserve(u.length());
  for (Generator x : u.word()) out.push_back(pos(x));
  return out;
}

bool is_colored(const CoxeterKernel& kernel, const ArtinWord& w) {
  return theta(kernel, w).is_identity();
}

ArtinWord color(const CoxeterKernel& kernel, const ArtinWord& w) {
  return concat(w, invert_word(iota(theta(kernel, w))));
}

std::vector<std::int64_t> abelianization(const Presentation& p,
                                         const ArtinWord& w) {
  std::vector<std::int64_t> sums(p.rank(), 0);
  for (const ArtinLetter& l : w) {
    if (l.generator >= p.rank()) {
      throw UnknownGenerator("generator index " +
                             std::to_string(l.generator) +
                             " outside presentation");
    }
    sums[l.generator] += l.sign;
  }
  return sums;
}

MergedAbelianization merged_abelianization(const Presentation& p,
                                           const ArtinWord& w) {
  const std::size_t n = p.rank();
  std::vector<Generator> parent(n);
  std::iota(parent.begin(), parent.end(), Generator{0});
  auto find = [&](Generator x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : p.edges()) {
    if (e.m % 2 == 1) {
      Generator a = find(e.u);
      Generator b = find(e.v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  MergedAbelianization out{std::vector<Generator>(n),
                           std::vector<std::int64_t>(n, 0)};
  for (Generator x = 0; x < n; ++x) out.class_of[x] = find(x);
  const auto raw = abelianization(p, w);
  for (Generator x = 0; x < n; ++x) out.sums[out.class_of[x]] += raw[x];
  return out;
}

namespace {

struct BraidSite {
  std::size_t pos;
  Generator first;
  Generator second;
  std::uint32_t m;
};

std::vector<BraidSite> braid_sites(const Presentation& p, const ArtinWord& w) {
  std::vector<BraidSite> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const ArtinLetter a = w[i];
    const ArtinLetter b = w[i + 1];
    if (a.generator == b.generator || a.sign != b.sign) continue;
    const Label m = p.label(a.generator, b.generator);
    if (m.is_infinite() || i + m.value() > w.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < m.value() && ok; ++k) {
      const ArtinLetter c = w[i + k];
      ok = c.sign == a.sign &&
           c.generator == (k % 2 == 0 ? a.generator : b.generator);
    }
    if (ok) out.push_back({i, a.generator, b.generator, m.value()});
  }
  return out;
}

void insert_pair(const Presentation& p, ArtinWord& w, Rng& rng) {
  if (p.rank() == 0) return;
  const auto at = static_cast<std::ptrdiff_t>(rng.below(w.size() + 1));
  const ArtinLetter l{static_cast<Generator>(rng.below(p.rank())),
                      static_cast<std::int8_t>(rng.coin() ? 1 : -1)};
  w.insert(w.begin() + at, {l, l.inverse()});
}

}  // namespace

ArtinWord fuzz_rewrite(const Presentation& p, const ArtinWord& w,
                       std::uint64_t seed, std::size_t steps) {
  Rng rng(seed);
  ArtinWord out = w;
  for (std::size_t step = 0; step < steps; ++step) {
    switch (rng.below(3)) {
      case 0:
        insert_pair(p, out, rng);
        break;
      case 1: {
        std::vector<std::size_t> sites;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
          if (out[i + 1] == out[i].inverse()) sites.push_back(i);
        }
        if (sites.empty()) {
          insert_pair(p, out, rng);
          break;
        }
        const auto i = static_cast<std::ptrdiff_t>(
            sites[rng.below(sites.size())]);
        out.erase(out.begin() + i, out.begin() + i + 2);
        break;
      }
      default: {
        auto sites = braid_sites(p, out);
        if (sites.empty()) {
          // Plant Prod(x,y,m) Prod(x,y,m)^-1 so that the swap below acts on
          // a genuine relation instance.
          if (p.edges().empty()) {
            insert_pair(p, out, rng);
            break;
          }
          const Edge e = p.edges()[rng.below(p.edges().size())];
          const bool flip = rng.coin();
          const Generator x = flip ? e.v : e.u;
          const Generator y = flip ? e.u : e.v;
          ArtinWord block;
          for (Generator g : alternating(x, y, e.m)) block.push_back(pos(g));
          const ArtinWord planted = concat(block, invert_word(block));
          const auto at = rng.below(out.size() + 1);
          out.insert(out.begin() + static_cast<std::ptrdiff_t>(at),
                     planted.begin(), planted.end());
          sites = {{at, x, y, e.m}};
        }
        const BraidSite s = sites[rng.below(sites.size())];
        const std::int8_t sign = out[s.pos].sign;
        for (std::size_t k = 0; k < s.m; ++k) {
          out[s.pos + k] = {k % 2 == 0 ? s.second : s.first, sign};
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace artin
