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

#include "artin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "artin/artin_word.hpp"
#include "artin/catalog.hpp"
#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/oracle.hpp"
#include "artin/parabolic.hpp"
#include "artin/random.hpp"
#include "artin/retraction.hpp"

namespace artin {

void SectionResult::fail(std::string why) {
  ++failed;
  if (failures.size() < 5) failures.push_back(std::move(why));
}

bool SuiteReport::ok() const noexcept { return failed() == 0; }

std::size_t SuiteReport::passed() const noexcept {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.passed;
  return n;
}

std::size_t SuiteReport::failed() const noexcept {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.failed;
  return n;
}

const SectionResult* SuiteReport::section(
    std::string_view label) const noexcept {
  for (const auto& s : sections) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  // splitmix64 finalizer over the combined inputs.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (a + 1) +
                    0xBF58476D1CE4E5B9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

ArtinWord random_word(const GeneratorSubset& gens, std::size_t len, Rng& rng) {
  ArtinWord w;
  if (gens.empty()) return w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back({gens[rng.below(gens.size())],
                 static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
  }
  return w;
}

GeneratorSubset random_subset(std::size_t n, Rng& rng) {
  std::vector<Generator> out;
  for (Generator g = 0; g < n; ++g) {
    if (rng.coin()) out.push_back(g);
  }
  return GeneratorSubset(std::move(out));
}

std::vector<GeneratorSubset> all_subsets(std::size_t n) {
  std::vector<GeneratorSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Generator> m;
    for (Generator g = 0; g < n; ++g) {
      if (mask & (std::size_t{1} << g)) m.push_back(g);
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

// Elements of W_X by BFS over the generators in X.
std::vector<CoxeterElement> parabolic_elements(const CoxeterKernel& kernel,
                                               const GeneratorSubset& x) {
  std::vector<CoxeterElement> out{kernel.identity()};
  std::unordered_set<CoxeterElement, CoxeterElementHash> seen{
      kernel.identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Generator g : x) {
      CoxeterElement next = kernel.multiply(out[head], g);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::string word_of(const CoxeterKernel& k, const CoxeterElement& u) {
  return "'" + format_coxeter_word(k.presentation(), u.word()) + "'";
}

std::string word_of(const CoxeterKernel& k, const ArtinWord& w) {
  return "'" + format_artin_word(k.presentation(), w) + "'";
}

// ---------------------------------------------------------------------------
// Geometric representation: s_i(e_j) = e_j - 2 B(e_i, e_j) e_i with
// B(e_i, e_j) = -cos(pi / m_ij). Faithful, so BFS over matrices enumerates W
// without touching the braid-move kernel.

class ReflectionGroup {
 public:
  ReflectionGroup(const Presentation& p, std::size_t cap) : n_(p.rank()) {
    std::vector<double> bilinear(n_ * n_);
    for (Generator i = 0; i < n_; ++i) {
      for (Generator j = 0; j < n_; ++j) {
        const Label m = p.label(i, j);
        bilinear[i * n_ + j] =
            i == j ? 1.0
                   : (m.is_infinite() ? -1.0
                                      : -std::cos(std::numbers::pi / m.value()));
      }
    }
    for (Generator i = 0; i < n_; ++i) {
      Matrix s = identity();
      for (Generator j = 0; j < n_; ++j) {
        s[i * n_ + j] -= 2.0 * bilinear[i * n_ + j];
      }
      generators_.push_back(std::move(s));
    }

    add(identity(), {}, 0);
    for (std::size_t head = 0; head < matrices_.size(); ++head) {
      for (Generator g = 0; g < n_; ++g) {
        Matrix next = mul(matrices_[head], generators_[g]);
        if (index_.contains(key(next))) continue;
        if (matrices_.size() == cap) return;
        CoxeterWord w = words_[head];
        w.push_back(g);
        add(std::move(next), std::move(w), depth_[head] + 1);
      }
    }
    closed_ = true;
  }

  bool closed() const noexcept { return closed_; }
  std::size_t order() const noexcept { return matrices_.size(); }
  const CoxeterWord& word(std::size_t i) const { return words_[i]; }
  std::size_t depth(std::size_t i) const { return depth_[i]; }

  std::size_t product(std::size_t i, std::size_t j) const {
    auto it = index_.find(key(mul(matrices_[i], matrices_[j])));
    if (it == index_.end()) throw std::logic_error("product left the group");
    return it->second;
  }

 private:
  using Matrix = std::vector<double>;
  using Key = std::vector<std::int64_t>;

  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
      return h;
    }
  };

  Matrix identity() const {
    Matrix m(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1.0;
    return m;
  }

  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix c(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < n_; ++j)
          c[i * n_ + j] += a[i * n_ + k] * b[k * n_ + j];
    return c;
  }

  static Key key(const Matrix& m) {
    Key k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      k[i] = std::llround(m[i] * 1e6);
    }
    return k;
  }

  void add(Matrix m, CoxeterWord w, std::size_t depth) {
    index_.emplace(key(m), matrices_.size());
    matrices_.push_back(std::move(m));
    words_.push_back(std::move(w));
    depth_.push_back(depth);
  }

  std::size_t n_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> matrices_;
  std::vector<CoxeterWord> words_;
  std::vector<std::size_t> depth_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
  bool closed_ = false;
};

struct NamedPresentation {
  std::string label;
  Presentation presentation;
};

}  // namespace

SuiteReport run_coxeter_oracle_suite(const SuiteOptions&) {
  Timer timer;
  SuiteReport report{"coxeter-oracle", {}, 0.0};
  const struct {
    const char* label;
    Presentation p;
    std::size_t order;
  } cases[] = {
      {"A2", catalog::dihedral(3), 6},   {"B2", catalog::dihedral(4), 8},
      {"I2(5)", catalog::dihedral(5), 10}, {"A1xA1", catalog::dihedral(2), 4},
      {"A3", catalog::a3(), 24},
  };
  for (const auto& c : cases) {
    SectionResult sec{c.label};
    const ReflectionGroup group(c.p, 10'000);
    if (!group.closed() || group.order() != c.order) {
      sec.fail("reflection representation has order " +
               std::to_string(group.order()) + ", expected " +
               std::to_string(c.order));
      report.sections.push_back(std::move(sec));
      continue;
    }
    const CoxeterKernel kernel(c.p);
    std::vector<CoxeterElement> canon;
    std::unordered_set<CoxeterElement, CoxeterElementHash> distinct;
    for (std::size_t i = 0; i < group.order(); ++i) {
      canon.push_back(kernel.reduce(group.word(i)));
      distinct.insert(canon.back());
      if (canon.back().length() != group.depth(i)) {
        sec.fail("length of " + word_of(kernel, canon.back()) + " is " +
                 std::to_string(canon.back().length()) + ", BFS depth " +
                 std::to_string(group.depth(i)));
      }
    }
    if (distinct.size() != group.order()) {
      sec.fail("kernel identifies distinct group elements");
    }
    const Enumeration e = kernel.enumerate(1'000);
    if (!e.finite || e.elements.size() != c.order ||
        !std::all_of(e.elements.begin(), e.elements.end(),
                     [&](const CoxeterElement& u) {
                       return distinct.contains(u);
                     })) {
      sec.fail("kernel enumeration disagrees with the reflection group");
    }
    for (std::size_t i = 0; i < group.order(); ++i) {
      for (std::size_t j = 0; j < group.order(); ++j) {
        const CoxeterElement got = kernel.multiply(canon[i], canon[j]);
        if (got == canon[group.product(i, j)]) {
          sec.pass();
        } else {
          sec.fail(word_of(kernel, canon[i]) + " * " +
                   word_of(kernel, canon[j]) + " = " + word_of(kernel, got));
        }
      }
    }
    report.sections.push_back(std::move(sec));
  }
  report.seconds = timer.seconds();
  return report;
}

SuiteReport run_double_coset_suite(const SuiteOptions&) {
  Timer timer;
  SuiteReport report{"lemma21", {}, 0.0};
  for (const NamedPresentation& np :
       {NamedPresentation{"A3", catalog::a3()},
        NamedPresentation{"B2", catalog::dihedral(4)}}) {
    SectionResult sec{np.label};
    const CoxeterKernel kernel(np.presentation);
    const auto elements = kernel.enumerate(1'000).elements;
    const auto subsets = all_subsets(kernel.rank());
    std::vector<std::vector<CoxeterElement>> parabolics;
    for (const auto& s : subsets) {
      parabolics.push_back(parabolic_elements(kernel, s));
    }
    for (const CoxeterElement& u : elements) {
      for (std::size_t xi = 0; xi < subsets.size(); ++xi) {
        for (std::size_t yi = 0; yi < subsets.size(); ++yi) {
          const GeneratorSubset& x = subsets[xi];
          const GeneratorSubset& y = subsets[yi];
          // Brute-force double coset.
          std::vector<CoxeterElement> coset{u};
          std::unordered_set<CoxeterElement, CoxeterElementHash> seen{u};
          for (std::size_t head = 0; head < coset.size(); ++head) {
            const CoxeterElement cur = coset[head];
            for (Generator g : x) {
              CoxeterElement next = kernel.multiply(g, cur);
              if (seen.insert(next).second) coset.push_back(std::move(next));
            }
            for (Generator g : y) {
              CoxeterElement next = kernel.multiply(cur, g);
              if (seen.insert(next).second) coset.push_back(std::move(next));
            }
          }
          std::size_t min_len = SIZE_MAX;
          for (const auto& v : coset) min_len = std::min(min_len, v.length());
          std::vector<CoxeterElement> shortest;
          for (const auto& v : coset) {
            if (v.length() == min_len) shortest.push_back(v);
          }

          const std::string where = "u=" + word_of(kernel, u) + " X={" +
                                    kernel.presentation().format_subset(x) +
                                    "} Y={" +
                                    kernel.presentation().format_subset(y) +
                                    "}";
          const DoubleCosetDecomposition d =
              double_coset_decompose(kernel, x, y, u);
          std::string problem;
          if (shortest.size() != 1) {
            problem = "minimal element not unique";
          } else if (shortest.front() != d.w0) {
            problem = "w0 is not the minimal element";
          }
          // Every element decomposes additively around the same w0.
          for (const auto& v : coset) {
            if (!problem.empty()) break;
            const DoubleCosetDecomposition dv =
                double_coset_decompose(kernel, x, y, v);
            if (dv.w0 != d.w0 || !supported_on(dv.u1, x) ||
                !supported_on(dv.u2, y) ||
                kernel.multiply(dv.u1, kernel.multiply(dv.w0, dv.u2)) != v ||
                dv.u1.length() + dv.w0.length() + dv.u2.length() !=
                    v.length()) {
              problem = "decomposition of " + word_of(kernel, v) +
                        " is not additive around w0";
            } else if (is_minimal(kernel, x, y, v) != (v == d.w0)) {
              problem = "is_minimal disagrees at " + word_of(kernel, v);
            }
          }
          for (const auto& u1 : parabolics[xi]) {
            if (!problem.empty()) break;
            if (kernel.multiply(u1, d.w0).length() !=
                u1.length() + d.w0.length()) {
              problem = "l(u1 w0) != l(u1) + l(w0) for u1=" +
                        word_of(kernel, u1);
            }
          }
          for (const auto& u2 : parabolics[yi]) {
            if (!problem.empty()) break;
            if (kernel.multiply(d.w0, u2).length() !=
                d.w0.length() + u2.length()) {
              problem = "l(w0 u2) != l(w0) + l(u2) for u2=" +
                        word_of(kernel, u2);
            }
          }
          if (problem.empty()) {
            sec.pass();
          } else {
            sec.fail(where + ": " + problem);
          }
        }
      }
    }
    report.sections.push_back(std::move(sec));
  }
  report.seconds = timer.seconds();
  return report;
}

namespace {

// Checks every invariant a retraction trace promises.
std::string trace_problem(const CoxeterKernel& kernel, const GeneratorSubset& x,
                          const ArtinWord& input, const Retraction& r) {
  const auto& steps = r.trace.steps;
  if (steps.size() != input.size()) return "trace length differs from input";
  CoxeterElement prev_u = kernel.identity();
  CoxeterElement prev_v = kernel.identity();
  CoxeterElement prev_w = kernel.identity();
  ArtinWord emitted;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const TraceStep& s = steps[i];
    const std::string at = "step " + std::to_string(i + 1) + ": ";
    if (s.letter != input[i]) return at + "letter mismatch";
    if (s.prefix != kernel.multiply(prev_u, s.letter.generator))
      return at + "prefix is not u_{i-1} s_z";
    if (!supported_on(s.vpart, x)) return at + "v_i leaves W_X";
    for (Generator g : x) {
      if (kernel.is_left_descent(s.wpart, g))
        return at + "w_i has a left descent in X";
    }
    if (kernel.multiply(s.vpart, s.wpart) != s.prefix ||
        s.vpart.length() + s.wpart.length() != s.prefix.length())
      return at + "u_i != v_i w_i additively";
    const CoxeterElement& base = s.letter.sign > 0 ? prev_w : s.wpart;
    if (s.reflection !=
        kernel.conjugate(base, kernel.generator(s.letter.generator)))
      return at + "reflection does not follow the sign rule";
    const bool in_sx =
        s.reflection.length() == 1 && x.contains(s.reflection.word().front());
    if (in_sx != s.emitted.has_value()) return at + "emission mismatch";
    if (s.emitted) {
      if (s.emitted->sign != s.letter.sign ||
          s.emitted->generator != s.reflection.word().front())
        return at + "emitted letter is wrong";
      emitted.push_back(*s.emitted);
    } else if (s.vpart != prev_v) {
      return at + "v_i changed although nothing was emitted";
    }
    prev_u = s.prefix;
    prev_v = s.vpart;
    prev_w = s.wpart;
  }
  if (emitted != r.word) return "output is not the emitted letters";
  return {};
}

struct RetractionCase {
  std::string label;
  Presentation presentation;
  std::vector<std::string> subsets;
};

}  // namespace

SuiteReport run_retraction_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report{"prop23", {}, 0.0};

  // Identity on words over Sigma_X.
  {
    const std::vector<RetractionCase> cases = {
        {"A3", catalog::a3(), {"a", "a,b", "b,c", "a,c"}},
        {"B2", catalog::dihedral(4), {"a", "b", "a,b"}},
        {"raag-square", catalog::raag_square(), {"a,b", "a,c", "a,b,c"}},
        {"free3", catalog::free_group(3), {"a", "a,b", "a,b,c"}},
        {"triangle3", catalog::triangle(3), {"a", "a,b", "b,c"}},
    };
    SectionResult sec{"identity"};
    SectionResult trace{"trace"};
    std::size_t combos = 0;
    for (const auto& c : cases) combos += c.subsets.size();
    const std::size_t per_combo = (1000 + combos - 1) / combos;
    std::uint64_t case_id = 0;
    for (const auto& c : cases) {
      const CoxeterKernel kernel(c.presentation);
      for (const auto& xs : c.subsets) {
        const GeneratorSubset x = c.presentation.parse_subset(xs);
        Rng rng(mix(options.seed, 1, case_id++));
        for (std::size_t i = 0; i < per_combo; ++i) {
          const ArtinWord w = random_word(x, rng.below(31), rng);
          const Retraction r = pi_hat(kernel, x, w);
          if (r.word == w) {
            sec.pass();
          } else {
            sec.fail(c.label + " X={" + xs + "} " + word_of(kernel, w) +
                     " -> " + word_of(kernel, r.word));
          }
          // Trace invariants on an unrestricted word of the same length.
          const ArtinWord g = random_word(c.presentation.all(), w.size(), rng);
          const std::string problem =
              trace_problem(kernel, x, g, pi_hat(kernel, x, g));
          if (problem.empty()) {
            trace.pass();
          } else {
            trace.fail(c.label + " X={" + xs + "} " + word_of(kernel, g) +
                       ": " + problem);
          }
        }
      }
    }
    report.sections.push_back(std::move(sec));
    report.sections.push_back(std::move(trace));
  }

  // Independence from the word: fuzzed rewrites of a word retract to the
  // same element of A_X.
  {
    const std::vector<NamedPresentation> decidable = {
        {"dihedral3", catalog::dihedral(3)},
        {"dihedral4", catalog::dihedral(4)},
        {"dihedral5", catalog::dihedral(5)},
        {"raag-square", catalog::raag_square()},
        {"free3", catalog::free_group(3)},
    };
    std::uint64_t case_id = 0;
    for (const auto& np : decidable) {
      SectionResult sec{"well-defined/" + np.label};
      const CoxeterKernel kernel(np.presentation);
      Rng rng(mix(options.seed, 2, case_id++));
      for (std::size_t i = 0; i < 500; ++i) {
        const GeneratorSubset x = random_subset(kernel.rank(), rng);
        const ArtinWord w =
            random_word(np.presentation.all(), rng.below(21), rng);
        const ArtinWord w2 =
            fuzz_rewrite(np.presentation, w, rng.next(), rng.below(21));
        const ArtinWord r1 = pi_hat(kernel, x, w).word;
        const ArtinWord r2 = pi_hat(kernel, x, w2).word;
        const EqualityVerdict v = equals_oracle(kernel, r1, r2);
        if (v.verdict == Verdict::Equal &&
            theta(kernel, r1) == theta(kernel, r2)) {
          sec.pass();
        } else {
          sec.fail("X={" + np.presentation.format_subset(x) + "} " +
                   word_of(kernel, w) + " vs " + word_of(kernel, w2) + ": " +
                   std::string(to_string(v.verdict)) + " (" + v.witness + ")");
        }
      }
      report.sections.push_back(std::move(sec));
    }

    SectionResult sec{"well-defined/triangle3"};
    const Presentation tri = catalog::triangle(3);
    const CoxeterKernel kernel(tri);
    Rng rng(mix(options.seed, 3));
    for (std::size_t i = 0; i < 500; ++i) {
      const GeneratorSubset x = random_subset(kernel.rank(), rng);
      const ArtinWord w = random_word(tri.all(), rng.below(21), rng);
      const ArtinWord w2 = fuzz_rewrite(tri, w, rng.next(), rng.below(21));
      const ArtinWord r1 = pi_hat(kernel, x, w).word;
      const ArtinWord r2 = pi_hat(kernel, x, w2).word;
      const Presentation sub = induced(tri, x);
      const bool same_theta = theta(kernel, r1) == theta(kernel, r2);
      const bool same_ab = merged_abelianization(sub, localize(r1, x)) ==
                           merged_abelianization(sub, localize(r2, x));
      const EqualityVerdict v = equals_oracle(kernel, r1, r2);
      if (same_theta && same_ab && v.verdict != Verdict::NotEqual) {
        sec.pass();
      } else {
        sec.fail("X={" + tri.format_subset(x) + "} " + word_of(kernel, w) +
                 " vs " + word_of(kernel, w2));
      }
    }
    report.sections.push_back(std::move(sec));
  }

  // Multiplicativity on colored words.
  {
    const std::vector<NamedPresentation> decidable = {
        {"dihedral3", catalog::dihedral(3)},
        {"dihedral4", catalog::dihedral(4)},
        {"dihedral5", catalog::dihedral(5)},
        {"raag-square", catalog::raag_square()},
        {"free3", catalog::free_group(3)},
    };
    std::uint64_t case_id = 0;
    for (const auto& np : decidable) {
      SectionResult sec{"colored-hom/" + np.label};
      const CoxeterKernel kernel(np.presentation);
      Rng rng(mix(options.seed, 4, case_id++));
      for (std::size_t i = 0; i < 200; ++i) {
        const GeneratorSubset x = random_subset(kernel.rank(), rng);
        const ArtinWord b1 = color(
            kernel, random_word(np.presentation.all(), rng.below(11), rng));
        const ArtinWord b2 = color(
            kernel, random_word(np.presentation.all(), rng.below(11), rng));
        const ArtinWord lhs = pi_hat(kernel, x, concat(b1, b2)).word;
        const ArtinWord rhs =
            concat(pi_hat(kernel, x, b1).word, pi_hat(kernel, x, b2).word);
        const EqualityVerdict v = equals_oracle(kernel, lhs, rhs);
        if (v.verdict == Verdict::Equal) {
          sec.pass();
        } else {
          sec.fail("X={" + np.presentation.format_subset(x) + "} " +
                   word_of(kernel, b1) + " . " + word_of(kernel, b2) + ": " +
                   std::string(to_string(v.verdict)));
        }
      }
      report.sections.push_back(std::move(sec));
    }
  }

  report.seconds = timer.seconds();
  return report;
}

SuiteReport run_transport_suite(const SuiteOptions&) {
  Timer timer;
  SuiteReport report{"lemma22", {}, 0.0};

  {
    SectionResult sec{"A3"};
    const CoxeterKernel kernel(catalog::a3());
    const auto subsets = all_subsets(kernel.rank());
    for (const CoxeterElement& w : kernel.enumerate(1'000).elements) {
      for (const auto& x : subsets) {
        for (const auto& y : subsets) {
          bool admissible = true;
          for (Generator g : y) {
            admissible = admissible &&
                         member_parabolic(kernel, x,
                                          kernel.conjugate(w, kernel.generator(g)));
          }
          const std::string where = "w=" + word_of(kernel, w) + " X={" +
                                    kernel.presentation().format_subset(x) +
                                    "} Y={" +
                                    kernel.presentation().format_subset(y) +
                                    "}";
          if (!admissible) {
            try {
              transport(kernel, x, y, w);
              sec.fail(where + ": inadmissible input accepted");
            } catch (const PreconditionViolated&) {
              sec.pass();
            }
            continue;
          }
          try {
            const TransportResult t = transport(kernel, x, y, w);
            const auto& d = t.decomposition;
            std::string problem;
            if (d.u1.length() + d.w0.length() + d.u2.length() != w.length() ||
                kernel.multiply(d.u1, kernel.multiply(d.w0, d.u2)) != w) {
              problem = "decomposition not additive";
            } else if (!supported_on(d.u1, x) || !supported_on(d.u2, y) ||
                       !is_minimal(kernel, x, y, d.w0)) {
              problem = "decomposition has the wrong shape";
            } else if (t.y_prime.size() != y.size() ||
                       !t.y_prime.is_subset_of(x)) {
              problem = "f is not injective into X";
            } else if (t.alpha != iota(d.u1)) {
              problem = "alpha != iota(u1)";
            }
            for (const auto& [from, to] : t.f) {
              if (!problem.empty()) break;
              if (kernel.conjugate(d.w0, kernel.generator(from)) !=
                  kernel.generator(to)) {
                problem = "w0 s_y w0^-1 != s_f(y)";
              }
            }
            if (problem.empty()) {
              sec.pass();
            } else {
              sec.fail(where + ": " + problem);
            }
          } catch (const Error& e) {
            sec.fail(where + ": " + e.what());
          }
        }
      }
    }
    report.sections.push_back(std::move(sec));
  }

  for (std::uint32_t m : {3u, 4u, 5u, 6u}) {
    SectionResult sec{"dihedral" + std::to_string(m) + "-artin"};
    const CoxeterKernel kernel(catalog::dihedral(m));
    const auto subsets = all_subsets(2);
    for (const CoxeterElement& w : kernel.enumerate(1'000).elements) {
      if (w.length() > 6) continue;
      for (const auto& x : subsets) {
        for (const auto& y : subsets) {
          TransportResult t;
          try {
            t = transport(kernel, x, y, w);
          } catch (const PreconditionViolated&) {
            continue;
          }
          const std::string where = "w=" + word_of(kernel, w) + " X={" +
                                    kernel.presentation().format_subset(x) +
                                    "} Y={" +
                                    kernel.presentation().format_subset(y) +
                                    "}";
          std::string problem;
          const ArtinWord lift_w0 = iota(t.decomposition.w0);
          for (const auto& [from, to] : t.f) {
            const ArtinWord lhs =
                concat(lift_w0, ArtinWord{pos(from)}, invert_word(lift_w0));
            const EqualityVerdict v =
                equals_oracle(kernel, lhs, ArtinWord{pos(to)});
            if (v.verdict != Verdict::Equal) {
              problem = "iota(w0) sigma_y iota(w0)^-1 != sigma_f(y)";
            }
          }
          // iota(w) A_Y iota(w)^-1 = alpha A_Y' alpha^-1, generator-wise.
          const ArtinWord lift_w = iota(w);
          const ArtinWord a_inv_w = concat(invert_word(t.alpha), lift_w);
          const ArtinWord w_inv_a = invert_word(a_inv_w);
          for (Generator g : y) {
            if (!problem.empty()) break;
            const ArtinWord h =
                concat(a_inv_w, ArtinWord{pos(g)}, invert_word(a_inv_w));
            const MembershipVerdict mv =
                member_artin_parabolic(kernel, t.y_prime, h);
            if (mv.decision != Decision::Yes) {
              problem = "iota(w) sigma_y iota(w)^-1 not in alpha A_Y' "
                        "alpha^-1: " + mv.witness;
            }
          }
          for (Generator g : t.y_prime) {
            if (!problem.empty()) break;
            const ArtinWord h =
                concat(w_inv_a, ArtinWord{pos(g)}, invert_word(w_inv_a));
            const MembershipVerdict mv = member_artin_parabolic(kernel, y, h);
            if (mv.decision != Decision::Yes) {
              problem = "alpha sigma_y' alpha^-1 not in iota(w) A_Y "
                        "iota(w)^-1: " + mv.witness;
            }
          }
          if (problem.empty()) {
            sec.pass();
          } else {
            sec.fail(where + ": " + problem);
          }
        }
      }
    }
    report.sections.push_back(std::move(sec));
  }

  report.seconds = timer.seconds();
  return report;
}

namespace {

struct PipelineCase {
  std::string label;
  Presentation presentation;
  bool decidable;
};

std::vector<PipelineCase> pipeline_cases() {
  return {
      {"dihedral3", catalog::dihedral(3), true},
      {"dihedral4", catalog::dihedral(4), true},
      {"raag-square", catalog::raag_square(), true},
      {"free3", catalog::free_group(3), true},
      {"triangle3", catalog::triangle(3), false},
      {"a3-path", catalog::a3(), false},
  };
}

// Generates `count` instances, skipping seeds whose search is exhausted.
template <typename Visit>
void for_instances(const CoxeterKernel& kernel, std::uint64_t seed,
                   std::size_t count, Visit visit) {
  const std::size_t n = kernel.rank();
  std::size_t made = 0;
  for (std::uint64_t i = 0; made < count && i < 50 * count; ++i) {
    Rng rng(mix(seed, 7, i));
    InstanceParams params;
    params.x_size = 1 + rng.below(n);
    params.y_size = 1 + rng.below(params.x_size);
    params.pad_len = rng.below(5);
    params.w_search_len = 6;
    Instance inst;
    try {
      inst = generate_instance(kernel, rng.next(), params);
    } catch (const SearchExhausted&) {
      continue;
    }
    ++made;
    visit(inst);
  }
}

}  // namespace

SuiteReport run_colored_conjugation_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report{"lemma24", {}, 0.0};
  std::uint64_t case_id = 0;
  for (const PipelineCase& c : pipeline_cases()) {
    SectionResult sec{c.label};
    const CoxeterKernel kernel(c.presentation);
    for_instances(kernel, mix(options.seed, 5, case_id++), 100,
                  [&](const Instance& inst) {
      try {
        const ConjugationResult r =
            conjugate_into_parabolic(kernel, inst.x, inst.y, inst.alpha);
        const ArtinWord& b2 = r.audit.beta2;
        for (Generator g : r.y_prime) {
          const ArtinWord a = concat(b2, ArtinWord{pos(g)}, invert_word(b2));
          const ColoredConjugationReport rep =
              verify_colored_conjugation(kernel, inst.x, a, r.audit.beta1);
          switch (rep.verdict.verdict) {
            case Verdict::Equal:
              sec.pass();
              break;
            case Verdict::NotEqual:
              sec.fail(word_of(kernel, inst.alpha) + ": " +
                       rep.verdict.witness);
              break;
            case Verdict::Unknown:
              if (c.decidable) {
                sec.fail(word_of(kernel, inst.alpha) + ": undecided");
              } else {
                sec.skip();
              }
              break;
          }
        }
      } catch (const Error& e) {
        sec.fail(word_of(kernel, inst.alpha) + ": " + e.what());
      }
    });
    report.sections.push_back(std::move(sec));
  }
  report.seconds = timer.seconds();
  return report;
}

SuiteReport run_conjugation_suite(const SuiteOptions& options) {
  Timer timer;
  SuiteReport report{"theorem11", {}, 0.0};

  {
    SectionResult sec{"worked-example"};
    const Presentation p = catalog::dihedral(3);
    const CoxeterKernel kernel(p);
    const ConjugationResult r = conjugate_into_parabolic(
        kernel, p.parse_subset("a"), p.parse_subset("b"),
        parse_artin_word(p, "b a"));
    if (r.y_prime == p.parse_subset("a") && r.gamma.empty()) {
      sec.pass();
    } else {
      sec.fail("theorem --x a --y b \"b a\" gave Y'={" +
               p.format_subset(r.y_prime) + "} gamma=" +
               word_of(kernel, r.gamma));
    }
    report.sections.push_back(std::move(sec));
  }

  std::uint64_t case_id = 0;
  for (const PipelineCase& c : pipeline_cases()) {
    SectionResult sec{c.label};
    const CoxeterKernel kernel(c.presentation);
    for_instances(kernel, mix(options.seed, 6, case_id++), 100,
                  [&](const Instance& inst) {
      const std::string where = "X={" + c.presentation.format_subset(inst.x) +
                                "} Y={" +
                                c.presentation.format_subset(inst.y) + "} " +
                                word_of(kernel, inst.alpha);
      try {
        const ConjugationResult r =
            conjugate_into_parabolic(kernel, inst.x, inst.y, inst.alpha);
        const ConjugationReport rep =
            verify_conjugation(kernel, inst.x, inst.y, inst.alpha, r);
        if (rep.support.status != CheckStatus::Pass) {
          sec.fail(where + ": " + rep.support.detail);
        } else if (rep.coxeter_level.status != CheckStatus::Pass) {
          sec.fail(where + ": " + rep.coxeter_level.detail);
        } else if (rep.artin_level.status == CheckStatus::Fail) {
          sec.fail(where + ": " + rep.artin_level.detail);
        } else if (rep.artin_level.status == CheckStatus::Undecided) {
          if (c.decidable) {
            sec.fail(where + ": artin level undecided: " +
                     rep.artin_level.detail);
          } else {
            sec.skip();
          }
        } else {
          sec.pass();
        }
      } catch (const Error& e) {
        sec.fail(where + ": " + e.what());
      }
    });
    report.sections.push_back(std::move(sec));
  }
  report.seconds = timer.seconds();
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "coxeter-oracle", "lemma21", "prop23", "lemma22", "lemma24", "theorem11"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "coxeter-oracle") return run_coxeter_oracle_suite(options);
  if (name == "lemma21") return run_double_coset_suite(options);
  if (name == "prop23") return run_retraction_suite(options);
  if (name == "lemma22") return run_transport_suite(options);
  if (name == "lemma24") return run_colored_conjugation_suite(options);
  if (name == "theorem11") return run_conjugation_suite(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const SectionResult& s : report.sections) {
    out << report.name << '/' << s.label << ": " << s.passed << " passed, "
        << s.failed << " failed";
    if (s.undecided != 0) out << ", " << s.undecided << " undecided";
    out << '\n';
    for (const std::string& f : s.failures) out << "  FAIL " << f << '\n';
  }
  out << report.name << ": " << (report.ok() ? "PASS" : "FAIL") << " ("
      << report.passed() << " passed, " << report.failed() << " failed)\n";
  return out.str();
}

}  // namespace artin
