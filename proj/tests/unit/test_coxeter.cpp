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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "artin/catalog.hpp"
#include "artin/coxeter.hpp"
#include "artin/error.hpp"
#include "artin/random.hpp"
#include "oracles.hpp"

using namespace artin;
using artin::testing::PermOracle;

namespace {

CoxeterWord W(const Presentation& p, const char* text) {
  return parse_coxeter_word(p, text);
}

CoxeterWord random_word(std::size_t rank, std::size_t len, Rng& rng) {
  CoxeterWord w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(static_cast<Generator>(rng.below(rank)));
  return w;
}

CoxeterWord to_word(const artin::testing::Word& w) {
  return CoxeterWord(w.begin(), w.end());
}

// Every element and every product against the permutation oracle.
void check_against_oracle(const Presentation& p, const PermOracle& oracle) {
  const CoxeterKernel kernel(p);
  std::vector<CoxeterElement> elems;
  for (const auto& perm : oracle.elements()) {
    const CoxeterWord canon = to_word(oracle.canonical(perm));
    const CoxeterElement u = kernel.reduce(canon);
    CHECK(u.word() == canon);
    elems.push_back(u);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto perm = artin::testing::compose(oracle.elements()[i],
                                                oracle.elements()[j]);
      REQUIRE(kernel.multiply(elems[i], elems[j]).word() ==
              to_word(oracle.canonical(perm)));
    }
  }
  const Enumeration e = kernel.enumerate(oracle.order() + 10);
  CHECK(e.finite);
  CHECK(e.elements.size() == oracle.order());
}

}  // namespace

TEST_CASE("braid closure examples") {
  const Presentation a2 = catalog::dihedral(3);
  const CoxeterKernel k(a2);
  CHECK(k.braid_closure(W(a2, "a b a")) ==
        std::vector<CoxeterWord>{W(a2, "a b a"), W(a2, "b a b")});
  CHECK(k.braid_closure(W(a2, "a")) == std::vector<CoxeterWord>{W(a2, "a")});
  CHECK(k.braid_closure({}) == std::vector<CoxeterWord>{CoxeterWord{}});

  const Presentation a1a1 = catalog::dihedral(2);
  const CoxeterKernel k2(a1a1);
  CHECK(k2.braid_closure(W(a1a1, "a b")) ==
        std::vector<CoxeterWord>{W(a1a1, "a b"), W(a1a1, "b a")});

  const CoxeterKernel b2(catalog::dihedral(4));
  CHECK(b2.braid_closure(CoxeterWord{0, 1, 0, 1}).size() == 2);
}

TEST_CASE("reduce examples") {
  const Presentation a2 = catalog::dihedral(3);
  const CoxeterKernel k(a2);
  CHECK(k.reduce(W(a2, "a b a b")).word() == W(a2, "b a"));
  CHECK(k.reduce(W(a2, "a a")).is_identity());
  CHECK(k.reduce(W(a2, "b a b")).word() == W(a2, "a b a"));

  const Presentation f2 = catalog::free_group(2);
  const CoxeterKernel kf(f2);
  CHECK(kf.reduce(W(f2, "a b a b a b")).word() == W(f2, "a b a b a b"));
  CHECK(kf.reduce(W(f2, "a b b a")).is_identity());
}

TEST_CASE("multiply, invert and length examples") {
  const Presentation a2 = catalog::dihedral(3);
  const CoxeterKernel k(a2);
  const CoxeterElement aba = k.reduce(W(a2, "a b a"));
  const CoxeterElement ab = k.reduce(W(a2, "a b"));
  CHECK(k.multiply(aba, k.identity()) == aba);
  CHECK(k.multiply(aba, aba).is_identity());
  CHECK(k.multiply(ab, ab).word() == W(a2, "b a"));

  CHECK(k.invert(k.identity()).is_identity());
  CHECK(k.invert(k.generator(0)) == k.generator(0));
  CHECK(k.invert(ab).word() == W(a2, "b a"));

  CHECK(k.length(k.identity()) == 0);
  CHECK(k.length(aba) == 3);
  const CoxeterKernel b2(catalog::dihedral(4));
  CHECK(b2.reduce(CoxeterWord{0, 1, 0, 1}).length() == 4);
}

TEST_CASE("descent examples") {
  const Presentation a2 = catalog::dihedral(3);
  const CoxeterKernel k(a2);
  CHECK(k.left_descents(k.identity()).empty());
  CHECK(k.right_descents(k.identity()).empty());
  const CoxeterElement aba = k.reduce(W(a2, "a b a"));
  CHECK(k.left_descents(aba) == a2.all());
  CHECK(k.right_descents(aba) == a2.all());
  const CoxeterElement ba = k.reduce(W(a2, "b a"));
  CHECK(k.left_descents(ba) == GeneratorSubset{1});
  CHECK(k.right_descents(ba) == GeneratorSubset{0});
}

TEST_CASE("enumerate examples") {
  const Enumeration a2 = CoxeterKernel(catalog::dihedral(3)).enumerate(100);
  CHECK(a2.finite);
  CHECK(a2.elements.size() == 6);
  const Enumeration b2 = CoxeterKernel(catalog::dihedral(4)).enumerate(100);
  CHECK(b2.finite);
  CHECK(b2.elements.size() == 8);
  const Enumeration dinf = CoxeterKernel(catalog::free_group(2)).enumerate(10);
  CHECK(!dinf.finite);
  CHECK(dinf.elements.size() == 10);
  // Exactly at the order still counts as closed.
  CHECK(CoxeterKernel(catalog::dihedral(3)).enumerate(6).finite);
  CHECK(!CoxeterKernel(catalog::dihedral(3)).enumerate(5).finite);
  // ShortLex order.
  CHECK(std::is_sorted(a2.elements.begin(), a2.elements.end()));
}

TEST_CASE("finite groups agree with permutation oracles") {
  for (int m = 2; m <= 8; ++m) {
    CAPTURE(m);
    check_against_oracle(catalog::dihedral(m),
                         artin::testing::dihedral_oracle(m));
  }
  check_against_oracle(catalog::a3(), artin::testing::symmetric_oracle(3));

  // A4 = S5, 120 elements; random words only.
  const Presentation a4 = parse_presentation(
      "vertices: a b c d\nedge: a b 3\nedge: b c 3\nedge: c d 3\n"
      "edge: a c 2\nedge: a d 2\nedge: b d 2");
  const PermOracle s5 = artin::testing::symmetric_oracle(4);
  CHECK(s5.order() == 120);
  const CoxeterKernel k(a4);
  CHECK(k.enumerate(1000).elements.size() == 120);
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const CoxeterWord w = random_word(4, rng.below(25), rng);
    const auto& expected = s5.canonical(artin::testing::Word(w.begin(), w.end()));
    REQUIRE(k.reduce(w).word() == to_word(expected));
  }
}

TEST_CASE("kernel properties on finite and infinite groups") {
  for (const Presentation& p :
       {catalog::dihedral(5), catalog::a3(), catalog::triangle(3),
        catalog::raag_square(), catalog::free_group(3),
        parse_presentation("vertices: a b c\nedge: a b 4\nedge: b c 6")}) {
    const CoxeterKernel k(p);
    Rng rng(7 + p.rank());
    for (int i = 0; i < 150; ++i) {
      const CoxeterWord w1 = random_word(p.rank(), rng.below(12), rng);
      const CoxeterWord w2 = random_word(p.rank(), rng.below(12), rng);
      const CoxeterElement u = k.reduce(w1);
      const CoxeterElement v = k.reduce(w2);
      CoxeterWord joined = w1;
      joined.insert(joined.end(), w2.begin(), w2.end());

      CHECK(k.reduce(u.word()) == u);
      CHECK(k.reduce(joined) == k.multiply(u, v));
      CHECK(k.invert(u).length() == u.length());
      CoxeterWord rev(u.word().rbegin(), u.word().rend());
      CHECK(k.invert(u) == k.reduce(rev));
      const CoxeterElement uv = k.multiply(u, v);
      CHECK(uv.length() <= u.length() + v.length());
      CHECK((uv.length() + u.length() + v.length()) % 2 == 0);
      CHECK(k.multiply(u, k.invert(u)).is_identity());
      CHECK(k.multiply(k.multiply(u, v), k.invert(v)) == u);
      // The canonical word is the least member of its closure.
      const auto closure = k.braid_closure(u.word());
      CHECK(closure.front() == u.word());
      for (Generator x = 0; x < p.rank(); ++x) {
        const bool starts = std::any_of(
            closure.begin(), closure.end(),
            [&](const CoxeterWord& c) { return !c.empty() && c.front() == x; });
        const bool ends = std::any_of(
            closure.begin(), closure.end(),
            [&](const CoxeterWord& c) { return !c.empty() && c.back() == x; });
        CHECK(k.is_left_descent(u, x) == starts);
        CHECK(k.is_right_descent(u, x) == ends);
        CHECK(k.multiply(x, u) == k.multiply(k.generator(x), u));
        CHECK(k.multiply(u, x) == k.multiply(u, k.generator(x)));
      }
    }
  }
}

TEST_CASE("closure cap is a hard error naming the word") {
  const Presentation p = catalog::raag_square();
  const CoxeterKernel k(p, 10);
  // a, c commute with b, d: 70 shuffles of (a c a c) with (b d b d).
  try {
    k.reduce(W(p, "a c a c b d b d"));
    FAIL("expected ClosureCapExceeded");
  } catch (const ClosureCapExceeded& e) {
    CHECK(std::string(e.what()).find("a c a c") != std::string::npos);
    CHECK(e.kind() == "ClosureCapExceeded");
  }
  CHECK(CoxeterKernel(p, 70).reduce(W(p, "a c a c b d b d")).length() == 8);
}

TEST_CASE("word parsing and validation") {
  const Presentation p = catalog::a3();
  CHECK(parse_coxeter_word(p, "  a  b\tc ") == CoxeterWord{0, 1, 2});
  CHECK(parse_coxeter_word(p, "").empty());
  CHECK(format_coxeter_word(p, CoxeterWord{2, 0}) == "c a");
  CHECK_THROWS_AS(parse_coxeter_word(p, "a q"), UnknownGenerator);
  const CoxeterKernel k(p);
  CHECK_THROWS_AS(k.reduce(CoxeterWord{0, 9}), UnknownGenerator);
  CHECK_THROWS_AS(k.generator(3), UnknownGenerator);
}

TEST_CASE("shared kernel is safe under concurrent use") {
  const Presentation p = catalog::triangle(3);
  std::vector<CoxeterWord> words;
  Rng rng(99);
  for (int i = 0; i < 200; ++i) words.push_back(random_word(3, 14, rng));

  std::vector<CoxeterElement> expected;
  {
    const CoxeterKernel solo(p);
    for (const auto& w : words) expected.push_back(solo.reduce(w));
  }
  const CoxeterKernel shared(p);
  std::vector<std::vector<CoxeterElement>> got(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < got.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < words.size(); ++i) {
        const std::size_t j = (i * (t + 1)) % words.size();
        got[t].push_back(shared.reduce(words[j]));
        shared.left_descents(got[t].back());
      }
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < got.size(); ++t) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(got[t][i] == expected[(i * (t + 1)) % words.size()]);
    }
  }
}
