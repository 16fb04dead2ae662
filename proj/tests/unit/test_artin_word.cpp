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

#include "artin/artin_word.hpp"
#include "artin/catalog.hpp"
#include "artin/error.hpp"
#include "artin/random.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

ArtinWord A(const Presentation& p, const char* text) {
  return parse_artin_word(p, text);
}

ArtinWord random_word(std::size_t rank, std::size_t len, Rng& rng) {
  ArtinWord w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back({static_cast<Generator>(rng.below(rank)),
                 static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
  }
  return w;
}

CoxeterElement random_element(const CoxeterKernel& k, std::size_t len,
                              Rng& rng) {
  CoxeterWord w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(static_cast<Generator>(rng.below(k.rank())));
  return k.reduce(w);
}

// B3 image of a word in A(A2) (a -> s1, b -> s2) or A(B2) (a -> s1^2,
// b -> s2).
artin::testing::Mat2 burau_image(const ArtinWord& w, bool b2) {
  std::vector<std::pair<int, int>> letters;
  for (const ArtinLetter& l : w) {
    letters.emplace_back(static_cast<int>(l.generator), l.sign);
    if (b2 && l.generator == 0) letters.emplace_back(0, l.sign);
  }
  return artin::testing::burau(letters);
}

}  // namespace

TEST_CASE("word syntax") {
  const Presentation p = catalog::a3();
  CHECK(A(p, "a b^-1 c' a^1") ==
        ArtinWord{pos(0), neg(1), neg(2), pos(0)});
  CHECK(A(p, "  ").empty());
  CHECK(format_artin_word(p, A(p, "a b' c^1")) == "a b^-1 c");
  CHECK(format_artin_word(p, {}) == "");
  for (const char* bad : {"a^2", "a^-", "^-1", "a^-1^-1", "a''", "a^+1x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(A(p, bad), ParseError);
  }
  CHECK_THROWS_AS(A(p, "a q^-1"), UnknownGenerator);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const ArtinWord w = random_word(3, rng.below(15), rng);
    CHECK(A(p, format_artin_word(p, w).c_str()) == w);
  }
}

TEST_CASE("free reduction, inversion and concatenation") {
  const Presentation p = catalog::a3();
  CHECK(free_reduce(A(p, "a a^-1")).empty());
  CHECK(free_reduce(A(p, "b a c c^-1 a^-1 b")) == A(p, "b b"));
  CHECK(free_reduce(A(p, "a b")) == A(p, "a b"));
  CHECK(invert_word(A(p, "a b^-1")) == A(p, "b a^-1"));
  const ArtinWord w = A(p, "a c^-1 b");
  CHECK(concat(w, ArtinWord{}) == w);
  CHECK(concat(ArtinWord{}, w) == w);
  CHECK(concat(w, A(p, "a"), A(p, "b")) == A(p, "a c^-1 b a b"));
  CHECK(free_reduce(concat(w, invert_word(w))).empty());
  CHECK(support(w) == p.all());
  CHECK(supported_on(A(p, "a c a^-1"), p.parse_subset("a,c")));
  CHECK(!supported_on(A(p, "a b"), p.parse_subset("a,c")));
}

TEST_CASE("theta and iota examples") {
  const Presentation p = catalog::dihedral(3);
  const CoxeterKernel k(p);
  CHECK(theta(k, {}).is_identity());
  CHECK(theta(k, A(p, "a a")).is_identity());
  CHECK(theta(k, A(p, "b a b^-1")).word() == CoxeterWord{0, 1, 0});
  CHECK(iota(k.identity()).empty());
  CHECK(iota(k.reduce(CoxeterWord{1, 0})) == A(p, "b a"));
}

TEST_CASE("theta inverts iota and is a homomorphism") {
  for (const Presentation& p :
       {catalog::a3(), catalog::triangle(3), catalog::raag_square(),
        catalog::dihedral(7)}) {
    const CoxeterKernel k(p);
    Rng rng(11 * p.rank() + p.edges().size());
    for (int i = 0; i < 250; ++i) {
      const CoxeterElement u = random_element(k, rng.below(14), rng);
      const ArtinWord lift = iota(u);
      CHECK(theta(k, lift) == u);
      CHECK(lift.size() == u.length());
      for (const ArtinLetter& l : lift) CHECK(l.sign == 1);
      const ArtinWord w1 = random_word(p.rank(), rng.below(10), rng);
      const ArtinWord w2 = random_word(p.rank(), rng.below(10), rng);
      CHECK(theta(k, concat(w1, w2)) ==
            k.multiply(theta(k, w1), theta(k, w2)));
      CHECK(theta(k, invert_word(w1)) == k.invert(theta(k, w1)));
    }
  }
}

TEST_CASE("iota is multiplicative on length-additive pairs") {
  // Checked in B3 through the Burau representation for A2 and B2.
  for (std::uint32_t m : {3u, 4u}) {
    const CoxeterKernel k(catalog::dihedral(m));
    const auto elems = k.enumerate(100).elements;
    for (const auto& u : elems) {
      for (const auto& v : elems) {
        const CoxeterElement uv = k.multiply(u, v);
        if (uv.length() != u.length() + v.length()) continue;
        CHECK(burau_image(iota(uv), m == 4) ==
              burau_image(concat(iota(u), iota(v)), m == 4));
      }
    }
  }
}

TEST_CASE("colored words") {
  const Presentation p = catalog::dihedral(3);
  const CoxeterKernel k(p);
  CHECK(is_colored(k, {}));
  CHECK(is_colored(k, A(p, "a a")));
  CHECK(!is_colored(k, A(p, "a")));

  CHECK(color(k, A(p, "a a")) == A(p, "a a"));
  CHECK(color(k, A(p, "a")) == A(p, "a a^-1"));
  CHECK(color(k, A(p, "a b")) == A(p, "a b b^-1 a^-1"));
  CHECK(color(k, A(p, "a b a")) == A(p, "a b a a^-1 b^-1 a^-1"));
  CHECK(color(k, A(p, "b a b")) == A(p, "b a b a^-1 b^-1 a^-1"));

  const CoxeterKernel tri(catalog::triangle(3));
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const ArtinWord w = random_word(3, rng.below(15), rng);
    CHECK(is_colored(tri, color(tri, w)));
  }
}

TEST_CASE("abelianization") {
  const Presentation p = catalog::dihedral(3);
  CHECK(abelianization(p, {}) == std::vector<std::int64_t>{0, 0});
  CHECK(abelianization(p, A(p, "a b a^-1")) ==
        std::vector<std::int64_t>{0, 1});
  CHECK(abelianization(p, A(p, "a b a")) != abelianization(p, A(p, "b a b")));
  CHECK(merged_abelianization(p, A(p, "a b a")) ==
        merged_abelianization(p, A(p, "b a b")));
  CHECK(merged_abelianization(p, A(p, "a")) ==
        merged_abelianization(p, A(p, "b")));

  // Even labels keep the generators apart.
  const Presentation b2 = catalog::dihedral(4);
  CHECK(merged_abelianization(b2, A(b2, "a")) !=
        merged_abelianization(b2, A(b2, "b")));
  CHECK(merged_abelianization(b2, A(b2, "a b a b")) ==
        merged_abelianization(b2, A(b2, "b a b a")));

  // Odd edges a-b and c-d: two classes.
  const Presentation q = parse_presentation(
      "vertices: a b c d\nedge: a b 5\nedge: b c 2\nedge: c d 3");
  const MergedAbelianization m = merged_abelianization(q, A(q, "a b d c^-1 c^-1"));
  CHECK(m.class_of == std::vector<Generator>{0, 0, 2, 2});
  CHECK(m.sums == std::vector<std::int64_t>{2, 0, -1, 0});
}

TEST_CASE("fuzz_rewrite") {
  const Presentation p = catalog::dihedral(3);
  const CoxeterKernel k(p);
  const ArtinWord aba = A(p, "a b a");
  CHECK(fuzz_rewrite(p, aba, 123, 0) == aba);

  bool saw_braid_move = false;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const ArtinWord out = fuzz_rewrite(p, aba, seed, 1);
    CHECK(theta(k, out) == theta(k, aba));
    saw_braid_move = saw_braid_move || out == A(p, "b a b");
  }
  CHECK(saw_braid_move);

  for (const Presentation& q :
       {catalog::dihedral(3), catalog::dihedral(4), catalog::a3(),
        catalog::triangle(3), catalog::raag_square(), catalog::free_group(3)}) {
    const CoxeterKernel kq(q);
    Rng rng(q.rank() + 100 * q.edges().size());
    for (int i = 0; i < 200; ++i) {
      const ArtinWord w = random_word(q.rank(), rng.below(15), rng);
      const std::uint64_t seed = rng.next();
      const std::size_t steps = rng.below(25);
      const ArtinWord out = fuzz_rewrite(q, w, seed, steps);
      CHECK(out == fuzz_rewrite(q, w, seed, steps));
      CHECK(theta(kq, out) == theta(kq, w));
      CHECK(merged_abelianization(q, out) == merged_abelianization(q, w));
    }
  }

  // Independent check in B3: rewrites never change the braid.
  Rng rng(8);
  for (std::uint32_t m : {3u, 4u}) {
    const Presentation d = catalog::dihedral(m);
    for (int i = 0; i < 300; ++i) {
      const ArtinWord w = random_word(2, rng.below(15), rng);
      const ArtinWord out = fuzz_rewrite(d, w, rng.next(), rng.below(25));
      CHECK(burau_image(out, m == 4) == burau_image(w, m == 4));
    }
  }
}
