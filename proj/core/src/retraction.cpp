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

#include "artin/retraction.hpp"

#include <algorithm>
#include <numeric>

#include "artin/error.hpp"
#include "artin/random.hpp"

namespace artin {

Retraction pi_hat(const CoxeterKernel& kernel, const GeneratorSubset& x,
                  const ArtinWord& w) {
  Retraction out;
  out.trace.steps.reserve(w.size());
  CoxeterElement prev_u = kernel.identity();
  CoxeterElement prev_w = kernel.identity();
  for (const ArtinLetter& letter : w) {
    const CoxeterElement s = kernel.generator(letter.generator);
    CoxeterElement u = kernel.multiply(prev_u, letter.generator);
    CosetDecomposition d = decompose_left(kernel, x, u);
    CoxeterElement t = kernel.conjugate(letter.sign > 0 ? prev_w : d.w, s);

    std::optional<ArtinLetter> emitted;
    if (t.length() == 1 && x.contains(t.word().front())) {
      emitted = ArtinLetter{t.word().front(), letter.sign};
      out.word.push_back(*emitted);
    }
    prev_u = u;
    prev_w = d.w;
    out.trace.steps.push_back({letter, std::move(u), std::move(d.v),
                               std::move(d.w), std::move(t), emitted});
  }
  return out;
}

TransportResult transport(const CoxeterKernel& kernel, const GeneratorSubset& x,
                          const GeneratorSubset& y, const CoxeterElement& w) {
  const Presentation& p = kernel.presentation();
  for (Generator g : y) {
    if (!member_parabolic(kernel, x, kernel.conjugate(w, kernel.generator(g)))) {
      throw PreconditionViolated(
          "w s_" + p.name(g) + " w^-1 is not in W_{" + p.format_subset(x) +
          "} for w = '" + format_coxeter_word(p, w.word()) + "'");
    }
  }
  TransportResult out;
  out.decomposition = double_coset_decompose(kernel, x, y, w);
  std::vector<Generator> image;
  for (Generator g : y) {
    const CoxeterElement c =
        kernel.conjugate(out.decomposition.w0, kernel.generator(g));
    if (c.length() != 1 || !x.contains(c.word().front())) {
      throw InternalAssertion("w0 s_" + p.name(g) +
                              " w0^-1 is not a generator of W_X");
    }
    out.f.emplace_back(g, c.word().front());
    image.push_back(c.word().front());
  }
  out.y_prime = GeneratorSubset(image);
  if (out.y_prime.size() != y.size()) {
    throw InternalAssertion("transport map is not injective");
  }
  out.alpha = iota(out.decomposition.u1);
  return out;
}

ConjugationResult conjugate_into_parabolic(const CoxeterKernel& kernel,
                                           const GeneratorSubset& x,
                                           const GeneratorSubset& y,
                                           const ArtinWord& alpha) {
  const Presentation& p = kernel.presentation();
  ConjugationResult out;
  ConjugationAudit& audit = out.audit;
  audit.w = theta(kernel, alpha);
  audit.checked_precondition = "theta(alpha) W_{" + p.format_subset(y) +
                               "} theta(alpha)^-1 in W_{" +
                               p.format_subset(x) + "}";
  audit.trusted_precondition = "alpha A_{" + p.format_subset(y) +
                               "} alpha^-1 in A_{" + p.format_subset(x) + "}";
  audit.transport = transport(kernel, x, y, audit.w);
  audit.beta2 = audit.transport.alpha;
  audit.beta1 = concat(alpha, invert_word(iota(audit.w)));
  if (!is_colored(kernel, audit.beta1)) {
    throw InternalAssertion("alpha iota(theta(alpha))^-1 is not colored");
  }
  audit.pi_of_beta1 = pi_hat(kernel, x, audit.beta1);
  out.y_prime = audit.transport.y_prime;
  out.gamma = concat(audit.pi_of_beta1.word, audit.beta2);
  return out;
}

ColoredConjugationReport verify_colored_conjugation(
    const CoxeterKernel& kernel, const GeneratorSubset& x,
    const ArtinWord& alpha, const ArtinWord& beta) {
  if (!is_colored(kernel, beta)) {
    throw PreconditionViolated("beta is not colored");
  }
  if (!supported_on(alpha, x)) {
    throw PreconditionViolated("alpha is not supported on X");
  }
  ColoredConjugationReport out;
  out.pi_of_beta = pi_hat(kernel, x, beta).word;
  out.lhs = concat(beta, alpha, invert_word(beta));
  out.rhs = concat(out.pi_of_beta, alpha, invert_word(out.pi_of_beta));
  out.verdict = equals_oracle(kernel, out.lhs, out.rhs);
  return out;
}

namespace {

std::vector<Generator> shuffled(std::vector<Generator> v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
  return v;
}

GeneratorSubset random_subset(std::vector<Generator> pool, std::size_t size,
                              Rng& rng) {
  pool = shuffled(std::move(pool), rng);
  pool.resize(size);
  return GeneratorSubset(std::move(pool));
}

ArtinWord random_word_over(const GeneratorSubset& gens, std::size_t len,
                           Rng& rng) {
  ArtinWord out;
  if (gens.empty()) return out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back({gens[rng.below(gens.size())],
                   static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
  }
  return out;
}

}  // namespace

Instance generate_instance(const CoxeterKernel& kernel, std::uint64_t seed,
                           const InstanceParams& params) {
  const std::size_t n = kernel.rank();
  if (params.x_size > n || params.y_size > n) {
    throw PreconditionViolated("subset sizes exceed the number of generators");
  }
  Rng rng(seed);
  std::vector<Generator> all(n);
  std::iota(all.begin(), all.end(), Generator{0});
  Instance out;
  out.x = random_subset(all, params.x_size, rng);

  const std::size_t start = rng.below(params.w_search_len + 1);
  std::vector<std::size_t> lengths;
  for (std::size_t len = start; len <= params.w_search_len; ++len)
    lengths.push_back(len);
  for (std::size_t len = start; len-- > 0;) lengths.push_back(len);

  for (std::size_t len : lengths) {
    const std::size_t tries =
        len == 0 ? 1 : std::max<std::size_t>(1, params.candidates_per_length);
    for (std::size_t attempt = 0; attempt < tries; ++attempt) {
      CoxeterWord word;
      for (std::size_t i = 0; i < len && n > 0; ++i) {
        Generator g = static_cast<Generator>(rng.below(n));
        if (!word.empty() && n > 1 && g == word.back()) {
          g = static_cast<Generator>((g + 1 + rng.below(n - 1)) % n);
        }
        word.push_back(g);
      }
      const CoxeterElement w = kernel.reduce(word);
      std::vector<Generator> domain;
      for (Generator g = 0; g < n; ++g) {
        if (member_parabolic(kernel, out.x,
                             kernel.conjugate(w, kernel.generator(g)))) {
          domain.push_back(g);
        }
      }
      if (domain.size() < params.y_size) continue;
      out.y = random_subset(std::move(domain), params.y_size, rng);
      out.w = w;
      out.alpha = concat(random_word_over(out.x, params.pad_len, rng),
                         iota(w),
                         random_word_over(out.y, params.pad_len, rng));
      return out;
    }
  }
  throw SearchExhausted("no w of length <= " +
                        std::to_string(params.w_search_len) +
                        " conjugates a " + std::to_string(params.y_size) +
                        "-generator parabolic into W_{" +
                        kernel.presentation().format_subset(out.x) + "}");
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Undecided:
      break;
  }
  return "undecided";
}

ConjugationReport verify_conjugation(const CoxeterKernel& kernel,
                                     const GeneratorSubset& x,
                                     const GeneratorSubset& y,
                                     const ArtinWord& alpha,
                                     const ConjugationResult& result) {
  const Presentation& p = kernel.presentation();
  const ArtinWord& gamma = result.gamma;
  const GeneratorSubset& y_prime = result.y_prime;
  ConjugationReport report;

  if (!y_prime.is_subset_of(x)) {
    report.support = {CheckStatus::Fail, "Y' is not a subset of X"};
  } else if (!supported_on(gamma, x)) {
    report.support = {CheckStatus::Fail, "gamma has a letter outside X"};
  } else {
    report.support = {CheckStatus::Pass, "gamma supported on X"};
  }

  // theta(gamma)^-1 theta(alpha) W_Y theta(alpha)^-1 theta(gamma) = W_Y'.
  const CoxeterElement a = theta(kernel, alpha);
  const CoxeterElement g = theta(kernel, gamma);
  const CoxeterElement g_inv_a = kernel.multiply(kernel.invert(g), a);
  const CoxeterElement a_inv_g = kernel.invert(g_inv_a);
  report.coxeter_level = {CheckStatus::Pass, "subgroups agree in W"};
  for (Generator s : y) {
    if (!member_parabolic(kernel, y_prime,
                          kernel.conjugate(g_inv_a, kernel.generator(s)))) {
      report.coxeter_level = {CheckStatus::Fail,
                              "conjugate of s_" + p.name(s) +
                                  " by theta(alpha) escapes the gamma side"};
      break;
    }
  }
  if (report.coxeter_level.status == CheckStatus::Pass) {
    for (Generator s : y_prime) {
      if (!member_parabolic(kernel, y,
                            kernel.conjugate(a_inv_g, kernel.generator(s)))) {
        report.coxeter_level = {CheckStatus::Fail,
                                "conjugate of s_" + p.name(s) +
                                    " by theta(gamma) escapes the alpha side"};
        break;
      }
    }
  }

  // gamma^-1 alpha sigma_y alpha^-1 gamma in A_Y' and symmetrically.
  const ArtinWord gamma_inv_alpha = concat(invert_word(gamma), alpha);
  const ArtinWord alpha_inv_gamma = invert_word(gamma_inv_alpha);
  report.artin_level = {CheckStatus::Pass, "subgroups agree in A"};
  bool undecided = false;
  std::string undecided_detail;
  auto check = [&](const ArtinWord& conj, Generator s,
                   const GeneratorSubset& target) {
    const ArtinWord h = concat(conj, ArtinWord{pos(s)}, invert_word(conj));
    const MembershipVerdict m = member_artin_parabolic(kernel, target, h);
    if (m.decision == Decision::No) {
      report.artin_level = {CheckStatus::Fail,
                            "conjugate of sigma_" + p.name(s) +
                                " not in the other parabolic: " + m.witness};
      return false;
    }
    if (m.decision == Decision::Unknown && !undecided) {
      undecided = true;
      undecided_detail = m.witness;
    }
    return true;
  };
  bool ok = true;
  for (Generator s : y) {
    if (!(ok = check(gamma_inv_alpha, s, y_prime))) break;
  }
  if (ok) {
    for (Generator s : y_prime) {
      if (!(ok = check(alpha_inv_gamma, s, y))) break;
    }
  }
  if (ok && undecided) {
    report.artin_level = {CheckStatus::Undecided, undecided_detail};
  }
  return report;
}

}  // namespace artin
