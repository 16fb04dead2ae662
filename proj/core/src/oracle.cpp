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

#include "artin/oracle.hpp"

#include <algorithm>

#include "artin/error.hpp"
#include "artin/normal_forms.hpp"
#include "artin/parabolic.hpp"

namespace artin {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Equal:
      return "Equal";
    case Verdict::NotEqual:
      return "NotEqual";
    case Verdict::Unknown:
      break;
  }
  return "Unknown";
}

std::string_view to_string(DecidableClass c) noexcept {
  switch (c) {
    case DecidableClass::Free:
      return "free";
    case DecidableClass::RightAngled:
      return "right-angled";
    case DecidableClass::Dihedral:
      return "dihedral";
    case DecidableClass::None:
      break;
  }
  return "undecided";
}

std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::Yes:
      return "Yes";
    case Decision::No:
      return "No";
    case Decision::Unknown:
      break;
  }
  return "Unknown";
}

DecidableClass classify(const Presentation& p) noexcept {
  if (p.is_edgeless()) return DecidableClass::Free;
  if (p.is_right_angled()) return DecidableClass::RightAngled;
  if (p.rank() == 2) return DecidableClass::Dihedral;
  return DecidableClass::None;
}

ArtinWord localize(const ArtinWord& w, const GeneratorSubset& subset) {
  ArtinWord out;
  out.reserve(w.size());
  const auto members = subset.members();
  for (const ArtinLetter& l : w) {
    auto it = std::lower_bound(members.begin(), members.end(), l.generator);
    if (it == members.end() || *it != l.generator) {
      throw PreconditionViolated("word letter outside the target subset");
    }
    out.push_back({static_cast<Generator>(it - members.begin()), l.sign});
  }
  return out;
}

namespace {

std::string describe_subset(const Presentation& p, const GeneratorSubset& z) {
  return "{" + p.format_subset(z) + "}";
}

}  // namespace

EqualityVerdict equals_oracle(const CoxeterKernel& kernel, const ArtinWord& a,
                              const ArtinWord& b) {
  const Presentation& p = kernel.presentation();
  if (a == b) return {Verdict::Equal, "identical words"};
  const ArtinWord fa = free_reduce(a);
  const ArtinWord fb = free_reduce(b);
  if (fa == fb) return {Verdict::Equal, "free reduction"};

  const GeneratorSubset z = support(fa).unite(support(fb));
  const Presentation sub = induced(p, z);
  const ArtinWord la = localize(fa, z);
  const ArtinWord lb = localize(fb, z);
  const std::string where = " on " + describe_subset(p, z);

  switch (classify(sub)) {
    case DecidableClass::Free:
      return {Verdict::NotEqual, "free reduction" + where};
    case DecidableClass::RightAngled: {
      const bool eq = raag_normal_form(sub, la) == raag_normal_form(sub, lb);
      return {eq ? Verdict::Equal : Verdict::NotEqual,
              "right-angled normal form" + where};
    }
    case DecidableClass::Dihedral: {
      const bool eq =
          dihedral_normal_form(sub, la) == dihedral_normal_form(sub, lb);
      return {eq ? Verdict::Equal : Verdict::NotEqual,
              "dihedral Garside normal form" + where};
    }
    case DecidableClass::None:
      break;
  }
  if (theta(kernel, a) != theta(kernel, b)) {
    return {Verdict::NotEqual, "theta images differ"};
  }
  if (merged_abelianization(sub, la) != merged_abelianization(sub, lb)) {
    return {Verdict::NotEqual, "abelianizations differ" + where};
  }
  return {Verdict::Unknown,
          "theta images and abelianizations agree" + where};
}

MembershipVerdict member_artin_parabolic(const CoxeterKernel& kernel,
                                         const GeneratorSubset& z,
                                         const ArtinWord& h) {
  const Presentation& p = kernel.presentation();
  const ArtinWord reduced = free_reduce(h);
  if (supported_on(reduced, z)) {
    return {Decision::Yes, "free reduction is supported on the subset"};
  }
  if (!member_parabolic(kernel, z, theta(kernel, h))) {
    return {Decision::No, "theta image outside the Coxeter parabolic"};
  }

  const GeneratorSubset span = support(reduced).unite(z);
  const Presentation sub = induced(p, span);
  const ArtinWord local = localize(reduced, span);
  const GeneratorSubset local_z = [&] {
    std::vector<Generator> out;
    for (Generator x : z) {
      const auto members = span.members();
      out.push_back(static_cast<Generator>(
          std::lower_bound(members.begin(), members.end(), x) -
          members.begin()));
    }
    return GeneratorSubset(std::move(out));
  }();
  const std::string where = " on " + describe_subset(p, span);

  switch (classify(sub)) {
    case DecidableClass::Free:
    case DecidableClass::RightAngled: {
      const bool inside = supported_on(raag_normal_form(sub, local), local_z);
      return {inside ? Decision::Yes : Decision::No,
              "support of the right-angled normal form" + where};
    }
    case DecidableClass::Dihedral: {
      const DihedralNormalForm nf = dihedral_normal_form(sub, local);
      if (local_z.empty()) {
        const bool trivial = nf == DihedralNormalForm{};
        return {trivial ? Decision::Yes : Decision::No,
                "dihedral normal form" + where};
      }
      if (local_z.size() == 1) {
        const Generator g = local_z[0];
        const MergedAbelianization ab = merged_abelianization(sub, local);
        const std::int64_t k = ab.sums[ab.class_of[g]];
        ArtinWord power(static_cast<std::size_t>(k < 0 ? -k : k),
                        ArtinLetter{g, static_cast<std::int8_t>(k < 0 ? -1 : 1)});
        const bool eq = dihedral_normal_form(sub, power) == nf;
        return {eq ? Decision::Yes : Decision::No,
                "dihedral normal form against the power " +
                    std::to_string(k) + where};
      }
      return {Decision::Yes, "subset spans the dihedral group"};
    }
    case DecidableClass::None:
      break;
  }
  return {Decision::Unknown, "no decision procedure" + where};
}

}  // namespace artin
