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

#include "artin/parabolic.hpp"

#include <algorithm>

namespace artin {

namespace {

// Least x in `set` that is a left (right) descent of u, if any.
std::optional<Generator> first_left_descent(const CoxeterKernel& kernel,
                                            const GeneratorSubset& set,
                                            const CoxeterElement& u) {
  for (Generator x : set) {
    if (kernel.is_left_descent(u, x)) return x;
  }
  return std::nullopt;
}

std::optional<Generator> first_right_descent(const CoxeterKernel& kernel,
                                             const GeneratorSubset& set,
                                             const CoxeterElement& u) {
  for (Generator y : set) {
    if (kernel.is_right_descent(u, y)) return y;
  }
  return std::nullopt;
}

}  // namespace

CosetDecomposition decompose_left(const CoxeterKernel& kernel,
                                  const GeneratorSubset& x,
                                  const CoxeterElement& u) {
  CosetDecomposition out{kernel.identity(), u};
  while (auto s = first_left_descent(kernel, x, out.w)) {
    out.v = kernel.multiply(out.v, *s);
    out.w = kernel.multiply(*s, out.w);
  }
  return out;
}

bool is_minimal(const CoxeterKernel& kernel, const GeneratorSubset& x,
                const GeneratorSubset& y, const CoxeterElement& u) {
  return !first_left_descent(kernel, x, u) &&
         !first_right_descent(kernel, y, u);
}

DoubleCosetDecomposition double_coset_decompose(const CoxeterKernel& kernel,
                                                const GeneratorSubset& x,
                                                const GeneratorSubset& y,
                                                const CoxeterElement& u) {
  DoubleCosetDecomposition out{kernel.identity(), u, kernel.identity()};
  bool changed = true;
  while (changed) {
    changed = false;
    while (auto s = first_left_descent(kernel, x, out.w0)) {
      out.u1 = kernel.multiply(out.u1, *s);
      out.w0 = kernel.multiply(*s, out.w0);
      changed = true;
    }
    while (auto s = first_right_descent(kernel, y, out.w0)) {
      out.w0 = kernel.multiply(out.w0, *s);
      out.u2 = kernel.multiply(*s, out.u2);
      changed = true;
    }
  }
  return out;
}

bool member_parabolic(const CoxeterKernel& kernel, const GeneratorSubset& x,
                      const CoxeterElement& u) {
  return decompose_left(kernel, x, u).w.is_identity();
}

bool supported_on(const CoxeterElement& u, const GeneratorSubset& x) {
  return std::all_of(u.word().begin(), u.word().end(),
                     [&](Generator s) { return x.contains(s); });
}

}  // namespace artin
