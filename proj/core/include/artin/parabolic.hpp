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

#ifndef ARTIN_PARABOLIC_HPP_
#define ARTIN_PARABOLIC_HPP_

#include "artin/coxeter.hpp"
#include "artin/presentation.hpp"

namespace artin {

// u = v w with v in W_X and w (X, {})-minimal; l(u) = l(v) + l(w).
struct CosetDecomposition {
  CoxeterElement v;
  CoxeterElement w;
};

// u = u1 w0 u2 with u1 in W_X, u2 in W_Y, w0 the unique minimal element of
// W_X u W_Y, and l(u) = l(u1) + l(w0) + l(u2).
struct DoubleCosetDecomposition {
  CoxeterElement u1;
  CoxeterElement w0;
  CoxeterElement u2;
};

// Strips left descents lying in X, least index first.
CosetDecomposition decompose_left(const CoxeterKernel& kernel,
                                  const GeneratorSubset& x,
                                  const CoxeterElement& u);

// No left descent in X and no right descent in Y.
bool is_minimal(const CoxeterKernel& kernel, const GeneratorSubset& x,
                const GeneratorSubset& y, const CoxeterElement& u);

// Alternates left X-sweeps and right Y-sweeps until neither applies.
DoubleCosetDecomposition double_coset_decompose(const CoxeterKernel& kernel,
                                                const GeneratorSubset& x,
                                                const GeneratorSubset& y,
                                                const CoxeterElement& u);

// u in W_X.
bool member_parabolic(const CoxeterKernel& kernel, const GeneratorSubset& x,
                      const CoxeterElement& u);

// Every letter of the canonical word lies in X. Equivalent to
// member_parabolic, but read directly off the word.
bool supported_on(const CoxeterElement& u, const GeneratorSubset& x);

}  // namespace artin

#endif  // ARTIN_PARABOLIC_HPP_
