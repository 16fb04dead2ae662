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

#ifndef ARTIN_CATALOG_HPP_
#define ARTIN_CATALOG_HPP_

#include <cstdint>

#include "artin/presentation.hpp"

namespace artin::catalog {

// Two generators a, b joined by an edge labeled m (A1xA1, A2, B2, I2(m)).
Presentation dihedral(std::uint32_t m);
// Type A3: path a - b - c with labels 3, 3, plus the a - c edge labeled 2.
Presentation a3();
// 4-cycle a - b - c - d - a, every label 2.
Presentation raag_square();
// n generators a, b, c, ... and no edges.
Presentation free_group(std::size_t n);
// Triangle a, b, c with every label m.
Presentation triangle(std::uint32_t m);

}  // namespace artin::catalog

#endif  // ARTIN_CATALOG_HPP_
