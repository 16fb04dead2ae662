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

#include "artin/catalog.hpp"

#include <string>
#include <vector>

namespace artin::catalog {

namespace {

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                         : "g" + std::to_string(i));
  }
  return out;
}

}  // namespace

Presentation dihedral(std::uint32_t m) {
  return Presentation(letters(2), {{0, 1, m}});
}

// a and c commute: a non-edge would mean m = infinity.
Presentation a3() {
  return Presentation(letters(3), {{0, 1, 3}, {1, 2, 3}, {0, 2, 2}});
}

Presentation raag_square() {
  return Presentation(letters(4),
                      {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
}

Presentation free_group(std::size_t n) { return Presentation(letters(n), {}); }

Presentation triangle(std::uint32_t m) {
  return Presentation(letters(3), {{0, 1, m}, {1, 2, m}, {0, 2, m}});
}

}  // namespace artin::catalog
