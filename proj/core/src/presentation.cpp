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

#include "artin/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "artin/error.hpp"
#include "json.hpp"

namespace artin {

GeneratorSubset::GeneratorSubset(std::vector<Generator> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

GeneratorSubset GeneratorSubset::range(std::size_t n) {
  std::vector<Generator> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Generator>(i);
  return GeneratorSubset(std::move(m));
}

bool GeneratorSubset::contains(Generator x) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool GeneratorSubset::is_subset_of(const GeneratorSubset& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

GeneratorSubset GeneratorSubset::unite(const GeneratorSubset& other) const {
  std::vector<Generator> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return GeneratorSubset(std::move(out));
}

GeneratorSubset GeneratorSubset::intersect(const GeneratorSubset& other) const {
  std::vector<Generator> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return GeneratorSubset(std::move(out));
}

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == ',' || c == '^' || c == '\'';
  });
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names,
                           std::vector<Edge> edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_name(names_[i])) {
      throw ParseError("MalformedSyntax", 0,
                       "invalid vertex name '" + names_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw ParseError("DuplicateVertex", 0,
                         "duplicate vertex name '" + names_[i] + "'");
      }
    }
  }
  matrix_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) matrix_[i * n + i] = 1;
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) {
      throw ParseError("UnknownVertex", 0, "edge endpoint not declared");
    }
    if (e.u == e.v) {
      throw ParseError("SelfLoop", 0, "self-loop at '" + names_[e.u] + "'");
    }
    if (e.m < 2) {
      throw ParseError("LabelTooSmall", 0,
                       "label < 2 on edge " + names_[e.u] + " " + names_[e.v]);
    }
    if (matrix_[e.u * n + e.v] != 0) {
      throw ParseError("DuplicateEdge", 0,
                       "repeated edge " + names_[e.u] + " " + names_[e.v]);
    }
    matrix_[e.u * n + e.v] = e.m;
    matrix_[e.v * n + e.u] = e.m;
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

void Presentation::check(Generator x) const {
  if (x >= rank()) {
    throw UnknownGenerator("generator index " + std::to_string(x) +
                           " outside presentation of rank " +
                           std::to_string(rank()));
  }
}

const std::string& Presentation::name(Generator x) const {
  check(x);
  return names_[x];
}

std::optional<Generator> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Generator>(i);
  }
  return std::nullopt;
}

Generator Presentation::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

Label Presentation::label(Generator x, Generator y) const {
  check(x);
  check(y);
  const std::uint32_t m = matrix_[x * rank() + y];
  return m == 0 ? Label::infinity() : Label::finite(m);
}

bool Presentation::adjacent(Generator x, Generator y) const {
  check(x);
  check(y);
  return x != y && matrix_[x * rank() + y] != 0;
}

bool Presentation::is_right_angled() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.m == 2; });
}

GeneratorSubset Presentation::parse_subset(std::string_view csv) const {
  std::vector<Generator> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view tok = csv.substr(start, end - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
      tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
      tok.remove_suffix(1);
    if (!tok.empty()) {
      out.push_back(index_of(tok));
    } else if (csv.find_first_not_of(" \t") != std::string_view::npos) {
      throw ParseError("MalformedSyntax", 0,
                       "empty name in generator set '" + std::string(csv) +
                           "'");
    }
    start = end + 1;
  }
  return GeneratorSubset(std::move(out));
}

std::string Presentation::format_subset(const GeneratorSubset& subset) const {
  std::string out;
  for (Generator x : subset) {
    if (!out.empty()) out += ',';
    out += name(x);
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  bool have_vertices = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("MalformedSyntax", line_no,
                       "expected 'vertices:' or 'edge:'");
    }
    const std::string_view key = trim(line.substr(0, colon));
    const auto fields = split_ws(line.substr(colon + 1));

    if (key == "vertices") {
      if (have_vertices) {
        throw ParseError("MalformedSyntax", line_no,
                         "'vertices:' declared twice");
      }
      have_vertices = true;
      for (std::string_view f : fields) {
        if (!valid_name(f)) {
          throw ParseError("MalformedSyntax", line_no,
                           "invalid vertex name '" + std::string(f) + "'");
        }
        if (std::find(names.begin(), names.end(), f) != names.end()) {
          throw ParseError("DuplicateVertex", line_no,
                           "duplicate vertex name '" + std::string(f) + "'");
        }
        names.emplace_back(f);
      }
    } else if (key == "edge") {
      if (!have_vertices) {
        throw ParseError("MalformedSyntax", line_no,
                         "'edge:' before 'vertices:'");
      }
      if (fields.size() != 3) {
        throw ParseError("MalformedSyntax", line_no,
                         "expected 'edge: <u> <v> <m>'");
      }
      auto lookup = [&](std::string_view n) -> Generator {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end()) {
          throw ParseError("UnknownVertex", line_no,
                           "edge endpoint '" + std::string(n) +
                               "' not declared");
        }
        return static_cast<Generator>(it - names.begin());
      };
      const Generator u = lookup(fields[0]);
      const Generator v = lookup(fields[1]);
      std::uint32_t m = 0;
      const std::string_view ms = fields[2];
      auto [ptr, ec] = std::from_chars(ms.data(), ms.data() + ms.size(), m);
      if (ec != std::errc() || ptr != ms.data() + ms.size()) {
        throw ParseError("MalformedSyntax", line_no,
                         "label '" + std::string(ms) + "' is not an integer");
      }
      if (u == v) {
        throw ParseError("SelfLoop", line_no,
                         "self-loop at '" + std::string(fields[0]) + "'");
      }
      if (m < 2) {
        throw ParseError("LabelTooSmall", line_no, "label < 2");
      }
      for (const Edge& e : edges) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
          throw ParseError("DuplicateEdge", line_no,
                           "edge " + std::string(fields[0]) + " " +
                               std::string(fields[1]) + " declared twice");
        }
      }
      edges.push_back({u, v, m});
    } else {
      throw ParseError("MalformedSyntax", line_no,
                       "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_vertices) {
    throw ParseError("MalformedSyntax", 0, "missing 'vertices:' line");
  }
  return Presentation(std::move(names), std::move(edges));
}

Presentation parse_presentation_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("MalformedSyntax", 0, e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("vertices")) {
      throw ParseError("MalformedSyntax", 0,
                       "expected an object with a 'vertices' array");
    }
    std::vector<std::string> names =
        doc.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    if (doc.contains("edges")) {
      for (const json& e : doc.at("edges")) {
        const auto u = e.at("u").get<std::string>();
        const auto v = e.at("v").get<std::string>();
        const auto m = e.at("m").get<std::int64_t>();
        auto lookup = [&](const std::string& n) {
          auto it = std::find(names.begin(), names.end(), n);
          if (it == names.end()) {
            throw ParseError("UnknownVertex", 0,
                             "edge endpoint '" + n + "' not declared");
          }
          return static_cast<Generator>(it - names.begin());
        };
        if (m < 2) throw ParseError("LabelTooSmall", 0, "label < 2");
        if (m > std::numeric_limits<std::uint32_t>::max()) {
          throw ParseError("MalformedSyntax", 0, "label too large");
        }
        edges.push_back({lookup(u), lookup(v), static_cast<std::uint32_t>(m)});
      }
    }
    return Presentation(std::move(names), std::move(edges));
  } catch (const json::exception& e) {
    throw ParseError("MalformedSyntax", 0, e.what());
  }
}

Presentation load_presentation(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') {
    return parse_presentation_json(text);
  }
  return parse_presentation(text);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& n : p.names()) out << ' ' << n;
  out << '\n';
  for (const Edge& e : p.edges()) {
    out << "edge: " << p.name(e.u) << ' ' << p.name(e.v) << ' ' << e.m
        << '\n';
  }
  return out.str();
}

Presentation induced(const Presentation& p, const GeneratorSubset& subset) {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (Generator x : subset) names.push_back(p.name(x));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      const Label m = p.label(subset[i], subset[j]);
      if (m.is_finite()) {
        edges.push_back({static_cast<Generator>(i), static_cast<Generator>(j),
                         m.value()});
      }
    }
  }
  return Presentation(std::move(names), std::move(edges));
}

std::vector<Generator> alternating(Generator x, Generator y,
                                   std::size_t length) {
  std::vector<Generator> w(length);
  for (std::size_t i = 0; i < length; ++i) w[i] = (i % 2 == 0) ? x : y;
  return w;
}

std::pair<std::vector<Generator>, std::vector<Generator>> braid_relation_pair(
    const Presentation& p, Generator x, Generator y) {
  const Label m = p.label(x, y);
  if (x == y || m.is_infinite()) {
    throw NoEdge("no edge between '" + p.name(x) + "' and '" + p.name(y) +
                 "'");
  }
  return {alternating(x, y, m.value()), alternating(y, x, m.value())};
}

}  // namespace artin
