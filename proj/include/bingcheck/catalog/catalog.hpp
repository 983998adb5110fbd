/*
   Copyright 2026 The bingcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/text.hpp"
#include "bingcheck/seifert/seifert.hpp"

namespace bingcheck::catalog {

using exactmat::QMatrix;
using seifert::SeifertMatrix;

class UnknownEntry : public std::runtime_error {
 public:
  explicit UnknownEntry(const std::string& name) : std::runtime_error("unknown catalog entry '" + name + "'") {}
};

struct CatalogEntry {
  std::string name;
  SeifertMatrix seifert;
  std::string notes;
};

/// twist(n) = [[-1, 1], [0, n]]: n = -1 is the trefoil, n = 1 the figure-eight.
inline QMatrix twist_matrix(long n) { return QMatrix{{-1, 1}, {0, Rational(n)}}; }

namespace detail {

inline std::string twist_notes(long n) {
  switch (n) {
    case -1: return "twist knot; trefoil 3_1";
    case 1: return "twist knot; figure-eight 4_1, amphichiral";
    case -2: return "twist knot; 5_2";
    case 2: return "twist knot; stevedore 6_1, slice";
    default: return "twist knot";
  }
}

inline std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back({"unknot", SeifertMatrix(), "slice"});
  out.push_back({"3_1", SeifertMatrix(QMatrix{{-1, 1}, {0, -1}}), "trefoil"});
  out.push_back({"4_1", SeifertMatrix(QMatrix{{1, 1}, {0, -1}}), "figure-eight, amphichiral"});
  out.push_back({"6_1", SeifertMatrix(QMatrix{{1, 1}, {0, -2}}), "stevedore, slice"});
  for (long n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    out.push_back({"twist_" + std::to_string(n), SeifertMatrix(twist_matrix(n)), twist_notes(n)});
  }
  return out;
}

}  // namespace detail

/// Immutable, built once; entries in a fixed order.
inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = detail::build();
  return entries;
}

inline const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : builtin_catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

inline const CatalogEntry& lookup(std::string_view name) {
  if (const auto* e = find_entry(name)) return *e;
  throw UnknownEntry(std::string(name));
}

struct ParsedSeifert {
  std::optional<std::string> name;
  SeifertMatrix seifert;
};

/// Reads a Seifert matrix in the shared matrix text format. Syntax problems
/// raise ParseError; a non-square or degenerate matrix raises AdmissibilityError
/// naming the line of the dimension header.
inline ParsedSeifert parse_seifert_named(std::string_view text) {
  exactmat::MatrixText mt = exactmat::scan_matrix_text(text);
  QMatrix m(mt.rows, mt.cols);
  for (std::size_t i = 0; i < mt.rows; ++i) {
    for (std::size_t j = 0; j < mt.cols; ++j) m(i, j) = exactmat::parse_rational_cell(mt.cells[i][j]);
  }
  try {
    return {mt.name, SeifertMatrix(m)};
  } catch (const AdmissibilityError& e) {
    throw AdmissibilityError(std::string(e.what()) + " (matrix declared at line " + std::to_string(mt.header_line) + ")");
  }
}

inline SeifertMatrix parse_seifert(std::string_view text) { return parse_seifert_named(text).seifert; }

inline std::string print_seifert(const SeifertMatrix& s, const std::optional<std::string>& name = std::nullopt) {
  return exactmat::format_matrix(s.matrix(), name);
}

}  // namespace bingcheck::catalog
