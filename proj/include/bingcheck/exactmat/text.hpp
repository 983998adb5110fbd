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

// Matrix text format:
//
//   # name: trefoil          optional, before the dimension line
//   2                        "n" (square) or "n m"
//   -1 1                     n rows of m whitespace-separated entries
//   0 -1
//
// Entries are integers or a/b. Laurent matrices additionally accept polynomial
// syntax; an entry containing spaces must be wrapped in parentheses, e.g.
// "(t - 1) 0". Other lines starting with '#' and blank lines are ignored.

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/matrix.hpp"
#include "bingcheck/poly/laurent.hpp"

namespace bingcheck::exactmat {

struct MatrixText {
  std::optional<std::string> name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t header_line = 0;  // line of the dimension header
  struct Cell {
    std::string text;
    std::size_t line;
    std::size_t column;  // 1-based column of the first character of text
  };
  std::vector<std::vector<Cell>> cells;
};

namespace detail {

inline std::vector<MatrixText::Cell> split_cells(std::string_view line, std::size_t lineno) {
  std::vector<MatrixText::Cell> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '(') {
      std::size_t close = line.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unbalanced '('", lineno, i + 1);
      out.push_back({std::string(line.substr(i + 1, close - i - 1)), lineno, i + 2});
      i = close + 1;
      if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
        throw ParseError("expected whitespace after ')'", lineno, i + 1);
      }
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      if (line[i] == '(' || line[i] == ')') throw ParseError("unexpected parenthesis", lineno, i + 1);
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), lineno, start + 1});
  }
  return out;
}

inline std::size_t parse_dimension(const MatrixText::Cell& c) {
  if (c.text.empty() || c.text.size() > 6) throw ParseError("malformed dimension", c.line, c.column);
  for (std::size_t k = 0; k < c.text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(c.text[k]))) {
      throw ParseError("malformed dimension", c.line, c.column + k);
    }
  }
  return static_cast<std::size_t>(std::stoul(c.text));
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Splits matrix text into located cells; entries are not interpreted.
inline MatrixText scan_matrix_text(std::string_view text) {
  MatrixText out;
  bool have_dims = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::string_view body = detail::trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      std::string_view rest = detail::trim(body.substr(1));
      if (!have_dims && rest.substr(0, 5) == "name:") out.name = std::string(detail::trim(rest.substr(5)));
      continue;
    }
    auto cells = detail::split_cells(line, lineno);
    if (!have_dims) {
      if (cells.size() > 2) throw ParseError("dimension line must be 'n' or 'n m'", lineno, cells[2].column);
      out.rows = detail::parse_dimension(cells[0]);
      out.cols = cells.size() == 2 ? detail::parse_dimension(cells[1]) : out.rows;
      out.header_line = lineno;
      have_dims = true;
      continue;
    }
    if (out.cells.size() == out.rows) throw ParseError("more rows than declared", lineno, cells[0].column);
    if (cells.size() != out.cols) {
      std::size_t col = cells.size() > out.cols ? cells[out.cols].column : line.size() + 1;
      throw ParseError("row has " + std::to_string(cells.size()) + " entries, expected " + std::to_string(out.cols),
                       lineno, col);
    }
    out.cells.push_back(std::move(cells));
  }
  if (!have_dims) throw ParseError("missing dimension line", lineno == 0 ? 1 : lineno, 1);
  if (out.cells.size() != out.rows) {
    throw ParseError("expected " + std::to_string(out.rows) + " rows, found " + std::to_string(out.cells.size()),
                     lineno, 1);
  }
  return out;
}

inline Rational parse_rational_cell(const MatrixText::Cell& c) {
  const std::string& s = c.text;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) throw ParseError("malformed number '" + s + "'", c.line, c.column + i);
  if (i < s.size() && s[i] == '/') {
    std::size_t d0 = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == d0) throw ParseError("malformed number '" + s + "'", c.line, c.column + i);
    if (BigInt(s.substr(d0, i - d0), 10) == 0) throw ParseError("zero denominator", c.line, c.column + d0);
  }
  if (i != s.size()) throw ParseError("malformed number '" + s + "'", c.line, c.column + i);
  return Rational::parse(s[0] == '+' ? std::string_view(s).substr(1) : std::string_view(s));
}

inline QMatrix parse_rational_matrix(std::string_view text, std::optional<std::string>* name = nullptr) {
  MatrixText mt = scan_matrix_text(text);
  QMatrix m(mt.rows, mt.cols);
  for (std::size_t i = 0; i < mt.rows; ++i) {
    for (std::size_t j = 0; j < mt.cols; ++j) m(i, j) = parse_rational_cell(mt.cells[i][j]);
  }
  if (name != nullptr) *name = mt.name;
  return m;
}

inline LMatrix parse_laurent_matrix(std::string_view text, std::optional<std::string>* name = nullptr) {
  MatrixText mt = scan_matrix_text(text);
  LMatrix m(mt.rows, mt.cols);
  for (std::size_t i = 0; i < mt.rows; ++i) {
    for (std::size_t j = 0; j < mt.cols; ++j) {
      const auto& c = mt.cells[i][j];
      m(i, j) = poly::parse_laurent(c.text, c.line, c.column - 1);
    }
  }
  if (name != nullptr) *name = mt.name;
  return m;
}

inline std::string format_matrix(const QMatrix& m, const std::optional<std::string>& name = std::nullopt) {
  std::ostringstream os;
  if (name) os << "# name: " << *name << '\n';
  if (m.is_square()) os << m.rows() << '\n'; else os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

inline std::string format_matrix(const LMatrix& m, const std::optional<std::string>& name = std::nullopt) {
  std::ostringstream os;
  if (name) os << "# name: " << *name << '\n';
  if (m.is_square()) os << m.rows() << '\n'; else os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string e = poly::to_string(m(i, j));
      bool wrap = e.find(' ') != std::string::npos;
      os << (j ? " " : "") << (wrap ? "(" + e + ")" : e);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bingcheck::exactmat
