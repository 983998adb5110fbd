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

// Plain-text reports: "key = value" lines, then the signature function as CSV
// (u_lo,u_hi,signature), u = t + t^-1 = 2 cos(theta). Reports are
// byte-stable for identical input: every number is printed exactly or by
// exact rounding, never through floating point.

#include <cerrno>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/witt/battery.hpp"

namespace bingcheck::catalog {

using witt::BingReport;
using witt::ObstructionReport;

inline constexpr std::string_view kSignatureHeader = "u_lo,u_hi,signature";
inline constexpr int kDecimals = 12;
inline constexpr std::string_view kBlanchfieldConvention =
    "B(t) = (1 - t) A + (1 - t^-1) A^T, sigma(omega) = signature of B(omega), omega = e^(2 pi i theta)";
inline constexpr std::string_view kTheorem = "if B(K) is slice then K is algebraically slice";

/// x rounded half away from zero to `digits` decimals, computed exactly.
inline std::string fixed_decimal(const Rational& x, int digits = kDecimals) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpq_class scaled = x.raw() * mpq_class(scale);
  mpz_class mag = abs(scaled.get_num()) * 2 + scaled.get_den();
  mpz_class q = mag / (2 * scaled.get_den());  // floor(|x| * 10^d + 1/2)
  std::string digitstr = q.get_str();
  if (digitstr.size() <= static_cast<std::size_t>(digits)) {
    digitstr.insert(0, static_cast<std::size_t>(digits) + 1 - digitstr.size(), '0');
  }
  std::string out = digitstr.substr(0, digitstr.size() - digits) + "." + digitstr.substr(digitstr.size() - digits);
  if (sgn(scaled) < 0 && q != 0) out.insert(0, "-");
  return out;
}

using Fields = std::vector<std::pair<std::string, std::string>>;

inline std::string join_ints(const std::vector<long>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

/// The key = value part of a battery report, in output order.
inline Fields report_fields(const ObstructionReport& r) {
  Fields f;
  f.emplace_back("subject", r.subject.empty() ? "-" : r.subject);
  f.emplace_back("ring", witt::to_string(r.ring));
  f.emplace_back("size", std::to_string(r.size));
  f.emplace_back("convention", std::string(kBlanchfieldConvention));
  f.emplace_back("alexander", poly::to_string(r.alexander));
  f.emplace_back("fox_milnor", r.fox_milnor.pass ? "pass" : "fail");
  if (r.fox_milnor.witness) f.emplace_back("fox_milnor_witness", poly::to_string(*r.fox_milnor.witness));
  if (!r.fox_milnor.reason.empty()) f.emplace_back("fox_milnor_reason", r.fox_milnor.reason);
  f.emplace_back("arf", r.arf ? std::to_string(*r.arf) : "n/a");
  f.emplace_back("determinant", r.determinant ? r.determinant->get_str() : "n/a");
  f.emplace_back("determinant_is_square",
                 r.determinant_is_square ? (*r.determinant_is_square ? "yes" : "no") : "n/a");
  f.emplace_back("cyclotomic_factors", join_ints(r.cyclotomic_factors));
  f.emplace_back("signature_arcs", std::to_string(r.signature_function.arcs.size()));
  for (const auto& j : r.signature_function.jumps) {
    f.emplace_back("jump", "u = " + fixed_decimal(j.u.midpoint()) + ", factor " + poly::to_string(j.factor, "u") +
                               ", multiplicity " + std::to_string(j.multiplicity) + ", nullity " +
                               std::to_string(j.nullity));
  }
  f.emplace_back("verdict", witt::to_string(r.verdict()));
  if (const auto* c = r.certificate()) {
    f.emplace_back("certificate", c->test);
    f.emplace_back("certificate_detail", c->detail);
  }
  for (const auto& fail : r.failures) f.emplace_back("failure", fail.test + ": " + fail.detail);
  return f;
}

inline void write_fields(const Fields& f, std::ostream& os) {
  for (const auto& [k, v] : f) os << k << " = " << v << '\n';
}

inline void write_signature_csv(const seifert::SignatureFunction& sf, std::ostream& os) {
  os << kSignatureHeader << '\n';
  for (const auto& a : sf.arcs) os << fixed_decimal(a.u_lo) << ',' << fixed_decimal(a.u_hi) << ',' << a.value << '\n';
}

inline void write_report(const ObstructionReport& r, std::ostream& os) {
  os << "# obstruction report\n";
  write_fields(report_fields(r), os);
  os << '\n';
  write_signature_csv(r.signature_function, os);
}

inline std::string format_report(const ObstructionReport& r) {
  std::ostringstream os;
  write_report(r, os);
  return os.str();
}

inline void write_bing_report(const BingReport& b, std::ostream& os) {
  os << "# Bing double report\n";
  Fields f = report_fields(b.battery);
  for (auto& [k, v] : f) {
    if (k == "verdict") k = "battery_verdict";
  }
  write_fields(f, os);
  os << "range = " << b.range << '\n';
  for (const auto& c : b.checks) {
    os << "check = " << c.name << ": " << (!c.applicable ? "not applicable" : c.passed ? "pass" : "FAIL") << " ("
       << c.detail << ")\n";
  }
  os << "telescoping_violated = " << (b.telescoping_violated ? "yes" : "no") << '\n';
  os << "theorem = " << kTheorem << '\n';
  os << "verdict = " << witt::to_string(b.verdict()) << '\n';
  for (const auto& c : b.conclusions) os << "conclusion = " << c << '\n';
  os << '\n';
  write_signature_csv(b.battery.signature_function, os);
}

inline std::string format_bing_report(const BingReport& b) {
  std::ostringstream os;
  write_bing_report(b, os);
  return os.str();
}

/// Writes to a file; I/O failures are reported with the system message.
inline void write_report(const ObstructionReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
  write_report(r, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed: " + std::strerror(errno));
}

struct ArcRow {
  std::string u_lo;
  std::string u_hi;
  int signature = 0;
  friend bool operator==(const ArcRow&, const ArcRow&) = default;
};

/// Machine-readable view of a report.
struct ParsedReport {
  Fields fields;
  std::vector<ArcRow> arcs;

  // First value for key, or nullptr.
  const std::string* get(std::string_view key) const {
    for (const auto& [k, v] : fields) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  std::vector<std::string> all(std::string_view key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : fields) {
      if (k == key) out.push_back(v);
    }
    return out;
  }
};

inline ParsedReport read_report(std::string_view text) {
  ParsedReport out;
  bool in_csv = false;
  std::size_t lineno = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    if (line == kSignatureHeader) {
      in_csv = true;
      continue;
    }
    if (in_csv) {
      std::size_t c1 = line.find(','), c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
      if (c2 == std::string_view::npos) throw ParseError("signature row needs three fields", lineno, 1);
      ArcRow row{std::string(line.substr(0, c1)), std::string(line.substr(c1 + 1, c2 - c1 - 1)), 0};
      try {
        row.signature = std::stoi(std::string(line.substr(c2 + 1)));
      } catch (const std::exception&) {
        throw ParseError("malformed signature value", lineno, c2 + 2);
      }
      out.arcs.push_back(std::move(row));
      continue;
    }
    std::size_t eq = line.find(" = ");
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", lineno, 1);
    out.fields.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 3)));
  }
  return out;
}

}  // namespace bingcheck::catalog
