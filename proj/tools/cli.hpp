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

#include <CLI11.hpp>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bingcheck/catalog/catalog.hpp"
#include "bingcheck/catalog/report_io.hpp"
#include "bingcheck/cover/cover.hpp"
#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/text.hpp"
#include "bingcheck/seifert/seifert.hpp"
#include "bingcheck/witt/battery.hpp"
#include "bingcheck/witt/witt.hpp"

namespace bingcheck::cli {

enum ExitCode : int { kComputed = 0, kUsage = 1, kInput = 2, kInternal = 3 };

// Input problems that are not parse or admissibility errors (missing file...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

constexpr const char* kBatteryNote =
    "Necessary conditions for algebraic sliceness checked: Fox-Milnor factorization Delta = f(t) f(t^-1) "
    "up to units, vanishing of the Levine-Tristram signature function away from roots of Delta, "
    "Arf invariant 0, square determinant. Any failure certifies NOT_ALG_SLICE; NO_OBSTRUCTION_FOUND "
    "is never a claim of sliceness.";

struct Knot {
  std::string subject;
  seifert::SeifertMatrix seifert;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "': " + std::strerror(errno));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Knot load_file(const std::string& path) {
  catalog::ParsedSeifert p;
  try {
    p = catalog::parse_seifert_named(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" at line")),
                     e.line(), e.column());
  }
  return {p.name.value_or(path), p.seifert};
}

inline Knot resolve(const std::string& name, const std::string& file) {
  if (!name.empty() && !file.empty()) throw CLI::ValidationError("give either a catalog name or --file, not both");
  if (!file.empty()) return load_file(file);
  if (name.empty()) throw CLI::RequiredError("a knot (catalog name or --file)");
  return {name, catalog::lookup(name).seifert};
}

inline std::string header(const Knot& k) { return "subject = " + k.subject + "\n"; }

inline std::string alexander_text(const Knot& k) {
  return header(k) + "alexander = " + poly::to_string(seifert::alexander(k.seifert)) + "\n";
}

inline std::string sigfn_text(const Knot& k) {
  std::ostringstream os;
  witt::ObstructionReport r = witt::obstruction_battery(k.seifert, k.subject);
  os << header(k) << "convention = " << catalog::kBlanchfieldConvention << '\n'
     << "alexander = " << r.alexander << '\n';
  for (const auto& [key, value] : catalog::report_fields(r)) {
    if (key == "jump") os << key << " = " << value << '\n';
  }
  os << "identically_zero = " << (r.signature_function.identically_zero() ? "yes" : "no") << "\n\n";
  catalog::write_signature_csv(r.signature_function, os);
  return os.str();
}

inline std::string arf_text(const Knot& k) { return header(k) + "arf = " + std::to_string(seifert::arf(k.seifert)) + "\n"; }

inline std::string foxmilnor_text(const Knot& k) {
  poly::LaurentPoly delta = seifert::alexander(k.seifert);
  seifert::FoxMilnorResult fm = seifert::fox_milnor(delta);
  std::string out = header(k) + "alexander = " + poly::to_string(delta) + "\nfox_milnor = " + (fm.pass ? "pass" : "fail") + "\n";
  if (fm.witness) out += "fox_milnor_witness = " + poly::to_string(*fm.witness) + "\n";
  if (!fm.reason.empty()) out += "fox_milnor_reason = " + fm.reason + "\n";
  return out;
}

inline std::string cable_text(const Knot& k, long n) {
  exactmat::LMatrix p = cover::cable_presentation(seifert::alexander_matrix(k.seifert.matrix()), n);
  std::ostringstream os;
  os << header(k) << "n = " << n << '\n'
     << "order = " << poly::normalize_unit(exactmat::det(p)) << '\n'
     << "\n# presentation of the (" << n << ",1)-cable: A - t A^T with t -> t^" << n << '\n'
     << exactmat::format_matrix(p);
  return os.str();
}

inline std::string cover_text(const Knot& k, long p) {
  seifert::SeifertMatrix tilde = cover::covering_seifert_matrix(k.seifert, p);
  std::ostringstream os;
  os << "# covering Seifert matrix, p = " << p << '\n'
     << catalog::print_seifert(tilde, k.subject + "~" + std::to_string(p)) << '\n';
  catalog::write_report(witt::obstruction_battery(tilde, k.subject + "~" + std::to_string(p)), os);
  return os.str();
}

inline std::string foxorder_text(const Knot& k, long p) {
  cover::HomologyOrder h = cover::branched_cover_homology_order(seifert::alexander(k.seifert), p);
  return header(k) + "p = " + std::to_string(p) + "\norder = " + h.to_string() + "\n";
}

inline std::string jpq_text(const Knot& k, long p, long q) {
  std::string subject = "J(" + std::to_string(p) + "," + std::to_string(q) + ") of " + k.subject;
  return catalog::format_report(witt::obstruction_battery(witt::jpq_presentation(k.seifert, p, q), subject));
}

inline std::string bing_text(const Knot& k, long range) {
  return catalog::format_bing_report(witt::bing_double_verdict(k.seifert, range, k.subject));
}

// Colors the verdict lines; everything else is passed through.
inline std::string stylize(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("verdict = NOT_ALG_SLICE", 0) == 0) {
      out += "\033[1;31m" + line + "\033[0m\n";
    } else if (line.rfind("verdict = ", 0) == 0) {
      out += "\033[1;32m" + line + "\033[0m\n";
    } else {
      out += line + "\n";
    }
  }
  return out;
}

// Maps an exception from the library to an exit code and an error line.
inline int report_error(std::ostream& err) {
  try {
    throw;
  } catch (const InvariantViolation& e) {
    err << "error: internal invariant violated: " << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << '\n';
  } catch (const AdmissibilityError& e) {
    err << "error: not admissible: " << e.what() << '\n';
  } catch (const catalog::UnknownEntry& e) {
    err << "error: " << e.what() << '\n';
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SingularMatrixError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kInternal;
  }
  return kInput;
}

struct BatchItem {
  std::string label;
  std::string output;
  std::string error;
  int code = kComputed;
};

inline BatchItem batch_one(const std::string& label, const std::function<Knot()>& load) {
  BatchItem item{label, {}, {}, kComputed};
  try {
    Knot k = load();
    item.output = catalog::format_report(witt::obstruction_battery(k.seifert, k.subject));
  } catch (...) {
    std::ostringstream err;
    item.code = report_error(err);
    item.error = err.str();
    item.error.insert(7, label + ": ");  // after "error: "
  }
  return item;
}

}  // namespace detail

/// Runs one command line. All output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool style = false) {
  CLI::App app{"bingcheck: algebraic obstructions to sliceness of Bing doubles, from Seifert matrices"};
  app.require_subcommand(1);
  app.failure_message([](const CLI::App*, const CLI::Error& e) {
    return std::string("error: ") + e.what() + "\nRun with --help for more information.\n";
  });
  app.footer(
      "Knots are catalog names (see 'bingcheck catalog list') or matrix files given with --file.\n"
      "Exit codes: 0 computed (any verdict), 1 usage, 2 input or admissibility error, 3 internal error.");

  std::string name, file;
  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("knot", name, "catalog name");
    sub->add_option("-f,--file", file, "Seifert matrix file");
  };
  long n = 0, p = 0, q = 0, range = 3;

  auto* invariants = app.add_subcommand("invariants", "Full obstruction report.");
  invariants->footer(detail::kBatteryNote);
  add_knot(invariants);
  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial det(A - t A^T), normalized.");
  add_knot(alexander);
  auto* sigfn = app.add_subcommand("sigfn", "Levine-Tristram signature function as arcs in u = t + t^-1.");
  sigfn->footer(
      "The signature is constant between roots of Delta on the unit circle; one certified rational "
      "sample angle per arc. A nonzero value anywhere obstructs algebraic sliceness.");
  add_knot(sigfn);
  auto* arf = app.add_subcommand("arf", "Arf invariant: 0 iff Delta(-1) = +-1 mod 8.");
  add_knot(arf);
  auto* foxmilnor = app.add_subcommand("foxmilnor", "Fox-Milnor condition Delta = f(t) f(t^-1) up to units.");
  foxmilnor->footer("A slice knot satisfies the Fox-Milnor condition; failure certifies the knot is not slice.");
  add_knot(foxmilnor);
  auto* cable = app.add_subcommand("cable", "Presentation of the (n,1)-cable, t -> t^n.");
  cable->footer("The Alexander polynomial of the (n,1)-cable is Delta(t^n) up to units.");
  cable->add_option("-n", n, "cable parameter")->required()->check(CLI::PositiveNumber);
  add_knot(cable);
  auto* cover = app.add_subcommand("cover", "Seifert matrix of the knot's preimage in the p-fold branched cover.");
  cover->footer(
      "A~ = A - A^T (G^(p-1) - (G - I)^(p-1)) (G^p - (G - I)^p)^-1 G with G = (A - A^T)^-1 A, "
      "valid when G^p - (G - I)^p is invertible; the result is rational.");
  cover->add_option("-p", p, "cover degree")->required()->check(CLI::Range(2L, 1L << 20));
  add_knot(cover);
  auto* foxorder = app.add_subcommand("foxorder", "|H_1| of the p-fold branched cover (Fox's formula).");
  foxorder->footer(
      "|H_1(Sigma_p)| = |prod_{i=1}^{p-1} Delta(zeta^i)|, computed as a resultant; INFINITE when Delta "
      "shares a root with t^p - 1. For Delta(t^p) the order is 1: the cover is a homology sphere.");
  foxorder->add_option("-p", p, "cover degree")->required()->check(CLI::Range(2L, 1L << 20));
  add_knot(foxorder);
  auto* jpq = app.add_subcommand("jpq", "Obstruction battery on the J(p,q) presentation.");
  jpq->footer(
      "W(J(p,q)) = phi_p W(K) + phi_(p+q) W(K) + phi_q W(K), where phi_n is induced by t -> t^n. "
      "When B(K) is slice each J(p,q) is algebraically slice.");
  jpq->add_option("-p", p, "p >= 1")->required()->check(CLI::PositiveNumber);
  jpq->add_option("-q", q, "q >= 1")->required()->check(CLI::PositiveNumber);
  add_knot(jpq);
  auto* bing = app.add_subcommand("bing", "Verdict on the Bing double B(K).");
  bing->footer(
      "If B(K) is slice then K is algebraically slice, so a failed condition shows B(K) is not slice; "
      "Arf(K) = 1 gives an independent proof. Cross-checks: J(p,q) signatures equal "
      "sigma(omega^p) + sigma(omega^(p+q)) + sigma(omega^q), and when J(1,q-1) and J(1,q) are unobstructed, "
      "phi_(q-1) W(K) = phi_(q+1) W(K) is tested on signature data.");
  bing->add_option("--range", range, "largest p, q for cross-checks")->check(CLI::PositiveNumber);
  add_knot(bing);

  auto* cat = app.add_subcommand("catalog", "Built-in knot catalog.");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog entries.");
  auto* cat_show = cat->add_subcommand("show", "Print an entry in matrix file format.");
  cat_show->add_option("name", name, "catalog name")->required();

  std::vector<std::string> files;
  bool use_catalog = false;
  auto* batch = app.add_subcommand("batch", "One obstruction report per input, in input order.");
  batch->add_option("files", files, "Seifert matrix files");
  batch->add_flag("--catalog", use_catalog, "run every catalog entry");
  batch->footer(detail::kBatteryNote);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kComputed : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kComputed : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::string text;
  int code = kComputed;
  try {
    if (cat_list->parsed()) {
      for (const auto& e : catalog::builtin_catalog()) text += e.name + "\t" + e.notes + "\n";
    } else if (cat_show->parsed()) {
      const auto& e = catalog::lookup(name);
      text = "# notes: " + e.notes + "\n" + catalog::print_seifert(e.seifert, e.name);
    } else if (batch->parsed()) {
      if (files.empty() == !use_catalog) throw CLI::ValidationError("batch needs input files or --catalog, not both");
      std::vector<std::future<detail::BatchItem>> jobs;
      if (use_catalog) {
        for (const auto& e : catalog::builtin_catalog()) {
          jobs.push_back(std::async(std::launch::async, [&e] {
            return detail::batch_one(e.name, [&e] { return detail::Knot{e.name, e.seifert}; });
          }));
        }
      } else {
        for (const auto& f : files) {
          jobs.push_back(std::async(std::launch::async,
                                    [f] { return detail::batch_one(f, [f] { return detail::load_file(f); }); }));
        }
      }
      bool first = true;
      for (auto& j : jobs) {
        detail::BatchItem item = j.get();
        if (item.code != kComputed) {
          err << item.error;
          code = std::max(code, item.code);
          continue;
        }
        text += (first ? "" : "\n") + item.output;
        first = false;
      }
    } else {
      detail::Knot k = detail::resolve(name, file);
      if (invariants->parsed()) text = catalog::format_report(witt::obstruction_battery(k.seifert, k.subject));
      if (alexander->parsed()) text = detail::alexander_text(k);
      if (sigfn->parsed()) text = detail::sigfn_text(k);
      if (arf->parsed()) text = detail::arf_text(k);
      if (foxmilnor->parsed()) text = detail::foxmilnor_text(k);
      if (cable->parsed()) text = detail::cable_text(k, n);
      if (cover->parsed()) text = detail::cover_text(k, p);
      if (foxorder->parsed()) text = detail::foxorder_text(k, p);
      if (jpq->parsed()) text = detail::jpq_text(k, p, q);
      if (bing->parsed()) text = detail::bing_text(k, range);
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (...) {
    return detail::report_error(err);
  }
  out << (style ? detail::stylize(text) : text);
  out.flush();
  return code;
}

/// Styling is used only for a terminal and only when BINGCHECK_NO_COLOR is unset.
inline bool want_style(bool is_tty) { return is_tty && std::getenv("BINGCHECK_NO_COLOR") == nullptr; }

}  // namespace bingcheck::cli
