#pragma once

// quandlekit command-line driver.  run() is kept separate from main() so the
// test suite can drive it with in-memory streams.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage, parse or IO error.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandlekit/group_catalog.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/report.hpp"
#include "quandlekit/symmetry.hpp"
#include "quandlekit/theorems.hpp"

namespace quandlekit::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

/// "1,2;0,1" -> {{1,2},{0,1}}.
inline std::vector<std::vector<long long>> parse_matrix(const std::string& text) {
  std::vector<std::vector<long long>> m;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<long long> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw UsageError("bad matrix '" + text + "'");
      }
    }
    m.push_back(std::move(r));
  }
  if (m.empty()) throw UsageError("empty matrix");
  return m;
}

inline FiniteGroup resolve_group(const std::string& spec) {
  if (spec.size() > 4 && spec.substr(spec.size() - 4) == ".grp") return load_group(spec);
  return group_by_name(spec);
}

struct MakeArgs {
  std::string kind;
  std::optional<std::uint32_t> n;
  std::string factors, group, matrix, images, out;
  std::optional<long long> scalar;
  std::uint32_t power = 1;
};

inline GroupMap resolve_map(const FiniteGroup& g, const MakeArgs& a) {
  const int given = a.scalar.has_value() + !a.matrix.empty() + !a.images.empty();
  if (given != 1) throw UsageError("exactly one of --scalar, --matrix, --images is required");
  if (a.scalar) return power_map(g, *a.scalar);
  if (!a.matrix.empty()) return matrix_map(g, parse_matrix(a.matrix));
  auto imgs = parse_list(a.images, "image list");
  GroupMap f{std::vector<Element>(imgs.begin(), imgs.end()), g.order()};
  if (f.images.size() != g.order()) throw UsageError("--images needs one image per element");
  quandlekit::detail::require_automorphism(g, f);
  return f;
}

inline Quandle build(const MakeArgs& a) {
  if (a.kind == "dihedral") {
    if (!a.n || *a.n == 0) throw UsageError("make dihedral needs a positive order N");
    return dihedral(*a.n);
  }
  if (a.kind == "takasaki") {
    if (a.factors.empty()) throw UsageError("make takasaki needs --factors");
    return takasaki(make_abelian(parse_list(a.factors, "factor list")));
  }
  if (a.kind == "alexander") {
    if (a.factors.empty()) throw UsageError("make alexander needs --factors");
    FiniteGroup g = make_abelian(parse_list(a.factors, "factor list"));
    return alexander(g, resolve_map(g, a));
  }
  if (a.kind == "galexander") {
    if (a.group.empty()) throw UsageError("make galexander needs --group");
    FiniteGroup g = resolve_group(a.group);
    return gen_alexander(g, resolve_map(g, a));
  }
  if (a.kind == "conj") {
    if (a.group.empty()) throw UsageError("make conj needs --group");
    return conj_quandle(resolve_group(a.group), a.power);
  }
  throw UsageError("unknown kind '" + a.kind + "' (dihedral, takasaki, alexander, galexander, conj)");
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline int analyze(const std::string& path, bool json, bool generators, std::ostream& out) {
  Quandle q = load_quandle(path);
  PermGroup inn = inner_group(q);
  PermGroup aut = automorphism_group_backtrack(q);
  const bool connected = is_connected(q);
  std::optional<bool> two_point;
  if (q.order() >= 2) two_point = is_two_point_homogeneous(q);
  const bool doubly = aut_is_doubly_transitive(aut);
  const bool comm = is_commutative(q);
  const bool inv = is_involutory(q);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["order"] = q.order();
    j["inn_order"] = inn.order().str();
    j["aut_order"] = aut.order().str();
    j["connected"] = connected;
    j["two_point_homogeneous"] = two_point ? nlohmann::ordered_json(*two_point) : nlohmann::ordered_json(nullptr);
    j["aut_doubly_transitive"] = doubly;
    j["commutative"] = comm;
    j["involutory"] = inv;
    if (generators) {
      auto list = [](const PermGroup& g) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : g.generators()) arr.push_back(format_permutation(p));
        return arr;
      };
      j["inn_generators"] = list(inn);
      j["aut_generators"] = list(aut);
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "order: " << q.order() << '\n'
      << "|Inn|: " << inn.order() << '\n'
      << "|Aut|: " << aut.order() << '\n'
      << "connected: " << yes_no(connected) << '\n'
      << "two-point homogeneous: " << (two_point ? yes_no(*two_point) : "n/a") << '\n'
      << "Aut doubly transitive: " << yes_no(doubly) << '\n'
      << "commutative: " << yes_no(comm) << '\n'
      << "involutory: " << yes_no(inv) << '\n';
  if (generators) {
    out << "Inn generators:\n";
    write_perm_group(out, inn);
    out << "Aut generators:\n";
    write_perm_group(out, aut);
  }
  return kOk;
}

inline int verify(const std::string& id, const VerifyOptions& opt, bool json, std::ostream& out) {
  std::vector<const TheoremEntry*> selected;
  if (id == "all") {
    for (const auto& e : theorem_registry()) selected.push_back(&e);
  } else if (const auto* e = find_theorem(id)) {
    selected.push_back(e);
  } else {
    std::string known;
    for (const auto& e : theorem_registry()) known += " " + e.id;
    throw UsageError("unknown theorem id '" + id + "'; known:" + known + " all");
  }
  std::vector<TheoremReport> reports;
  for (const auto* e : selected) reports.push_back(e->run(opt));
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (json) {
    out << to_json(reports).dump(2) << '\n';
  } else {
    for (const auto& r : reports) write_text(out, r, selected.size() == 1);
    if (selected.size() > 1) {
      const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
      out << (passed ? "ALL PASS" : "FAILURES") << ": " << reports.size() - failed << "/" << reports.size()
          << " checks passed\n";
    }
  }
  return passed ? kOk : kFailed;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandles built from groups: construction, symmetry, verification", "quandlekit"};
  app.require_subcommand(1);

  detail::MakeArgs make;
  auto* cmd_make = app.add_subcommand("make", "write the operation table of a constructed quandle");
  cmd_make->add_option("kind", make.kind, "dihedral | takasaki | alexander | galexander | conj")->required();
  cmd_make->add_option("n", make.n, "order of the dihedral quandle");
  cmd_make->add_option("--factors", make.factors, "cyclic factor orders, e.g. 3,3");
  cmd_make->add_option("--group", make.group, "group name (z5, s3, q8, z3xz3, ...) or .grp file");
  cmd_make->add_option("--scalar", make.scalar, "automorphism a -> u a");
  cmd_make->add_option("--matrix", make.matrix, "automorphism by a row-major matrix, e.g. 0,1;1,0");
  cmd_make->add_option("--images", make.images, "automorphism by its image list, e.g. 0,2,1");
  cmd_make->add_option("--power", make.power, "conjugation exponent m in b^-m a b^m");
  cmd_make->add_option("--out", make.out, "output .qnd path (default: stdout)");

  std::string analyze_path;
  bool analyze_json = false, analyze_generators = false;
  auto* cmd_analyze = app.add_subcommand("analyze", "report Inn, Aut and transitivity properties of a .qnd file");
  cmd_analyze->add_option("path", analyze_path, ".qnd file")->required();
  cmd_analyze->add_flag("--json", analyze_json, "emit JSON");
  cmd_analyze->add_flag("--generators", analyze_generators, "also list generators of Inn and Aut");

  std::string verify_id;
  VerifyOptions vopt;
  std::string n_list, orders;
  bool verify_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "run a theorem check (or all of them)");
  cmd_verify->add_option("id", verify_id, "check id or 'all'")->required();
  cmd_verify->add_option("--max-order", vopt.max_order, "largest group order in the families")->check(CLI::Range(1u, 81u));
  cmd_verify->add_option("--n", n_list, "odd orders for dihedral-corollary, e.g. 3,5,7");
  cmd_verify->add_option("--orders", orders, "order interval lo,hi for mccarron (within 1..6)");
  cmd_verify->add_flag("--json", verify_json, "emit JSON (schema 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_make) {
      Quandle q = detail::build(make);
      if (make.out.empty()) {
        write_quandle(out, q);
      } else {
        save_quandle(make.out, q);
        out << "wrote " << make.out << " (order " << q.order() << ")\n";
      }
      return kOk;
    }
    if (*cmd_analyze) return detail::analyze(analyze_path, analyze_json, analyze_generators, out);
    if (*cmd_verify) {
      if (!n_list.empty()) vopt.n_values = detail::parse_list(n_list, "--n list");
      if (!orders.empty()) {
        auto r = detail::parse_list(orders, "--orders interval");
        if (r.size() != 2) throw UsageError("--orders needs lo,hi");
        vopt.mccarron_orders = std::pair<std::size_t, std::size_t>(r[0], r[1]);
      }
      return detail::verify(verify_id, vopt, verify_json, out);
    }
  } catch (const AxiomViolation& e) {
    err << "error: not a quandle: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    if (*cmd_make) err << cmd_make->help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace quandlekit::cli
