// Command-line front end: `dnq <group|rep|verify|coherent> <n> [args] [--flags]`.
//
// Exit codes: 0 all verdicts pass, 1 a numeric check failed, 2 usage error.
// stdout carries the report, stderr diagnostics.
#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnq/coherent.hpp"
#include "dnq/dihedral.hpp"
#include "dnq/kinematics.hpp"
#include "dnq/report.hpp"
#include "dnq/verify.hpp"

namespace dnq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_n(int n) {
  if (n < 2) throw UsageError("n must be ≥ 2 (got " + std::to_string(n) + ")");
}

inline double resolve_tolerance(double requested, int n) {
  if (requested < 0) return default_tolerance(n);
  return requested;
}

inline int exit_code(const ReportDocument& doc) {
  return doc.all_pass() ? kExitOk : kExitCheckFailed;
}

inline void print_verdicts(const std::vector<Verdict>& verdicts, std::ostream& os) {
  for (const auto& v : verdicts) {
    os << v.name << ": " << (v.pass ? "PASS" : "FAIL");
    if (!v.detail.empty()) os << ", " << v.detail;
    os << ", deviation=" << format_double(v.max_deviation)
       << " tol=" << format_double(v.tolerance) << '\n';
  }
}

inline int emit(const ReportDocument& doc, const std::string& format, std::ostream& out,
                std::ostream& err) {
  if (format == "text") {
    out << doc.command << " tolerance=" << format_double(doc.tolerance) << '\n';
    print_verdicts(doc.verdicts, out);
  } else {
    out << doc.dump() << '\n';
  }
  if (!doc.all_pass()) err << "one or more checks failed\n";
  return exit_code(doc);
}

// --- group ------------------------------------------------------------------

inline int cmd_group(int n, bool table, std::ostream& out, std::ostream& err) {
  require_n(n);
  ReportDocument doc;
  doc.command = "group";
  doc.parameters = {{"n", n}, {"table", table}};
  doc.tolerance = 0.0;
  doc.verdicts = group_axiom_verdicts(n);

  const auto group = enumerate_group(n);
  Json names = Json::array();
  for (const auto& g : group) names.push_back(g.to_string());
  bool abelian = true;
  Json rows = Json::array();
  for (const auto& a : group) {
    Json row = Json::array();
    for (const auto& b : group) {
      row.push_back((a * b).to_string());
      if (a * b != b * a) abelian = false;
    }
    rows.push_back(std::move(row));
  }
  doc.payload = {{"elements", names}, {"order", 2 * n}, {"abelian", abelian}};
  if (table) doc.payload["table"] = rows;
  return emit(doc, "json", out, err);
}

// --- rep --------------------------------------------------------------------

inline int cmd_rep(int n, const std::string& rep_name, const std::string& element,
                   const std::string& format, bool oracle, double tol_flag, std::ostream& out,
                   std::ostream& err) {
  require_n(n);
  const double tol = resolve_tolerance(tol_flag, n);
  const Representation rep = parse_representation(rep_name);
  const DihedralElement g = DihedralElement::parse(element, n);
  const ComplexMatrix v = rep_closed_form(rep, g);

  ReportDocument doc;
  doc.command = "rep";
  doc.parameters = {{"n", n}, {"rep", to_string(rep)}, {"element", g.to_string()},
                    {"oracle", oracle}};
  doc.tolerance = tol;
  doc.verdicts.emplace_back("unitarity", unitarity_defect(v), tol);
  if (oracle) {
    doc.verdicts.emplace_back("induce_rep_oracle",
                              max_norm_diff(induce_rep(inducing_irrep(rep), g), v), tol,
                              "coset condition vs closed form");
  }
  doc.payload = {{"matrix", to_json(v)}};

  if (format == "csv") {
    out << dump_matrix_csv(v);
    print_verdicts(doc.verdicts, err);
    return exit_code(doc);
  }
  return emit(doc, "json", out, err);
}

// --- verify -----------------------------------------------------------------

inline int cmd_verify(int n, const std::string& rep_choice, double tol_flag,
                      const std::string& format, std::ostream& out, std::ostream& err) {
  require_n(n);
  const double tol = resolve_tolerance(tol_flag, n);
  std::vector<Representation> reps;
  if (rep_choice == "both") {
    reps = {Representation::v1, Representation::v2};
  } else {
    reps = {parse_representation(rep_choice)};
  }
  ReportDocument doc;
  doc.command = "verify";
  doc.parameters = {{"n", n}, {"rep", rep_choice}};
  doc.tolerance = tol;
  doc.verdicts = run_verification(n, reps, tol);
  return emit(doc, format, out, err);
}

// --- coherent ---------------------------------------------------------------

inline int cmd_coherent(int n, int k, int a, const std::string& element,
                        const std::string& rep_name, bool probabilities,
                        const std::vector<std::vector<std::string>>& overlaps_with,
                        const std::string& format, double tol_flag, std::ostream& out,
                        std::ostream& err) {
  require_n(n);
  const double tol = resolve_tolerance(tol_flag, n);
  const Representation rep = parse_representation(rep_name);
  const WeylLabel label{a, DihedralElement::parse(element, n), rep};
  const CoherentState state = coherent_state(label, k);

  ReportDocument doc;
  doc.command = "coherent";
  doc.parameters = {{"n", n}, {"k", k}, {"a", a}, {"element", label.g.to_string()},
                    {"rep", to_string(rep)}};
  doc.tolerance = tol;
  doc.verdicts.emplace_back("norm", std::abs(state.components.norm() - 1.0), tol);
  doc.verdicts.emplace_back(
      "formula_vs_operator",
      max_norm_diff(state.components, coherent_state_by_operator(label, k).components), tol);
  doc.payload = {{"state", to_json(state.components)}};

  if (probabilities) {
    Json profile = Json::array();
    Verdict closed("probability_closed_form", 0.0, tol);
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p = position_probability(j, state);
      total += p;
      closed.observe(std::abs(p - position_probability_closed_form(j, label.g)));
      profile.push_back(p);
    }
    doc.verdicts.push_back(closed);
    doc.verdicts.emplace_back("probability_sum", std::abs(total - 1.0), tol);
    doc.payload["probabilities"] = profile;
  }

  if (!overlaps_with.empty()) {
    Json list = Json::array();
    Verdict closed("overlap_closed_form", 0.0, tol);
    Verdict hermitian("overlap_hermitian", 0.0, tol);
    for (const auto& entry : overlaps_with) {
      if (entry.size() != 4) throw UsageError("--overlaps-with expects: n k a element");
      const int n2 = std::stoi(entry[0]);
      const int k2 = std::stoi(entry[1]);
      const int a2 = std::stoi(entry[2]);
      if (n2 != n || k2 != k) {
        throw UsageError("overlaps need the same n and k (got n=" + entry[0] + ", k=" + entry[1] +
                         ")");
      }
      const WeylLabel other_label{a2, DihedralElement::parse(entry[3], n), rep};
      const CoherentState other = coherent_state(other_label, k);
      const Complex value = overlap(state, other);
      const Complex formula = overlap_closed_form(label, other_label, k);
      closed.observe(std::abs(value - formula));
      hermitian.observe(std::abs(value - std::conj(overlap(other, state))));
      list.push_back({{"with", other_label.to_string()},
                      {"value", to_json(value)},
                      {"closed_form", to_json(formula)}});
    }
    doc.verdicts.push_back(closed);
    doc.verdicts.push_back(hermitian);
    doc.payload["overlaps"] = list;
  }

  if (format == "csv") {
    out << dump_vector_csv(state.components);
    print_verdicts(doc.verdicts, err);
    return exit_code(doc);
  }
  return emit(doc, "json", out, err);
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum kinematics on Z_n with dihedral symmetry D_n", "dnq"};
  app.require_subcommand(1);

  int n = 0;
  double tol = -1.0;
  std::string format = "json";

  auto* group = app.add_subcommand("group", "Cayley table and group axioms of D_n");
  bool table = false;
  group->add_option("n", n, "polygon order")->required();
  group->add_flag("--table", table, "include the 2n x 2n Cayley table");

  auto* rep = app.add_subcommand("rep", "matrix of V1 or V2 on one element");
  std::string rep_name, element;
  bool oracle = false;
  rep->add_option("n", n, "polygon order")->required();
  rep->add_option("rep", rep_name, "V1 or V2")->required();
  rep->add_option("element", element, "R<k> or M<k>")->required();
  rep->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  rep->add_flag("--oracle", oracle, "compare against the coset-condition construction");
  rep->add_option("--tol", tol, "tolerance (default 1e-10*n)");

  auto* verify = app.add_subcommand("verify", "run the full invariant suite");
  std::string rep_choice = "both";
  verify->add_option("n", n, "polygon order")->required();
  verify->add_option("--rep", rep_choice)->check(CLI::IsMember({"V1", "V2", "both"}));
  verify->add_option("--tol", tol, "tolerance (default 1e-10*n)");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* coherent = app.add_subcommand("coherent", "coherent state |a,g>^(k)");
  int k = 0, a = 0;
  std::string coherent_rep = "V1";
  bool probabilities = false;
  std::vector<std::vector<std::string>> overlaps_with;
  coherent->add_option("n", n, "polygon order")->required();
  coherent->add_option("k", k, "vacuum family")->required();
  coherent->add_option("a", a, "position phase index")->required();
  coherent->add_option("element", element, "R<m> or M<m>")->required();
  coherent->add_option("--rep", coherent_rep)->check(CLI::IsMember({"V1", "V2"}));
  coherent->add_flag("--probabilities", probabilities, "position probability profile");
  coherent->add_option("--overlaps-with", overlaps_with, "n k a element of a second state")
      ->expected(4)
      ->allow_extra_args(false);
  coherent->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  coherent->add_option("--tol", tol, "tolerance (default 1e-10*n)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (group->parsed()) return detail::cmd_group(n, table, out, err);
    if (rep->parsed()) {
      return detail::cmd_rep(n, rep_name, element, format, oracle, tol, out, err);
    }
    if (verify->parsed()) return detail::cmd_verify(n, rep_choice, tol, format, out, err);
    if (coherent->parsed()) {
      return detail::cmd_coherent(n, k, a, element, coherent_rep, probabilities, overlaps_with,
                                  format, tol, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace dnq::cli
