// qcolor: quandle coloring invariants of link diagrams from the command line.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcolor/algebra.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/errors.hpp"
#include "qcolor/formats.hpp"
#include "qcolor/invariants.hpp"

namespace {

using namespace qcolor;

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kRefused = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

LinkDiagram resolve_link(const std::string& selector) {
  for (const auto& name : builtin_names())
    if (selector == name) return builtin(name);
  if (selector.rfind("as:", 0) == 0) {
    const std::string k = selector.substr(3);
    if (k.empty() || k.size() > 6 || k.find_first_not_of("0123456789") != std::string::npos || std::stoi(k) < 1)
      throw UsageError("bad family selector '" + selector + "' (expected as:<k>, k >= 1)");
    return allen_swenberg(std::stoi(k));
  }
  if (std::filesystem::is_regular_file(selector)) return parse_diagram(read_file(selector));
  throw UsageError("unknown link '" + selector + "' (not a builtin, as:<k>, or a file)");
}

FiniteQuandle resolve_quandle(const std::string& selector) {
  if (selector.size() > 1 && selector[0] == 'D' &&
      selector.find_first_not_of("0123456789", 1) == std::string::npos) {
    try {
      return conjugation_quandle(parse_group_selector(selector));
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  if (std::filesystem::is_regular_file(selector))
    return parse_quandle(read_file(selector), std::filesystem::path(selector).filename().string());
  throw UsageError("unknown group '" + selector + "' (expected D<n> with n >= 3, or a quandle file)");
}

DihedralGroup resolve_group(const std::string& selector) {
  try {
    return parse_group_selector(selector);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

struct Common {
  bool machine = false;
  bool oracle = false;
  std::uint64_t budget = kDefaultOracleBudget;
  int threads = 0;

  InvariantOptions options() const { return {oracle, budget, threads}; }
};

void add_common(CLI::App* cmd, Common& c, bool solver_flags) {
  cmd->add_flag("--machine", c.machine, "Emit JSON instead of text");
  if (!solver_flags) return;
  cmd->add_flag("--oracle", c.oracle, "Use the brute-force oracle");
  cmd->add_option("--budget", c.budget, "Oracle budget in assignments")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "Solver threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
}

int run(int argc, char** argv) {
  CLI::App app{"Quandle coloring invariants of link diagrams"};
  app.require_subcommand(1);
  Common common;

  std::string group_selector;
  auto* table = app.add_subcommand("table", "Print the Cayley table of D<n>");
  table->add_option("group", group_selector, "D<n>")->required();
  add_common(table, common, false);

  std::string quandle_path;
  auto* check = app.add_subcommand("check", "Verify the quandle axioms of a table file");
  check->add_option("file", quandle_path, "Quandle table file")->required();
  add_common(check, common, false);

  std::string link_selector;
  auto* color = app.add_subcommand("color", "Count colorings and the enhanced polynomial");
  color->add_option("--link", link_selector, "Builtin name, as:<k>, or diagram file")->required();
  color->add_option("--group", group_selector, "D<n> or quandle file")->required();
  add_common(color, common, true);

  std::vector<std::string> pair;
  auto* compare = app.add_subcommand("compare", "Compare two links over one quandle");
  compare->add_option("links", pair, "Two link selectors")->expected(2)->required();
  compare->add_option("--group", group_selector, "D<n> or quandle file")->required();
  add_common(compare, common, true);

  std::vector<std::string> groups;
  auto* report = app.add_subcommand("report", "Compare a link with hopf_sum over several groups");
  report->add_option("link", link_selector, "Link selector")->required();
  report->add_option("groups", groups, "D<n> ...")->required()->expected(1, -1);
  add_common(report, common, true);

  int k = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write the k-th two-sky family member");
  gen->add_option("k", k, "Family index (>= 1)")->required();
  gen->add_option("out,--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*table) {
    const auto g = resolve_group(group_selector);
    std::cout << (common.machine ? serialize_cayley_table(g) : render_cayley_table(g));
    return kOk;
  }

  if (*check) {
    const auto rows = parse_quandle_rows(read_file(quandle_path));
    const auto violations = verify_quandle_axioms(rows);
    if (common.machine) {
      std::cout << serialize_axiom_check(violations);
    } else if (violations.empty()) {
      std::cout << "quandle\n";
    } else {
      for (const auto& v : violations) std::cout << v.describe() << '\n';
    }
    return violations.empty() ? kOk : kInput;
  }

  if (*color) {
    const auto d = resolve_link(link_selector);
    const auto q = resolve_quandle(group_selector);
    const auto r = invariant_report(d, q, common.options());
    if (common.machine) {
      ReportDocument doc;
      doc.quandle = q.name();
      doc.links = {link_entry(r)};
      std::cout << serialize_report(doc);
    } else {
      std::cout << r.total << "; " << render_polynomial(r.polynomial) << '\n';
    }
    return kOk;
  }

  if (*compare) {
    const auto a = resolve_link(pair[0]);
    const auto b = resolve_link(pair[1]);
    const auto q = resolve_quandle(group_selector);
    const auto ra = invariant_report(a, q, common.options());
    const auto rb = invariant_report(b, q, common.options());
    const Verdict v = compare_reports(ra, rb);
    if (common.machine) {
      ReportDocument doc;
      doc.quandle = q.name();
      doc.links = {link_entry(ra), link_entry(rb)};
      doc.verdicts = {{ra.link, rb.link, v}};
      std::cout << serialize_report(doc);
    } else {
      std::cout << verdict_name(v) << '\n'
                << ra.link << ": " << ra.total << "; " << render_polynomial(ra.polynomial) << '\n'
                << rb.link << ": " << rb.total << "; " << render_polynomial(rb.polynomial) << '\n';
    }
    return kOk;
  }

  if (*report) {
    const auto d = resolve_link(link_selector);
    std::vector<DihedralGroup> gs;
    for (const auto& g : groups) gs.push_back(resolve_group(g));
    const auto rows = causality_report(d, gs, common.options());
    std::cout << (common.machine ? serialize_reports(causality_documents(rows)) : render_causality_table(rows));
    return kOk;
  }

  if (*gen) {
    if (k < 1) throw UsageError("k must be >= 1");
    const std::string text = serialize_diagram(allen_swenberg(k));
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << text)) throw ParseError("cannot write '" + out_path + "'");
    }
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
