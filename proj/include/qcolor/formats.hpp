#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcolor/algebra.hpp"
#include "qcolor/invariants.hpp"

namespace qcolor {

inline constexpr const char* kToolVersion = "0.1.0";

// Descending exponents: "20q^8 + 20q^6 + 60q^3 + 90q^2 + 10q"; "0" if empty.
std::string render_polynomial(const CountingPolynomial& p);

struct LinkEntry {
  std::string name;
  int arcs = 0;
  int crossings = 0;
  std::uint64_t total = 0;
  CountingPolynomial polynomial;

  friend bool operator==(const LinkEntry&, const LinkEntry&) = default;
};

struct VerdictEntry {
  std::string a;
  std::string b;
  Verdict verdict = Verdict::Indistinguishable;

  friend bool operator==(const VerdictEntry&, const VerdictEntry&) = default;
};

struct ReportDocument {
  std::string version = kToolVersion;
  std::string quandle;
  std::vector<LinkEntry> links;
  std::vector<VerdictEntry> verdicts;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

LinkEntry link_entry(const InvariantReport& r);

// JSON with sorted keys and two-space indentation.
std::string serialize_report(const ReportDocument& r);
std::string serialize_reports(const std::vector<ReportDocument>& rs);
// Throws ParseError naming the offending path, e.g. "links[0].polynomial.3".
ReportDocument parse_report(const std::string& text);
std::vector<ReportDocument> parse_reports(const std::string& text);

// Empty string if `text` is a single report or an array of reports;
// otherwise the first schema error.
std::string validate_report_json(const std::string& text);

std::string render_cayley_table(const DihedralGroup& g);
std::string serialize_cayley_table(const DihedralGroup& g);

std::string serialize_axiom_check(const std::vector<AxiomViolation>& violations);

// Human table: group | link total | link polynomial | reference total |
// reference polynomial | verdict.
std::string render_causality_table(const std::vector<CausalityRow>& rows);
std::vector<ReportDocument> causality_documents(const std::vector<CausalityRow>& rows);

}  // namespace qcolor
