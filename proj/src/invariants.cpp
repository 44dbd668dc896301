#include "qcolor/invariants.hpp"

#include "qcolor/errors.hpp"

namespace qcolor {

CountingPolynomial::CountingPolynomial(std::map<int, std::uint64_t> coefficients) {
  for (const auto& [e, c] : coefficients) {
    if (e < 1) throw InvalidArgument("polynomial exponent must be >= 1, got " + std::to_string(e));
    if (c != 0) terms_.emplace(e, c);
  }
}

std::uint64_t CountingPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t CountingPolynomial::evaluate_at_one() const {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ByCount:
      return "BY_COUNT";
    case Verdict::ByPolynomial:
      return "BY_POLYNOMIAL";
    case Verdict::Indistinguishable:
      return "INDISTINGUISHABLE";
  }
  return "?";
}

Verdict parse_verdict(const std::string& name) {
  for (Verdict v : {Verdict::ByCount, Verdict::ByPolynomial, Verdict::Indistinguishable})
    if (name == verdict_name(v)) return v;
  throw InvalidArgument("unknown verdict '" + name + "'");
}

std::vector<Coloring> colorings(const LinkDiagram& d, const FiniteQuandle& q, const InvariantOptions& options) {
  if (options.oracle) return enumerate_bruteforce(d, q, options.budget);
  return enumerate(d, q, SolverOptions{options.threads});
}

std::uint64_t counting_invariant(const LinkDiagram& d, const FiniteQuandle& q, const InvariantOptions& options) {
  return colorings(d, q, options).size();
}

CountingPolynomial enhanced_polynomial(const LinkDiagram& d, const FiniteQuandle& q,
                                       const InvariantOptions& options) {
  return CountingPolynomial(count_by_image_size(colorings(d, q, options), q));
}

InvariantReport invariant_report(const LinkDiagram& d, const FiniteQuandle& q, const InvariantOptions& options) {
  const auto all = colorings(d, q, options);
  return {d.name, q.name(), d.arc_count, d.crossing_count(), all.size(),
          CountingPolynomial(count_by_image_size(all, q))};
}

Verdict compare_reports(const InvariantReport& a, const InvariantReport& b) {
  if (a.total != b.total) return Verdict::ByCount;
  if (a.polynomial != b.polynomial) return Verdict::ByPolynomial;
  return Verdict::Indistinguishable;
}

Verdict distinguishes(const LinkDiagram& a, const LinkDiagram& b, const FiniteQuandle& q,
                      const InvariantOptions& options) {
  return compare_reports(invariant_report(a, q, options), invariant_report(b, q, options));
}

std::vector<CausalityRow> causality_report(const LinkDiagram& d, const std::vector<DihedralGroup>& groups,
                                           const InvariantOptions& options) {
  const LinkDiagram reference = builtin("hopf_sum");
  std::vector<CausalityRow> rows;
  rows.reserve(groups.size());
  for (const auto& g : groups) {
    const auto q = conjugation_quandle(g);
    auto a = invariant_report(d, q, options);
    auto b = invariant_report(reference, q, options);
    const Verdict v = compare_reports(a, b);
    rows.push_back({g.name(), std::move(a), std::move(b), v});
  }
  return rows;
}

}  // namespace qcolor
