#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcolor/algebra.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/solver.hpp"

namespace qcolor {

// Sum over colorings of q^|Im f|, stored as exponent -> coefficient with no
// zero coefficients.
class CountingPolynomial {
 public:
  CountingPolynomial() = default;
  // Drops zero coefficients; throws InvalidArgument on exponent < 1.
  explicit CountingPolynomial(std::map<int, std::uint64_t> coefficients);

  const std::map<int, std::uint64_t>& coefficients() const { return terms_; }
  std::uint64_t coefficient(int exponent) const;
  std::uint64_t evaluate_at_one() const;
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const CountingPolynomial&, const CountingPolynomial&) = default;

 private:
  std::map<int, std::uint64_t> terms_;
};

struct InvariantReport {
  std::string link;
  std::string quandle;
  int arcs = 0;
  int crossings = 0;
  std::uint64_t total = 0;
  CountingPolynomial polynomial;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

enum class Verdict { ByCount, ByPolynomial, Indistinguishable };

const char* verdict_name(Verdict v);
// Accepts the names produced by verdict_name; throws InvalidArgument otherwise.
Verdict parse_verdict(const std::string& name);

struct InvariantOptions {
  bool oracle = false;  // use enumerate_bruteforce instead of the engine
  std::uint64_t budget = kDefaultOracleBudget;
  int threads = 0;
};

std::vector<Coloring> colorings(const LinkDiagram& d, const FiniteQuandle& q, const InvariantOptions& options = {});

std::uint64_t counting_invariant(const LinkDiagram& d, const FiniteQuandle& q, const InvariantOptions& options = {});
CountingPolynomial enhanced_polynomial(const LinkDiagram& d, const FiniteQuandle& q,
                                       const InvariantOptions& options = {});
InvariantReport invariant_report(const LinkDiagram& d, const FiniteQuandle& q, const InvariantOptions& options = {});

Verdict compare_reports(const InvariantReport& a, const InvariantReport& b);
Verdict distinguishes(const LinkDiagram& a, const LinkDiagram& b, const FiniteQuandle& q,
                      const InvariantOptions& options = {});

struct CausalityRow {
  std::string group;
  InvariantReport link;
  InvariantReport reference;  // builtin hopf_sum
  Verdict verdict;
};

// One row per group: d and hopf_sum over Conj(group), and their verdict.
std::vector<CausalityRow> causality_report(const LinkDiagram& d, const std::vector<DihedralGroup>& groups,
                                           const InvariantOptions& options = {});

}  // namespace qcolor
