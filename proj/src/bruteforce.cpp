#include "qcolor/errors.hpp"
#include "qcolor/solver.hpp"

namespace qcolor {

bool satisfies(const LinkDiagram& d, const FiniteQuandle& q, std::span<const Color> x) {
  for (const auto& c : d.crossings)
    if (q.op(x[c.under_in], x[c.over]) != x[c.under_out]) return false;
  return true;
}

std::vector<Coloring> enumerate_bruteforce(const LinkDiagram& d, const FiniteQuandle& q, std::uint64_t budget) {
  validate(d);
  const std::uint64_t m = static_cast<std::uint64_t>(q.size());
  std::uint64_t space = 1;
  for (int i = 0; i < d.arc_count; ++i) {
    if (space > budget / m) {
      // saturating product
      std::uint64_t shown = space;
      for (int j = i; j < d.arc_count && shown <= UINT64_MAX / m; ++j) shown *= m;
      throw BudgetExceeded(shown, budget);
    }
    space *= m;
  }

  std::vector<Coloring> out;
  Coloring x(d.arc_count, 0);
  const int last = d.arc_count - 1;
  while (true) {
    if (satisfies(d, q, x)) out.push_back(x);
    int i = last;
    while (i >= 0 && x[i] + 1u == m) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return out;
}

}  // namespace qcolor
