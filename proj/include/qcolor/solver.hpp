#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qcolor/algebra.hpp"
#include "qcolor/diagram.hpp"

namespace qcolor {

// A total assignment arc -> quandle element satisfying every crossing.
using Coloring = std::vector<Color>;

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// Checks every crossing relation; assumes colors are in range.
bool satisfies(const LinkDiagram& d, const FiniteQuandle& q, std::span<const Color> assignment);

// Testing oracle: tries all size^arcs assignments in lexicographic order.
// Throws BudgetExceeded when size^arcs > budget.
std::vector<Coloring> enumerate_bruteforce(const LinkDiagram& d, const FiniteQuandle& q,
                                           std::uint64_t budget = kDefaultOracleBudget);

// Order in which the propagating engine fixes arcs. Every arc is either a
// decision (tried with every value, or with the values a known crossing
// allows) or forced by a crossing whose other two arcs precede it.
struct SearchStep {
  enum class Kind {
    Decide,   // try all values, or candidates(filter) when filter >= 0
    Forward,  // arc = op(source, over)
    Backward  // arc = inv(source, over)
  };
  Kind kind = Kind::Decide;
  int arc = 0;
  int source = -1;
  int over = -1;
  // Decide only: crossing whose over arc is `arc` and whose under arcs are
  // already known; restricts the values to solutions of in |> y = out.
  int filter = -1;
  // Crossings whose three arcs are all known after this step, other than
  // the one used to force it.
  std::vector<int> checks;
};

struct SearchPlan {
  std::vector<SearchStep> steps;

  int decisions() const;
};

// Greedy plan: propagate whenever a crossing forces an arc; otherwise decide
// the arc that completes the most crossings, lowest index on ties.
SearchPlan make_search_plan(const LinkDiagram& d);

struct SolverOptions {
  // 0 = OpenMP default; 1 = run the serial reference path.
  int threads = 0;
};

// All colorings in lexicographic order, identical to enumerate_bruteforce.
std::vector<Coloring> enumerate(const LinkDiagram& d, const FiniteQuandle& q, const SolverOptions& options = {});

// Single-threaded reference path of the same engine.
std::vector<Coloring> enumerate_serial(const LinkDiagram& d, const FiniteQuandle& q);

// |Im(f)|: size of the subquandle of q generated by the arc colors, i.e. the
// image of the homomorphism from the fundamental quandle.
int image_size(std::span<const Color> coloring, const FiniteQuandle& q);

// |Im(f)| -> number of colorings
std::map<int, std::uint64_t> count_by_image_size(std::span<const Coloring> colorings, const FiniteQuandle& q);

}  // namespace qcolor
