#include <array>
#include <vector>

#include "qcolor/diagram.hpp"
#include "qcolor/errors.hpp"

namespace qcolor {

namespace {

// Layout of allen_swenberg_1: crossings 1..5 are the axis passage and a
// curl, crossings 6..45 are the repeating section. Each sky crosses the
// section boundary on its own level; these are the arcs found there
// (0-based, level 0 then level 1).
constexpr int kSectionBegin = 5;
constexpr int kSectionEnd = 45;
constexpr std::array<int, 2> kEntryArcs = {6, 4};
constexpr std::array<int, 2> kExitArcs = {3, 5};

}  // namespace

LinkDiagram allen_swenberg(int k) {
  if (k < 1) throw InvalidArgument("family index must be >= 1, got " + std::to_string(k));
  const LinkDiagram base = builtin("allen_swenberg_1");
  LinkDiagram out;
  out.name = "allen_swenberg_" + std::to_string(k);
  out.arc_count = base.arc_count;
  out.crossings.assign(base.crossings.begin(), base.crossings.begin() + kSectionBegin);

  // Exit arcs of the previous copy, per level.
  std::array<int, 2> previous_exit = kEntryArcs;
  for (int copy = 0; copy < k; ++copy) {
    const bool first = copy == 0;
    const bool last = copy == k - 1;
    std::vector<int> local(base.arc_count, -1);
    for (int level = 0; level < 2; ++level) local[kEntryArcs[level]] = previous_exit[level];
    if (last)
      for (int level = 0; level < 2; ++level) local[kExitArcs[level]] = kExitArcs[level];
    auto map = [&](int arc) {
      if (local[arc] < 0) local[arc] = first && arc != kExitArcs[0] && arc != kExitArcs[1] ? arc : out.arc_count++;
      return local[arc];
    };
    for (int i = kSectionBegin; i < kSectionEnd; ++i) {
      const auto& c = base.crossings[i];
      // Evaluated in argument order so fresh arcs are numbered left to right.
      const int in = map(c.under_in);
      const int ov = map(c.over);
      const int ou = map(c.under_out);
      out.crossings.push_back({in, ov, ou});
    }
    for (int level = 0; level < 2; ++level) previous_exit[level] = map(kExitArcs[level]);
  }
  return out;
}

}  // namespace qcolor
