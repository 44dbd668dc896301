#pragma once

#include <span>
#include <string>
#include <vector>

namespace qcolor {

// Constraint color(under_out) = color(under_in) |> color(over). Negative
// crossings are stored with under_in and under_out swapped. Arc indices are
// 0-based here and 1-based in files and printed output.
struct CrossingRelation {
  int under_in = 0;
  int over = 0;
  int under_out = 0;

  friend bool operator==(const CrossingRelation&, const CrossingRelation&) = default;
  friend auto operator<=>(const CrossingRelation&, const CrossingRelation&) = default;
};

struct LinkDiagram {
  std::string name;
  int arc_count = 0;
  std::vector<CrossingRelation> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

// Throws InvalidArgument if the diagram has no arcs or a crossing refers to
// an arc outside [0, arc_count).
void validate(const LinkDiagram& d);

// Diagram file format:
//   # comment
//   link <name> arcs <A>
//   x <under_in> <over> <under_out>      (1-based, one line per crossing)
LinkDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const LinkDiagram& d);

// unknot, hopf, trefoil, hopf_sum, allen_swenberg_1, allen_swenberg_2
const std::vector<std::string>& builtin_names();
LinkDiagram builtin(const std::string& name);

// The k-th member of the two-sky family: the repeating section of
// allen_swenberg_1 (crossings 6..45) spliced in k times.
LinkDiagram allen_swenberg(int k);

// Component label of each arc, joining the two under-arcs of every crossing.
std::vector<int> components(const LinkDiagram& d);
int component_count(const LinkDiagram& d);

// How many times each arc occurs as under_in or under_out. In a diagram of
// a closed link every arc with an undercrossing has exactly two.
std::vector<int> under_endpoint_counts(const LinkDiagram& d);

// R1 adds a kink on `arc`: a new arc takes over its under_in occurrences.
// R2 pushes `under_arc` under `over_arc` and back: two new arcs and two
// crossings. Throws InvalidArgument on a bad arc reference.
LinkDiagram reidemeister_r1(const LinkDiagram& d, int arc);
LinkDiagram reidemeister_r2(const LinkDiagram& d, int over_arc, int under_arc);

// new_index[a] is the new label of arc a; must be a permutation.
LinkDiagram relabel_arcs(const LinkDiagram& d, std::span<const int> new_index);
// Crossing i of the result is crossing order[i] of d.
LinkDiagram reorder_crossings(const LinkDiagram& d, std::span<const int> order);

// Equal up to arc relabeling and crossing order (names are ignored).
bool isomorphic(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace qcolor
