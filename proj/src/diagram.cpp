#include "qcolor/diagram.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "qcolor/builtin_data.hpp"
#include "qcolor/errors.hpp"

namespace qcolor {

void validate(const LinkDiagram& d) {
  if (d.arc_count <= 0) throw InvalidArgument("diagram '" + d.name + "' has no arcs");
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& c = d.crossings[i];
    for (int a : {c.under_in, c.over, c.under_out})
      if (a < 0 || a >= d.arc_count)
        throw InvalidArgument("crossing " + std::to_string(i + 1) + " refers to arc " + std::to_string(a + 1) +
                              " outside 1.." + std::to_string(d.arc_count));
  }
}

namespace {

int parse_index(const std::string& tok, int lineno) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
  if (v < -1000000000L || v > 1000000000L) throw ParseError("integer '" + tok + "' is too large", lineno);
  return static_cast<int>(v);
}

}  // namespace

LinkDiagram parse_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  LinkDiagram d;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "link" || tok[2] != "arcs")
        throw ParseError("expected header 'link <name> arcs <A>'", lineno);
      d.name = tok[1];
      d.arc_count = parse_index(tok[3], lineno);
      if (d.arc_count <= 0) throw ParseError("empty diagram: arc count must be positive", lineno);
      have_header = true;
      continue;
    }
    if (tok.size() != 4 || tok[0] != "x")
      throw ParseError("expected crossing 'x <under_in> <over> <under_out>'", lineno);
    int v[3];
    for (int k = 0; k < 3; ++k) {
      v[k] = parse_index(tok[k + 1], lineno);
      if (v[k] < 1 || v[k] > d.arc_count)
        throw ParseError("arc " + tok[k + 1] + " out of range 1.." + std::to_string(d.arc_count), lineno);
    }
    d.crossings.push_back({v[0] - 1, v[1] - 1, v[2] - 1});
  }
  if (!have_header) throw ParseError("empty diagram: missing header 'link <name> arcs <A>'");
  return d;
}

std::string serialize_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  out << "link " << (d.name.empty() ? "unnamed" : d.name) << " arcs " << d.arc_count << '\n';
  for (const auto& c : d.crossings)
    out << "x " << c.under_in + 1 << ' ' << c.over + 1 << ' ' << c.under_out + 1 << '\n';
  return out.str();
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"unknot",   "hopf",           "trefoil",
                                                 "hopf_sum", "allen_swenberg_1", "allen_swenberg_2"};
  return names;
}

LinkDiagram builtin(const std::string& name) {
  if (name == "unknot") return LinkDiagram{"unknot", 1, {}};
  if (name == "hopf") return parse_diagram(data::kHopf);
  if (name == "trefoil") return parse_diagram(data::kTrefoil);
  if (name == "hopf_sum") return parse_diagram(data::kHopfSum);
  if (name == "allen_swenberg_1") return parse_diagram(data::kAllenSwenberg1);
  if (name == "allen_swenberg_2") return parse_diagram(data::kAllenSwenberg2);
  throw InvalidArgument("unknown builtin diagram '" + name + "'");
}

std::vector<int> components(const LinkDiagram& d) {
  std::vector<int> parent(d.arc_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& c : d.crossings) {
    int a = find(c.under_in), b = find(c.under_out);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(d.arc_count, -1);
  std::vector<int> out(d.arc_count);
  int next = 0;
  for (int a = 0; a < d.arc_count; ++a) {
    int r = find(a);
    if (label[r] < 0) label[r] = next++;
    out[a] = label[r];
  }
  return out;
}

int component_count(const LinkDiagram& d) {
  auto c = components(d);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<int> under_endpoint_counts(const LinkDiagram& d) {
  std::vector<int> n(d.arc_count, 0);
  for (const auto& c : d.crossings) {
    ++n[c.under_in];
    ++n[c.under_out];
  }
  return n;
}

namespace {

void check_arc(const LinkDiagram& d, int arc) {
  if (arc < 0 || arc >= d.arc_count)
    throw InvalidArgument("arc " + std::to_string(arc + 1) + " does not exist in '" + d.name + "' (1.." +
                          std::to_string(d.arc_count) + ")");
}

}  // namespace

LinkDiagram reidemeister_r1(const LinkDiagram& d, int arc) {
  check_arc(d, arc);
  LinkDiagram r = d;
  const int kinked = r.arc_count++;
  for (auto& c : r.crossings)
    if (c.under_in == arc) c.under_in = kinked;
  r.crossings.push_back({arc, arc, kinked});
  return r;
}

LinkDiagram reidemeister_r2(const LinkDiagram& d, int over_arc, int under_arc) {
  check_arc(d, over_arc);
  check_arc(d, under_arc);
  LinkDiagram r = d;
  const int middle = r.arc_count++;
  const int rest = r.arc_count++;
  for (auto& c : r.crossings)
    if (c.under_in == under_arc) c.under_in = rest;
  // under_arc |> over = middle, then middle |>^-1 over = rest
  r.crossings.push_back({under_arc, over_arc, middle});
  r.crossings.push_back({rest, over_arc, middle});
  return r;
}

LinkDiagram relabel_arcs(const LinkDiagram& d, std::span<const int> new_index) {
  if (static_cast<int>(new_index.size()) != d.arc_count)
    throw InvalidArgument("relabeling has wrong length");
  std::vector<bool> seen(d.arc_count, false);
  for (int v : new_index) {
    if (v < 0 || v >= d.arc_count || seen[v]) throw InvalidArgument("relabeling is not a permutation");
    seen[v] = true;
  }
  LinkDiagram r = d;
  for (auto& c : r.crossings) c = {new_index[c.under_in], new_index[c.over], new_index[c.under_out]};
  return r;
}

LinkDiagram reorder_crossings(const LinkDiagram& d, std::span<const int> order) {
  if (order.size() != d.crossings.size()) throw InvalidArgument("crossing order has wrong length");
  std::vector<bool> seen(order.size(), false);
  LinkDiagram r = d;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int k = order[i];
    if (k < 0 || k >= static_cast<int>(order.size()) || seen[k])
      throw InvalidArgument("crossing order is not a permutation");
    seen[k] = true;
    r.crossings[i] = d.crossings[k];
  }
  return r;
}

namespace {

// Backtracking search for an arc bijection carrying a's crossing multiset
// onto b's.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const LinkDiagram& a, const LinkDiagram& b) : a_(a), b_(b) {
    for (const auto& c : b.crossings) ++target_[c];
    by_arc_.resize(a.arc_count);
    for (std::size_t i = 0; i < a.crossings.size(); ++i) {
      const auto& c = a.crossings[i];
      by_arc_[c.under_in].push_back(static_cast<int>(i));
      if (c.over != c.under_in) by_arc_[c.over].push_back(static_cast<int>(i));
      if (c.under_out != c.under_in && c.under_out != c.over) by_arc_[c.under_out].push_back(static_cast<int>(i));
    }
    sig_a_ = signatures(a);
    sig_b_ = signatures(b);
    order_ = bfs_order();
    map_.assign(a.arc_count, -1);
    used_.assign(b.arc_count, false);
  }

  bool run() {
    if (a_.arc_count != b_.arc_count || a_.crossings.size() != b_.crossings.size()) return false;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    return assign(0);
  }

 private:
  using Sig = std::array<int, 3>;

  static std::vector<Sig> signatures(const LinkDiagram& d) {
    std::vector<Sig> s(d.arc_count, Sig{0, 0, 0});
    for (const auto& c : d.crossings) {
      ++s[c.under_in][0];
      ++s[c.over][1];
      ++s[c.under_out][2];
    }
    return s;
  }

  std::vector<int> bfs_order() const {
    std::vector<int> order;
    std::vector<bool> seen(a_.arc_count, false);
    for (int root = 0; root < a_.arc_count; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      order.push_back(root);
      for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
        for (int ci : by_arc_[order[head]]) {
          const auto& c = a_.crossings[ci];
          for (int x : {c.under_in, c.over, c.under_out})
            if (!seen[x]) {
              seen[x] = true;
              order.push_back(x);
            }
        }
      }
    }
    return order;
  }

  // Crossings of a touching `arc` whose arcs are all mapped must map into
  // b's remaining multiset.
  bool consume(int arc, std::vector<CrossingRelation>& taken) {
    for (int ci : by_arc_[arc]) {
      const auto& c = a_.crossings[ci];
      if (map_[c.under_in] < 0 || map_[c.over] < 0 || map_[c.under_out] < 0) continue;
      CrossingRelation m{map_[c.under_in], map_[c.over], map_[c.under_out]};
      auto it = target_.find(m);
      if (it == target_.end() || it->second == 0) return false;
      --it->second;
      taken.push_back(m);
    }
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == order_.size()) return true;
    const int arc = order_[pos];
    for (int cand = 0; cand < b_.arc_count; ++cand) {
      if (used_[cand] || sig_b_[cand] != sig_a_[arc]) continue;
      map_[arc] = cand;
      used_[cand] = true;
      std::vector<CrossingRelation> taken;
      if (consume(arc, taken) && assign(pos + 1)) return true;
      for (const auto& m : taken) ++target_[m];
      used_[cand] = false;
      map_[arc] = -1;
    }
    return false;
  }

  const LinkDiagram& a_;
  const LinkDiagram& b_;
  std::map<CrossingRelation, int> target_;
  std::vector<std::vector<int>> by_arc_;
  std::vector<Sig> sig_a_, sig_b_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

bool isomorphic(const LinkDiagram& a, const LinkDiagram& b) { return IsomorphismSearch(a, b).run(); }

}  // namespace qcolor
