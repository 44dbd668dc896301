#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qcolor/algebra.hpp"
#include "qcolor/diagram.hpp"

namespace qcolor::testing {

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string data_file(const std::string& name) { return read_text(std::string(QCOLOR_DATA_DIR) + "/" + name); }

// Closure of a braid word on `strands` strands. Generator +i (1-based)
// passes strand i under strand i+1, -i is its mirror image.
inline LinkDiagram braid_closure(const std::vector<int>& word, int strands, std::string name = "braid") {
  int next = strands;
  std::vector<int> cur(strands);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<std::array<int, 3>> raw;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    const int fresh = next++;
    if (g > 0) {
      raw.push_back({cur[i], cur[i + 1], fresh});
      cur[i] = cur[i + 1];
      cur[i + 1] = fresh;
    } else {
      raw.push_back({fresh, cur[i], cur[i + 1]});
      cur[i + 1] = cur[i];
      cur[i] = fresh;
    }
  }
  std::vector<int> parent(next);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < strands; ++p) parent[find(cur[p])] = find(p);

  std::map<int, int> label;
  auto relabel = [&](int a) {
    auto [it, inserted] = label.emplace(find(a), static_cast<int>(label.size()));
    return it->second;
  };
  LinkDiagram d;
  d.name = std::move(name);
  for (const auto& c : raw) {
    const int in = relabel(c[0]);
    const int over = relabel(c[1]);
    d.crossings.push_back({in, over, relabel(c[2])});
  }
  for (int p = 0; p < strands; ++p) relabel(p);
  d.arc_count = static_cast<int>(label.size());
  return d;
}

// Random closed braid diagram with at most `max_arcs` arcs.
inline LinkDiagram random_diagram(std::mt19937& rng, int max_arcs, const std::string& name) {
  std::uniform_int_distribution<int> strands_dist(1, 3);
  for (;;) {
    const int strands = strands_dist(rng);
    const int length = std::uniform_int_distribution<int>(strands == 1 ? 0 : 1, max_arcs)(rng);
    std::vector<int> word;
    for (int i = 0; i < length && strands > 1; ++i) {
      const int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      word.push_back(rng() % 2 ? g : -g);
    }
    auto d = braid_closure(word, strands, name);
    if (d.arc_count <= max_arcs) return d;
  }
}

// Independent oracle: counts assignments arc -> D_n satisfying
// out = over^-1 in over with group arithmetic only, tallied by the size of
// the conjugation-closed set generated by the arc values.
inline std::map<int, std::uint64_t> group_oracle(const LinkDiagram& d, const DihedralGroup& g) {
  const int m = g.order();
  std::vector<int> x(d.arc_count, 0);
  std::map<int, std::uint64_t> tally;
  for (;;) {
    bool ok = true;
    for (const auto& c : d.crossings) {
      const auto b = g.element(x[c.over]);
      const auto conj = g.multiply(g.multiply(g.inverse(b), g.element(x[c.under_in])), b);
      if (g.code(conj) != x[c.under_out]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<bool> seen(m, false);
      std::vector<int> set;
      for (int v : x)
        if (!seen[v]) seen[v] = true, set.push_back(v);
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < set.size(); ++i)
          for (std::size_t j = 0; j < set.size(); ++j) {
            const auto a = g.element(set[i]), b = g.element(set[j]);
            for (const auto& v : {g.conjugate(a, b), g.multiply(g.multiply(b, a), g.inverse(b))})
              if (!seen[g.code(v)]) seen[g.code(v)] = true, set.push_back(g.code(v)), grew = true;
          }
      }
      ++tally[static_cast<int>(set.size())];
    }
    int i = d.arc_count - 1;
    while (i >= 0 && x[i] == m - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return tally;
}

inline std::uint64_t total(const std::map<int, std::uint64_t>& tally) {
  std::uint64_t s = 0;
  for (const auto& [e, c] : tally) s += c;
  return s;
}

}  // namespace qcolor::testing
