#include <omp.h>

#include <algorithm>
#include <bitset>

#include "qcolor/errors.hpp"
#include "qcolor/solver.hpp"

namespace qcolor {

int SearchPlan::decisions() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                        [](const SearchStep& s) { return s.kind == SearchStep::Kind::Decide; }));
}

SearchPlan make_search_plan(const LinkDiagram& d) {
  validate(d);
  const int arcs = d.arc_count;
  const int n = d.crossing_count();
  std::vector<std::vector<int>> by_arc(arcs);
  for (int i = 0; i < n; ++i) {
    const auto& c = d.crossings[i];
    by_arc[c.under_in].push_back(i);
    if (c.over != c.under_in) by_arc[c.over].push_back(i);
    if (c.under_out != c.under_in && c.under_out != c.over) by_arc[c.under_out].push_back(i);
  }

  std::vector<bool> known(arcs, false);
  std::vector<bool> checked(n, false);
  SearchPlan plan;

  auto complete = [&](int i) {
    const auto& c = d.crossings[i];
    return known[c.under_in] && known[c.over] && known[c.under_out];
  };
  auto settle = [&](SearchStep step, int satisfied_by) {
    known[step.arc] = true;
    if (satisfied_by >= 0) checked[satisfied_by] = true;
    for (int i : by_arc[step.arc])
      if (!checked[i] && complete(i)) {
        checked[i] = true;
        step.checks.push_back(i);
      }
    plan.steps.push_back(std::move(step));
  };

  int remaining = arcs;
  while (remaining > 0) {
    bool forced = false;
    for (int i = 0; i < n && !forced; ++i) {
      const auto& c = d.crossings[i];
      if (!known[c.under_out] && known[c.under_in] && known[c.over]) {
        settle({SearchStep::Kind::Forward, c.under_out, c.under_in, c.over, -1, {}}, i);
        forced = true;
      } else if (!known[c.under_in] && known[c.under_out] && known[c.over]) {
        settle({SearchStep::Kind::Backward, c.under_in, c.under_out, c.over, -1, {}}, i);
        forced = true;
      }
    }
    if (forced) {
      --remaining;
      continue;
    }

    int best = -1;
    int best_score = -1;
    for (int a = 0; a < arcs; ++a) {
      if (known[a]) continue;
      int score = 0;
      for (int i : by_arc[a]) {
        const auto& c = d.crossings[i];
        for (int other : {c.under_in, c.over, c.under_out})
          if (other != a && known[other]) {
            ++score;
            break;
          }
      }
      if (score > best_score) {
        best = a;
        best_score = score;
      }
    }
    int filter = -1;
    for (int i : by_arc[best]) {
      const auto& c = d.crossings[i];
      if (c.over == best && c.under_in != best && c.under_out != best && known[c.under_in] &&
          known[c.under_out]) {
        filter = i;
        break;
      }
    }
    settle({SearchStep::Kind::Decide, best, -1, -1, filter, {}}, filter);
    --remaining;
  }
  return plan;
}

namespace {

class Engine {
 public:
  Engine(const LinkDiagram& d, const FiniteQuandle& q) : d_(d), q_(q), plan_(make_search_plan(d)) {
    const int m = q.size();
    candidates_.resize(static_cast<std::size_t>(m) * m);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) candidates_[x * m + q.op(x, y)].push_back(static_cast<Color>(y));
  }

  struct Branch {
    std::size_t step;
    Coloring colors;
  };

  // Runs forced steps from `step`; returns the index of the next decision
  // (or steps.size()), or -1 if a check fails.
  long propagate(std::size_t step, Coloring& x) const {
    const auto& steps = plan_.steps;
    for (; step < steps.size(); ++step) {
      const auto& s = steps[step];
      if (s.kind == SearchStep::Kind::Decide) return static_cast<long>(step);
      x[s.arc] = s.kind == SearchStep::Kind::Forward ? q_.op(x[s.source], x[s.over]) : q_.inv(x[s.source], x[s.over]);
      if (!checks_hold(s, x)) return -1;
    }
    return static_cast<long>(step);
  }

  const std::vector<Color>& values(const SearchStep& s, const Coloring& x) const {
    if (s.filter >= 0) {
      const auto& c = d_.crossings[s.filter];
      return candidates_[x[c.under_in] * q_.size() + x[c.under_out]];
    }
    return all_values();
  }

  bool checks_hold(const SearchStep& s, const Coloring& x) const {
    for (int i : s.checks) {
      const auto& c = d_.crossings[i];
      if (q_.op(x[c.under_in], x[c.over]) != x[c.under_out]) return false;
    }
    return true;
  }

  void search(std::size_t step, Coloring& x, std::vector<Coloring>& out) const {
    const long next = propagate(step, x);
    if (next < 0) return;
    if (static_cast<std::size_t>(next) == plan_.steps.size()) {
      out.push_back(x);
      return;
    }
    const auto& s = plan_.steps[next];
    for (Color v : values(s, x)) {
      x[s.arc] = v;
      if (checks_hold(s, x)) search(next + 1, x, out);
    }
  }

  // Expands decisions breadth first until there are at least `target`
  // open branches; finished colorings go straight to `done`.
  std::vector<Branch> frontier(std::size_t target, std::vector<Coloring>& done) const {
    std::vector<Branch> open{{0, Coloring(d_.arc_count, 0)}};
    while (open.size() < target) {
      std::vector<Branch> next;
      bool expanded = false;
      for (auto& b : open) {
        const long at = propagate(b.step, b.colors);
        if (at < 0) continue;
        if (static_cast<std::size_t>(at) == plan_.steps.size()) {
          done.push_back(std::move(b.colors));
          continue;
        }
        const auto& s = plan_.steps[at];
        for (Color v : values(s, b.colors)) {
          Coloring x = b.colors;
          x[s.arc] = v;
          if (checks_hold(s, x)) next.push_back({static_cast<std::size_t>(at) + 1, std::move(x)});
        }
        expanded = true;
      }
      open = std::move(next);
      if (!expanded) break;
    }
    return open;
  }

 private:
  const std::vector<Color>& all_values() const {
    if (all_.empty()) {
      all_.resize(q_.size());
      for (int v = 0; v < q_.size(); ++v) all_[v] = static_cast<Color>(v);
    }
    return all_;
  }

  const LinkDiagram& d_;
  const FiniteQuandle& q_;
  SearchPlan plan_;
  std::vector<std::vector<Color>> candidates_;
  mutable std::vector<Color> all_;
};

}  // namespace

std::vector<Coloring> enumerate_serial(const LinkDiagram& d, const FiniteQuandle& q) {
  Engine engine(d, q);
  std::vector<Coloring> out;
  Coloring x(d.arc_count, 0);
  engine.search(0, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> enumerate(const LinkDiagram& d, const FiniteQuandle& q, const SolverOptions& options) {
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  if (threads <= 1) return enumerate_serial(d, q);

  Engine engine(d, q);
  (void)engine.values(SearchStep{}, Coloring{});  // build the shared value list before forking
  std::vector<Coloring> out;
  const auto branches = engine.frontier(static_cast<std::size_t>(threads) * 16, out);
  std::vector<std::vector<Coloring>> partial(branches.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < static_cast<long>(branches.size()); ++i) {
    Coloring x = branches[i].colors;
    engine.search(branches[i].step, x, partial[i]);
  }

  for (auto& p : partial) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int image_size(std::span<const Color> coloring, const FiniteQuandle& q) {
  std::bitset<kMaxQuandleSize + 1> seen;
  std::vector<Color> members;
  auto add = [&](Color c) {
    if (!seen.test(c)) {
      seen.set(c);
      members.push_back(c);
    }
  };
  for (Color c : coloring) add(c);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Color a = members[i], b = members[j];
      add(q.op(a, b));
      add(q.op(b, a));
      add(q.inv(a, b));
      add(q.inv(b, a));
    }
  return static_cast<int>(members.size());
}

std::map<int, std::uint64_t> count_by_image_size(std::span<const Coloring> colorings, const FiniteQuandle& q) {
  std::map<int, std::uint64_t> tally;
  for (const auto& c : colorings) ++tally[image_size(c, q)];
  return tally;
}

}  // namespace qcolor
