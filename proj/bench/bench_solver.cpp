// Times the serial reference engine, the OpenMP engine and the brute-force
// oracle on the same instances and checks that they agree.
//
//   bench_solver [--quick] [--threads N] [--reps R]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "qcolor/solver.hpp"

using namespace qcolor;
using Clock = std::chrono::steady_clock;

namespace {

double best_ms(int reps, const std::function<std::size_t()>& run, std::size_t& count) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    count = run();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  int threads = omp_get_max_threads();
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) {
      quick = true;
    } else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
      threads = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--reps") && i + 1 < argc) {
      reps = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--threads N] [--reps R]\n", argv[0]);
      return 1;
    }
  }
  if (quick) reps = 1;

  std::vector<std::pair<LinkDiagram, int>> cases;
  for (int n : {3, 5, 7}) cases.emplace_back(builtin("hopf_sum"), n);
  const int max_k = quick ? 2 : 8;
  const std::vector<int> groups = quick ? std::vector<int>{5} : std::vector<int>{3, 5, 7, 9, 12};
  for (int k = 1; k <= max_k; k *= 2)
    for (int n : groups) cases.emplace_back(allen_swenberg(k), n);

  std::printf("%-18s %5s %6s %10s %12s %12s %12s\n", "link", "group", "arcs", "colorings", "serial ms",
              "parallel ms", "oracle ms");
  bool agree = true;
  for (const auto& [d, n] : cases) {
    const auto q = conjugation_quandle(DihedralGroup(n));
    std::size_t serial_count = 0, parallel_count = 0, oracle_count = 0;
    const auto reference = enumerate_serial(d, q);
    const double serial = best_ms(reps, [&] { return enumerate_serial(d, q).size(); }, serial_count);
    const double parallel = best_ms(
        reps, [&] { return enumerate(d, q, {threads}).size(); }, parallel_count);
    agree = agree && enumerate(d, q, {threads}) == reference;

    std::string oracle = "-";
    try {
      const double ms = best_ms(1, [&] { return enumerate_bruteforce(d, q).size(); }, oracle_count);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      oracle = buf;
      agree = agree && enumerate_bruteforce(d, q) == reference;
    } catch (const std::exception&) {
      oracle = "refused";
    }
    std::printf("%-18s %5s %6d %10zu %12.3f %12.3f %12s\n", d.name.c_str(), ("D" + std::to_string(n)).c_str(),
                d.arc_count, reference.size(), serial, parallel, oracle.c_str());
  }
  std::printf("threads: %d, engines agree: %s\n", threads, agree ? "yes" : "NO");
  return agree ? 0 : 1;
}
