// Times cut_structure against its serial version and the full LOB reduction
// on planar instances of growing size. Prints CSV to stdout.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "outbranch/connectivity.hpp"
#include "outbranch/generators.hpp"
#include "outbranch/lob_reducer.hpp"

using namespace outbranch;

namespace {

template <class F> double millis(F &&f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i)
    f();
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count() / reps;
}

} // namespace

int main(int argc, char **argv) {
  std::uint64_t seed = resolve_seed(std::nullopt, 7);
  VertexId max_n = argc > 1 ? static_cast<VertexId>(std::atoi(argv[1])) : 800;
  std::printf("n,arcs,threads,serial_ms,parallel_ms,reduce_ms,reduced_n,agree\n");
  for (VertexId n = 100; n <= max_n; n *= 2) {
    Rng rng(seed + n);
    RootedDigraph d = gen_planar({n, 0.8, 0.5}, rng);
    int reps = n <= 400 ? 5 : 1;
    CutStructure a, b;
    double serial = millis([&] { a = cut_structure_serial(d); }, reps);
    double parallel = millis([&] { b = cut_structure(d); }, reps);
    LobReduction r;
    double reduce = millis([&] { r = reduce_to_fixpoint({d, static_cast<int>(n)}); }, 1);
    bool agree = a.is_cut_vertex == b.is_cut_vertex && a.cut_edges == b.cut_edges;
    std::printf("%d,%zu,%d,%.3f,%.3f,%.3f,%d,%d\n", n, d.arc_count(),
                omp_get_max_threads(), serial, parallel, reduce,
                r.outcome.graph.size(), agree ? 1 : 0);
    std::fflush(stdout);
    if (!agree)
      return 1;
  }
  return 0;
}
