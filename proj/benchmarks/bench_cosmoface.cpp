#include <benchmark/benchmark.h>

#include "cosmoface/counting.hpp"
#include "cosmoface/differential.hpp"
#include "cosmoface/face_lattice.hpp"
#include "cosmoface/oracle.hpp"
#include "cosmoface/tree_recursion.hpp"

using namespace cosmoface;

namespace {

Multigraph path(int n) {
  Multigraph g;
  g.add_node("n0");
  for (int i = 1; i < n; ++i) g.add_edge("n" + std::to_string(i - 1), "n" + std::to_string(i));
  return g;
}

Multigraph cycle(int n) {
  Multigraph g;
  for (int i = 0; i < n; ++i)
    g.add_edge("n" + std::to_string(i), "n" + std::to_string((i + 1) % n));
  return g;
}

}  // namespace

static void BM_IsFace(benchmark::State& state) {
  FaceEngine engine(cycle(4));
  const int n = engine.polytope().vertex_count();
  std::uint64_t mask = 0x325;
  for (auto _ : state) {
    FaceSet x;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) x.push_back(i);
    benchmark::DoNotOptimize(engine.is_face(x));
    mask = mask * 6364136223846793005ull + 1442695040888963407ull;
    mask &= (1ull << n) - 1;
  }
}
BENCHMARK(BM_IsFace);

static void BM_LpIsFace(benchmark::State& state) {
  CosmoPolytope poly(cycle(4));
  const int n = poly.vertex_count();
  std::uint64_t mask = 0x325;
  for (auto _ : state) {
    FaceSet x;
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) x.push_back(i);
    benchmark::DoNotOptimize(lp_is_face(poly, x).is_face);
    mask = mask * 6364136223846793005ull + 1442695040888963407ull;
    mask &= (1ull << n) - 1;
  }
}
BENCHMARK(BM_LpIsFace);

static void BM_FaceLattice(benchmark::State& state) {
  Multigraph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FaceEngine engine(g);
    benchmark::DoNotOptimize(FaceLattice::build(engine).face_count());
  }
}
BENCHMARK(BM_FaceLattice)->Arg(3)->Arg(4)->Arg(5);

static void BM_TreeRecursion(benchmark::State& state) {
  Multigraph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tree_f_polynomial(g).total());
}
BENCHMARK(BM_TreeRecursion)->Arg(8)->Arg(16)->Arg(32);

static void BM_SimplexEnumerate(benchmark::State& state) {
  FaceEngine engine(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto counts = simplex_enumerate(engine, engine.polytope().vertex_count());
    benchmark::DoNotOptimize(counts.size());
  }
}
BENCHMARK(BM_SimplexEnumerate)->Arg(4)->Arg(6);

static void BM_NormalizedVolume(benchmark::State& state) {
  Multigraph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalized_volume(g));
}
BENCHMARK(BM_NormalizedVolume)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
