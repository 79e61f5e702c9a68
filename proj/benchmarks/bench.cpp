#include <benchmark/benchmark.h>

#include "symsurg/lattice.hpp"
#include "symsurg/seifert.hpp"
#include "symsurg/smith.hpp"
#include "symsurg/surgery.hpp"

#include <random>

using namespace symsurg;

namespace {

IntMat random_matrix(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
  return a;
}

IntMat random_symmetric(int n, unsigned seed) {
  IntMat a = random_matrix(n, seed);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) a.at(i, j) = a.at(j, i);
  return a;
}

void bm_smith_normal_form(benchmark::State& state) {
  IntMat a = random_matrix(int(state.range(0)), 7);
  for (auto _ : state) {
    SmithDecomposition s = smith_normal_form(a);
    benchmark::DoNotOptimize(s.d);
  }
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_signature(benchmark::State& state) {
  IntMat a = random_symmetric(int(state.range(0)), 11);
  for (auto _ : state) {
    SignatureTriple s = signature(a);
    benchmark::DoNotOptimize(s.positive);
  }
}
BENCHMARK(bm_signature)->Arg(8)->Arg(16)->Arg(36);

void bm_build_x(benchmark::State& state) {
  for (auto _ : state) {
    BuildResult r = build_x();
    benchmark::DoNotOptimize(r.all_pass);
  }
}
BENCHMARK(bm_build_x);

void bm_seifert_homology(benchmark::State& state) {
  ManifoldModel m = build_x().manifold;
  Int p = 2;
  std::vector<IsotropySpec> iso;
  IntVec exponents, background;
  Int mi = 1;
  for (const SurfaceClass& s : m.surfaces) {
    mi *= p;
    iso.push_back({s.id, mi});
    exponents.push_back(1);
    background.push_back(0);
  }
  for (auto _ : state) {
    SymplecticOrbifold orb = validate_orbifold(m, iso);
    SeifertBundle bundle = make_seifert_bundle(orb, exponents, background);
    TwistResult t = choose_primitive_twist(bundle, chern_class(bundle));
    HomologyReport h = homology_of_total(t.bundle);
    benchmark::DoNotOptimize(h.rank);
  }
}
BENCHMARK(bm_seifert_homology);

} // namespace

BENCHMARK_MAIN();
