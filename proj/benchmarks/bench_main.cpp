#include "lefschetz/braid.hpp"
#include "lefschetz/fukaya.hpp"
#include "lefschetz/lifting.hpp"
#include "lefschetz/orbit_search.hpp"
#include "lefschetz/schedule.hpp"
#include "lefschetz/word_syntax.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace lefschetz;

namespace {

BraidWord random_braid(std::mt19937_64& rng, std::size_t strands, std::size_t len) {
  std::vector<int> w;
  for (std::size_t k = 0; k < len; ++k) {
    const int g = 1 + static_cast<int>(rng() % (strands - 1));
    w.push_back(rng() % 2 ? g : -g);
  }
  return BraidWord(strands, w);
}

// u against u conjugated by the full twist (equal, so the whole action is compared)
void BM_braid_equal(benchmark::State& state) {
  const auto strands = static_cast<std::size_t>(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  const BraidWord u = random_braid(rng, strands, len);
  const BraidWord delta2 = full_twist(strands);
  const BraidWord v = delta2 * u * delta2.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(braid_equal(u, v));
}
BENCHMARK(BM_braid_equal)->Args({4, 16})->Args({4, 64})->Args({8, 64})->Args({16, 64});

void BM_orbit_search(benchmark::State& state) {
  const auto ctx = GroupContext::braid(3);
  Factorization f;
  f.context = ctx;
  f.target = Target::full_twist();
  for (int k = 0; k < 3; ++k) {
    f.factors.push_back(ctx.parse("x1"));
    f.factors.push_back(ctx.parse("x2"));
  }
  Factorization g = f;
  for (int k = 0; k < state.range(0); ++k) g = hurwitz_move(g, 1 + static_cast<std::size_t>(k) % 5, 1);
  for (auto _ : state) {
    const SearchResult r = orbit_search(f, g, {static_cast<std::size_t>(state.range(0)), 1000000});
    benchmark::DoNotOptimize(r.states_visited);
  }
}
BENCHMARK(BM_orbit_search)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_compute_category(benchmark::State& state) {
  const CurveArrangement arr = conic_pencil_example();
  for (auto _ : state) benchmark::DoNotOptimize(compute_category(arr).mu.size());
}
BENCHMARK(BM_compute_category);

void BM_lift_action(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  BranchData b;
  b.sheets = 2;
  for (std::size_t k = 0; k < d; ++k) b.transpositions.push_back(parse_permutation("(1 2)", 2));
  const CoverModel m(b);
  std::mt19937_64 rng(2);
  const BraidWord w = random_braid(rng, d, 32);
  for (auto _ : state) benchmark::DoNotOptimize(m.action(w).matrix.rows());
}
BENCHMARK(BM_lift_action)->Arg(4)->Arg(8)->Arg(12);

void BM_schedule(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        donaldson_schedule(TransversalityKind::log_kind(4), 2, static_cast<std::size_t>(state.range(0)), 0.25).survives);
}
BENCHMARK(BM_schedule)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
