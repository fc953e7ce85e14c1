#include "kmlat/lattice_covol.hpp"
#include "kmlat/lie_signs.hpp"
#include "kmlat/text_format.hpp"
#include "kmlat/torus.hpp"
#include "kmlat/tree_engine.hpp"
#include "kmlat/unipotent.hpp"

#include <benchmark/benchmark.h>

using namespace kmlat;

namespace {

GroupContext context(int m, const std::string& q) {
  const Gcm g = Gcm::make(-m, -m);
  return {RootDatum::simply_connected(g), Field::parse(q), epsilon_pair(g).eps};
}

void BM_EpsilonPair(benchmark::State& state) {
  const Gcm g = Gcm::make(-static_cast<int>(state.range(0)), -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_pair(g));
}
BENCHMARK(BM_EpsilonPair)->Arg(2)->Arg(3)->Arg(4);

void BM_UnipotentPower(benchmark::State& state) {
  const Gcm g = Gcm::make(-3, -3);
  const Field f = Field::parse("7");
  const UWord u = u_mul(f, root_element(g, {1, 0}, 2), root_element(g, {0, 1}, 3));
  for (auto _ : state) benchmark::DoNotOptimize(u_pow(f, u, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_UnipotentPower)->Arg(8)->Arg(32);

void BM_ActOnBall(benchmark::State& state) {
  const auto ctx = context(3, "5");
  const auto w = parse_word(ctx, "x(1,0;2) n(2) x(3,1;1) n(1) h(2,3)");
  const auto edges = ball(5, static_cast<int>(state.range(0)));
  Budget budget;
  for (auto _ : state)
    for (const auto& e : edges) benchmark::DoNotOptimize(act(ctx, w, e, budget));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(edges.size()));
}
BENCHMARK(BM_ActOnBall)->Arg(2)->Arg(3);

void BM_Orbits(benchmark::State& state) {
  const auto ctx = context(2, "2");
  const std::vector<GroupWord> gens{parse_word(ctx, "x(1,0;1)"), parse_word(ctx, "n(1)")};
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(orbit_and_stabilizers(ctx, gens, static_cast<int>(state.range(0)), 16, budget));
  }
}
BENCHMARK(BM_Orbits)->Arg(2)->Arg(3);

void BM_CenterBrute(benchmark::State& state) {
  const auto datum = RootDatum::simply_connected(Gcm::make(-2, -2));
  const Field f = Field::parse(std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(center_order(datum, f));
}
BENCHMARK(BM_CenterBrute)->Arg(101)->Arg(521);

void BM_Admissibility(benchmark::State& state) {
  const auto g = FiniteGroupTable::cyclic(static_cast<int>(state.range(0)));
  const int k = static_cast<int>(state.range(0)) / 3;
  std::vector<int> into;
  for (int j = 0; j < k; ++j) into.push_back(3 * j);
  const auto lat = GraphOfGroupsLattice::make(g, g, into, into);
  for (auto _ : state) benchmark::DoNotOptimize(admissibility(lat, 2, 2));
}
BENCHMARK(BM_Admissibility)->Arg(9)->Arg(81);

} // namespace

BENCHMARK_MAIN();
