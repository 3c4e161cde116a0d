#include <benchmark/benchmark.h>

#include "isob/charclass.hpp"
#include "isob/obstruction.hpp"
#include "isob/repthy.hpp"
#include "isob/sympair.hpp"

using namespace isob;

namespace {

Weight fundamental(int rank, int index, int times = 1) {
  IntVec labels(static_cast<std::size_t>(rank), 0);
  labels[static_cast<std::size_t>(index)] = times;
  return Weight::from_ints(Basis::Fundamental, labels);
}

void BM_WeylDimE8(benchmark::State& state) {
  const auto rs = build_root_system({Family::E, 8});
  const auto w = Weight::from_ints(Basis::Fundamental, {1, 1, 1, 1, 1, 1, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(rs, w));
}
BENCHMARK(BM_WeylDimE8);

void BM_FreudenthalA3(benchmark::State& state) {
  const auto rs = build_root_system({Family::A, 3});
  const HighestWeightRep rep(rs, fundamental(3, 0, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal_multiplicities(rep));
}
BENCHMARK(BM_FreudenthalA3)->Arg(2)->Arg(4)->Arg(8);

void BM_FreudenthalE8Adjoint(benchmark::State& state) {
  const auto rs = build_root_system({Family::E, 8});
  const HighestWeightRep rep(rs, rs.highest_root());
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal_multiplicities(rep));
}
BENCHMARK(BM_FreudenthalE8Adjoint);

void BM_OrbitE7(benchmark::State& state) {
  const auto rs = build_root_system({Family::E, 7});
  const auto w = rs.to_ambient(fundamental(7, 6));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_orbit(rs, w));
}
BENCHMARK(BM_OrbitE7);

void BM_ChernSlSo(benchmark::State& state) {
  const auto ws = isotropy_weights(make_pair({PairKind::SL_SO, static_cast<int>(state.range(0)), {}}));
  for (auto _ : state) benchmark::DoNotOptimize(chern_polynomial(ws));
}
BENCHMARK(BM_ChernSlSo)->Arg(4)->Arg(6)->Arg(8);

void BM_CheckSlSo(benchmark::State& state) {
  const auto p = make_pair({PairKind::SL_SO, static_cast<int>(state.range(0)), {}});
  for (auto _ : state) benchmark::DoNotOptimize(check_extension(p));
}
BENCHMARK(BM_CheckSlSo)->Arg(5)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
