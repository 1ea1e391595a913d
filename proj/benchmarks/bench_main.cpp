#include <benchmark/benchmark.h>

#include <random>

#include "mixbraid/combing.hpp"
#include "mixbraid/garside.hpp"
#include "mixbraid/moves.hpp"

using namespace mixbraid;

namespace {

BraidWord random_braid(int strands, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::vector<Generator> letters;
  for (int i = 0; i < length; ++i) {
    letters.push_back({index(rng), rng() % 2 == 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

void BM_NormalForm(benchmark::State& state) {
  const BraidWord w = random_braid(8, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(w));
  }
}
BENCHMARK(BM_NormalForm)->Arg(16)->Arg(64)->Arg(256);

void BM_Comb(benchmark::State& state) {
  const int m = 5;
  std::mt19937_64 rng(2);
  std::vector<MixedLetter> letters;
  for (int i = 0; i < state.range(0); ++i) {
    const int s = rng() % 2 == 0 ? 1 : -1;
    if (rng() % 3 == 0) {
      letters.push_back(MixedLetter::fixed(1 + static_cast<int>(rng() % (m - 1)), s));
    } else {
      letters.push_back(MixedLetter::loop(1 + static_cast<int>(rng() % m), s));
    }
  }
  const MixedBraidWord w(m, 1, std::move(letters));
  for (auto _ : state) {
    benchmark::DoNotOptimize(comb(w));
  }
}
BENCHMARK(BM_Comb)->Arg(16)->Arg(64);

void BM_ComputeR(benchmark::State& state) {
  const ManifoldSpec dc = preset("dc:6");
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_r(dc, 3, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ComputeR)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
