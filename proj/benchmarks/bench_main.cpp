#include <benchmark/benchmark.h>

#include "wordrep/codes.hpp"
#include "wordrep/infinite.hpp"
#include "wordrep/morphism.hpp"
#include "wordrep/periodicity.hpp"

using namespace wordrep;

namespace {

void BM_SmallestPeriod(benchmark::State& state) {
  auto text = thue_morse_generator()->prefix(static_cast<std::size_t>(state.range(0))).str();
  for (auto _ : state) benchmark::DoNotOptimize(smallest_period(text));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmallestPeriod)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity();

void BM_MaxExponentFactor(benchmark::State& state) {
  auto w = thue_morse_generator()->prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_exponent_factor(w, 1));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxExponentFactor)->RangeMultiplier(2)->Range(1 << 7, 1 << 11)->Complexity();

void BM_IsInjective(benchmark::State& state) {
  auto len = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> images;
  for (std::size_t i = 0; i < 6; ++i) images.push_back(std::string(i + 1, 'a') + std::string(len, 'b'));
  for (auto _ : state) {
    Morphism h(Alphabet("123456"), Alphabet("ab"), images);
    benchmark::DoNotOptimize(h.is_injective());
  }
}
BENCHMARK(BM_IsInjective)->Arg(4)->Arg(16)->Arg(64);

void BM_EnumerateInjective(benchmark::State& state) {
  for (auto _ : state) {
    InjectiveMorphismEnumerator e(Alphabet("abc"), Alphabet("01"), static_cast<std::size_t>(state.range(0)));
    std::size_t count = 0;
    while (e.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateInjective)->Arg(2)->Arg(3);

void BM_AceEstimate(benchmark::State& state) {
  auto gen = big_acei_generator(2);
  auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ace_estimate(*gen, len, 16));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AceEstimate)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_XDegree(benchmark::State& state) {
  auto x = CodeSet::parse("ab,abb,bab");
  std::string w;
  for (std::int64_t i = 0; i < state.range(0); ++i) w += "abbab";
  for (auto _ : state) benchmark::DoNotOptimize(x_degree(Word(w), x));
}
BENCHMARK(BM_XDegree)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
BENCHMARK_MAIN();
