#include <benchmark/benchmark.h>

#include "ahp/dehn.hpp"
#include "ahp/free_backend.hpp"
#include "ahp/free_group.hpp"
#include "ahp/free_product.hpp"
#include "ahp/geometry.hpp"
#include "ahp/harness.hpp"
#include "ahp/random.hpp"
#include "ahp/word_periodicity.hpp"

using namespace ahp;

static void BM_BorderArray(benchmark::State& state) {
  std::string z;
  for (int i = 0; z.size() < static_cast<std::size_t>(state.range(0)); ++i) z += (i % 7 == 3) ? "b" : "ab";
  for (auto _ : state) benchmark::DoNotOptimize(words::border_array(z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BorderArray)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

static void BM_FreeReduce(benchmark::State& state) {
  FreeGroup g(3);
  Rng rng(1);
  const std::string w = g.format(random_word(g.alphabet(), rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(free::free_reduce(w, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeReduce)->RangeMultiplier(4)->Range(64, 65536)->Complexity();

static void BM_FreeProductBall(benchmark::State& state) {
  FreeProductGroup g(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(g.ball(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FreeProductBall)->DenseRange(4, 12, 4);

static void BM_DehnConstruct(benchmark::State& state) {
  const auto pres = Presentation::load(std::string(AHP_PRESENTATION_DIR) + "/genus2.txt");
  DehnOptions opt;
  opt.ball_radius = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(DehnGroup(pres, opt));
}
BENCHMARK(BM_DehnConstruct)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DehnWordProblem(benchmark::State& state) {
  DehnGroup g(Presentation::load(std::string(AHP_PRESENTATION_DIR) + "/genus2.txt"));
  Rng rng(2);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(g.alphabet(), rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(g.normal_form(w));
}
BENCHMARK(BM_DehnWordProblem)->RangeMultiplier(4)->Range(16, 1024);

static void BM_EstimateDelta(benchmark::State& state) {
  FreeProductGroup g(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_delta(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EstimateDelta)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SharpFreeCheck(benchmark::State& state) {
  FreeGroup g(2);
  TheoremInstance inst;
  inst.a = g.parse("abb");
  inst.b = g.parse("bba");
  inst.x = g.identity();
  inst.y = g.parse("a");
  MainOptions mo;
  mo.sharp_free = true;
  for (auto _ : state) benchmark::DoNotOptimize(main_theorem_check(g, inst, nullptr, mo));
}
BENCHMARK(BM_SharpFreeCheck);

BENCHMARK_MAIN();
