#include <benchmark/benchmark.h>

#include "picard/coset_table.hpp"

using namespace picard::fpgroups;

namespace {

Presentation psl27() {
  return parse_presentation_text("group PSL27; gens a b; rels a^2 b^3 (a*b)^7 (a,b)^4;");
}

// (8,7|2,3): order 10752, a classical enumeration exercise.
Presentation cox_8_7_2_3() {
  return parse_presentation_text("group Cox; gens a b; rels a^8 b^7 (a*b)^2 (a^-1*b)^3;");
}

// Fibonacci group F(2,7): order 29 with a large intermediate table under
// relator-driven definitions.
Presentation fib27() {
  return parse_presentation_text(
      "group F27; gens a b c d e f g; rels "
      "a*b*c^-1 b*c*d^-1 c*d*e^-1 d*e*f^-1 e*f*g^-1 f*g*a^-1 g*a*b^-1");
}

void run(benchmark::State& state, const Presentation& p, Strategy s, std::int64_t expect) {
  for (auto _ : state) {
    EnumerationLimits limits;
    limits.strategy = s;
    const auto res = todd_coxeter(p, limits);
    if (!res.finite || res.order != expect) state.SkipWithError("wrong order");
    benchmark::DoNotOptimize(res.order);
  }
}

}  // namespace

static void BM_psl27_hlt(benchmark::State& state) { run(state, psl27(), Strategy::Hlt, 168); }
BENCHMARK(BM_psl27_hlt)->Unit(benchmark::kMillisecond);

static void BM_psl27_felsch(benchmark::State& state) { run(state, psl27(), Strategy::Felsch, 168); }
BENCHMARK(BM_psl27_felsch)->Unit(benchmark::kMillisecond);

static void BM_cox8723_hlt(benchmark::State& state) {
  run(state, cox_8_7_2_3(), Strategy::Hlt, 10752);
}
BENCHMARK(BM_cox8723_hlt)->Unit(benchmark::kMillisecond);

static void BM_cox8723_felsch(benchmark::State& state) {
  run(state, cox_8_7_2_3(), Strategy::Felsch, 10752);
}
BENCHMARK(BM_cox8723_felsch)->Unit(benchmark::kMillisecond);

static void BM_fib27_hlt(benchmark::State& state) { run(state, fib27(), Strategy::Hlt, 29); }
BENCHMARK(BM_fib27_hlt)->Unit(benchmark::kMillisecond);

static void BM_fib27_felsch(benchmark::State& state) { run(state, fib27(), Strategy::Felsch, 29); }
BENCHMARK(BM_fib27_felsch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
