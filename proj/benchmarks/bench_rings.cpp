#include <benchmark/benchmark.h>

#include "picard/reflections.hpp"

using picard::Rational;
using picard::hermitian::paper_generators;
using picard::hermitian::QuadMatrix;
using picard::rings::QuadElt;
using picard::rings::QuatElt;
using picard::rings::RingSpec;

static void BM_quad_mul(benchmark::State& state) {
  const RingSpec d3(3);
  const QuadElt a(Rational(3, 2), Rational(-5, 7), d3);
  const QuadElt b(Rational(-11, 4), Rational(2, 3), d3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_quad_mul);

static void BM_quat_mul(benchmark::State& state) {
  const QuatElt p(Rational(1, 2), Rational(1, 2), Rational(-3, 2), Rational(5, 2));
  const QuatElt q(Rational(-7, 2), Rational(9, 2), Rational(1, 2), Rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * q);
  }
}
BENCHMARK(BM_quat_mul);

static void BM_certify_reflection(benchmark::State& state) {
  const RingSpec d3(3);
  const auto gens = paper_generators(d3);
  const QuadMatrix a = gens[0].matrix * gens[1].matrix * gens[0].matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(picard::reflections::is_complex_reflection(a));
  }
}
BENCHMARK(BM_certify_reflection);

static void BM_certify_quaternionic(benchmark::State& state) {
  const auto gens = picard::hermitian::paper_generators_quaternion();
  for (auto _ : state) {
    benchmark::DoNotOptimize(picard::reflections::is_quaternionic_reflection(gens[2].matrix));
  }
}
BENCHMARK(BM_certify_quaternionic);
