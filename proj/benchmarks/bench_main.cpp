#include <benchmark/benchmark.h>

#include "dforge/chaitin.hpp"
#include "dforge/codec.hpp"
#include "dforge/digits.hpp"
#include "dforge/enumerator.hpp"
#include "dforge/qe.hpp"

using namespace dforge;

static void BM_EncodeInstructions(benchmark::State& state) {
  const std::vector<GeneratorKind> g{GeneratorKind::Add, GeneratorKind::Mul, GeneratorKind::Nat};
  for (auto _ : state) benchmark::DoNotOptimize(encode_instructions(g, static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EncodeInstructions)->Arg(130)->Arg(10000);

static void BM_BlockBoundaries(benchmark::State& state) {
  const std::vector<GeneratorKind> g{GeneratorKind::Add, GeneratorKind::Mul, GeneratorKind::Nat};
  for (auto _ : state) benchmark::DoNotOptimize(block_boundaries(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BlockBoundaries)->Arg(4)->Arg(8);

static void BM_DecideOrderViaSquares(benchmark::State& state) {
  const auto f = parse_formula("forall x . forall y . (x <= y <-> exists z . x + z*z = y)").formula;
  for (auto _ : state) benchmark::DoNotOptimize(decide(f));
}
BENCHMARK(BM_DecideOrderViaSquares);

static void BM_EliminateQuadratic(benchmark::State& state) {
  const auto f = parse_formula("exists y . a*y^2 + b*y + c = 0").formula;
  for (auto _ : state) benchmark::DoNotOptimize(eliminate(f));
}
BENCHMARK(BM_EliminateQuadratic);

static void BM_DescribeGoldenMean(benchmark::State& state) {
  const auto f = parse_formula("x > 0 and x*x = x + 1").formula;
  for (auto _ : state) benchmark::DoNotOptimize(describe_unary(f));
}
BENCHMARK(BM_DescribeGoldenMean);

static void BM_SqrtTwoDigits(benchmark::State& state) {
  const auto a = AlgebraicNumber::from_isolating(parse_upoly("x^2+2*x-1"), 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(DigitStream::of(a).prefix(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SqrtTwoDigits)->Arg(10)->Arg(200);

static void BM_InterleaveRoundTrip(benchmark::State& state) {
  const std::vector<Rational> s{Rational(3, 7), Rational(22, 31), Rational(1, 13)};
  for (auto _ : state) benchmark::DoNotOptimize(deinterleave(interleave(s), s.size()));
}
BENCHMARK(BM_InterleaveRoundTrip);

static void BM_BoundedBitCubes(benchmark::State& state) {
  const auto f = DiophantineInstance::parse("x^3 + y^3 + z^3 - N");
  for (auto _ : state) benchmark::DoNotOptimize(bounded_bit(f, static_cast<std::uint64_t>(state.range(0)), 30));
}
BENCHMARK(BM_BoundedBitCubes)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
