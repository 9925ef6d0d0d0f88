#include <benchmark/benchmark.h>

#include <random>

#include "cactus/fixtures.hpp"
#include "cactus/oracle.hpp"
#include "cactus/reduce.hpp"

using namespace cactus;

namespace {

Mat random_rational_mat(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Mat m(FieldSpec::rationals(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = Scalar::from_int(FieldSpec::rationals(), static_cast<long long>(rng() % 19) - 9);
  return m;
}

}  // namespace

static void BM_rref_rational(benchmark::State& state) {
  Mat m = random_rational_mat(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref_rational)->Arg(4)->Arg(8)->Arg(16);

static void BM_enum_subspaces(benchmark::State& state) {
  Subspace full = Subspace::full(FieldSpec::prime(3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    SubspaceStream s(full, 2);
    std::size_t n = 0;
    while (s.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_enum_subspaces)->Arg(3)->Arg(4)->Arg(5);

static void BM_socle(benchmark::State& state) {
  LocalAlgebra a = fixtures::long6(FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(a.socle());
}
BENCHMARK(BM_socle);

static void BM_span(benchmark::State& state) {
  EmbeddedFiniteScheme r = fixtures::mixed_deg6_p3(FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(span(r));
}
BENCHMARK(BM_span);

static void BM_reduce_fat_point(benchmark::State& state) {
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(FieldSpec::rationals());
  std::vector<Vec> rows{{Scalar::from_int(r.field(), 0), Scalar::from_int(r.field(), 1),
                         Scalar::from_int(r.field(), 1)}};
  Subspace e = Subspace::span_of(r.field(), 3, rows);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_socdim(r, e));
}
BENCHMARK(BM_reduce_fat_point);

static void BM_check_union_fat_point(benchmark::State& state) {
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(FieldSpec::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::check_union(r, 1));
}
BENCHMARK(BM_check_union_fat_point);

static void BM_veronese(benchmark::State& state) {
  EmbeddedFiniteScheme r = fixtures::fat_point_p2(FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(veronese(r, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_veronese)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
