#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rss/dispersal.hpp"
#include "rss/recursive.hpp"
#include "rss/xor2.hpp"

using namespace rss;

namespace {

std::vector<std::uint8_t> random_bytes(std::size_t len) {
  std::mt19937_64 gen(12345);
  std::vector<std::uint8_t> out(len);
  for (auto& b : out) b = static_cast<std::uint8_t>(gen());
  return out;
}

void BM_FieldMul(benchmark::State& state) {
  PrimeModulus p(kDefaultPrime);
  FieldElement a(0x123456789abcdefULL, p);
  FieldElement b(0xfedcba987654321ULL, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_FieldMul);

void BM_FieldInverse(benchmark::State& state) {
  PrimeModulus p(kDefaultPrime);
  FieldElement a(0x123456789abcdefULL, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_FieldInverse);

void BM_Interpolate(benchmark::State& state) {
  PrimeModulus p(kDefaultPrime);
  std::mt19937_64 gen(7);
  std::vector<Point> points;
  for (std::int64_t i = 0; i < state.range(0); ++i) {
    points.push_back({FieldElement(i, p), FieldElement(gen() % p.value(), p)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(interpolate(points));
  }
}
BENCHMARK(BM_Interpolate)->Arg(5)->Arg(8)->Arg(16);

void BM_DealOneElement(benchmark::State& state) {
  PrimeModulus p(kDefaultPrime);
  const auto k = static_cast<std::uint32_t>(state.range(0));
  recursive::Params params(p, k, k + 2);
  SeededRandomSource rng(99);
  std::mt19937_64 gen(3);
  FieldElement secret(gen() % p.value(), p);
  recursive::HiddenPayload hidden;
  for (std::uint32_t i = 0; i + 2 < k; ++i) hidden.emplace_back(gen() % p.value(), p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(recursive::deal(secret, hidden, params, rng));
  }
}
BENCHMARK(BM_DealOneElement)->Arg(3)->Arg(5)->Arg(8);

void BM_ReconstructOneElement(benchmark::State& state) {
  PrimeModulus p(kDefaultPrime);
  const auto k = static_cast<std::uint32_t>(state.range(0));
  recursive::Params params(p, k, k + 2);
  SeededRandomSource rng(99);
  std::mt19937_64 gen(3);
  FieldElement secret(gen() % p.value(), p);
  recursive::HiddenPayload hidden;
  for (std::uint32_t i = 0; i + 2 < k; ++i) hidden.emplace_back(gen() % p.value(), p);
  auto shares = recursive::deal(secret, hidden, params, rng);
  shares.erase(shares.begin() + k, shares.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(recursive::reconstruct(shares, params));
  }
}
BENCHMARK(BM_ReconstructOneElement)->Arg(3)->Arg(5)->Arg(8);

void BM_SplitMessage64KiB(benchmark::State& state) {
  recursive::Params params(PrimeModulus(kDefaultPrime), 5, 7);
  const auto message = random_bytes(64 * 1024);
  SeededRandomSource rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_message(message, {}, params, true, rng));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * message.size()));
}
BENCHMARK(BM_SplitMessage64KiB);

void BM_Xor2Split(benchmark::State& state) {
  std::mt19937_64 gen(4);
  const std::size_t levels = 12;
  xor2::SecretSequence secrets(levels);
  for (std::size_t i = 0; i < levels; ++i) {
    secrets[i].resize(std::size_t{1} << i);
    for (std::size_t j = 0; j < secrets[i].size(); ++j) secrets[i][j] = gen() & 1;
  }
  SeededRandomSource rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xor2::split(secrets, rng));
  }
}
BENCHMARK(BM_Xor2Split);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
