#include <benchmark/benchmark.h>

#include <random>

#include "teamenum/bit_trie.hpp"
#include "teamenum/enumerate.hpp"
#include "teamenum/orbit.hpp"
#include "teamenum/seeds.hpp"

using namespace teamenum;

namespace {

ReducedFormula chain(int k) {
  return reduce(parse_formula(chain_formula_text(k)));
}

void BM_OrbitEnumerate(benchmark::State& state) {
  const ReducedFormula rf = chain(static_cast<int>(state.range(0)));
  EnumConfig cfg;
  cfg.algorithm = Algorithm::Orbit;
  std::uint64_t teams = 0;
  for (auto _ : state) {
    auto stream = make_stream(rf, cfg);
    while (auto team = stream->next()) {
      benchmark::DoNotOptimize(team->size());
      ++teams;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(teams));
}

void BM_PolyspaceEnumerate(benchmark::State& state) {
  const ReducedFormula rf = chain(static_cast<int>(state.range(0)));
  EnumConfig cfg;
  cfg.algorithm = Algorithm::Polyspace;
  std::uint64_t teams = 0;
  for (auto _ : state) {
    auto stream = make_stream(rf, cfg);
    while (auto team = stream->next()) {
      benchmark::DoNotOptimize(team->size());
      ++teams;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(teams));
}

void BM_BruteEnumerate(benchmark::State& state) {
  const ReducedFormula rf = chain(static_cast<int>(state.range(0)));
  EnumConfig cfg;
  cfg.algorithm = Algorithm::Brute;
  std::uint64_t teams = 0;
  for (auto _ : state) {
    auto stream = make_stream(rf, cfg);
    while (auto team = stream->next()) {
      benchmark::DoNotOptimize(team->size());
      ++teams;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(teams));
}

void BM_OrbitOfHalfSpace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Half space with a large stabilizer: all assignments with the last bit 0.
  Team t(n);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v += 2)
    t.insert(Assignment(v, n));
  for (auto _ : state) {
    auto stream = enumerate_orbit(t);
    while (auto team = stream->next()) benchmark::DoNotOptimize(team->size());
  }
}

void BM_TrieInsertLookup(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<BitKey> keys;
  for (int i = 0; i < 512; ++i) {
    BitKey key = BitKey::zeros(bits);
    for (int b = 0; b < bits; ++b) key.set_bit(b, (rng() & 1) != 0);
    keys.push_back(std::move(key));
  }
  for (auto _ : state) {
    BitTrie trie(bits);
    for (const auto& key : keys) trie.insert(key);
    std::uint64_t hits = 0;
    for (const auto& key : keys) hits += trie.contains(key);
    benchmark::DoNotOptimize(hits);
  }
}

void BM_ModelCheck(benchmark::State& state) {
  const ReducedFormula rf = chain(4);
  Team t(4);
  for (std::uint64_t v = 0; v < 8; ++v) t.insert(Assignment(v << 1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(rf.model_check(t));
}

}  // namespace

BENCHMARK(BM_OrbitEnumerate)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_PolyspaceEnumerate)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_BruteEnumerate)->Arg(3)->Arg(4);
BENCHMARK(BM_OrbitOfHalfSpace)->Arg(6)->Arg(10);
BENCHMARK(BM_TrieInsertLookup)->Arg(16)->Arg(64);
BENCHMARK(BM_ModelCheck);

BENCHMARK_MAIN();
