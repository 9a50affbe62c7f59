#include <benchmark/benchmark.h>

#include "orbitkit/algebra.hpp"
#include "orbitkit/corpus.hpp"
#include "orbitkit/orbit.hpp"

using namespace orbitkit;

static void BM_OrbitBfs(benchmark::State& state) {
  Automaton a = corpus_get("adding-machine").automaton;
  const Word u(static_cast<std::size_t>(state.range(0)), 0);
  for (auto _ : state) {
    auto t = orbit_word(a, GenLang::full_star(), u);
    benchmark::DoNotOptimize(t.nodes.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrbitBfs)->DenseRange(4, 12, 2)->Complexity();

static void BM_ElementCanon(benchmark::State& state) {
  Automaton g = corpus_get("grigorchuk").automaton;
  StateSeq s;
  for (int i = 0; i < state.range(0); ++i) s.push_back(static_cast<StateId>(i % 4));
  for (auto _ : state) {
    auto c = element_canon(g, s);
    benchmark::DoNotOptimize(c.n_states);
  }
}
BENCHMARK(BM_ElementCanon)->DenseRange(1, 5);

static void BM_BallEnumeration(benchmark::State& state) {
  Automaton d = corpus_get("grigorchuk-dual").automaton;
  std::vector<StateSeq> gens{{0}, {1}};
  for (auto _ : state) {
    auto r = enumerate_ball(d, gens, static_cast<std::size_t>(state.range(0)), 1 << 20);
    benchmark::DoNotOptimize(r.new_per_length.size());
  }
}
BENCHMARK(BM_BallEnumeration)->DenseRange(2, 6);

static void BM_OrbitUp(benchmark::State& state) {
  Automaton d = corpus_get("grigorchuk-dual").automaton;
  const UPWord x = up_canonicalize({}, {d.letter("b"), d.letter("a")});
  for (auto _ : state) {
    auto r = orbit_up(d, GenLang::full_star(), x, 100000);
    benchmark::DoNotOptimize(std::holds_alternative<UpOrbit>(r));
  }
}
BENCHMARK(BM_OrbitUp);

static void BM_TorsionDual(benchmark::State& state) {
  Automaton g = corpus_get("grigorchuk").automaton;
  const StateSeq s{g.state("a"), g.state("b")};
  for (auto _ : state) {
    auto v = torsion_check_dual(g, s, 4096, 64);
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_TorsionDual);

BENCHMARK_MAIN();
