#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rover/grigorchuk.hpp"
#include "rover/poset.hpp"
#include "rover/topology.hpp"

using namespace rover;

namespace {

// Deterministic pool of composable element pairs with arities up to 4.
std::vector<std::pair<GroupoidElement, GroupoidElement>> element_pairs(int count) {
  std::mt19937_64 rng(99);
  std::vector<std::pair<GroupoidElement, GroupoidElement>> out;
  static const Generator gens[] = {Generator::X, Generator::Sigma, Generator::B, Generator::C,
                                   Generator::D};
  auto draw = [&](int from, int steps) {
    GroupoidElement e = identity_element(from);
    int arity = from;
    for (int s = 0; s < steps; ++s) {
      Generator g = gens[rng() % 5];
      if (g == Generator::X && arity >= 4) g = Generator::Sigma;
      int at = static_cast<int>(rng() % static_cast<uint64_t>(arity));
      e = multiply(from_generator(g, at, arity), e);
      if (g == Generator::X) ++arity;
    }
    return e;
  };
  for (int i = 0; i < count; ++i) {
    GroupoidElement h = draw(1, 6);
    GroupoidElement g = draw(h.range_roots(), 6);
    out.emplace_back(std::move(g), std::move(h));
  }
  return out;
}

void bm_multiply(benchmark::State& state) {
  auto pairs = element_pairs(64);
  size_t i = 0;
  for (auto _ : state) {
    const auto& [g, h] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(multiply(g, h));
  }
}
BENCHMARK(bm_multiply);

void bm_nucleus_form(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const char letters[] = {'s', 'b', 'c', 'd'};
  std::vector<GrigWord> words;
  for (int i = 0; i < 64; ++i) {
    std::string w;
    for (int j = 0; j < state.range(0); ++j) w += letters[rng() % 4];
    words.emplace_back(w);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(word_to_nucleus_form(words[i++ % words.size()]));
  }
}
BENCHMARK(bm_nucleus_form)->Arg(8)->Arg(32)->Arg(128);

void bm_descending_link(benchmark::State& state) {
  Vertex v = spine_vertex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(descending_link(v));
  }
}
BENCHMARK(bm_descending_link)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_link_betti(benchmark::State& state) {
  DescendingLink link = descending_link(spine_vertex(static_cast<int>(state.range(0))));
  FlagGraph g = link.graph();
  for (auto _ : state) {
    SimplicialComplex k = flag_complex(g, 2);
    benchmark::DoNotOptimize(reduced_betti(k, 1));
  }
}
BENCHMARK(bm_link_betti)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
