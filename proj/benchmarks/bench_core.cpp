#include <benchmark/benchmark.h>

#include <string>

#include "tabassign/retrieval.hpp"
#include "tabassign/vector_space.hpp"

namespace {

using namespace tabassign;

TaskGraph chain_graph(int n) {
  std::string text;
  for (int v = 1; v <= n; ++v)
    text += "task " + std::to_string(v) + " " + std::to_string(v) + "\n";
  for (int v = 1; v < n; ++v)
    text += "edge " + std::to_string(v) + " " + std::to_string(v + 1) + " 1\n";
  return TaskGraph::parse(text);
}

ProcessorSystem uniform_system(int m) {
  std::map<int, double> rates;
  for (int p = 1; p <= m; ++p) rates[p] = 2.0;
  return ProcessorSystem::consistent(std::move(rates));
}

void BM_EnumerateTabloids(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition shape({n - n / 2, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tabloids(shape));
}
BENCHMARK(BM_EnumerateTabloids)->Arg(6)->Arg(8)->Arg(10);

void BM_EvaluateChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graph = chain_graph(n);
  const auto system = uniform_system(n);
  const auto tabloid = enumerate_standard_tabloids(Partition({n})).front();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(tabloid, graph, system));
}
BENCHMARK(BM_EvaluateChain)->Arg(4)->Arg(8);

void BM_OptimizeSquareShape(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graph = chain_graph(n);
  const auto system = uniform_system(n);
  const Partition shape({n / 2, n / 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize(graph, system, shape, Metric::turnaround));
}
BENCHMARK(BM_OptimizeSquareShape)->Arg(4)->Arg(6)->Arg(8);

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(n));
}
BENCHMARK(BM_CharacterTable)->Arg(4)->Arg(5)->Arg(6);

void BM_RankCorpus(benchmark::State& state) {
  const auto corpus = Corpus::parse(
      "#shape 2,2\n#kind tabloid\n"
      "Y1,3,2,4 Y1,4,2,3 Y1,4,2,3 Y3,4,1,2 Y2,3,1,4\n"
      "Y1,3,2,4 Y1,2,3,4 Y1,3,2,4\n"
      "Y2,4,1,3 Y1,2,3,4 Y1,2,3,4 Y2,4,1,3\n");
  const Document query{"Y1,3,2,4", "Y1,2,3,4"};
  for (auto _ : state) benchmark::DoNotOptimize(rank(query, corpus));
}
BENCHMARK(BM_RankCorpus);

}  // namespace

BENCHMARK_MAIN();
