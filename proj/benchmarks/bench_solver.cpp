#include <benchmark/benchmark.h>

#include <string>

#include "dlp/dlp.hpp"

using namespace dlp;

namespace {

// n independent copies of an even loop through a dl-atom and a negated one.
std::string chain_program(int n) {
  std::string s = "#ontology\nc [= d.\n#rules\n";
  for (int i = 0; i < n; ++i) {
    std::string a = "a" + std::to_string(i);
    s += "p(" + a + ") :- DL[c + p; d](" + a + ").\n";
    s += "q(" + a + ") :- not DL[c + p; d](" + a + ").\n";
  }
  return s;
}

// n atoms on a positive cycle, each with an escape through negation.
std::string cycle_program(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    s += "p" + std::to_string(i) + " :- p" + std::to_string((i + 1) % n) + ".\n";
    s += "p" + std::to_string(i) + " :- not q" + std::to_string(i) + ".\n";
    s += "q" + std::to_string(i) + " :- not p" + std::to_string(i) + ".\n";
  }
  return s;
}

void BM_SolveStrong(benchmark::State& state) {
  DlProgram k = parse_program(chain_program(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(answer_sets(k, Semantics::Strong));
}
BENCHMARK(BM_SolveStrong)->Arg(2)->Arg(4)->Arg(6);

void BM_OracleStrong(benchmark::State& state) {
  DlProgram k = parse_program(chain_program(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_answer_sets(k, Semantics::Strong));
}
BENCHMARK(BM_OracleStrong)->Arg(2)->Arg(4)->Arg(6);

void BM_SolveCanonical(benchmark::State& state) {
  DlProgram k = parse_program(chain_program(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(answer_sets(k, Semantics::Canonical));
}
BENCHMARK(BM_SolveCanonical)->Arg(2)->Arg(4);

void BM_SolveWeakCycle(benchmark::State& state) {
  DlProgram k = parse_program(cycle_program(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(answer_sets(k, Semantics::Weak));
}
BENCHMARK(BM_SolveWeakCycle)->Arg(4)->Arg(8)->Arg(12);

void BM_Entails(benchmark::State& state) {
  DlProgram k = parse_program("#ontology\nc [= some r . d.\nd [= all r . c.\nc(a).\n#rules\n");
  DlQuery q = DlQuery::concept_query(Concept::exists("r", Concept::atomic("d")), "a");
  for (auto _ : state) benchmark::DoNotOptimize(entails(k.ontology(), q));
}
BENCHMARK(BM_Entails);

}  // namespace
BENCHMARK_MAIN();
