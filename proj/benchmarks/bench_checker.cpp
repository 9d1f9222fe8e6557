/* Copyright 2026 The rslcheck Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "rsl/corpus.hpp"
#include "rsl/eval.hpp"
#include "rsl/ltlsem.hpp"
#include "rsl/lts.hpp"
#include "rsl/parser.hpp"
#include "rsl/verify.hpp"
#include "rsl/witness.hpp"

namespace {

const rsl::LoadedEntry& entry(int index) {
  static const std::vector<rsl::LoadedEntry> all = [] {
    std::vector<rsl::LoadedEntry> out;
    for (const auto& e : rsl::load_corpus(RSL_BENCH_CORPUS_DIR)) out.push_back(rsl::load_entry(e));
    return out;
  }();
  return all.at(static_cast<std::size_t>(index));
}

const char* kProps[] = {"mutex", "nonstarve1", "nonstarve2"};

void BM_Parse(benchmark::State& state) {
  std::string text = rsl::read_text_file(entry(0).entry.program);
  for (auto _ : state) benchmark::DoNotOptimize(rsl::parse_program(text));
}
BENCHMARK(BM_Parse);

void BM_Verify(benchmark::State& state) {
  const auto& e = entry(static_cast<int>(state.range(0)));
  rsl::FormulaPtr f = e.properties.find(kProps[state.range(1)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rsl::verify(e.source.program, f, e.properties.fair, e.source.data));
  }
  state.SetLabel(e.entry.name + "/" + kProps[state.range(1)]);
}
BENCHMARK(BM_Verify)->ArgsProduct({{0, 1, 2}, {0, 1, 2}});

void BM_Generate(benchmark::State& state) {
  const auto& e = entry(static_cast<int>(state.range(0)));
  rsl::FormulaPtr f = e.properties.find(kProps[state.range(1)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rsl::generate(e.source.program, f, e.properties.fair, e.source.data));
  }
  state.SetLabel(e.entry.name + "/" + kProps[state.range(1)]);
}
BENCHMARK(BM_Generate)->ArgsProduct({{0, 1, 2}, {0, 1, 2}});

void BM_RunTrace(benchmark::State& state) {
  const auto& e = entry(0);
  std::vector<std::string> events = e.source.data.event_constructors();
  rsl::TraceOptions opts;
  opts.cycle = true;
  opts.max_states = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rsl::run_trace(e.source.program, events, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunTrace)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_EnumerateTraces(benchmark::State& state) {
  const auto& e = entry(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsl::enumerate_traces(
        e.source.program, e.source.data, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateTraces)->DenseRange(1, 5);

void BM_ExtractLts(benchmark::State& state) {
  const auto& e = entry(0);
  for (auto _ : state) benchmark::DoNotOptimize(rsl::extract_lts(e.source.program, e.source.data));
}
BENCHMARK(BM_ExtractLts);

}  // namespace

BENCHMARK_MAIN();
