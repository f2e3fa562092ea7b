//
// aimon - rewriting systems for asymmetric Artin and Coxeter-like monoids
// Copyright (C) 2026 The aimon authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <benchmark/benchmark.h>

#include <vector>  // for vector

#include "aimon/congruence.hpp"
#include "aimon/garside.hpp"
#include "aimon/rewrite_a.hpp"
#include "aimon/rewrite_m.hpp"

using namespace aimon;

namespace {
  std::vector<word_type> sample(std::size_t rank, std::size_t length) {
    rng_type               rng(1);
    std::vector<word_type> words;
    for (int i = 0; i < 100; ++i) {
      words.push_back(random_word(rng, rank, length));
    }
    return words;
  }

  template <typename F>
  void reduce_batch(benchmark::State& state, F reduce) {
    auto words = sample(6, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      for (auto const& w : words) {
        benchmark::DoNotOptimize(reduce(w));
      }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
    state.SetComplexityN(state.range(0));
  }

  void BM_a_reduce(benchmark::State& state) {
    reduce_batch(state, [](word_type const& w) { return a_reduce(w); });
  }

  void BM_m_reduce(benchmark::State& state) {
    reduce_batch(state, [](word_type const& w) { return m_reduce(w); });
  }

  void BM_m_reduce_nabla(benchmark::State& state) {
    word_type w = nabla(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(m_reduce(w));
    }
  }
}  // namespace

BENCHMARK(BM_a_reduce)->RangeMultiplier(2)->Range(25, 800)->Complexity();
BENCHMARK(BM_m_reduce)->RangeMultiplier(2)->Range(25, 800)->Complexity();
BENCHMARK(BM_m_reduce_nabla)->DenseRange(2, 10, 2);
BENCHMARK_MAIN();
