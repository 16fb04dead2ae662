// Copyright 2026 The artin-parabolic Authors
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

#include <benchmark/benchmark.h>

#include <vector>

#include "artin/artin_word.hpp"
#include "artin/catalog.hpp"
#include "artin/coxeter.hpp"
#include "artin/normal_forms.hpp"
#include "artin/random.hpp"
#include "artin/retraction.hpp"

namespace {

using namespace artin;

CoxeterWord random_coxeter_word(std::size_t rank, std::size_t len,
                                std::uint64_t seed) {
  Rng rng(seed);
  CoxeterWord w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back(static_cast<Generator>(rng.below(rank)));
  }
  return w;
}

ArtinWord random_artin_word(std::size_t rank, std::size_t len,
                            std::uint64_t seed) {
  Rng rng(seed);
  ArtinWord w;
  for (std::size_t i = 0; i < len; ++i) {
    w.push_back({static_cast<Generator>(rng.below(rank)),
                 static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
  }
  return w;
}

// Cold cache: a new kernel per iteration.
void BM_ReduceColdA3(benchmark::State& state) {
  const Presentation p = catalog::a3();
  const CoxeterWord w = random_coxeter_word(3, state.range(0), 7);
  for (auto _ : state) {
    CoxeterKernel kernel(p);
    benchmark::DoNotOptimize(kernel.reduce(w));
  }
}
BENCHMARK(BM_ReduceColdA3)->Arg(8)->Arg(32)->Arg(128);

void BM_ReduceColdTriangle(benchmark::State& state) {
  const Presentation p = catalog::triangle(3);
  const CoxeterWord w = random_coxeter_word(3, state.range(0), 11);
  for (auto _ : state) {
    CoxeterKernel kernel(p);
    benchmark::DoNotOptimize(kernel.reduce(w));
  }
}
BENCHMARK(BM_ReduceColdTriangle)->Arg(8)->Arg(16)->Arg(24);

void BM_ReduceWarmTriangle(benchmark::State& state) {
  const CoxeterKernel kernel(catalog::triangle(3));
  const CoxeterWord w = random_coxeter_word(3, state.range(0), 11);
  for (auto _ : state) benchmark::DoNotOptimize(kernel.reduce(w));
}
BENCHMARK(BM_ReduceWarmTriangle)->Arg(8)->Arg(16)->Arg(24);

void BM_PiHatRaagSquare(benchmark::State& state) {
  const Presentation p = catalog::raag_square();
  const CoxeterKernel kernel(p);
  const GeneratorSubset x = p.parse_subset("a,b");
  const ArtinWord w = random_artin_word(4, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pi_hat(kernel, x, w));
}
BENCHMARK(BM_PiHatRaagSquare)->Arg(10)->Arg(20)->Arg(40);

void BM_PiHatTriangle(benchmark::State& state) {
  const Presentation p = catalog::triangle(3);
  const CoxeterKernel kernel(p);
  const GeneratorSubset x = p.parse_subset("a,b");
  const ArtinWord w = random_artin_word(3, state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(pi_hat(kernel, x, w));
}
BENCHMARK(BM_PiHatTriangle)->Arg(10)->Arg(20);

void BM_DihedralNormalForm(benchmark::State& state) {
  const Presentation p = catalog::dihedral(static_cast<std::uint32_t>(state.range(0)));
  const ArtinWord w = random_artin_word(2, state.range(1), 9);
  for (auto _ : state) benchmark::DoNotOptimize(dihedral_normal_form(p, w));
}
BENCHMARK(BM_DihedralNormalForm)
    ->Args({3, 32})
    ->Args({3, 256})
    ->Args({7, 32})
    ->Args({7, 256});

void BM_RaagNormalForm(benchmark::State& state) {
  const Presentation p = catalog::raag_square();
  const ArtinWord w = random_artin_word(4, state.range(0), 13);
  for (auto _ : state) benchmark::DoNotOptimize(raag_normal_form(p, w));
}
BENCHMARK(BM_RaagNormalForm)->Arg(32)->Arg(256);

void BM_ConjugateIntoParabolic(benchmark::State& state) {
  const Presentation p = catalog::a3();
  const CoxeterKernel kernel(p);
  InstanceParams params;
  params.x_size = 2;
  params.y_size = 1;
  params.pad_len = 4;
  params.w_search_len = 6;
  const Instance inst = generate_instance(kernel, 17, params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        conjugate_into_parabolic(kernel, inst.x, inst.y, inst.alpha));
  }
}
BENCHMARK(BM_ConjugateIntoParabolic);

}  // namespace

BENCHMARK_MAIN();
