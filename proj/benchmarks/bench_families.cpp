/*
 * Copyright 2026 The sector-kit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "sector_kit/families.hpp"

namespace sk = sector_kit;

namespace {

void BM_FamilyRow(benchmark::State& st, sk::FamilyKind kind) {
  sk::FamilySpec s;
  s.kind = kind;
  s.dim = st.range(0);
  s.n = kind == sk::FamilyKind::kOddPowers ? std::optional<int>(1) : std::nullopt;
  if (kind == sk::FamilyKind::kFlow) s.t = 1.0;
  if (kind == sk::FamilyKind::kXAlpha) s.alpha = 1.0471975511965976;
  for (auto _ : st) benchmark::DoNotOptimize(sk::family_member(s));
}

void BM_Sweep(benchmark::State& st) {
  sk::FamilySpec base;
  base.n = 1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        sk::divergence_sweep({sk::FamilyKind::kGhbvths, sk::FamilyKind::kOddPowers}, {8, 16, 32, 64}, base));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_FamilyRow, ghbvths, sk::FamilyKind::kGhbvths)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FamilyRow, odd_powers, sk::FamilyKind::kOddPowers)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FamilyRow, flow, sk::FamilyKind::kFlow)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FamilyRow, x_alpha, sk::FamilyKind::kXAlpha)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);
