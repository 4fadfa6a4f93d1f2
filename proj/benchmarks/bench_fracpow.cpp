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

#include <random>

#include "sector_kit/fracpow.hpp"

namespace sk = sector_kit;

namespace {

// Coercive sectorial test matrix: Re part in [0.5, 3], skew part of norm 1.
sk::AccretiveOperator make_operator(sk::Index n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  sk::ComplexMatrix g(n, n);
  for (sk::Index i = 0; i < n; ++i)
    for (sk::Index j = 0; j < n; ++j) g(i, j) = sk::Complex(nd(rng), nd(rng));
  const sk::ComplexMatrix h = sk::real_part(g);
  const sk::ComplexMatrix s = sk::real_part(sk::ComplexMatrix(sk::Complex(0, 1) * g));
  const sk::HermitianEigen e = sk::herm_eig(h);
  sk::RealVector d = sk::RealVector::LinSpaced(n, 0.5, 3.0);
  const sk::ComplexMatrix r = e.eigenvectors * d.asDiagonal() * e.eigenvectors.adjoint();
  return sk::classify_accretive(r + sk::Complex(0, 1) * s / sk::op_norm(s));
}

void BM_PowerEig(benchmark::State& st) {
  const auto b = make_operator(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sk::power_eig_oracle(b, 0.5));
}

void BM_PowerBalakrishnan(benchmark::State& st) {
  const auto b = make_operator(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sk::power_balakrishnan(b, 0.5));
}

void BM_PowerNagyFoias(benchmark::State& st) {
  const auto b = make_operator(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sk::power_nagy_foias(b, 0.5));
}

void BM_MinSemiangle(benchmark::State& st) {
  const auto b = make_operator(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(sk::min_semiangle(b, sk::SectorMethod::kBoundarySampling));
}

}  // namespace

BENCHMARK(BM_PowerEig)->Arg(6)->Arg(16)->Arg(64);
BENCHMARK(BM_PowerBalakrishnan)->Arg(6)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerNagyFoias)->Arg(6)->Arg(16)->Arg(64);
BENCHMARK(BM_MinSemiangle)->Arg(6)->Arg(16)->Unit(benchmark::kMillisecond);
