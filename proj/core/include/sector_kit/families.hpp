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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sector_kit/cayley.hpp"
#include "sector_kit/kato_core.hpp"

namespace sector_kit {

enum class FamilyKind { kGhbvths, kOddPowers, kFlow, kSectorialized, kXAlpha };
enum class WeightProfile { kHarmonic, kGeometric };

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(WeightProfile profile) noexcept;
// Throws SpecInvalid on unknown names.
FamilyKind parse_family_kind(std::string_view name);
WeightProfile parse_weight_profile(std::string_view name);

// c_k = scale * k^exponent.
struct SlopeRule {
  double scale = 1.0;
  double exponent = 1.0;
  double operator()(int k) const;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kGhbvths;
  Index dim = 8;
  WeightProfile profile = WeightProfile::kHarmonic;
  SlopeRule slope;
  std::optional<double> gamma;   // sectorialized
  std::optional<double> t;       // flow, sectorialized (S_gamma(t))
  std::optional<int> n;          // odd-powers (required), sectorialized (default 0)
  std::optional<Complex> xi;     // x-alpha (default 0)
  std::optional<double> alpha;   // x-alpha

  // SpecInvalid unless dim is even and >= 4 and the kind's parameters are present and in range.
  void validate() const;
};

struct QMPair {
  ComplexMatrix Q;   // diag(q_1, ..., q_dim)
  ComplexMatrix PM;  // orthogonal projector onto M
};

// M is spanned by (e_{2k-1} + c_k e_{2k}) / sqrt(1 + c_k^2); with xi given, each of
// these vectors is rotated in its own plane by atan(Im xi / (1 + (Re xi)^2)).
QMPair canonical_QM(Index dim, WeightProfile profile, const SlopeRule& slope = {},
                    std::optional<Complex> xi = std::nullopt);

// i Q^{-1} (Q P_M Q)^{1/2}.
Contraction z0_from(const ComplexMatrix& q, const ComplexMatrix& pm);

// Q + i (Q P_M Q)^{1/2}.
ComplexMatrix t0_from(const ComplexMatrix& q, const ComplexMatrix& pm);

struct FamilyMember {
  ComplexMatrix B;
  KatoDiagnostics diagnostics;
  ComplexMatrix Q;
  ComplexMatrix PM;
  ComplexMatrix Z0;     // the generating contraction of the (possibly rotated) M
  ComplexMatrix Zkind;  // the kind's contraction; B = (Q(I+Zkind) Q(I+Zkind))^{-1}
};

FamilyMember family_member(const FamilySpec& spec);

struct TruncationRow {
  FamilyKind kind = FamilyKind::kGhbvths;
  Index dim = 0;
  std::optional<KatoDiagnostics> diagnostics;  // empty when the row failed
  std::string error;
  double z0NormSq = 0.0;                 // r = ||Z0||^2
  std::optional<double> contrastBound;   // x-alpha rows: (1 + a^2 r)/(1 - a^2 r), a = tan(alpha/2)
};

struct KindSummary {
  FamilyKind kind = FamilyKind::kGhbvths;
  bool normZNondecreasing = true;
  bool ratioGStrictlyIncreasing = true;
  std::optional<bool> contrastBoundHolds;  // x-alpha only
};

struct TruncationReport {
  std::vector<TruncationRow> rows;  // sorted by (kind, dim)
  std::vector<KindSummary> summaries;
};

// One row per (kind, dim); base supplies every parameter except kind and dim.
// Rows run in parallel; a failed row records its error and the sweep continues.
TruncationReport divergence_sweep(const std::vector<FamilyKind>& kinds,
                                  const std::vector<Index>& dims, const FamilySpec& base);

}  // namespace sector_kit
