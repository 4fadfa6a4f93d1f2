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

#include "sector_kit/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sector_kit/parallel.hpp"

namespace sector_kit {

namespace {

constexpr Complex kI(0.0, 1.0);

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::kSpecInvalid, what); }

ComplexMatrix odd_power(const ComplexMatrix& z, int n) {
  const ComplexMatrix z2 = z * z;
  ComplexMatrix out = z;
  for (int i = 0; i < n; ++i) out = out * z2;
  return out;
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::kGhbvths: return "ghbvths";
    case FamilyKind::kOddPowers: return "odd-powers";
    case FamilyKind::kFlow: return "flow";
    case FamilyKind::kSectorialized: return "sectorialized";
    case FamilyKind::kXAlpha: return "x-alpha";
  }
  return "unknown";
}

std::string_view to_string(WeightProfile profile) noexcept {
  return profile == WeightProfile::kHarmonic ? "harmonic" : "geometric";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (FamilyKind k : {FamilyKind::kGhbvths, FamilyKind::kOddPowers, FamilyKind::kFlow,
                       FamilyKind::kSectorialized, FamilyKind::kXAlpha}) {
    if (to_string(k) == name) return k;
  }
  invalid("unknown family kind '" + std::string(name) + "'");
}

WeightProfile parse_weight_profile(std::string_view name) {
  if (name == "harmonic") return WeightProfile::kHarmonic;
  if (name == "geometric") return WeightProfile::kGeometric;
  invalid("unknown weight profile '" + std::string(name) + "'");
}

double SlopeRule::operator()(int k) const { return scale * std::pow(static_cast<double>(k), exponent); }

void FamilySpec::validate() const {
  if (dim < 4 || dim % 2 != 0) invalid("dim must be even and at least 4");
  if (!(slope.scale > 0.0) || !std::isfinite(slope.exponent)) invalid("slope rule out of range");
  switch (kind) {
    case FamilyKind::kGhbvths:
      break;
    case FamilyKind::kOddPowers:
      if (!n || *n < 0) invalid("odd-powers needs n >= 0");
      break;
    case FamilyKind::kFlow:
      if (!t || !(*t >= 0.0)) invalid("flow needs t >= 0");
      break;
    case FamilyKind::kSectorialized:
      if (!gamma || !(*gamma > 0.0 && *gamma < 1.0)) invalid("sectorialized needs gamma in (0, 1)");
      if (n && *n < 0) invalid("n must be >= 0");
      if (t && !(*t >= 0.0)) invalid("t must be >= 0");
      if (n && t) invalid("sectorialized takes either n or t, not both");
      break;
    case FamilyKind::kXAlpha:
      if (!alpha || !(*alpha > 0.0 && *alpha < std::numbers::pi / 2)) {
        invalid("x-alpha needs alpha in (0, pi/2)");
      }
      if (xi && !(std::isfinite(xi->real()) && std::isfinite(xi->imag()))) invalid("xi not finite");
      break;
  }
}

QMPair canonical_QM(Index dim, WeightProfile profile, const SlopeRule& slope,
                    std::optional<Complex> xi) {
  if (dim < 4 || dim % 2 != 0) invalid("dim must be even and at least 4");
  QMPair out{ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim)};
  for (Index k = 0; k < dim; ++k) {
    const double kk = static_cast<double>(k + 1);
    out.Q(k, k) = profile == WeightProfile::kHarmonic ? 1.0 / kk : std::ldexp(1.0, -(k + 1));
  }
  double rot = 0.0;
  if (xi) rot = std::atan(xi->imag() / (1.0 + xi->real() * xi->real()));
  const double cr = std::cos(rot), sr = std::sin(rot);
  for (Index k = 0; k < dim / 2; ++k) {
    const double c = slope(static_cast<int>(k + 1));
    const double nrm = std::sqrt(1.0 + c * c);
    const double a = (cr - sr * c) / nrm;
    const double b = (sr + cr * c) / nrm;
    const Index i = 2 * k;
    out.PM(i, i) = a * a;
    out.PM(i, i + 1) = a * b;
    out.PM(i + 1, i) = a * b;
    out.PM(i + 1, i + 1) = b * b;
  }
  return out;
}

Contraction z0_from(const ComplexMatrix& q, const ComplexMatrix& pm) {
  const ComplexMatrix root = psd_sqrt(real_part(q * pm * q));
  return Contraction::make(kI * solve(q, root));
}

ComplexMatrix t0_from(const ComplexMatrix& q, const ComplexMatrix& pm) {
  return q + kI * psd_sqrt(real_part(q * pm * q));
}

FamilyMember family_member(const FamilySpec& spec) {
  spec.validate();
  std::optional<Complex> xi;
  if (spec.kind == FamilyKind::kXAlpha) xi = spec.xi.value_or(Complex(0.0, 0.0));
  QMPair qm = canonical_QM(spec.dim, spec.profile, spec.slope, xi);
  const Contraction z0 = z0_from(qm.Q, qm.PM);

  ComplexMatrix zk;
  switch (spec.kind) {
    case FamilyKind::kGhbvths:
      zk = z0.matrix();
      break;
    case FamilyKind::kOddPowers:
      zk = odd_power(z0.matrix(), *spec.n);
      break;
    case FamilyKind::kFlow:
      zk = z_flow(z0, *spec.t).matrix();
      break;
    case FamilyKind::kSectorialized: {
      const Contraction zg = z_gamma(z0, *spec.gamma);
      zk = spec.t ? z_flow(zg, *spec.t).matrix() : odd_power(zg.matrix(), spec.n.value_or(0));
      break;
    }
    case FamilyKind::kXAlpha:
      zk = std::tan(*spec.alpha / 2.0) * z0.matrix();
      break;
  }

  const ComplexMatrix t = qm.Q * (identity(spec.dim) + zk);
  ComplexMatrix b = inverse(t * t);
  KatoDiagnostics diag = kato_indicators(classify_accretive(b, 1e-9));
  return FamilyMember{std::move(b), std::move(diag), std::move(qm.Q), std::move(qm.PM),
                      z0.matrix(), std::move(zk)};
}

TruncationReport divergence_sweep(const std::vector<FamilyKind>& kinds,
                                  const std::vector<Index>& dims, const FamilySpec& base) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 4 || dims[i] % 2 != 0) invalid("every dim must be even and at least 4");
    if (i > 0 && dims[i] <= dims[i - 1]) invalid("dims must be strictly ascending");
  }
  std::vector<FamilyKind> order = kinds;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  TruncationReport rep;
  for (FamilyKind k : order) {
    for (Index d : dims) {
      rep.rows.emplace_back();
      rep.rows.back().kind = k;
      rep.rows.back().dim = d;
    }
  }

  parallel_for(rep.rows.size(), [&](std::size_t i) {
    TruncationRow& row = rep.rows[i];
    FamilySpec spec = base;
    spec.kind = row.kind;
    spec.dim = row.dim;
    try {
      const FamilyMember m = family_member(spec);
      const double z0 = op_norm(m.Z0);
      row.z0NormSq = z0 * z0;
      if (row.kind == FamilyKind::kXAlpha) {
        const double a = std::tan(*spec.alpha / 2.0);
        const double ar = a * a * row.z0NormSq;
        row.contrastBound = (1.0 + ar) / (1.0 - ar);
      }
      row.diagnostics = m.diagnostics;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  for (FamilyKind k : order) {
    KindSummary s;
    s.kind = k;
    const TruncationRow* prev = nullptr;
    for (const TruncationRow& row : rep.rows) {
      if (row.kind != k) continue;
      if (!row.diagnostics) {
        s.normZNondecreasing = false;
        s.ratioGStrictlyIncreasing = false;
        if (k == FamilyKind::kXAlpha) s.contrastBoundHolds = false;
        prev = nullptr;
        continue;
      }
      if (k == FamilyKind::kXAlpha) {
        const bool ok = row.diagnostics->ratioG <= *row.contrastBound * (1.0 + 1e-8);
        s.contrastBoundHolds = s.contrastBoundHolds.value_or(true) && ok;
      }
      if (prev) {
        const KatoDiagnostics& a = *prev->diagnostics;
        const KatoDiagnostics& b = *row.diagnostics;
        if (b.normZ < a.normZ) s.normZNondecreasing = false;
        // +inf rows never count as an increase.
        if (!(b.ratioG > a.ratioG) || std::isinf(b.ratioG)) s.ratioGStrictlyIncreasing = false;
      } else if (std::isinf(row.diagnostics->ratioG)) {
        s.ratioGStrictlyIncreasing = false;
      }
      prev = &row;
    }
    rep.summaries.push_back(s);
  }
  return rep;
}

}  // namespace sector_kit
