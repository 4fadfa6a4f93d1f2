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

#include "sector_kit/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "sector_kit/fracpow.hpp"

namespace sector_kit {

namespace {

// Square root of a Hermitian matrix that is PSD up to rounding; negative
// eigenvalues are clipped without the relative test psd_sqrt applies, because
// ||Z|| may exceed 1 by the contraction tolerance.
ComplexMatrix clipped_sqrt(const ComplexMatrix& h) {
  const HermitianEigen e = herm_eig(h);
  RealVector r = e.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return e.eigenvectors * r.asDiagonal() * e.eigenvectors.adjoint();
}

constexpr Complex kI(0.0, 1.0);

// Top right singular vector and value.
std::pair<double, ComplexVector> top_singular(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinV);
  return {svd.singularValues()(0), svd.matrixV().col(0)};
}

bool member_quick(const ComplexMatrix& z, double alpha, double tol) {
  const Index n = z.rows();
  if (alpha == 0.0) return op_norm(z - z.adjoint()) <= tol && op_norm(z) <= 1.0 + tol;
  const ComplexMatrix zs = std::sin(alpha) * z;
  const ComplexMatrix shift = kI * std::cos(alpha) * identity(n);
  return op_norm(zs + shift) <= 1.0 + tol && op_norm(zs - shift) <= 1.0 + tol;
}

}  // namespace

Contraction Contraction::make(const ComplexMatrix& z, double tol) {
  require_square(z, "Z");
  require_finite(z, "Z");
  Contraction c;
  c.z_ = z;
  c.norm_ = op_norm(z);
  if (c.norm_ > 1.0 + tol) {
    throw Error(ErrorKind::kNotContraction, "||Z|| = " + std::to_string(c.norm_));
  }
  const ComplexMatrix id = identity(z.rows());
  c.defect_ = clipped_sqrt(id - z.adjoint() * z);
  c.defectStar_ = clipped_sqrt(id - z * z.adjoint());
  c.classAngle_ = min_class_angle(z);
  return c;
}

Contraction to_contraction(const AccretiveOperator& a) {
  const Index n = a.dim();
  const ComplexMatrix id = identity(n);
  const ComplexMatrix shifted = id + a.matrix();
  if (n > 0) {
    const double smin = min_singular_value(shifted);
    if (!(smin > 0.0) || op_norm(shifted) / smin > 1e14) {
      throw Error(ErrorKind::kSingularShift, "I + A is numerically singular");
    }
  }
  // (I - A) and (I + A)^{-1} commute.
  return Contraction::make(solve(shifted, id - a.matrix()));
}

AccretiveOperator to_accretive(const Contraction& z) {
  const Index n = z.dim();
  const ComplexMatrix id = identity(n);
  const ComplexMatrix shifted = id + z.matrix();
  if (n > 0 && !(min_singular_value(shifted) > 1e-12 * op_norm(shifted))) {
    throw Error(ErrorKind::kNotAnOperator, "ker(I + Z) is nontrivial");
  }
  return classify_accretive(-id + 2.0 * inverse(shifted), 1e-9);
}

ClassMembership class_membership(const Contraction& z, double alpha, double tol) {
  if (!(alpha >= 0.0 && alpha < std::numbers::pi / 2)) {
    throw Error(ErrorKind::kDomain, "alpha must lie in [0, pi/2)");
  }
  ClassMembership out;
  const Index n = z.dim();
  if (n == 0) {
    out.member = true;
    return out;
  }
  if (alpha == 0.0) {
    auto [skew, v] = top_singular(z.matrix() - z.matrix().adjoint());
    out.excess = skew;
    out.member = skew <= tol && z.norm() <= 1.0 + tol;
    if (!out.member) out.witness = v;
    return out;
  }
  const ComplexMatrix zs = std::sin(alpha) * z.matrix();
  const ComplexMatrix shift = kI * std::cos(alpha) * identity(n);
  auto [np, vp] = top_singular(zs + shift);
  auto [nm, vm] = top_singular(zs - shift);
  out.excess = std::max(np, nm) - 1.0;
  out.member = out.excess <= tol;
  if (!out.member) out.witness = np >= nm ? vp : vm;
  return out;
}

double class_form_margin(const Contraction& z, double alpha) {
  if (!(alpha >= 0.0 && alpha < std::numbers::pi / 2)) {
    throw Error(ErrorKind::kDomain, "alpha must lie in [0, pi/2)");
  }
  const Index n = z.dim();
  if (n == 0) return 0.0;
  const ComplexMatrix& m = z.matrix();
  const ComplexMatrix defect = std::tan(alpha) * (identity(n) - m.adjoint() * m);
  const ComplexMatrix skew = kI * (m - m.adjoint());
  return std::min(lambda_min(real_part(defect + skew)), lambda_min(real_part(defect - skew)));
}

bool class_membership_form(const Contraction& z, double alpha, double tol) {
  return class_form_margin(z, alpha) >= -tol;
}

bool ClassEquivalence::in_band() const {
  return std::abs(normMargin) <= 1e-10 || std::abs(formMargin) <= 1e-10 ||
         std::abs(angleMargin) <= 1e-8;
}

ClassEquivalence class_equivalence(const Contraction& z, double alpha) {
  ClassEquivalence e;
  e.normMargin = -class_membership(z, alpha, 0.0).excess;
  e.formMargin = class_form_margin(z, alpha);
  const Index n = z.dim();
  const ComplexMatrix id = identity(n);
  const ComplexMatrix s = (id + z.matrix()) * (id - z.matrix().adjoint());
  e.angleMargin = alpha - min_semiangle(classify_accretive(s)).alphaMin;
  e.byNorm = e.normMargin >= -1e-10;
  e.byForm = e.formMargin >= -1e-10;
  e.bySector = e.angleMargin >= -1e-8;
  return e;
}

std::optional<double> min_class_angle(const ComplexMatrix& z, double tol) {
  if (z.rows() == 0 || member_quick(z, 0.0, tol)) return 0.0;
  double hi = std::numbers::pi / 2 - 1e-6;
  if (!member_quick(z, hi, tol)) return std::nullopt;
  double lo = 0.0;
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (member_quick(z, mid, tol)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

std::optional<double> min_class_angle(const Contraction& z, double tol) {
  return min_class_angle(z.matrix(), tol);
}

Contraction z_flow(const Contraction& z, double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::kDomain, "flow time must be nonnegative");
  const ComplexMatrix& m = z.matrix();
  const Index n = z.dim();
  return Contraction::make(m * mat_exp(-t * (identity(n) - m * m)), 1e-9);
}

Contraction z_gamma(const Contraction& z, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw Error(ErrorKind::kDomain, "gamma must lie in (0, 1)");
  const Index n = z.dim();
  if (n == 0) return z;
  const ComplexMatrix id = identity(n);
  const ComplexMatrix plus = id + z.matrix();
  const ComplexMatrix minus = id - z.matrix();
  for (const ComplexMatrix* m : {&plus, &minus}) {
    if (!(min_singular_value(*m) > 1e-12 * op_norm(*m))) {
      throw Error(ErrorKind::kSingularShift, "I +- Z is numerically singular");
    }
  }
  auto power = [gamma](const ComplexMatrix& m) {
    try {
      return power_eig_oracle(m, gamma);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kIllConditioned) throw;
      return power_balakrishnan(m, gamma);
    }
  };
  const ComplexMatrix p = power(plus);
  const ComplexMatrix q = power(minus);
  // p and q commute, so the right factor may be applied on the left.
  return Contraction::make(solve(p + q, p - q), 1e-9);
}

}  // namespace sector_kit
