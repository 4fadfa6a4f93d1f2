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

#include "sector_kit/matrix_core.hpp"
#include "sector_kit/sector_analysis.hpp"

namespace sector_kit {

// A matrix with ||Z|| <= 1 + tolerance, its defect operators and its smallest
// C_H class angle (empty when Z lies in no class).
class Contraction {
 public:
  // Throws NotContraction when ||Z|| exceeds 1 + tol.
  static Contraction make(const ComplexMatrix& z, double tol = 1e-10);

  const ComplexMatrix& matrix() const noexcept { return z_; }
  double norm() const noexcept { return norm_; }
  const ComplexMatrix& defect() const noexcept { return defect_; }            // (I - Z*Z)^{1/2}
  const ComplexMatrix& defect_star() const noexcept { return defectStar_; }   // (I - ZZ*)^{1/2}
  const std::optional<double>& class_angle() const noexcept { return classAngle_; }
  Index dim() const noexcept { return z_.rows(); }

 private:
  Contraction() = default;

  ComplexMatrix z_;
  double norm_ = 0.0;
  ComplexMatrix defect_;
  ComplexMatrix defectStar_;
  std::optional<double> classAngle_;
};

// Z = (I - A)(I + A)^{-1}. SingularShift when cond(I + A) > 1e14.
Contraction to_contraction(const AccretiveOperator& a);

// A = -I + 2(I + Z)^{-1}. NotAnOperator when I + Z is singular.
AccretiveOperator to_accretive(const Contraction& z);

struct ClassMembership {
  bool member = false;
  double excess = 0.0;     // max of the two norms minus 1 (alpha > 0), skew norm at alpha = 0
  ComplexVector witness;   // unit vector attaining the violation; empty when member
};

// ||Z sin(alpha) +- i cos(alpha) I|| <= 1 + tol. At alpha = 0 membership means
// Z is a Hermitian contraction (the norm test degenerates there).
ClassMembership class_membership(const Contraction& z, double alpha, double tol = 1e-10);

// lambda_min over both signs of tan(alpha)(I - Z*Z) +- i(Z - Z*).
double class_form_margin(const Contraction& z, double alpha);

bool class_membership_form(const Contraction& z, double alpha, double tol = 1e-10);

// The three equivalent membership tests side by side: the norm definition, the
// quadratic-form restatement and the sector angle of S = (I + Z)(I - Z*).
struct ClassEquivalence {
  double normMargin = 0.0;    // 1 - max norm
  double formMargin = 0.0;    // lambda_min of the form
  double angleMargin = 0.0;   // alpha - min_semiangle(S)
  bool byNorm = false;        // normMargin >= -1e-10
  bool byForm = false;        // formMargin >= -1e-10
  bool bySector = false;      // angleMargin >= -1e-8
  bool agree() const { return byNorm == byForm && byForm == bySector; }
  // Some margin sits inside its tolerance band, so a split verdict is not meaningful.
  bool in_band() const;
};

ClassEquivalence class_equivalence(const Contraction& z, double alpha);

// Bisection to 1e-8 rad; empty when Z fails membership at pi/2 - 1e-6.
std::optional<double> min_class_angle(const ComplexMatrix& z, double tol = 1e-10);
std::optional<double> min_class_angle(const Contraction& z, double tol = 1e-10);

// Z exp(-t (I - Z^2)), t >= 0.
Contraction z_flow(const Contraction& z, double t);

// ((I+Z)^g - (I-Z)^g)((I+Z)^g + (I-Z)^g)^{-1}, g in (0, 1).
Contraction z_gamma(const Contraction& z, double gamma);

}  // namespace sector_kit
