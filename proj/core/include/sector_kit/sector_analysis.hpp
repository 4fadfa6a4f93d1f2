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

#include <utility>
#include <vector>

#include "sector_kit/matrix_core.hpp"

namespace sector_kit {

// A matrix whose Hermitian part has been checked to be positive semidefinite.
// Only classify_accretive can build one.
class AccretiveOperator {
 public:
  const ComplexMatrix& matrix() const noexcept { return a_; }
  const ComplexMatrix& re_part() const noexcept { return re_; }
  const ComplexMatrix& im_part() const noexcept { return im_; }
  // lambda_min of re_part(); may be slightly negative within the certification tolerance.
  double coercive_margin() const noexcept { return margin_; }
  double norm() const noexcept { return norm_; }
  Index dim() const noexcept { return a_.rows(); }

 private:
  AccretiveOperator(ComplexMatrix a, ComplexMatrix re, ComplexMatrix im, double margin,
                    double norm)
      : a_(std::move(a)), re_(std::move(re)), im_(std::move(im)), margin_(margin), norm_(norm) {}

  friend AccretiveOperator classify_accretive(const ComplexMatrix& a, double tol);

  ComplexMatrix a_;
  ComplexMatrix re_;
  ComplexMatrix im_;
  double margin_;
  double norm_;
};

// Accretive iff lambda_min(Re A) >= -tol * ||A||. Throws NotAccretiveError with
// the offending eigenpair otherwise.
AccretiveOperator classify_accretive(const ComplexMatrix& a, double tol = 1e-10);

enum class SectorMethod { kAuto, kPencil, kBoundarySampling };

struct SectorEstimate {
  double alphaMin = 0.0;
  double tanAlpha = 0.0;
  std::vector<Complex> boundaryPoints;  // empty for the pencil route
  SectorMethod method = SectorMethod::kPencil;
};

// Sampled ratio |Im p| / max(Re p, 1e-14) above this is reported as NotSectorial.
inline constexpr double kNotSectorialRatio = 1e6;

// Auto picks the pencil Im(A) v = lambda Re(A) v when Re(A) is positive definite
// (margin > 1e-10 ||A||) and boundary sampling with K angles otherwise.
SectorEstimate min_semiangle(const AccretiveOperator& a, SectorMethod method = SectorMethod::kAuto,
                             int samples = 720);

// (A u_k, u_k) with u_k the top eigenvector of Re(e^{i theta_k} A), theta_k = 2 pi k / K.
std::vector<Complex> numerical_range_boundary(const ComplexMatrix& a, int samples);

struct FormRepresentation {
  ComplexMatrix realPart;  // A_R
  ComplexMatrix G;         // A_R^{-1/2} Im(A) A_R^{-1/2}
  double residual = 0.0;   // ||A_R^{1/2}(I + iG)A_R^{1/2} - A|| / ||A||
};

FormRepresentation form_representation(const AccretiveOperator& a);

struct SandwichReport {
  bool lowerOk = false;   // A_R <= (Re A^{-1})^{-1}
  bool upperOk = false;   // (Re A^{-1})^{-1} <= sec^2(alpha) A_R
  double alphaUsed = 0.0;
  double lowerMargin = 0.0;  // lambda_min of the respective differences
  double upperMargin = 0.0;
};

SandwichReport sandwich_check(const AccretiveOperator& a);

}  // namespace sector_kit
