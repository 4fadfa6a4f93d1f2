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

#include "sector_kit/matrix_core.hpp"
#include "sector_kit/sector_analysis.hpp"

namespace sector_kit {

// Trapezoid rule on the log axis t = e^s.
struct QuadratureParams {
  double halfWidth = 40.0;  // L
  double step = 0.05;       // h
  int maxRefine = 6;
  double tol = 1e-9;
};

// V diag(lambda^gamma) V^{-1}, principal branch. IllConditioned when cond(V) > 1e8,
// BranchCut when an eigenvalue is on (-inf, 0].
ComplexMatrix power_eig_oracle(const AccretiveOperator& b, double gamma);
ComplexMatrix power_eig_oracle(const ComplexMatrix& b, double gamma);

// (sin(gamma pi)/pi) int_0^inf t^{gamma-1} B (B + tI)^{-1} dt.
ComplexMatrix power_balakrishnan(const AccretiveOperator& b, double gamma,
                                 const QuadratureParams& q = {});
ComplexMatrix power_balakrishnan(const ComplexMatrix& b, double gamma,
                                 const QuadratureParams& q = {});

// (I - T)^gamma ((I + T)^gamma)^{-1}, T = (I - B)(I + B)^{-1}.
ComplexMatrix power_nagy_foias(const AccretiveOperator& b, double gamma);

ComplexMatrix accretive_sqrt(const AccretiveOperator& b);

}  // namespace sector_kit
