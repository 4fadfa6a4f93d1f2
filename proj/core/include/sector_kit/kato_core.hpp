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

#include <map>
#include <optional>
#include <string>

#include "sector_kit/cayley.hpp"
#include "sector_kit/matrix_core.hpp"
#include "sector_kit/sector_analysis.hpp"

namespace sector_kit {

// (Q, Z) with Q Hermitian positive definite, Z a contraction and QZ = -Z*Q.
struct AntiCommutingPair {
  ComplexMatrix Q;
  Contraction Z;
  double antiResidual = 0.0;  // ||QZ + Z*Q||
};

// Validates the pair; PairViolation when Q is not Hermitian positive definite or
// ||QZ + Z*Q|| > 1e-9 ||Q||. NotContraction when ||Z|| > 1 + zTol.
AntiCommutingPair make_anti_pair(const ComplexMatrix& q, const ComplexMatrix& z, double zTol = 1e-9);

// T = Q(I + Z).
ComplexMatrix pair_to_T(const AntiCommutingPair& p);

// Q = Re T, Z = i Q^{-1} Im T. Needs T and T^2 accretive and ker T = {0}.
AntiCommutingPair T_to_pair(const ComplexMatrix& t);

struct Extraction {
  ComplexMatrix L;      // (Re B^{-1/2})^{-1}
  AntiCommutingPair pair;
  ComplexMatrix T;      // B^{-1/2}
  ComplexMatrix sqrtB;  // B^{1/2}, computed directly from B
  std::map<std::string, double> residuals;
};

Extraction extract_from_B(const AccretiveOperator& b);

// (I - Z)(I + Z)^{-1}; equals B^{1/2} B*^{-1/2} for the pair extracted from B.
ComplexMatrix f_operator(const AntiCommutingPair& p);

// (I + Z)(I - Z)^{-1}.
ComplexMatrix gomilko_G(const AntiCommutingPair& p);

// ||G* S G - S|| / ||S|| with S = 2 Q = 2 Re(B^{-1/2}).
double gomilko_residual(const AntiCommutingPair& p);

// Pencil minimum below which a sup-ratio is reported as unbounded (+inf).
inline constexpr double kUnboundedFloor = 1e-11;

struct KatoDiagnostics {
  Index dim = 0;
  double normZ = 0.0;
  double ratioG = 0.0;        // pencil
  double ratioH = 0.0;        // pencil
  double ratioGClosed = 0.0;  // 1 / (1 - ||Z||^2)
  double ratioHClosed = 0.0;  // (2 + 2||Z||^2) / (1 - ||Z||^2)
  std::optional<double> alphaMin;
  bool notSectorial = false;
  std::map<std::string, double> identityResiduals;

  double residual_max() const;
};

// Relative agreement of two sup-ratios; two unbounded values agree.
bool ratios_agree(double a, double b, double relTol);

KatoDiagnostics kato_indicators(const AccretiveOperator& b);

// Diagnostics of the pair itself, without a B in hand: B is rebuilt as (T T)^{-1}.
KatoDiagnostics kato_indicators(const AntiCommutingPair& p);

// L ((I + Z_g)(I - Z_g*))^{-1} L.
ComplexMatrix b_gamma(const ComplexMatrix& l, const AntiCommutingPair& p, double gamma);

}  // namespace sector_kit
