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

#include "sector_kit/kato_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace sector_kit {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_invertible(const ComplexMatrix& m, ErrorKind kind, const char* what) {
  if (m.rows() > 0 && !(min_singular_value(m) > 1e-12 * op_norm(m))) {
    throw Error(kind, std::string(what) + " is numerically singular");
  }
}

// sup (N f, f) / (D f, f) = 1 / min eig of the pencil D v = nu N v (N positive definite).
double sup_ratio(const ComplexMatrix& numer, const ComplexMatrix& denom) {
  Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> ges(
      denom, numer, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success) {
    throw Error(ErrorKind::kNoConvergence, "indicator pencil solver failed");
  }
  const double nu = ges.eigenvalues()(0);
  return nu <= kUnboundedFloor ? kInf : 1.0 / nu;
}

}  // namespace

AntiCommutingPair make_anti_pair(const ComplexMatrix& q, const ComplexMatrix& z, double zTol) {
  require_square(q, "Q");
  require_square(z, "Z");
  require_finite(q, "Q");
  if (q.rows() != z.rows()) throw Error(ErrorKind::kPairViolation, "Q and Z differ in size");
  const double qNorm = op_norm(q);
  if (op_norm(q - q.adjoint()) > 1e-10 * qNorm) {
    throw Error(ErrorKind::kPairViolation, "Q is not Hermitian");
  }
  const ComplexMatrix qh = real_part(q);
  if (q.rows() > 0 && !(lambda_min(qh) > 0.0)) {
    throw Error(ErrorKind::kPairViolation, "Q is not positive definite");
  }
  AntiCommutingPair p{qh, Contraction::make(z, zTol), 0.0};
  p.antiResidual = op_norm(qh * z + z.adjoint() * qh);
  if (p.antiResidual > 1e-9 * qNorm) {
    throw Error(ErrorKind::kPairViolation,
                "||QZ + Z*Q|| = " + std::to_string(p.antiResidual));
  }
  return p;
}

ComplexMatrix pair_to_T(const AntiCommutingPair& p) {
  if (p.antiResidual > 1e-9 * op_norm(p.Q)) {
    throw Error(ErrorKind::kPairViolation, "pair does not anti-commute");
  }
  return p.Q * (identity(p.Q.rows()) + p.Z.matrix());
}

AntiCommutingPair T_to_pair(const ComplexMatrix& t) {
  const AccretiveOperator ta = classify_accretive(t);
  const Index n = ta.dim();
  const double tNorm = ta.norm();
  if (n > 0 && !(lambda_min(real_part(t * t)) >= -1e-10 * tNorm * tNorm)) {
    throw Error(ErrorKind::kSquareNotAccretive, "Re(T^2) is not positive semidefinite");
  }
  if (n > 0 && !(min_singular_value(t) > 1e-12 * tNorm)) {
    throw Error(ErrorKind::kKernelNonzero, "T has a nontrivial kernel");
  }
  const ComplexMatrix& q = ta.re_part();
  if (n > 0 && !(lambda_min(q) > 0.0)) {
    throw Error(ErrorKind::kKernelNonzero, "Re T is singular");
  }
  return make_anti_pair(q, kI * solve(q, ta.im_part()));
}

ComplexMatrix f_operator(const AntiCommutingPair& p) {
  const ComplexMatrix id = identity(p.Q.rows());
  const ComplexMatrix plus = id + p.Z.matrix();
  require_invertible(plus, ErrorKind::kSingularShift, "I + Z");
  // (I - Z) and (I + Z)^{-1} commute.
  return solve(plus, id - p.Z.matrix());
}

ComplexMatrix gomilko_G(const AntiCommutingPair& p) {
  const ComplexMatrix id = identity(p.Q.rows());
  const ComplexMatrix minus = id - p.Z.matrix();
  require_invertible(minus, ErrorKind::kSingularShift, "I - Z");
  return solve(minus, id + p.Z.matrix());
}

double gomilko_residual(const AntiCommutingPair& p) {
  const ComplexMatrix g = gomilko_G(p);
  const ComplexMatrix s = 2.0 * p.Q;
  return op_norm(g.adjoint() * s * g - s) / std::max(op_norm(s), 1e-300);
}

Extraction extract_from_B(const AccretiveOperator& b) {
  const ComplexMatrix& bm = b.matrix();
  const Index n = b.dim();
  if (n == 0) throw Error(ErrorKind::kSingularB, "empty operator");
  if (!(min_singular_value(bm) > 1e-14 * b.norm())) {
    throw Error(ErrorKind::kSingularB, "B is numerically singular");
  }
  const ComplexMatrix id = identity(n);

  ComplexMatrix t = principal_sqrt(inverse(bm));
  const ComplexMatrix q = real_part(t);
  ComplexMatrix l = real_part(inverse(q));
  AntiCommutingPair pair = make_anti_pair(q, kI * l * imag_part(t));
  Extraction ex{std::move(l), std::move(pair), std::move(t), principal_sqrt(bm), {}};

  const ComplexMatrix& z = ex.pair.Z.matrix();
  const ComplexMatrix plus = id + z;
  const ComplexMatrix minusStar = id - z.adjoint();
  const ComplexMatrix left = solve(plus, ex.L);                  // (I+Z)^{-1} L
  const ComplexMatrix right = solve(minusStar.transpose(), ex.L.transpose()).transpose();  // L (I-Z*)^{-1}
  const ComplexMatrix sqrtBStar = principal_sqrt(bm.adjoint());

  auto& r = ex.residuals;
  r["B_factor"] = relative_residual(bm, ex.L * solve(plus * minusStar, ex.L));
  r["B_factor_split"] = relative_residual(bm, left * ex.L * inverse(minusStar));
  r["sqrtB_left"] = relative_residual(ex.sqrtB, left);
  r["sqrtB_right"] = relative_residual(ex.sqrtB, right);
  r["sqrtBstar"] = relative_residual(sqrtBStar, solve(id - z, ex.L));
  r["F_operator"] = relative_residual(ex.sqrtB * inverse(sqrtBStar), f_operator(ex.pair));
  r["pair_T"] = relative_residual(ex.T, pair_to_T(ex.pair));
  r["anti_commutation"] = ex.pair.antiResidual / std::max(op_norm(q), 1e-300);
  r["gomilko"] = gomilko_residual(ex.pair);
  return ex;
}

double KatoDiagnostics::residual_max() const {
  double m = 0.0;
  for (const auto& [name, v] : identityResiduals) {
    if (std::isnan(v)) return v;
    m = std::max(m, v);
  }
  return m;
}

bool ratios_agree(double a, double b, double relTol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= relTol * std::max(std::abs(a), std::abs(b));
}

KatoDiagnostics kato_indicators(const AccretiveOperator& b) {
  const Extraction ex = extract_from_B(b);
  KatoDiagnostics d;
  d.dim = b.dim();
  d.normZ = ex.pair.Z.norm();
  d.identityResiduals = ex.residuals;

  const ComplexMatrix& q = ex.pair.Q;
  const ComplexMatrix& t = ex.T;
  const ComplexMatrix reBInv = real_part(inverse(b.matrix()));
  d.ratioG = sup_ratio(real_part(q * q), reBInv);
  d.ratioH = sup_ratio(real_part(t * t.adjoint() + t.adjoint() * t), reBInv);

  const double gap = 1.0 - d.normZ * d.normZ;
  const double r2 = d.normZ * d.normZ;
  d.ratioGClosed = gap <= kUnboundedFloor ? kInf : 1.0 / gap;
  d.ratioHClosed = gap <= kUnboundedFloor ? kInf : (2.0 + 2.0 * r2) / gap;

  try {
    d.alphaMin = min_semiangle(b).alphaMin;
  } catch (const NotSectorialError&) {
    d.notSectorial = true;
  }
  return d;
}

KatoDiagnostics kato_indicators(const AntiCommutingPair& p) {
  const ComplexMatrix t = pair_to_T(p);
  return kato_indicators(classify_accretive(inverse(t * t), 1e-9));
}

ComplexMatrix b_gamma(const ComplexMatrix& l, const AntiCommutingPair& p, double gamma) {
  require_square(l, "L");
  if (l.rows() != p.Q.rows()) throw Error(ErrorKind::kDomain, "L and the pair differ in size");
  if (!(lambda_min(l) > 0.0)) throw Error(ErrorKind::kNotCoercive, "L is not positive definite");
  const ComplexMatrix zg = z_gamma(p.Z, gamma).matrix();
  const ComplexMatrix id = identity(l.rows());
  return l * solve((id + zg) * (id - zg.adjoint()), l);
}

}  // namespace sector_kit
