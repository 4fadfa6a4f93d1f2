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

#include "sector_kit/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace sector_kit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotPSD: return "NotPSD";
    case ErrorKind::kBranchCut: return "BranchCut";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kIllConditioned: return "IllConditioned";
    case ErrorKind::kNotAccretive: return "NotAccretive";
    case ErrorKind::kNotSectorial: return "NotSectorial";
    case ErrorKind::kNotCoercive: return "NotCoercive";
    case ErrorKind::kNotContraction: return "NotContraction";
    case ErrorKind::kSingularShift: return "SingularShift";
    case ErrorKind::kNotAnOperator: return "NotAnOperator";
    case ErrorKind::kSingularResolvent: return "SingularResolvent";
    case ErrorKind::kPairViolation: return "PairViolation";
    case ErrorKind::kSquareNotAccretive: return "SquareNotAccretive";
    case ErrorKind::kKernelNonzero: return "KernelNonzero";
    case ErrorKind::kSingularB: return "SingularB";
    case ErrorKind::kSpecInvalid: return "SpecInvalid";
    case ErrorKind::kDomain: return "Domain";
    case ErrorKind::kParse: return "Parse";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kNotSquare, std::string(what) + " is " + std::to_string(m.rows()) +
                                           "x" + std::to_string(m.cols()));
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::kNonFinite, std::string(what) + " has a NaN or Inf entry");
  }
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double op_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

double min_singular_value(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const RealVector s = singular_values(m);
  return s(s.size() - 1);
}

Index numerical_rank(const ComplexMatrix& m, double relTol) {
  if (m.size() == 0) return 0;
  const RealVector s = singular_values(m);
  if (s(0) == 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > relTol * s(0)) ++r;
  }
  return r;
}

ComplexMatrix real_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

ComplexMatrix imag_part(const ComplexMatrix& m) {
  return (m - m.adjoint()) * Complex(0.0, -0.5);
}

double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = std::max({op_norm(a), op_norm(b), 1.0});
  return op_norm(a - b) / scale;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  require_square(m);
  return Eigen::PartialPivLU<ComplexMatrix>(m).inverse();
}

ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs) {
  require_square(m);
  return Eigen::PartialPivLU<ComplexMatrix>(m).solve(rhs);
}

HermitianEigen herm_eig(const ComplexMatrix& h) {
  require_square(h);
  require_finite(h);
  const Index n = h.rows();
  if (n == 0) return {};

  // Cheap Frobenius bound first; the exact 2-norm test only when it is inconclusive.
  const double asymF = (h - h.adjoint()).norm();
  if (asymF > 1e-10 * h.norm() / std::sqrt(static_cast<double>(n))) {
    if (op_norm(h - h.adjoint()) > 1e-10 * op_norm(h)) {
      throw Error(ErrorKind::kNotHermitian, "||H - H*|| exceeds 1e-10 ||H||");
    }
  }

  const ComplexMatrix sym = real_part(h);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorKind::kNoConvergence, "Hermitian eigensolver failed");
  }

  HermitianEigen out{es.eigenvalues(), es.eigenvectors()};
  for (Index j = 0; j < n; ++j) {
    auto col = out.eigenvectors.col(j);
    for (Index i = 0; i < n; ++i) {
      const double mag = std::abs(col(i));
      if (mag > 1e-12) {
        col *= std::conj(col(i)) / mag;
        col(i) = Complex(mag, 0.0);
        break;
      }
    }
  }
  return out;
}

double lambda_min(const ComplexMatrix& h) {
  if (h.size() == 0) return 0.0;
  return herm_eig(h).eigenvalues(0);
}

double lambda_max(const ComplexMatrix& h) {
  if (h.size() == 0) return 0.0;
  const auto e = herm_eig(h);
  return e.eigenvalues(e.eigenvalues.size() - 1);
}

SpectralDecomposition spectral_decomposition(const ComplexMatrix& m) {
  require_square(m);
  require_finite(m);
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> ces(m, true);
  if (ces.info() != Eigen::Success) {
    throw Error(ErrorKind::kNoConvergence, "complex eigensolver failed");
  }
  SpectralDecomposition sd;
  sd.eigenvalues = ces.eigenvalues();
  sd.eigenvectors = ces.eigenvectors();
  for (Index j = 0; j < sd.eigenvectors.cols(); ++j) sd.eigenvectors.col(j).normalize();
  const RealVector s = singular_values(sd.eigenvectors);
  const double smin = s(s.size() - 1);
  sd.conditionNumber = smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
  return sd;
}

ComplexMatrix apply_spectral(const SpectralDecomposition& sd,
                             const std::function<Complex(Complex)>& f) {
  const Index n = sd.eigenvalues.size();
  ComplexMatrix vd = sd.eigenvectors;
  for (Index j = 0; j < n; ++j) vd.col(j) *= f(sd.eigenvalues(j));
  // vd V^{-1} = (V^{-T} vd^T)^T
  Eigen::PartialPivLU<ComplexMatrix> lu(sd.eigenvectors.transpose());
  return lu.solve(vd.transpose()).transpose();
}

ComplexMatrix mat_exp(const ComplexMatrix& m) {
  require_square(m);
  require_finite(m);
  const Index n = m.rows();
  if (n == 0) return m;

  static constexpr double kTheta13 = 5.371920351148152;
  // Normalized so the identity coefficient is exactly 1 and exp(0) = I exactly.
  static constexpr double b0 = 64764752532480000.0;
  static constexpr double b[] = {b0 / b0, 32382376266240000.0 / b0, 7771770303897600.0 / b0,
                                 1187353796428800.0 / b0, 129060195264000.0 / b0, 10559470521600.0 / b0,
                                 670442572800.0 / b0, 33522128640.0 / b0, 1323241920.0 / b0,
                                 40840800.0 / b0, 960960.0 / b0, 16380.0 / b0,
                                 182.0 / b0, 1.0 / b0};

  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  const ComplexMatrix a = m / std::ldexp(1.0, squarings);
  const ComplexMatrix id = identity(n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix uInner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                               b[5] * a4 + b[3] * a2 + b[1] * id;
  const ComplexMatrix u = a * uInner;
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                          b[2] * a2 + b[0] * id;

  ComplexMatrix r = Eigen::PartialPivLU<ComplexMatrix>(v - u).solve(v + u);
  for (int k = 0; k < squarings; ++k) r = r * r;
  return r;
}

bool on_branch_cut(Complex z, double scale, double relTol) {
  const double band = relTol * scale;
  return z.real() <= band && std::abs(z.imag()) <= band;
}

namespace {

double log_abs_det(const Eigen::PartialPivLU<ComplexMatrix>& lu) {
  double s = 0.0;
  const auto d = lu.matrixLU().diagonal();
  for (Index i = 0; i < d.size(); ++i) s += std::log(std::abs(d(i)));
  return s;
}

}  // namespace

ComplexMatrix sqrt_denman_beavers(const ComplexMatrix& m, int maxSteps, double tol) {
  require_square(m);
  require_finite(m);
  const Index n = m.rows();
  if (n == 0) return m;

  ComplexMatrix y = m;
  ComplexMatrix z = identity(n);
  bool scaling = true;
  for (int step = 0; step < maxSteps; ++step) {
    Eigen::PartialPivLU<ComplexMatrix> luY(y);
    Eigen::PartialPivLU<ComplexMatrix> luZ(z);
    double mu = 1.0;
    if (scaling) {
      mu = std::exp(-(log_abs_det(luY) + log_abs_det(luZ)) / (2.0 * static_cast<double>(n)));
      if (!std::isfinite(mu) || mu <= 0.0) mu = 1.0;
    }
    const ComplexMatrix yNext = 0.5 * (mu * y + luZ.inverse() / mu);
    const ComplexMatrix zNext = 0.5 * (mu * z + luY.inverse() / mu);
    if (!yNext.allFinite() || !zNext.allFinite()) break;
    const double change = (yNext - y).norm() / std::max(yNext.norm(), 1e-300);
    y = yNext;
    z = zNext;
    if (change < 1e-2) scaling = false;
    if (change <= tol) return y;
  }
  throw Error(ErrorKind::kNoConvergence, "Denman-Beavers iteration did not converge");
}

ComplexMatrix principal_sqrt(const ComplexMatrix& m) {
  require_square(m);
  require_finite(m);
  if (m.rows() == 0) return m;

  const SpectralDecomposition sd = spectral_decomposition(m);
  const double scale = std::max(sd.eigenvalues.cwiseAbs().maxCoeff(), op_norm(m));
  for (Index i = 0; i < sd.eigenvalues.size(); ++i) {
    if (on_branch_cut(sd.eigenvalues(i), scale)) {
      throw Error(ErrorKind::kBranchCut, "eigenvalue on the closed negative real axis");
    }
  }
  const double mNorm = op_norm(m);
  if (sd.conditionNumber <= 1e8) {
    ComplexMatrix r = apply_spectral(sd, [](Complex z) { return std::sqrt(z); });
    if (r.allFinite() && op_norm(r * r - m) <= 1e-10 * mNorm) return r;
  }
  return sqrt_denman_beavers(m);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const HermitianEigen e = herm_eig(h);
  const Index n = e.eigenvalues.size();
  if (n == 0) return h;
  const double lmax = e.eigenvalues(n - 1);
  if (e.eigenvalues(0) < -1e-10 * lmax) {
    throw Error(ErrorKind::kNotPSD, "lambda_min " + std::to_string(e.eigenvalues(0)));
  }
  RealVector root(n);
  for (Index i = 0; i < n; ++i) root(i) = std::sqrt(std::max(e.eigenvalues(i), 0.0));
  return e.eigenvectors * root.asDiagonal() * e.eigenvectors.adjoint();
}

ComplexMatrix pd_inverse_sqrt(const ComplexMatrix& h) {
  const HermitianEigen e = herm_eig(h);
  const Index n = e.eigenvalues.size();
  if (n == 0) return h;
  if (!(e.eigenvalues(0) > 0.0)) {
    throw Error(ErrorKind::kNotCoercive, "matrix is not positive definite");
  }
  RealVector root(n);
  for (Index i = 0; i < n; ++i) root(i) = 1.0 / std::sqrt(e.eigenvalues(i));
  return e.eigenvectors * root.asDiagonal() * e.eigenvectors.adjoint();
}

}  // namespace sector_kit
