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

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "sector_kit/errors.hpp"

namespace sector_kit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Eigen-decomposition A V = V diag(lambda) of a general square matrix.
/// Columns of V have unit norm; conditionNumber is the 2-norm condition of V.
struct SpectralDecomposition {
  ComplexVector eigenvalues;
  ComplexMatrix eigenvectors;
  double conditionNumber = 1.0;
};

struct HermitianEigen {
  RealVector eigenvalues;  // ascending
  ComplexMatrix eigenvectors;
};

ComplexMatrix identity(Index n);

// Throws NotSquare / NonFinite.
void require_square(const ComplexMatrix& m, const char* what = "matrix");
void require_finite(const ComplexMatrix& m, const char* what = "matrix");

ComplexMatrix adjoint(const ComplexMatrix& m);

/// Largest singular value.
double op_norm(const ComplexMatrix& m);
double min_singular_value(const ComplexMatrix& m);
RealVector singular_values(const ComplexMatrix& m);

/// Number of singular values above relTol * sigma_max.
Index numerical_rank(const ComplexMatrix& m, double relTol = 1e-10);

/// (M + M*)/2 and (M - M*)/(2i); both Hermitian.
ComplexMatrix real_part(const ComplexMatrix& m);
ComplexMatrix imag_part(const ComplexMatrix& m);

/// ||a - b|| / max(||a||, ||b||, 1).
double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix inverse(const ComplexMatrix& m);

/// Solves m X = rhs.
ComplexMatrix solve(const ComplexMatrix& m, const ComplexMatrix& rhs);

/// Hermitian eigen-decomposition, eigenvalues ascending. Each eigenvector is
/// rotated so its first component with modulus above 1e-12 is real positive.
/// Throws NotHermitian when ||H - H*|| > 1e-10 ||H||.
HermitianEigen herm_eig(const ComplexMatrix& h);

double lambda_min(const ComplexMatrix& h);
double lambda_max(const ComplexMatrix& h);

SpectralDecomposition spectral_decomposition(const ComplexMatrix& m);

/// V f(diag) V^{-1}.
ComplexMatrix apply_spectral(const SpectralDecomposition& sd,
                             const std::function<Complex(Complex)>& f);

/// Scaling and squaring with a degree-13 Pade approximant.
ComplexMatrix mat_exp(const ComplexMatrix& m);

/// Principal square root. Eigen route when the eigenvector matrix has
/// condition <= 1e8, Denman-Beavers iteration otherwise.
/// Throws BranchCut when an eigenvalue lies on (-inf, 0].
ComplexMatrix principal_sqrt(const ComplexMatrix& m);

/// Denman-Beavers iteration alone, exposed for testing.
ComplexMatrix sqrt_denman_beavers(const ComplexMatrix& m, int maxSteps = 60, double tol = 1e-13);

/// Hermitian PSD square root; eigenvalues down to -1e-10 lambda_max are clipped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

/// H^{-1/2} for Hermitian positive definite H. Throws NotCoercive otherwise.
ComplexMatrix pd_inverse_sqrt(const ComplexMatrix& h);

/// True when z is within relTol * scale of the closed negative real axis.
bool on_branch_cut(Complex z, double scale, double relTol = 1e-13);

}  // namespace sector_kit
