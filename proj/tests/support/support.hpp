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

// Seeded generators and independent reference computations for the test suites.
// Oracles here deliberately avoid the library routine they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace sk_test {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double normal() { return normal_(eng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Mat gaussian(Eigen::Index n, Eigen::Index m) {
    Mat a(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        const double re = normal();
        const double im = normal();
        a(i, j) = Complex(re, im);
      }
    }
    return a;
  }
  Mat gaussian(Eigen::Index n) { return gaussian(n, n); }

  Vec unit_vector(Eigen::Index n) {
    Vec v = gaussian(n, 1).col(0);
    return v / v.norm();
  }

  Mat hermitian(Eigen::Index n) {
    const Mat a = gaussian(n);
    return 0.5 * (a + a.adjoint());
  }

  Mat unitary(Eigen::Index n) {
    Eigen::HouseholderQR<Mat> qr(gaussian(n));
    return qr.householderQ() * Mat::Identity(n, n);
  }

  // Hermitian positive definite with eigenvalues in [lo, hi].
  Mat positive_definite(Eigen::Index n, double lo, double hi) {
    const Mat u = unitary(n);
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = uniform(lo, hi);
    return u * d.asDiagonal() * u.adjoint();
  }

  // R + iS with R positive definite: coercive, hence sectorial; generic, hence diagonalizable.
  Mat coercive_sectorial(Eigen::Index n) {
    const Mat r = positive_definite(n, uniform(0.1, 1.0), uniform(1.5, 4.0));
    Mat s = hermitian(n);
    s *= uniform(0.2, 3.0) / spectral_norm(s);
    return r + Complex(0.0, 1.0) * s;
  }

  // s * M / ||M|| with s drawn from (lo, hi).
  Mat contraction(Eigen::Index n, double lo = 0.05, double hi = 0.98) {
    const Mat m = gaussian(n);
    return uniform(lo, hi) * m / spectral_norm(m);
  }

  // (Q, Z) with QZ = -Z*Q: Z = i t Q^{-1} K / ||Q^{-1} K|| for Hermitian K.
  std::pair<Mat, Mat> anti_pair(Eigen::Index n, double scale) {
    const Mat q = positive_definite(n, 0.2, 3.0);
    const Mat k = hermitian(n);
    const Mat z0 = q.partialPivLu().solve(k);
    return {q, Complex(0.0, scale / spectral_norm(z0)) * z0};
  }

  static double spectral_norm(const Mat& m) {
    return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_;
};

// Largest ||Mv|| over random unit vectors: a lower bound for ||M||.
inline double norm_lower_bound(const Mat& m, Rng& rng, int samples) {
  double best = 0.0;
  for (int i = 0; i < samples; ++i) best = std::max(best, (m * rng.unit_vector(m.cols())).norm());
  return best;
}

// f(M) through Eigen's complex Schur-based eigensolver, V f(D) V^{-1}.
template <class F>
Mat eigen_function(const Mat& m, F f) {
  Eigen::ComplexEigenSolver<Mat> es(m);
  Vec d = es.eigenvalues();
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(d(i));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().inverse();
}

// Truncated Taylor series with scaling and squaring: independent exp reference.
inline Mat taylor_exp(const Mat& m) {
  const double nrm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int s = nrm > 0.5 ? static_cast<int>(std::ceil(std::log2(nrm / 0.5))) : 0;
  const Mat a = m / std::ldexp(1.0, s);
  Mat term = Mat::Identity(m.rows(), m.cols());
  Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

// Rank by column-pivoted QR with a relative threshold; independent of the SVD rank.
inline Eigen::Index qr_rank(const Mat& m, double relTol = 1e-9) {
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  qr.setThreshold(relTol);
  return qr.rank();
}

// Same, but pivots are compared against an absolute floor; needed when the matrix
// itself may be rounding noise (e.g. I - Z^2 for an involution Z).
inline Eigen::Index qr_rank_abs(const Mat& m, double absTol) {
  Eigen::ColPivHouseholderQR<Mat> qr(m);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(qr.matrixR()(i, i)) > absTol) ++r;
  }
  return r;
}

// Dense random sampling of W(A): the largest |Im p| / Re p seen, a lower bound for tan(alpha).
inline double sampled_tan_lower_bound(const Mat& a, Rng& rng, int samples) {
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Vec u = rng.unit_vector(a.cols());
    const Complex p = u.dot(a * u);
    best = std::max(best, std::abs(p.imag()) / p.real());
  }
  return best;
}

inline double rel_diff(const Mat& a, const Mat& b) {
  return Rng::spectral_norm(a - b) / std::max({Rng::spectral_norm(a), Rng::spectral_norm(b), 1.0});
}

}  // namespace sk_test
