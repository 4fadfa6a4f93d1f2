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

#include "sector_kit/sector_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sector_kit/parallel.hpp"

namespace sector_kit {

AccretiveOperator classify_accretive(const ComplexMatrix& a, double tol) {
  require_square(a, "A");
  require_finite(a, "A");
  ComplexMatrix re = real_part(a);
  ComplexMatrix im = imag_part(a);
  const double norm = op_norm(a);
  if (a.rows() == 0) return AccretiveOperator(a, re, im, 0.0, 0.0);

  const HermitianEigen e = herm_eig(re);
  const double lmin = e.eigenvalues(0);
  if (lmin < -tol * norm) throw NotAccretiveError(lmin, e.eigenvectors.col(0));
  return AccretiveOperator(a, std::move(re), std::move(im), lmin, norm);
}

namespace {

// Support point of W(A) in the direction that maximizes Re(e^{i theta} z).
// Re/Im of the quadratic form are taken from the Hermitian parts so an exactly
// Hermitian A gives exactly real points.
Complex support_point(const ComplexMatrix& re, const ComplexMatrix& im, double theta) {
  const ComplexMatrix h = std::cos(theta) * re - std::sin(theta) * im;
  const HermitianEigen e = herm_eig(h);
  const ComplexVector u = e.eigenvectors.col(e.eigenvectors.cols() - 1);
  return {u.dot(re * u).real(), u.dot(im * u).real()};
}

double signed_ratio(Complex p) { return p.imag() / std::max(p.real(), 1e-14); }

// Golden-section maximization of sign * ratio over [lo, hi].
Complex refine_extreme(const ComplexMatrix& re, const ComplexMatrix& im, double lo, double hi,
                       double sign) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  Complex p1 = support_point(re, im, x1);
  Complex p2 = support_point(re, im, x2);
  double f1 = sign * signed_ratio(p1);
  double f2 = sign * signed_ratio(p2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      p1 = p2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      p2 = support_point(re, im, x2);
      f2 = sign * signed_ratio(p2);
    } else {
      hi = x2;
      x2 = x1;
      p2 = p1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      p1 = support_point(re, im, x1);
      f1 = sign * signed_ratio(p1);
    }
  }
  return f1 >= f2 ? p1 : p2;
}

std::vector<Complex> sample_boundary(const ComplexMatrix& re, const ComplexMatrix& im,
                                     int samples) {
  std::vector<Complex> points(static_cast<std::size_t>(samples));
  parallel_for(points.size(), [&](std::size_t k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / samples;
    points[k] = support_point(re, im, theta);
  });
  return points;
}

}  // namespace

std::vector<Complex> numerical_range_boundary(const ComplexMatrix& a, int samples) {
  require_square(a, "A");
  require_finite(a, "A");
  if (samples < 4) throw Error(ErrorKind::kDomain, "need at least 4 boundary samples");
  if (a.rows() == 0) return {};
  return sample_boundary(real_part(a), imag_part(a), samples);
}

SectorEstimate min_semiangle(const AccretiveOperator& a, SectorMethod method, int samples) {
  SectorEstimate est;
  if (a.dim() == 0) return est;

  const bool coercive = a.coercive_margin() > 1e-10 * a.norm();
  if (method == SectorMethod::kAuto) {
    method = coercive ? SectorMethod::kPencil : SectorMethod::kBoundarySampling;
  }
  if (method == SectorMethod::kPencil && !coercive) {
    throw Error(ErrorKind::kNotCoercive, "pencil route needs Re(A) positive definite");
  }
  est.method = method;

  if (method == SectorMethod::kPencil) {
    Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> ges(
        a.im_part(), a.re_part(), Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (ges.info() != Eigen::Success) {
      throw Error(ErrorKind::kNoConvergence, "Hermitian pencil solver failed");
    }
    est.tanAlpha = ges.eigenvalues().cwiseAbs().maxCoeff();
  } else {
    if (samples < 4) throw Error(ErrorKind::kDomain, "need at least 4 boundary samples");
    const ComplexMatrix& re = a.re_part();
    const ComplexMatrix& im = a.im_part();
    est.boundaryPoints = sample_boundary(re, im, samples);

    std::size_t up = 0, down = 0;
    for (std::size_t k = 1; k < est.boundaryPoints.size(); ++k) {
      const double r = signed_ratio(est.boundaryPoints[k]);
      if (r > signed_ratio(est.boundaryPoints[up])) up = k;
      if (r < signed_ratio(est.boundaryPoints[down])) down = k;
    }
    const double step = 2.0 * std::numbers::pi / samples;
    auto theta = [&](std::size_t k) { return step * static_cast<double>(k); };
    const Complex pUp = refine_extreme(re, im, theta(up) - step, theta(up) + step, 1.0);
    const Complex pDown = refine_extreme(re, im, theta(down) - step, theta(down) + step, -1.0);
    est.boundaryPoints.push_back(pUp);
    est.boundaryPoints.push_back(pDown);

    double t = 0.0;
    for (const Complex& p : est.boundaryPoints) t = std::max(t, std::abs(signed_ratio(p)));
    est.tanAlpha = t;
  }

  if (!(est.tanAlpha <= kNotSectorialRatio)) throw NotSectorialError(est.tanAlpha);
  est.alphaMin = std::atan(est.tanAlpha);
  return est;
}

FormRepresentation form_representation(const AccretiveOperator& a) {
  if (!(a.coercive_margin() > 0.0)) {
    throw Error(ErrorKind::kNotCoercive, "form representation needs Re(A) positive definite");
  }
  FormRepresentation f;
  f.realPart = a.re_part();
  const ComplexMatrix rootInv = pd_inverse_sqrt(f.realPart);
  const ComplexMatrix root = psd_sqrt(f.realPart);
  f.G = real_part(rootInv * a.im_part() * rootInv);
  const Index n = a.dim();
  const ComplexMatrix rebuilt = root * (identity(n) + Complex(0.0, 1.0) * f.G) * root;
  f.residual = op_norm(rebuilt - a.matrix()) / std::max(a.norm(), 1e-300);
  return f;
}

SandwichReport sandwich_check(const AccretiveOperator& a) {
  if (!(a.coercive_margin() > 0.0)) {
    throw Error(ErrorKind::kNotCoercive, "sandwich inequality needs Re(A) positive definite");
  }
  SandwichReport r;
  r.alphaUsed = min_semiangle(a).alphaMin;
  const ComplexMatrix& ar = a.re_part();
  const ComplexMatrix mid = real_part(inverse(real_part(inverse(a.matrix()))));
  const double c = std::cos(r.alphaUsed);
  const double slack = -1e-9 * op_norm(ar);
  r.lowerMargin = lambda_min(mid - ar);
  r.upperMargin = lambda_min(ar / (c * c) - mid);
  r.lowerOk = r.lowerMargin >= slack;
  r.upperOk = r.upperMargin >= slack;
  return r;
}

}  // namespace sector_kit
