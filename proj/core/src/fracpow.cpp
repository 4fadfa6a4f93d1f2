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

#include "sector_kit/fracpow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sector_kit/parallel.hpp"

namespace sector_kit {

namespace {

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw Error(ErrorKind::kDomain, "gamma must lie in (0, 1)");
  }
}

// B (B + e^s I)^{-1} as a linear solve; forming I - t (B + t)^{-1} instead
// cancels catastrophically for large t.
ComplexMatrix resolvent_term(const ComplexMatrix& b, double s) {
  const Index n = b.rows();
  Eigen::PartialPivLU<ComplexMatrix> lu(b + std::exp(s) * identity(n));
  const RealVector piv = lu.matrixLU().diagonal().cwiseAbs();
  if (!(piv.minCoeff() > 1e-300) || !lu.matrixLU().allFinite()) {
    throw Error(ErrorKind::kSingularResolvent, "B + tI singular at a quadrature node");
  }
  return lu.solve(b);
}

// Sum of f over the nodes j*h, j in [first, last] with the given stride, in index order.
ComplexMatrix node_sum(const ComplexMatrix& b, double gamma, double h, long first, long last,
                       long stride) {
  const Index n = b.rows();
  if (last < first) return ComplexMatrix::Zero(n, n);
  const std::size_t count = static_cast<std::size_t>((last - first) / stride + 1);
  std::vector<ComplexMatrix> terms(count);
  parallel_for(count, [&](std::size_t i) {
    const double s = static_cast<double>(first + static_cast<long>(i) * stride) * h;
    terms[i] = std::exp(gamma * s) * resolvent_term(b, s);
  });
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (const auto& t : terms) acc += t;
  return acc;
}

}  // namespace

ComplexMatrix power_eig_oracle(const ComplexMatrix& b, double gamma) {
  require_gamma(gamma);
  require_square(b, "B");
  require_finite(b, "B");
  if (b.rows() == 0) return b;
  const SpectralDecomposition sd = spectral_decomposition(b);
  if (!(sd.conditionNumber <= 1e8)) {
    throw Error(ErrorKind::kIllConditioned,
                "eigenvector condition " + std::to_string(sd.conditionNumber));
  }
  const double scale = std::max(sd.eigenvalues.cwiseAbs().maxCoeff(), op_norm(b));
  for (Index i = 0; i < sd.eigenvalues.size(); ++i) {
    if (on_branch_cut(sd.eigenvalues(i), scale)) {
      throw Error(ErrorKind::kBranchCut, "eigenvalue on the closed negative real axis");
    }
  }
  return apply_spectral(sd, [gamma](Complex z) { return std::pow(z, gamma); });
}

ComplexMatrix power_eig_oracle(const AccretiveOperator& b, double gamma) {
  return power_eig_oracle(b.matrix(), gamma);
}

ComplexMatrix power_balakrishnan(const ComplexMatrix& b, double gamma,
                                 const QuadratureParams& q) {
  require_gamma(gamma);
  require_square(b, "B");
  require_finite(b, "B");
  if (!(q.halfWidth > 0.0 && q.step > 0.0 && q.tol > 0.0) || q.maxRefine < 0) {
    throw Error(ErrorKind::kDomain, "invalid quadrature parameters");
  }
  const Index n = b.rows();
  if (n == 0) return b;

  const double normB = op_norm(b);
  if (!(min_singular_value(b) > 1e-14 * normB)) {
    throw Error(ErrorKind::kSingularResolvent, "B is singular");
  }
  const ComplexMatrix bInv = inverse(b);
  const double normBInv = op_norm(bInv);
  // The tails below use Neumann series in t B^{-1} and B / t; they need
  // e^{-L} ||B^{-1}|| and e^{-L} ||B|| to be small.
  const double halfWidth = std::max(q.halfWidth, std::log(std::max(normB, normBInv)) + 10.0);

  // Tail powers: B^{-m} for the lower tail, B^{m+1} for the upper one, m = 0, 1, 2.
  const ComplexMatrix id = identity(n);
  const ComplexMatrix lowPow[3] = {id, bInv, bInv * bInv};
  const ComplexMatrix highPow[3] = {b, b * b, b * b * b};

  auto tails = [&](double h, long last) {
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    const double start = static_cast<double>(last + 1) * h;
    for (int m = 0; m < 3; ++m) {
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      const double lo = gamma + m;         // decay rate towards s -> -inf
      const double hi = m + 1.0 - gamma;   // decay rate towards s -> +inf
      acc += sign * std::exp(-lo * start) / (1.0 - std::exp(-lo * h)) * lowPow[m];
      acc += sign * std::exp(-hi * start) / (1.0 - std::exp(-hi * h)) * highPow[m];
    }
    return acc;
  };

  const double c = std::sin(gamma * std::numbers::pi) / std::numbers::pi;
  double h = q.step;
  long last = static_cast<long>(std::floor(halfWidth / h));
  ComplexMatrix nodes = node_sum(b, gamma, h, -last, last, 1);
  ComplexMatrix prev = c * h * (nodes + tails(h, last));

  for (int r = 0; r < q.maxRefine; ++r) {
    // Halving keeps every old node; only the odd ones are new.
    h *= 0.5;
    last *= 2;
    nodes += node_sum(b, gamma, h, -last + 1, last - 1, 2);
    ComplexMatrix cur = c * h * (nodes + tails(h, last));
    const double diff = op_norm(cur - prev);
    if (diff <= q.tol * std::max(op_norm(cur), 1e-300)) return cur;
    prev = std::move(cur);
  }
  throw Error(ErrorKind::kNoConvergence, "Balakrishnan quadrature refinement exhausted");
}

ComplexMatrix power_balakrishnan(const AccretiveOperator& b, double gamma,
                                 const QuadratureParams& q) {
  return power_balakrishnan(b.matrix(), gamma, q);
}

ComplexMatrix power_nagy_foias(const AccretiveOperator& b, double gamma) {
  require_gamma(gamma);
  const Index n = b.dim();
  if (n == 0) return b.matrix();
  const ComplexMatrix id = identity(n);
  const ComplexMatrix t = solve(id + b.matrix(), id - b.matrix());
  const ComplexMatrix plus = id + t;
  if (!(min_singular_value(plus) > 1e-12 * op_norm(plus))) {
    throw Error(ErrorKind::kSingularShift, "I + T is numerically singular");
  }
  const ComplexMatrix num = power_eig_oracle(id - t, gamma);
  const ComplexMatrix den = power_eig_oracle(plus, gamma);
  // The factors commute, so (den^{-1}) num is the same product.
  return solve(den, num);
}

ComplexMatrix accretive_sqrt(const AccretiveOperator& b) { return principal_sqrt(b.matrix()); }

}  // namespace sector_kit
