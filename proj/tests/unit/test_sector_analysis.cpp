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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sector_kit/sector_analysis.hpp"
#include "support.hpp"

namespace sk = sector_kit;
using sk::Complex;
using sk::ComplexMatrix;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Point-in-convex-hull by the half-plane test against every sample direction.
bool inside_hull(const std::vector<Complex>& pts, Complex z, double tol) {
  for (std::size_t k = 0; k < pts.size(); ++k) {
    // Support in direction d: max Re(conj(d) p); z must not exceed it.
    const double ang = 2.0 * kPi * static_cast<double>(k) / pts.size();
    const Complex d = std::polar(1.0, ang);
    double h = -1e300;
    for (const Complex& p : pts) h = std::max(h, (std::conj(d) * p).real());
    if ((std::conj(d) * z).real() > h + tol) return false;
  }
  return true;
}

}  // namespace

TEST(ClassifyAccretive, Identity) {
  const auto a = sk::classify_accretive(sk::identity(3));
  EXPECT_DOUBLE_EQ(a.coercive_margin(), 1.0);
}

TEST(ClassifyAccretive, NegativeScalarWitness) {
  ComplexMatrix m(1, 1);
  m(0, 0) = -1.0;
  try {
    sk::classify_accretive(m);
    FAIL();
  } catch (const sk::NotAccretiveError& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kNotAccretive);
    EXPECT_DOUBLE_EQ(e.eigenvalue(), -1.0);
    EXPECT_NEAR(std::abs(e.witness()(0)), 1.0, 1e-15);
  }
}

TEST(ClassifyAccretive, JordanLikeMarginZero) {
  // Re = [[1,1],[1,1]] has eigenvalues 0 and 2.
  const auto a = sk::classify_accretive(mat2(1, 2, 0, 1));
  EXPECT_NEAR(a.coercive_margin(), 0.0, 1e-15);
  const ComplexMatrix re = a.re_part();
  EXPECT_LE(sk::op_norm(re - mat2(1, 1, 1, 1)), 1e-15);
}

TEST(ClassifyAccretive, PartsInvariants) {
  sk_test::Rng rng(21);
  const ComplexMatrix m = rng.coercive_sectorial(5);
  const auto a = sk::classify_accretive(m);
  EXPECT_LE(sk::op_norm(a.re_part() - a.re_part().adjoint()), 1e-12);
  EXPECT_LE(sk::op_norm(a.im_part() - a.im_part().adjoint()), 1e-12);
  EXPECT_LE(sk::op_norm(a.re_part() + Complex(0, 1) * a.im_part() - m), 1e-14 * sk::op_norm(m));
}

TEST(MinSemiangle, DiagonalQuarterPi) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = Complex(1, 1);
  m(1, 1) = Complex(1, -1);
  const auto est = sk::min_semiangle(sk::classify_accretive(m));
  EXPECT_EQ(est.method, sk::SectorMethod::kPencil);
  EXPECT_NEAR(est.alphaMin, kPi / 4, 1e-14);
  EXPECT_NEAR(est.tanAlpha, std::tan(est.alphaMin), 1e-15);
}

TEST(MinSemiangle, HermitianPsdIsZero) {
  sk_test::Rng rng(22);
  const ComplexMatrix x = rng.gaussian(4, 2);
  const ComplexMatrix singular = sk::real_part(x * x.adjoint());  // rank 2, boundary-sampling route
  const auto e1 = sk::min_semiangle(sk::classify_accretive(singular));
  EXPECT_EQ(e1.method, sk::SectorMethod::kBoundarySampling);
  EXPECT_EQ(e1.alphaMin, 0.0);
  const auto e2 = sk::min_semiangle(sk::classify_accretive(rng.positive_definite(4, 0.5, 2.0)));
  EXPECT_NEAR(e2.alphaMin, 0.0, 1e-12);
}

TEST(MinSemiangle, PencilMatchesBoundarySampling) {
  sk_test::Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    const auto a = sk::classify_accretive(rng.coercive_sectorial(6));
    const auto p = sk::min_semiangle(a, sk::SectorMethod::kPencil);
    const auto b = sk::min_semiangle(a, sk::SectorMethod::kBoundarySampling);
    EXPECT_NEAR(p.alphaMin, b.alphaMin, 1e-6);
    // Dense random sampling never exceeds the sector.
    EXPECT_LE(sk_test::sampled_tan_lower_bound(a.matrix(), rng, 2000), p.tanAlpha * (1 + 1e-10));
    for (const Complex& z : b.boundaryPoints) {
      EXPECT_LE(std::abs(z.imag()), b.tanAlpha * z.real() + 1e-8 * (1 + std::abs(z)));
    }
  }
}

TEST(MinSemiangle, SectorFormEquivalence) {
  sk_test::Rng rng(24);
  for (int k = 0; k < 20; ++k) {
    const auto a = sk::classify_accretive(rng.coercive_sectorial(5));
    const double t = sk::min_semiangle(a).tanAlpha;
    auto holds = [&](double tn) {
      return sk::lambda_min(tn * a.re_part() + a.im_part()) >= -1e-12 &&
             sk::lambda_min(tn * a.re_part() - a.im_part()) >= -1e-12;
    };
    EXPECT_TRUE(holds(t * (1 + 1e-9)));
    EXPECT_TRUE(holds(t * 1.5));
    EXPECT_FALSE(holds(t * (1 - 1e-3)));
  }
}

TEST(MinSemiangle, NotSectorialJordanDisk) {
  // W([[1,2],[0,1]]) is the disk |z - 1| <= 1, tangent to the imaginary axis at 0.
  const auto a = sk::classify_accretive(mat2(1, 2, 0, 1));
  try {
    sk::min_semiangle(a);
    FAIL();
  } catch (const sk::NotSectorialError& e) {
    EXPECT_GT(e.sampled_ratio(), sk::kNotSectorialRatio);
  }
}

TEST(MinSemiangle, InverseIsNoWider) {
  sk_test::Rng rng(25);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix m = rng.coercive_sectorial(5);
    const double alpha = sk::min_semiangle(sk::classify_accretive(m)).alphaMin;
    const double alphaInv = sk::min_semiangle(sk::classify_accretive(sk::inverse(m))).alphaMin;
    EXPECT_LE(alphaInv, alpha + 1e-6);
  }
}

TEST(NumericalRange, ScalarAndSegment) {
  ComplexMatrix one(1, 1);
  one(0, 0) = 1.0;
  for (const Complex& p : sk::numerical_range_boundary(one, 8)) EXPECT_NEAR(std::abs(p - 1.0), 0.0, 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(1, 1) = 1.0;
  for (const Complex& p : sk::numerical_range_boundary(d, 360)) {
    EXPECT_EQ(p.imag(), 0.0);
    EXPECT_GE(p.real(), -1e-15);
    EXPECT_LE(p.real(), 1.0 + 1e-15);
  }
  EXPECT_THROW(sk::numerical_range_boundary(d, 3), sk::Error);
}

TEST(NumericalRange, JordanBlockCircle) {
  const ComplexMatrix j = mat2(0, 1, 0, 0);
  const auto pts = sk::numerical_range_boundary(j, 360);
  for (const Complex& p : pts) EXPECT_NEAR(std::abs(p), 0.5, 1e-9);
  // Oracle: random unit vectors never leave the disk of radius 1/2 and get close to its rim.
  sk_test::Rng rng(26);
  double far = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const auto u = rng.unit_vector(2);
    const double r = std::abs(u.dot(j * u));
    EXPECT_LE(r, 0.5 + 1e-12);
    far = std::max(far, r);
  }
  EXPECT_GT(far, 0.49);
}

TEST(NumericalRange, ConvexityWitness) {
  sk_test::Rng rng(27);
  const ComplexMatrix a = rng.gaussian(5);
  const auto pts = sk::numerical_range_boundary(a, 180);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const Complex mid = 0.5 * (pts[k] + pts[(k + 1) % pts.size()]);
    EXPECT_TRUE(inside_hull(pts, mid, 1e-9));
  }
  // Random points of W(A) are inside the hull up to the polygonal undersampling.
  for (int i = 0; i < 200; ++i) {
    const auto u = rng.unit_vector(5);
    EXPECT_TRUE(inside_hull(pts, u.dot(a * u), 1e-2 * sk::op_norm(a)));
  }
}

TEST(FormRepresentation, IdentityAndScalar) {
  const auto f = sk::form_representation(sk::classify_accretive(sk::identity(3)));
  EXPECT_LE(sk::op_norm(f.realPart - sk::identity(3)), 1e-15);
  EXPECT_LE(sk::op_norm(f.G), 1e-15);
  ComplexMatrix s(1, 1);
  s(0, 0) = Complex(1, 1);
  const auto g = sk::form_representation(sk::classify_accretive(s));
  EXPECT_NEAR(std::abs(g.G(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(FormRepresentation, RandomRoundTripAndPencil) {
  sk_test::Rng rng(28);
  for (int k = 0; k < 20; ++k) {
    const auto a = sk::classify_accretive(rng.coercive_sectorial(5));
    const auto f = sk::form_representation(a);
    EXPECT_LE(f.residual, 1e-9);
    EXPECT_LE(sk::op_norm(f.G - f.G.adjoint()), 1e-14);
    const double t = sk::min_semiangle(a).tanAlpha;
    EXPECT_NEAR(sk::op_norm(f.G), t, 1e-6 * std::max(1.0, t));
    EXPECT_LE(sk::op_norm(f.G), t + 1e-8);
  }
}

TEST(FormRepresentation, NeedsCoercive) {
  try {
    sk::form_representation(sk::classify_accretive(mat2(1, 2, 0, 1)));
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kNotCoercive);
  }
}

TEST(Sandwich, HermitianEquality) {
  sk_test::Rng rng(29);
  const auto r = sk::sandwich_check(sk::classify_accretive(rng.positive_definite(4, 0.5, 3.0)));
  EXPECT_TRUE(r.lowerOk);
  EXPECT_TRUE(r.upperOk);
  EXPECT_NEAR(r.alphaUsed, 0.0, 1e-12);
  EXPECT_NEAR(r.lowerMargin, 0.0, 1e-12);
  EXPECT_NEAR(r.upperMargin, 0.0, 1e-12);
}

TEST(Sandwich, DiagonalQuarterPi) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = Complex(1, 1);
  m(1, 1) = Complex(1, -1);
  const auto r = sk::sandwich_check(sk::classify_accretive(m));
  EXPECT_TRUE(r.lowerOk && r.upperOk);
  EXPECT_NEAR(r.alphaUsed, kPi / 4, 1e-14);
  // (Re A^{-1})^{-1} = 2 = sec^2(pi/4) * A_R: upper side tight, lower side has slack 1.
  EXPECT_NEAR(r.upperMargin, 0.0, 1e-12);
  EXPECT_NEAR(r.lowerMargin, 1.0, 1e-12);
}

TEST(Sandwich, RandomSweep) {
  sk_test::Rng rng(30);
  for (int k = 0; k < 100; ++k) {
    const auto r = sk::sandwich_check(sk::classify_accretive(rng.coercive_sectorial(4)));
    EXPECT_TRUE(r.lowerOk) << k;
    EXPECT_TRUE(r.upperOk) << k;
  }
}
