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

#include "sector_kit/fracpow.hpp"
#include "support.hpp"

namespace sk = sector_kit;
using sk::Complex;
using sk::ComplexMatrix;

namespace {

constexpr double kPi = std::numbers::pi;

sk::AccretiveOperator scalar(Complex z) {
  ComplexMatrix m(1, 1);
  m(0, 0) = z;
  return sk::classify_accretive(m);
}

double rel(const ComplexMatrix& a, const ComplexMatrix& ref) {
  return sk::op_norm(a - ref) / sk::op_norm(ref);
}

}  // namespace

TEST(PowerEig, Trivial) {
  EXPECT_LE(sk::op_norm(sk::power_eig_oracle(sk::classify_accretive(sk::identity(3)), 0.3) - sk::identity(3)), 1e-15);
  EXPECT_NEAR(std::abs(sk::power_eig_oracle(scalar(4.0), 0.5)(0, 0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sk::power_eig_oracle(scalar(Complex(0, 1)), 0.5)(0, 0) - std::polar(1.0, kPi / 4)), 0.0, 1e-15);
}

TEST(PowerEig, Errors) {
  ComplexMatrix j(2, 2);
  j << 1, 1, 0, 1;  // defective
  try {
    sk::power_eig_oracle(j, 0.5);
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kIllConditioned);
  }
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;  // eigenvalue 0
  try {
    sk::power_eig_oracle(d, 0.5);
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kBranchCut);
  }
  EXPECT_THROW(sk::power_eig_oracle(sk::identity(2), 1.0), sk::Error);
  EXPECT_THROW(sk::power_eig_oracle(sk::identity(2), 0.0), sk::Error);
}

TEST(PowerBalakrishnan, Scalars) {
  EXPECT_NEAR(std::abs(sk::power_balakrishnan(scalar(1.0), 0.5)(0, 0) - 1.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(sk::power_balakrishnan(scalar(4.0), 0.5)(0, 0) - 2.0), 0.0, 2e-9);
  // Closed form z^gamma for a scalar near the imaginary axis.
  const Complex z(1e-3, 5.0);
  for (double g : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(std::abs(sk::power_balakrishnan(scalar(z), g)(0, 0) - std::pow(z, g)),
                0.0, 1e-9 * std::abs(std::pow(z, g)));
  }
}

TEST(PowerBalakrishnan, WideSpectrum) {
  // Spectrum spanning [1e-4, 1e4] stresses the tails.
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 1e-4;
  d(1, 1) = Complex(1.0, 1.0);
  d(2, 2) = 1e4;
  for (double g : {0.1, 0.5, 0.9}) {
    const ComplexMatrix r = sk::power_balakrishnan(d, g);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(std::abs(r(i, i) - std::pow(d(i, i), g)), 0.0, 1e-9 * std::abs(std::pow(d(i, i), g)));
    }
  }
}

TEST(PowerBalakrishnan, AgreesWithOracle) {
  sk_test::Rng rng(31);
  for (int k = 0; k < 10; ++k) {
    const auto b = sk::classify_accretive(rng.coercive_sectorial(6));
    for (int j = 1; j <= 9; ++j) {
      const double g = j / 10.0;
      EXPECT_LE(rel(sk::power_balakrishnan(b, g), sk::power_eig_oracle(b, g)), 1e-6);
    }
  }
}

TEST(PowerBalakrishnan, ExhaustedRefinement) {
  sk::QuadratureParams q;
  q.step = 4.0;  // far too coarse,
  q.maxRefine = 0;  // and no halving allowed
  try {
    sk::power_balakrishnan(scalar(2.0), 0.5, q);
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kNoConvergence);
  }
}

TEST(PowerBalakrishnan, SingularRejected) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  try {
    sk::power_balakrishnan(d, 0.5);
    FAIL();
  } catch (const sk::Error& e) {
    EXPECT_EQ(e.kind(), sk::ErrorKind::kSingularResolvent);
  }
}

TEST(PowerNagyFoias, TrivialAndScalar) {
  EXPECT_LE(sk::op_norm(sk::power_nagy_foias(sk::classify_accretive(sk::identity(3)), 0.4) - sk::identity(3)), 1e-15);
  // T = -3/5; (8/5)^(1/2) / (2/5)^(1/2) = 2
  EXPECT_NEAR(std::abs(sk::power_nagy_foias(scalar(4.0), 0.5)(0, 0) - 2.0), 0.0, 1e-14);
}

TEST(PowerNagyFoias, AgreesWithOracle) {
  sk_test::Rng rng(32);
  for (int k = 0; k < 20; ++k) {
    const auto b = sk::classify_accretive(rng.coercive_sectorial(5));
    for (double g : {0.1, 0.35, 0.5, 0.8}) {
      EXPECT_LE(rel(sk::power_nagy_foias(b, g), sk::power_eig_oracle(b, g)), 1e-8);
    }
  }
}

TEST(PowerEig, AgreesWithIndependentEigenReference) {
  sk_test::Rng rng(33);
  const ComplexMatrix m = rng.coercive_sectorial(6);
  const ComplexMatrix ref = sk_test::eigen_function(m, [](Complex z) { return std::pow(z, 0.37); });
  EXPECT_LE(rel(sk::power_eig_oracle(m, 0.37), ref), 1e-12);
}

TEST(FracpowLaws, AdjointCommutation) {
  sk_test::Rng rng(34);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix m = rng.coercive_sectorial(5);
    for (double g : {0.2, 0.5, 0.75}) {
      const ComplexMatrix p = sk::power_eig_oracle(m, g);
      const ComplexMatrix pa = sk::power_eig_oracle(ComplexMatrix(m.adjoint()), g);
      EXPECT_LE(sk::op_norm(p.adjoint() - pa), 1e-9 * sk::op_norm(p));
    }
  }
}

TEST(FracpowLaws, SectorBound) {
  sk_test::Rng rng(35);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix m = rng.coercive_sectorial(5);
    for (double g : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const auto p = sk::classify_accretive(sk::power_eig_oracle(m, g));
      EXPECT_LE(sk::min_semiangle(p).alphaMin, kPi * g / 2 + 1e-6);
    }
  }
}

TEST(FracpowLaws, SemigroupInGamma) {
  sk_test::Rng rng(36);
  const auto b = sk::classify_accretive(rng.coercive_sectorial(5));
  for (auto [g1, g2] : {std::pair{0.2, 0.3}, std::pair{0.45, 0.45}, std::pair{0.1, 0.6}}) {
    const ComplexMatrix lhs = sk::power_eig_oracle(b, g1) * sk::power_balakrishnan(b, g2);
    const ComplexMatrix rhs = sk::power_nagy_foias(b, g1 + g2);
    EXPECT_LE(sk::op_norm(lhs - rhs), 1e-8 * sk::op_norm(rhs));
  }
}

TEST(FracpowLaws, ShiftedConsistency) {
  sk_test::Rng rng(37);
  const ComplexMatrix m = rng.coercive_sectorial(4);
  for (double lambda : {0.5, 3.0}) {
    const auto b = sk::classify_accretive(m + lambda * sk::identity(4));
    const ComplexMatrix e = sk::power_eig_oracle(b, 0.4);
    EXPECT_LE(rel(sk::power_balakrishnan(b, 0.4), e), 1e-6);
    EXPECT_LE(rel(sk::power_nagy_foias(b, 0.4), e), 1e-8);
  }
}

TEST(AccretiveSqrt, ScalarAndHermitian) {
  const Complex r = sk::accretive_sqrt(scalar(Complex(1, 1)))(0, 0);
  EXPECT_NEAR(std::arg(r), kPi / 8, 1e-15);
  sk_test::Rng rng(38);
  const ComplexMatrix h = rng.positive_definite(5, 0.3, 4.0);
  EXPECT_LE(sk::op_norm(sk::accretive_sqrt(sk::classify_accretive(h)) - sk::psd_sqrt(h)), 1e-11);
}

TEST(AccretiveSqrt, QuarterPiSector) {
  sk_test::Rng rng(39);
  for (int k = 0; k < 20; ++k) {
    const auto b = sk::classify_accretive(rng.coercive_sectorial(5));
    const ComplexMatrix r = sk::accretive_sqrt(b);
    EXPECT_LE(sk::op_norm(r * r - b.matrix()), 1e-10 * b.norm());
    EXPECT_LE(sk::min_semiangle(sk::classify_accretive(r)).alphaMin, kPi / 4 + 1e-6);
  }
}
