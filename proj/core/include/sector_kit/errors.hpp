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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace sector_kit {

enum class ErrorKind {
  kNotSquare,
  kNonFinite,
  kNotHermitian,
  kNotPSD,
  kBranchCut,
  kNoConvergence,
  kIllConditioned,
  kNotAccretive,
  kNotSectorial,
  kNotCoercive,
  kNotContraction,
  kSingularShift,
  kNotAnOperator,
  kSingularResolvent,
  kPairViolation,
  kSquareNotAccretive,
  kKernelNonzero,
  kSingularB,
  kSpecInvalid,
  kDomain,
  kParse,
  kIo,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every numeric or contract failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by classify_accretive; carries the eigenpair of Re(A) that violates accretivity.
class NotAccretiveError : public Error {
 public:
  NotAccretiveError(double eigenvalue, Eigen::VectorXcd witness)
      : Error(ErrorKind::kNotAccretive,
              "Re(A) has eigenvalue " + std::to_string(eigenvalue)),
        eigenvalue_(eigenvalue),
        witness_(std::move(witness)) {}

  double eigenvalue() const noexcept { return eigenvalue_; }
  const Eigen::VectorXcd& witness() const noexcept { return witness_; }

 private:
  double eigenvalue_;
  Eigen::VectorXcd witness_;
};

/// Raised when the sampled |Im p| / Re p over W(A) exceeds the unboundedness threshold.
class NotSectorialError : public Error {
 public:
  explicit NotSectorialError(double sampledRatio)
      : Error(ErrorKind::kNotSectorial,
              "sampled |Im p|/Re p reached " + std::to_string(sampledRatio)),
        sampledRatio_(sampledRatio) {}

  double sampled_ratio() const noexcept { return sampledRatio_; }

 private:
  double sampledRatio_;
};

/// Matrix JSON or config parse failure. line is 0 when the error is not positional.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field, std::size_t line = 0)
      : Error(ErrorKind::kParse, what), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

}  // namespace sector_kit
