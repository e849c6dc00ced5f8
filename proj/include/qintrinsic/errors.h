// Copyright 2026 The qintrinsic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QINTRINSIC_ERRORS_H_
#define QINTRINSIC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qintrinsic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  /// Stable machine-readable error name, e.g. "NotPsd".
  const std::string &kind() const { return kind_; }

 private:
  std::string kind_;
};

class NonHermitian : public Error {
 public:
  explicit NonHermitian(double residual)
      : Error("NonHermitian", "matrix is not Hermitian (residual " + std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

class NotPsd : public Error {
 public:
  NotPsd(std::ptrdiff_t index, double min_eigenvalue)
      : Error("NotPsd", "element " + std::to_string(index) + " is not positive semidefinite (min eigenvalue " +
                            std::to_string(min_eigenvalue) + ")"),
        index(index),
        min_eigenvalue(min_eigenvalue) {}
  std::ptrdiff_t index;  // -1 when the matrix is not part of a list
  double min_eigenvalue;
};

class NotHermitian : public Error {
 public:
  NotHermitian(std::size_t index, double residual)
      : Error("NotHermitian",
              "element " + std::to_string(index) + " is not Hermitian (residual " + std::to_string(residual) + ")"),
        index(index),
        residual(residual) {}
  std::size_t index;
  double residual;
};

class IncompleteSum : public Error {
 public:
  explicit IncompleteSum(double residual)
      : Error("IncompleteSum", "elements do not sum to the identity (residual " + std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

class InvalidDistribution : public Error {
 public:
  explicit InvalidDistribution(const std::string &why) : Error("InvalidDistribution", why) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string &why) : Error("DimensionMismatch", why) {}
};

class NotIsometry : public Error {
 public:
  explicit NotIsometry(double residual)
      : Error("NotIsometry", "columns are not orthonormal (residual " + std::to_string(residual) + ")"),
        residual(residual) {}
  double residual;
};

class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string &why) : Error("InvalidState", why) {}
};

class MaxDepthExceeded : public Error {
 public:
  explicit MaxDepthExceeded(int depth)
      : Error("MaxDepthExceeded", "splitting did not terminate within depth " + std::to_string(depth)) {}
};

class NotExtremalInput : public Error {
 public:
  NotExtremalInput() : Error("NotExtremalInput", "POVM elements are linearly dependent; use r_cf") {}
};

class NoFeasiblePoint : public Error {
 public:
  explicit NoFeasiblePoint(double residual)
      : Error("NoFeasiblePoint", "no decomposition reached the feasibility tolerance (best residual " +
                                     std::to_string(residual) + ")") {}
};

class UnsupportedDimension : public Error {
 public:
  explicit UnsupportedDimension(int d)
      : Error("UnsupportedDimension", "dimension " + std::to_string(d) + " is not supported here") {}
};

}  // namespace qintrinsic

#endif  // QINTRINSIC_ERRORS_H_
