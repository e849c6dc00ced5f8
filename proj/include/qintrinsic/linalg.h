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

#ifndef QINTRINSIC_LINALG_H_
#define QINTRINSIC_LINALG_H_

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qintrinsic {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default absolute tolerance for Hermiticity, normalization and PSD dust.
inline constexpr double kTolerance = 1e-9;

/// Unit vector in C^d.
class Ket {
 public:
  /// Throws InvalidState unless the norm is 1 within kTolerance.
  explicit Ket(ComplexVector amplitudes);

  static Ket normalized(const ComplexVector &v);
  static Ket basis(int dim, int index);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector &amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityState {
 public:
  /// Throws NonHermitian or InvalidState when an invariant fails.
  explicit DensityState(ComplexMatrix matrix);

  static DensityState from_ket(const Ket &ket);
  static DensityState maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix &matrix() const { return matrix_; }
  double purity() const;

 private:
  ComplexMatrix matrix_;
};

/// Spectral decomposition with eigenvalues sorted in descending order.
/// Column k of `vectors` belongs to `values[k]`.
struct Eigensystem {
  std::vector<double> values;
  ComplexMatrix vectors;

  ComplexVector vector(int k) const { return vectors.col(k); }
};

double max_abs(const ComplexMatrix &m);

/// max |H - H^dagger| entry.
double hermitian_residual(const ComplexMatrix &h);

/// Throws NonHermitian if the residual exceeds tol * max(1, max_abs(h)).
Eigensystem hermitian_eig(const ComplexMatrix &h, double tol = kTolerance);

/// Like hermitian_eig, but inside every cluster of eigenvalues closer than
/// `cluster_tol` the basis is rotated to diagonalize the compression of
/// `tie_breaker`. Used to pick eigenbases adapted to a state.
Eigensystem hermitian_eig_resolved(const ComplexMatrix &h, const ComplexMatrix &tie_breaker,
                                   double cluster_tol = kTolerance);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h, double tol = kTolerance);

/// H(p) in bits. Entries above -1e-12 are clamped to zero; the sum must be
/// 1 within kTolerance.
double shannon_entropy(std::span<const double> p);

/// -sum x log2 x over the given values, skipping non-positive ones. No
/// normalization check; used for unnormalized spectra.
double entropy_terms(std::span<const double> values);

/// -tr(X log2 X) for a PSD matrix of any trace.
double psd_entropy(const ComplexMatrix &x);

double von_neumann_entropy(const DensityState &rho);

/// S(rho || sigma) in bits; +infinity when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityState &rho, const DensityState &sigma);

/// Hermitian PSD square root. Throws NotPsd below -kTolerance.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &m);

enum class Subsystem { A, B };

/// Partial trace of an operator on A (x) B with index a * dim_b + b. `keep`
/// names the factor that survives.
ComplexMatrix partial_trace(const ComplexMatrix &x, int dim_a, int dim_b, Subsystem keep);

/// Extends an n x d isometry to an n x n unitary whose first d columns equal
/// `v`. Remaining columns come from Gram-Schmidt over the standard basis.
ComplexMatrix complete_isometry_to_unitary(const ComplexMatrix &v);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Real coordinates of a Hermitian matrix: diagonal entries followed by the
/// real and imaginary parts of the strict upper triangle. With `isometric`
/// the off-diagonal coordinates are scaled by sqrt(2) so that the Euclidean
/// norm equals the Frobenius norm.
RealVector hermitian_to_real(const ComplexMatrix &h, bool isometric = false);
ComplexMatrix real_to_hermitian(const RealVector &x, int dim, bool isometric = false);

}  // namespace qintrinsic

#endif  // QINTRINSIC_LINALG_H_
