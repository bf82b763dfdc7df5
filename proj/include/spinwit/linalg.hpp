#pragma once

#include <complex>
#include <limits>

#include <Eigen/Dense>

#include "spinwit/errors.hpp"

namespace spinwit {

using cplx = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = DenseMatrix<cplx>;
using ComplexVector = DenseVector<cplx>;

/// Largest matrix dimension the dense eigensolver accepts (12 spins).
inline constexpr Eigen::Index kMaxDimension = 4096;

/// Full eigensystem of a Hermitian matrix. Eigenvalues ascend; column k of
/// `eigenvectors` belongs to eigenvalue k.
template <typename Scalar>
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  DenseMatrix<Scalar> eigenvectors;

  [[nodiscard]] Eigen::Index dim() const { return eigenvalues.size(); }

  [[nodiscard]] DenseMatrix<Scalar> reconstruct() const {
    return eigenvectors * eigenvalues.cast<Scalar>().asDiagonal() * eigenvectors.adjoint();
  }
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max |M - M^dagger|
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return max_abs(m - m.adjoint());
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m) {
  return hermiticity_defect(m) < 1e-12 * (1.0 + max_abs(m));
}

/// Eigendecomposition of a Hermitian (real symmetric for Scalar = double)
/// matrix. Each eigenvector is rescaled so that its first component of
/// largest magnitude is real and positive.
///
/// Throws SymmetryViolation for non-Hermitian input, DimensionError above
/// kMaxDimension and NumericalFailure when the QL iteration does not converge.
template <typename Scalar>
SpectralDecomposition<Scalar> hermitian_eig(const DenseMatrix<Scalar>& m);

extern template SpectralDecomposition<double> hermitian_eig(const DenseMatrix<double>&);
extern template SpectralDecomposition<cplx> hermitian_eig(const DenseMatrix<cplx>&);

/// Applies the eigenvector phase convention in place, column by column.
template <typename Scalar>
void normalize_phases(DenseMatrix<Scalar>& vectors);

extern template void normalize_phases(DenseMatrix<double>&);
extern template void normalize_phases(DenseMatrix<cplx>&);

/// Kronecker product; result(i*rB + k, j*cB + l) = a(i, j) * b(k, l).
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DA::Scalar,
                                                      typename DB::Scalar>::ReturnType;
  DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Tr(A B) in O(rows * cols) without forming the product.
template <typename DA, typename DB>
auto trace_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: incompatible shapes");
  }
  return a.cwiseProduct(b.transpose()).sum();
}

} // namespace spinwit
