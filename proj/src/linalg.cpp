#include "spinwit/linalg.hpp"

#include <cmath>
#include <string>

namespace spinwit {

namespace {

// Components within this relative distance of the largest magnitude count as
// ties; the first of them fixes the phase.
constexpr double kPhaseTieTolerance = 1e-8;

template <typename Scalar>
Scalar phase_of(Scalar value) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return value < 0.0 ? -1.0 : 1.0;
  } else {
    return value / std::abs(value);
  }
}

} // namespace

template <typename Scalar>
void normalize_phases(DenseMatrix<Scalar>& vectors) {
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    auto column = vectors.col(k);
    const double largest = column.cwiseAbs().maxCoeff();
    if (largest == 0.0) {
      continue;
    }
    Eigen::Index pivot = 0;
    while (std::abs(column(pivot)) < largest * (1.0 - kPhaseTieTolerance)) {
      ++pivot;
    }
    const Scalar phase = phase_of(column(pivot));
    column *= Eigen::numext::conj(phase);
    if constexpr (!std::is_same_v<Scalar, double>) {
      column(pivot) = std::abs(column(pivot));
    }
  }
}

template <typename Scalar>
SpectralDecomposition<Scalar> hermitian_eig(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eig: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
  }
  if (m.rows() > kMaxDimension) {
    throw DimensionError("hermitian_eig: dimension " + std::to_string(m.rows()) +
                         " exceeds the cap of " + std::to_string(kMaxDimension));
  }
  if (!is_hermitian(m)) {
    throw SymmetryViolation("hermitian_eig: input is not Hermitian (defect " +
                            std::to_string(hermiticity_defect(m)) + ")");
  }
  SpectralDecomposition<Scalar> out;
  if (m.rows() == 0) {
    out.eigenvectors.resize(0, 0);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("hermitian_eig: QL iteration did not converge");
  }
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  normalize_phases(out.eigenvectors);
  return out;
}

template SpectralDecomposition<double> hermitian_eig(const DenseMatrix<double>&);
template SpectralDecomposition<cplx> hermitian_eig(const DenseMatrix<cplx>&);
template void normalize_phases(DenseMatrix<double>&);
template void normalize_phases(DenseMatrix<cplx>&);

} // namespace spinwit
