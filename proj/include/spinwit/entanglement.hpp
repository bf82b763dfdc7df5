#pragma once

#include <array>

#include "spinwit/linalg.hpp"

namespace spinwit {

/// Two-spin density matrix in the ordered basis |00>, |01>, |10>, |11>
/// (first spin is the most significant bit).
using TwoSiteDensity = Eigen::Matrix4cd;

/// mu_min below this counts as entangled.
inline constexpr double kEntanglementGuard = 1e-12;
inline constexpr double kXStateTolerance = 1e-9;

/// Throws InvalidInput unless rho is Hermitian, unit-trace within 1e-10 and
/// positive semidefinite within -1e-10.
void validate_density(const TwoSiteDensity& rho);

/// Transpose on the first spin: <ab| rho^TA |cd> = <cb| rho |ad>.
Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho);

struct PartialTransposeSpectrum {
  Eigen::Vector4d mu;
  double mu_min = 0.0;
  SpectralDecomposition<cplx> diagonalizer;
};

struct NegativityResult {
  double negativity = 0.0;
  PartialTransposeSpectrum spectrum;
};

/// 2 max(0, -mu_min) over the partial-transpose spectrum.
NegativityResult negativity(const TwoSiteDensity& rho);

inline bool is_entangled(double mu_min) { return mu_min < -kEntanglementGuard; }

/// The symmetry-constrained entries of an X-shaped two-spin state:
///
///     [ a  0  0  y ]
///     [ 0  b  z  0 ]
///     [ 0  z* c  0 ]
///     [ y* 0  0  d ]
struct XStateView {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  cplx y{0.0, 0.0};
  cplx z{0.0, 0.0};

  [[nodiscard]] TwoSiteDensity to_matrix() const;
  /// Unit trace, non-negative diagonal, ad >= |y|^2 and bc >= |z|^2, all
  /// within `tol`.
  [[nodiscard]] bool is_valid(double tol = 1e-10) const;
};

/// Reads the X pattern; throws StructureViolation naming the first entry
/// outside the pattern whose magnitude exceeds `tol`.
XStateView extract_x_state(const TwoSiteDensity& rho, double tol = kXStateTolerance);

struct ClosedFormMu {
  double mu1 = 0.0;  // lowest eigenvalue of the {|00>, |11>} block of rho^TA
  double mu2 = 0.0;  // lowest eigenvalue of the {|01>, |10>} block
  double mu_min = 0.0;
  int branch = 1;    // 1 on ties
};

/// mu1 = (a + d - sqrt((a-d)^2 + 4|z|^2)) / 2,
/// mu2 = (b + c - sqrt((b-c)^2 + 4|y|^2)) / 2.
/// Throws std::logic_error if a negative branch contradicts ad < bc (resp.
/// bc < ad), which can only happen for an invalid view.
ClosedFormMu mu_closed_forms(const XStateView& x);

/// All four partial-transpose eigenvalues of an X state, ascending.
Eigen::Vector4d x_state_pt_eigenvalues(const XStateView& x);

} // namespace spinwit
