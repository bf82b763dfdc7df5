#pragma once

#include <string_view>

#include "spinwit/entanglement.hpp"
#include "spinwit/models.hpp"
#include "spinwit/thermal.hpp"

namespace spinwit {

/// Two-spin operators spanning the X-state algebra:
///   T+- = (XX +- YY)/2,  R+- = (XY +- YX)/2,  Z+- = (ZI +- IZ)/2.
struct PairOperatorBasis {
  Eigen::Matrix4cd t_plus;
  Eigen::Matrix4cd t_minus;
  Eigen::Matrix4cd r_plus;
  Eigen::Matrix4cd r_minus;
  Eigen::Matrix4cd z_plus;
  Eigen::Matrix4cd z_minus;

  static const PairOperatorBasis& instance();
};

/// sigma^a (x) sigma^b as a 4x4 matrix.
Eigen::Matrix4cd pauli_pair(Pauli a, Pauli b);

enum class WitnessKind { branch1, branch2, optimal, heisenberg, ising };

std::string_view to_string(WitnessKind kind);

/// A two-spin witness operator R with provenance. For branch operators,
///   branch 1: R = Im(f) R- + Re(f) T+ + z_coeff Z+ + (II + ZZ)/4,
///   branch 2: R = -Im(g) R+ + Re(g) T- + z_coeff Z- + (II - ZZ)/4,
/// and `coefficient` holds f or g.
struct WitnessOperator {
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
  WitnessKind kind = WitnessKind::optimal;
  cplx coefficient{0.0, 0.0};
  double z_coeff = 0.0;
  /// True when the operator does not depend on the state it was built from,
  /// so measuring its expectation alone decides entanglement.
  bool state_independent = false;

  /// Rebuilds the branch operator from the stored coefficients.
  [[nodiscard]] Eigen::Matrix4cd from_coefficients() const;
};

/// Witness reproducing mu1 (branch 1) or mu2 (branch 2) of `x` as Tr(R rho).
/// Throws DegenerateBranch when the branch's normalizer vanishes.
WitnessOperator spin_witness_from_state(const XStateView& x, int branch);

/// R = (v v^dagger)^TA for the lowest eigenvector v of rho^TA, so that
/// Tr(R rho) = mu_min.
WitnessOperator optimal_witness_from_state(const TwoSiteDensity& rho);

/// (XX + YY + ZZ + II) / 4
WitnessOperator heisenberg_witness();
/// -(XX - YY + ZZ - II) / 4
WitnessOperator ising_witness();

/// Branch witness for the minimizing closed form when rho is X-shaped and
/// the branch is non-degenerate, the projector witness otherwise.
WitnessOperator witness_for_state(const TwoSiteDensity& rho);

/// Tr(R rho), real for Hermitian R and rho.
double witness_expectation(const WitnessOperator& op, const TwoSiteDensity& rho);

/// J + 2A + |C|^2 with J = max|J_a| and A = max|A_a|.
double witness_denominator(const GeneralChainModel& model);

/// W = |u + B.m| / (J + 2A + |C|^2). Separable states have W <= 1.
/// Throws WitnessUndefined when the denominator is zero.
double hamiltonian_witness(const ThermalObservables& obs, const GeneralChainModel& model);

inline bool w_certifies(double w_value) { return w_value > 1.0 + kEntanglementGuard; }
inline bool r_certifies(double r_expect) { return r_expect < -kEntanglementGuard; }

enum class Verdict { entangled, undetected };

struct WitnessReport {
  double w_value = 0.0;
  double r_expect = 0.0;
  double mu_min = 0.0;
  double negativity = 0.0;
  int branch = 0;     // minimizing closed-form branch, 0 if not X-shaped
  WitnessKind r_kind = WitnessKind::optimal;
  Verdict verdict = Verdict::undetected;
};

} // namespace spinwit
