#include "spinwit/witness.hpp"

#include <cmath>
#include <string>

namespace spinwit {

namespace {

constexpr double kStateIndependenceTolerance = 1e-12;

bool real_or_imaginary(cplx v) {
  return std::abs(v.imag()) <= kStateIndependenceTolerance ||
         std::abs(v.real()) <= kStateIndependenceTolerance;
}

} // namespace

Eigen::Matrix4cd pauli_pair(Pauli a, Pauli b) { return kron(pauli_matrix(a), pauli_matrix(b)); }

const PairOperatorBasis& PairOperatorBasis::instance() {
  static const PairOperatorBasis basis = [] {
    const auto xx = pauli_pair(Pauli::X, Pauli::X);
    const auto yy = pauli_pair(Pauli::Y, Pauli::Y);
    const auto xy = pauli_pair(Pauli::X, Pauli::Y);
    const auto yx = pauli_pair(Pauli::Y, Pauli::X);
    const auto zi = pauli_pair(Pauli::Z, Pauli::I);
    const auto iz = pauli_pair(Pauli::I, Pauli::Z);
    PairOperatorBasis b;
    b.t_plus = 0.5 * (xx + yy);
    b.t_minus = 0.5 * (xx - yy);
    b.r_plus = 0.5 * (xy + yx);
    b.r_minus = 0.5 * (xy - yx);
    b.z_plus = 0.5 * (zi + iz);
    b.z_minus = 0.5 * (zi - iz);
    return b;
  }();
  return basis;
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
  case WitnessKind::branch1: return "branch1";
  case WitnessKind::branch2: return "branch2";
  case WitnessKind::optimal: return "optimal";
  case WitnessKind::heisenberg: return "heisenberg";
  case WitnessKind::ising: return "ising";
  }
  return "unknown";
}

Eigen::Matrix4cd WitnessOperator::from_coefficients() const {
  const auto& basis = PairOperatorBasis::instance();
  const Eigen::Matrix4cd identity = Eigen::Matrix4cd::Identity();
  const Eigen::Matrix4cd zz = pauli_pair(Pauli::Z, Pauli::Z);
  switch (kind) {
  case WitnessKind::branch1:
    return coefficient.imag() * basis.r_minus + coefficient.real() * basis.t_plus +
           z_coeff * basis.z_plus + 0.25 * (identity + zz);
  case WitnessKind::branch2:
    return -coefficient.imag() * basis.r_plus + coefficient.real() * basis.t_minus +
           z_coeff * basis.z_minus + 0.25 * (identity - zz);
  default:
    return matrix;
  }
}

WitnessOperator spin_witness_from_state(const XStateView& x, int branch) {
  WitnessOperator op;
  if (branch == 1) {
    const double norm = std::sqrt((x.a - x.d) * (x.a - x.d) + 4.0 * std::norm(x.z));
    if (!(norm > 0.0)) {
      throw DegenerateBranch("branch 1 normalizer vanishes (a = d and z = 0)");
    }
    op.kind = WitnessKind::branch1;
    op.coefficient = -x.z / norm;
    op.z_coeff = -0.5 * (x.a - x.d) / norm;
    op.state_independent =
        std::abs(x.a - x.d) <= kStateIndependenceTolerance && real_or_imaginary(x.z);
  } else if (branch == 2) {
    const double norm = std::sqrt((x.b - x.c) * (x.b - x.c) + 4.0 * std::norm(x.y));
    if (!(norm > 0.0)) {
      throw DegenerateBranch("branch 2 normalizer vanishes (b = c and y = 0)");
    }
    op.kind = WitnessKind::branch2;
    op.coefficient = -x.y / norm;
    op.z_coeff = -0.5 * (x.b - x.c) / norm;
    op.state_independent =
        std::abs(x.b - x.c) <= kStateIndependenceTolerance && real_or_imaginary(x.y);
  } else {
    throw InvalidInput("branch must be 1 or 2, got " + std::to_string(branch));
  }
  op.matrix = op.from_coefficients();
  return op;
}

WitnessOperator optimal_witness_from_state(const TwoSiteDensity& rho) {
  const NegativityResult neg = negativity(rho);
  const Eigen::Vector4cd v = neg.spectrum.diagonalizer.eigenvectors.col(0);
  WitnessOperator op;
  op.kind = WitnessKind::optimal;
  op.matrix = partial_transpose(v * v.adjoint());
  return op;
}

WitnessOperator heisenberg_witness() {
  WitnessOperator op;
  op.kind = WitnessKind::heisenberg;
  op.matrix = 0.25 * (pauli_pair(Pauli::X, Pauli::X) + pauli_pair(Pauli::Y, Pauli::Y) +
                      pauli_pair(Pauli::Z, Pauli::Z) + Eigen::Matrix4cd::Identity());
  op.coefficient = 0.5;
  op.state_independent = true;
  return op;
}

WitnessOperator ising_witness() {
  WitnessOperator op;
  op.kind = WitnessKind::ising;
  op.matrix = -0.25 * (pauli_pair(Pauli::X, Pauli::X) - pauli_pair(Pauli::Y, Pauli::Y) +
                       pauli_pair(Pauli::Z, Pauli::Z) - Eigen::Matrix4cd::Identity());
  op.coefficient = -0.5;
  op.state_independent = true;
  return op;
}

WitnessOperator witness_for_state(const TwoSiteDensity& rho) {
  try {
    const XStateView x = extract_x_state(rho);
    return spin_witness_from_state(x, mu_closed_forms(x).branch);
  } catch (const StructureViolation&) {
  } catch (const DegenerateBranch&) {
  }
  return optimal_witness_from_state(rho);
}

double witness_expectation(const WitnessOperator& op, const TwoSiteDensity& rho) {
  return trace_product(op.matrix, rho).real();
}

double witness_denominator(const GeneralChainModel& model) {
  return model.exchange_J.cwiseAbs().maxCoeff() + 2.0 * model.dm_A.cwiseAbs().maxCoeff() +
         model.cvec_C.squaredNorm();
}

double hamiltonian_witness(const ThermalObservables& obs, const GeneralChainModel& model) {
  const double denominator = witness_denominator(model);
  if (!(denominator > 0.0)) {
    throw WitnessUndefined("Hamiltonian witness undefined: J + 2A + |C|^2 = 0");
  }
  return std::abs(obs.u + model.field_B.dot(obs.m)) / denominator;
}

} // namespace spinwit
