#include "spinwit/models.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace spinwit {

namespace {

constexpr Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};

void check_spin_count(int n_spins) {
  if (n_spins < 2) {
    throw InvalidInput("chain needs at least 2 spins, got " + std::to_string(n_spins));
  }
  if (n_spins > kMaxSpins) {
    throw DimensionError("chain of " + std::to_string(n_spins) + " spins exceeds the cap of " +
                         std::to_string(kMaxSpins));
  }
}

void check_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InvalidInput(std::string("parameter ") + name + " is not finite");
  }
}

void check_finite(const Eigen::Vector3d& value, const char* name) {
  if (!value.allFinite()) {
    throw InvalidInput(std::string("parameter ") + name + " is not finite");
  }
}

} // namespace

std::vector<std::pair<int, int>> chain_bonds(int n_spins, Boundary boundary) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < n_spins; ++i) {
    bonds.emplace_back(i, i + 1);
  }
  if (boundary == Boundary::periodic && n_spins >= 3) {
    bonds.emplace_back(n_spins - 1, 0);
  }
  return bonds;
}

void GeneralChainModel::validate() const {
  check_spin_count(n_spins);
  check_finite(field_B, "B");
  check_finite(exchange_J, "J");
  check_finite(dm_A, "A");
  check_finite(cvec_C, "C");
}

XYZChainModel XYZChainModel::heisenberg(double j, int n_spins, Boundary boundary) {
  XYZChainModel m;
  m.n_spins = n_spins;
  m.jx = m.jy = m.jz = j;
  m.boundary = boundary;
  m.preset = XYZPreset::heisenberg;
  return m;
}

XYZChainModel XYZChainModel::transverse_ising(double j, double lambda, int n_spins,
                                              Boundary boundary) {
  XYZChainModel m;
  m.n_spins = n_spins;
  m.jx = -lambda * j;
  m.h = -j;
  m.boundary = boundary;
  m.preset = XYZPreset::transverse_ising;
  m.lambda = lambda;
  return m;
}

void XYZChainModel::validate() const {
  check_spin_count(n_spins);
  for (auto [value, name] : {std::pair{jx, "jx"}, {jy, "jy"}, {jz, "jz"}, {jxy, "jxy"},
                             {jyx, "jyx"}, {h, "h"}}) {
    check_finite(value, name);
  }
}

std::optional<GeneralChainModel> as_general(const XYZChainModel& model) {
  if (model.jxy != -model.jyx) {
    return std::nullopt;
  }
  GeneralChainModel g;
  g.n_spins = model.n_spins;
  g.boundary = model.boundary;
  g.exchange_J = {model.jx, model.jy, model.jz};
  g.dm_A = {0.0, 0.0, 0.5 * (model.jxy - model.jyx)};
  g.field_B = {0.0, 0.0, -model.h};
  return g;
}

PauliSum hamiltonian_terms(const GeneralChainModel& model) {
  model.validate();
  const int n = model.n_spins;
  PauliSum h(n);
  for (int site = 0; site < n; ++site) {
    for (int a = 0; a < 3; ++a) {
      h.add(-model.field_B[a], {{site, kAxes[a]}});
    }
  }
  const auto& A = model.dm_A;
  const auto& C = model.cvec_C;
  for (auto [i, j] : chain_bonds(n, model.boundary)) {
    for (int a = 0; a < 3; ++a) {
      h.add(model.exchange_J[a], {{i, kAxes[a]}, {j, kAxes[a]}});
    }
    // A . (s_i x s_j), cyclic over (x, y, z)
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3;
      const int c = (a + 2) % 3;
      h.add(A[a], {{i, kAxes[b]}, {j, kAxes[c]}});
      h.add(-A[a], {{i, kAxes[c]}, {j, kAxes[b]}});
    }
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        h.add(C[a] * C[b], {{i, kAxes[a]}, {j, kAxes[b]}});
      }
    }
  }
  return h.pruned(0.0);
}

PauliSum hamiltonian_terms(const XYZChainModel& model) {
  model.validate();
  const int n = model.n_spins;
  PauliSum h(n);
  for (auto [i, j] : chain_bonds(n, model.boundary)) {
    h.add(model.jx, {{i, Pauli::X}, {j, Pauli::X}});
    h.add(model.jy, {{i, Pauli::Y}, {j, Pauli::Y}});
    h.add(model.jz, {{i, Pauli::Z}, {j, Pauli::Z}});
    h.add(model.jxy, {{i, Pauli::X}, {j, Pauli::Y}});
    h.add(model.jyx, {{i, Pauli::Y}, {j, Pauli::X}});
  }
  for (int site = 0; site < n; ++site) {
    h.add(model.h, {{site, Pauli::Z}});
  }
  return h.pruned(0.0);
}

ComplexMatrix build_hamiltonian(const GeneralChainModel& model) {
  return hamiltonian_terms(model).to_dense();
}

ComplexMatrix build_hamiltonian(const XYZChainModel& model) {
  return hamiltonian_terms(model).to_dense();
}

LocalRotation::LocalRotation(Eigen::Vector3d shared) : angles_{shared}, shared_(true) {
  check_finite(shared, "theta");
}

LocalRotation::LocalRotation(std::vector<Eigen::Vector3d> per_site)
    : angles_(std::move(per_site)), shared_(false) {
  for (const auto& theta : angles_) {
    check_finite(theta, "theta");
  }
}

const Eigen::Vector3d& LocalRotation::angles(int site) const {
  return shared_ ? angles_.front() : angles_.at(static_cast<std::size_t>(site));
}

Eigen::Matrix2cd LocalRotation::unitary(int site) const {
  const Eigen::Vector3d& theta = angles(site);
  const double t = theta.norm();
  Eigen::Matrix2cd u = std::cos(t) * Eigen::Matrix2cd::Identity();
  if (t > 0.0) {
    const Eigen::Vector3d axis = theta / t;
    for (int a = 0; a < 3; ++a) {
      u += cplx{0.0, std::sin(t) * axis[a]} * pauli_matrix(kAxes[a]);
    }
  }
  return u;
}

Eigen::Matrix3d LocalRotation::adjoint_action(int site) const {
  const Eigen::Matrix2cd u = unitary(site);
  Eigen::Matrix3d o;
  for (int a = 0; a < 3; ++a) {
    const Eigen::Matrix2cd rotated = u * pauli_matrix(kAxes[a]) * u.adjoint();
    for (int b = 0; b < 3; ++b) {
      o(b, a) = 0.5 * (pauli_matrix(kAxes[b]) * rotated).trace().real();
    }
  }
  return o;
}

void LocalRotation::check_sites(int n_spins) const {
  if (!shared_ && static_cast<int>(angles_.size()) != n_spins) {
    throw DimensionError("LocalRotation covers " + std::to_string(angles_.size()) +
                         " sites, operator has " + std::to_string(n_spins));
  }
}

ComplexMatrix conjugate_local(const ComplexMatrix& hamiltonian, const LocalRotation& rotation) {
  const Eigen::Index dim = hamiltonian.rows();
  if (dim != hamiltonian.cols() || dim < 2 || !std::has_single_bit(static_cast<std::uint64_t>(dim))) {
    throw DimensionError("conjugate_local: matrix is not a square 2^N operator");
  }
  const int n = std::countr_zero(static_cast<std::uint64_t>(dim));
  rotation.check_sites(n);
  ComplexMatrix out = hamiltonian;
  for (int site = 0; site < n; ++site) {
    const Eigen::Matrix2cd u = rotation.unitary(site);
    if (u == Eigen::Matrix2cd::Identity()) {
      continue;
    }
    const Eigen::Matrix2cd ud = u.adjoint();
    const BasisState bit = site_bit(n, site);
    for (Eigen::Index i0 = 0; i0 < dim; ++i0) {
      if (static_cast<BasisState>(i0) & bit) {
        continue;
      }
      const Eigen::Index i1 = i0 | bit;
      // rows: U * M
      const Eigen::RowVectorXcd r0 = out.row(i0);
      const Eigen::RowVectorXcd r1 = out.row(i1);
      out.row(i0) = u(0, 0) * r0 + u(0, 1) * r1;
      out.row(i1) = u(1, 0) * r0 + u(1, 1) * r1;
    }
    for (Eigen::Index j0 = 0; j0 < dim; ++j0) {
      if (static_cast<BasisState>(j0) & bit) {
        continue;
      }
      const Eigen::Index j1 = j0 | bit;
      // columns: M * U^dagger
      const ComplexVector c0 = out.col(j0);
      const ComplexVector c1 = out.col(j1);
      out.col(j0) = c0 * ud(0, 0) + c1 * ud(1, 0);
      out.col(j1) = c0 * ud(0, 1) + c1 * ud(1, 1);
    }
  }
  return out;
}

PauliSum conjugate_local(const PauliSum& hamiltonian, const LocalRotation& rotation) {
  const int n = hamiltonian.n_spins();
  rotation.check_sites(n);
  std::vector<Eigen::Matrix3d> actions;
  actions.reserve(static_cast<std::size_t>(n));
  for (int site = 0; site < n; ++site) {
    actions.push_back(rotation.adjoint_action(site));
  }

  PauliSum out(n);
  for (const auto& [string, coeff] : hamiltonian.terms()) {
    // Expand the product of rotated single-site Paulis one site at a time.
    std::vector<std::pair<PauliString, cplx>> partial{{PauliString{}, coeff}};
    for (int site = 0; site < n; ++site) {
      const Pauli p = string.at(n, site);
      if (p == Pauli::I) {
        continue;
      }
      const int a = static_cast<int>(p) - 1;
      const BasisState bit = site_bit(n, site);
      std::vector<std::pair<PauliString, cplx>> next;
      for (const auto& [prefix, weight] : partial) {
        for (int b = 0; b < 3; ++b) {
          const double o = actions[static_cast<std::size_t>(site)](b, a);
          if (o == 0.0) {
            continue;
          }
          PauliString s = prefix;
          if (kAxes[b] != Pauli::Z) s.x_mask |= bit;
          if (kAxes[b] != Pauli::X) s.z_mask |= bit;
          next.emplace_back(s, weight * o);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [s, weight] : partial) {
      out.add(weight, s);
    }
  }
  return out.pruned(1e-15);
}

std::vector<std::size_t> SectorDecomposition::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : sectors) {
    out.push_back(s.basis.size());
  }
  return out;
}

double diagonal_commutator_norm(const PauliSum& hamiltonian, const std::vector<double>& diagonal) {
  double worst = 0.0;
  const auto groups = hamiltonian.flip_groups();
  for (Eigen::Index s = 0; s < hamiltonian.dim(); ++s) {
    const auto state = static_cast<BasisState>(s);
    for (const auto& group : groups) {
      if (group.x_mask == 0) {
        continue;
      }
      const double gap =
          std::abs(diagonal[state] - diagonal[state ^ group.x_mask]);
      if (gap != 0.0) {
        worst = std::max(worst, std::abs(group.amplitude(state)) * gap);
      }
    }
  }
  return worst;
}

namespace {

constexpr double kCommutatorTolerance = 1e-12;

} // namespace

SectorDecomposition symmetry_sectors(const PauliSum& hamiltonian) {
  const int n = hamiltonian.n_spins();
  const auto dim = static_cast<std::size_t>(hamiltonian.dim());
  std::vector<double> total_z(dim);
  std::vector<double> parity(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    const int down = std::popcount(static_cast<BasisState>(s));
    total_z[s] = n - 2 * down;
    parity[s] = (down & 1) ? -1.0 : 1.0;
  }

  SectorDecomposition out;
  if (diagonal_commutator_norm(hamiltonian, total_z) < kCommutatorTolerance) {
    out.kind = SectorKind::total_sz;
    out.sectors.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      out.sectors[static_cast<std::size_t>(k)].label = "Mz=" + std::to_string(n - 2 * k);
    }
    for (std::size_t s = 0; s < dim; ++s) {
      out.sectors[static_cast<std::size_t>(std::popcount(static_cast<BasisState>(s)))].basis.push_back(
          static_cast<BasisState>(s));
    }
  } else if (diagonal_commutator_norm(hamiltonian, parity) < kCommutatorTolerance) {
    out.kind = SectorKind::parity;
    out.sectors = {{"parity=+1", {}}, {"parity=-1", {}}};
    for (std::size_t s = 0; s < dim; ++s) {
      out.sectors[parity[s] > 0 ? 0 : 1].basis.push_back(static_cast<BasisState>(s));
    }
  } else {
    out.kind = SectorKind::full;
    out.sectors = {{"full", {}}};
    out.sectors[0].basis.resize(dim);
    for (std::size_t s = 0; s < dim; ++s) {
      out.sectors[0].basis[s] = static_cast<BasisState>(s);
    }
  }
  return out;
}

SectorDecomposition symmetry_sectors(const GeneralChainModel& model) {
  return symmetry_sectors(hamiltonian_terms(model));
}

SectorDecomposition symmetry_sectors(const XYZChainModel& model) {
  return symmetry_sectors(hamiltonian_terms(model));
}

} // namespace spinwit
