#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinwit/pauli.hpp"

namespace spinwit {

enum class Boundary { periodic, open };

/// Spin count cap that keeps the full spectrum within kMaxDimension.
inline constexpr int kMaxSpins = 12;

/// Nearest-neighbour bonds (0-based). Periodic chains add (n-1, 0) for
/// n >= 3; a periodic two-spin chain has its single bond counted once.
std::vector<std::pair<int, int>> chain_bonds(int n_spins, Boundary boundary);

/// H = -B . sum_i sigma_i
///     + sum_bonds [ sum_a J_a s_i^a s_j^a + A . (s_i x s_j) + (C . s_i)(C . s_j) ]
struct GeneralChainModel {
  int n_spins = 2;
  Eigen::Vector3d field_B = Eigen::Vector3d::Zero();
  Eigen::Vector3d exchange_J = Eigen::Vector3d::Zero();
  Eigen::Vector3d dm_A = Eigen::Vector3d::Zero();
  Eigen::Vector3d cvec_C = Eigen::Vector3d::Zero();
  Boundary boundary = Boundary::periodic;

  void validate() const;
};

enum class XYZPreset { none, heisenberg, transverse_ising };

/// H = sum_bonds [ jx XX + jy YY + jz ZZ + jxy XY + jyx YX ] + h sum_i Z_i.
///
/// The field is applied to every site, so open chains keep a uniform field
/// even though they have one fewer bond than sites.
struct XYZChainModel {
  int n_spins = 2;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double jxy = 0.0;
  double jyx = 0.0;
  double h = 0.0;
  Boundary boundary = Boundary::periodic;
  XYZPreset preset = XYZPreset::none;
  std::optional<double> lambda;

  static XYZChainModel heisenberg(double j, int n_spins, Boundary boundary = Boundary::periodic);
  /// H = -J sum (lambda X_i X_{i+1} + Z_i)
  static XYZChainModel transverse_ising(double j, double lambda, int n_spins,
                                        Boundary boundary = Boundary::periodic);

  void validate() const;
};

/// Rewrites an XYZ model in (B, J, A, C) form. Only possible when the
/// off-diagonal exchange is purely antisymmetric (jxy == -jyx), which the
/// z-component of the Dzyaloshinskii-Moriya vector then carries.
std::optional<GeneralChainModel> as_general(const XYZChainModel& model);

PauliSum hamiltonian_terms(const GeneralChainModel& model);
PauliSum hamiltonian_terms(const XYZChainModel& model);

/// Dense 2^N x 2^N Hamiltonian.
ComplexMatrix build_hamiltonian(const GeneralChainModel& model);
ComplexMatrix build_hamiltonian(const XYZChainModel& model);

/// Site rotations U(theta) = exp(i theta . sigma). Either one angle vector
/// shared by every site or one per site.
class LocalRotation {
public:
  explicit LocalRotation(Eigen::Vector3d shared);
  explicit LocalRotation(std::vector<Eigen::Vector3d> per_site);

  [[nodiscard]] bool is_shared() const { return shared_; }
  [[nodiscard]] const Eigen::Vector3d& angles(int site) const;
  [[nodiscard]] Eigen::Matrix2cd unitary(int site) const;
  /// O with U sigma^a U^dagger = sum_b O(b, a) sigma^b.
  [[nodiscard]] Eigen::Matrix3d adjoint_action(int site) const;
  /// Throws DimensionError unless the rotation covers exactly n sites.
  void check_sites(int n_spins) const;

private:
  std::vector<Eigen::Vector3d> angles_;
  bool shared_;
};

/// (prod_i U_i) H (prod_i U_i)^dagger, applied site by site in O(N dim^2).
ComplexMatrix conjugate_local(const ComplexMatrix& hamiltonian, const LocalRotation& rotation);
/// Same conjugation carried out exactly on the Pauli expansion.
PauliSum conjugate_local(const PauliSum& hamiltonian, const LocalRotation& rotation);

enum class SectorKind { total_sz, parity, full };

struct Sector {
  std::string label;
  std::vector<BasisState> basis;
};

struct SectorDecomposition {
  SectorKind kind = SectorKind::full;
  std::vector<Sector> sectors;

  [[nodiscard]] std::vector<std::size_t> dims() const;
};

/// max-norm of [H, D] for a diagonal D given by its entries.
double diagonal_commutator_norm(const PauliSum& hamiltonian,
                                const std::vector<double>& diagonal);

/// Conserved-quantity blocks: total S_z if [H, sum Z] vanishes, otherwise
/// Z-parity if [H, prod Z] vanishes, otherwise a single block.
SectorDecomposition symmetry_sectors(const PauliSum& hamiltonian);
SectorDecomposition symmetry_sectors(const GeneralChainModel& model);
SectorDecomposition symmetry_sectors(const XYZChainModel& model);

} // namespace spinwit
