#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "spinwit/models.hpp"

namespace spinwit {

/// Eigensystem of one symmetry block. Real symmetric blocks are solved and
/// stored in real arithmetic.
struct SectorSpectrum {
  Sector sector;
  std::variant<SpectralDecomposition<double>, SpectralDecomposition<cplx>> eig;

  [[nodiscard]] bool is_real() const { return eig.index() == 0; }
  [[nodiscard]] const Eigen::VectorXd& eigenvalues() const;
};

/// Full spectrum of a chain Hamiltonian assembled from its symmetry blocks.
/// Eigenstates are indexed globally in ascending energy order; ties keep
/// sector order, then in-sector order.
class ChainSpectrum {
public:
  /// Diagonalizes `hamiltonian` block by block (or as one block when
  /// `use_sectors` is false).
  static ChainSpectrum diagonalize(const PauliSum& hamiltonian, bool use_sectors = true);
  /// Wraps a dense Hermitian operator on n_spins qubits as a single block.
  static ChainSpectrum from_dense(int n_spins, const ComplexMatrix& hamiltonian);

  [[nodiscard]] int n_spins() const { return n_spins_; }
  [[nodiscard]] Eigen::Index dim() const { return energies_.size(); }
  [[nodiscard]] SectorKind kind() const { return kind_; }
  [[nodiscard]] const Eigen::VectorXd& energies() const { return energies_; }
  [[nodiscard]] const std::vector<SectorSpectrum>& sectors() const { return sectors_; }

  /// Eigenstate k embedded in the full 2^N basis.
  [[nodiscard]] ComplexVector state(Eigen::Index k) const;

private:
  struct StateRef {
    std::size_t sector;
    Eigen::Index column;
  };

  ChainSpectrum() = default;
  void index_states();

  int n_spins_ = 0;
  SectorKind kind_ = SectorKind::full;
  std::vector<SectorSpectrum> sectors_;
  std::vector<StateRef> order_;
  Eigen::VectorXd energies_;
};

using SharedSpectrum = std::shared_ptr<const ChainSpectrum>;

} // namespace spinwit
