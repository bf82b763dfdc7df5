#include "spinwit/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace spinwit {

namespace {

constexpr double kRealBlockTolerance = 1e-14;

decltype(SectorSpectrum::eig) solve_block(const ComplexMatrix& block) {
  const double scale = 1.0 + max_abs(block);
  if (block.size() == 0 || max_abs(block.imag()) <= kRealBlockTolerance * scale) {
    return hermitian_eig<double>(block.real());
  }
  return hermitian_eig<cplx>(block);
}

} // namespace

const Eigen::VectorXd& SectorSpectrum::eigenvalues() const {
  return std::visit([](const auto& e) -> const Eigen::VectorXd& { return e.eigenvalues; }, eig);
}

ChainSpectrum ChainSpectrum::diagonalize(const PauliSum& hamiltonian, bool use_sectors) {
  if (hamiltonian.dim() > kMaxDimension) {
    throw DimensionError("diagonalize: dimension exceeds the cap of " +
                         std::to_string(kMaxDimension));
  }
  SectorDecomposition blocks;
  if (use_sectors) {
    blocks = symmetry_sectors(hamiltonian);
  } else {
    blocks.kind = SectorKind::full;
    Sector all{"full", std::vector<BasisState>(static_cast<std::size_t>(hamiltonian.dim()))};
    std::iota(all.basis.begin(), all.basis.end(), BasisState{0});
    blocks.sectors.push_back(std::move(all));
  }

  ChainSpectrum out;
  out.n_spins_ = hamiltonian.n_spins();
  out.kind_ = blocks.kind;
  std::vector<std::int32_t> position(static_cast<std::size_t>(hamiltonian.dim()), -1);
  for (auto& sector : blocks.sectors) {
    for (std::size_t r = 0; r < sector.basis.size(); ++r) {
      position[sector.basis[r]] = static_cast<std::int32_t>(r);
    }
    const ComplexMatrix block = hamiltonian.block(sector.basis, position);
    for (BasisState s : sector.basis) {
      position[s] = -1;
    }
    if (sector.basis.empty()) {
      continue;
    }
    out.sectors_.push_back({std::move(sector), solve_block(block)});
  }
  out.index_states();
  return out;
}

ChainSpectrum ChainSpectrum::from_dense(int n_spins, const ComplexMatrix& hamiltonian) {
  if (hamiltonian.rows() != (Eigen::Index{1} << n_spins)) {
    throw DimensionError("from_dense: matrix size does not match 2^" + std::to_string(n_spins));
  }
  ChainSpectrum out;
  out.n_spins_ = n_spins;
  out.kind_ = SectorKind::full;
  Sector all{"full", std::vector<BasisState>(static_cast<std::size_t>(hamiltonian.rows()))};
  std::iota(all.basis.begin(), all.basis.end(), BasisState{0});
  out.sectors_.push_back({std::move(all), solve_block(hamiltonian)});
  out.index_states();
  return out;
}

void ChainSpectrum::index_states() {
  order_.clear();
  for (std::size_t s = 0; s < sectors_.size(); ++s) {
    const auto& values = sectors_[s].eigenvalues();
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      order_.push_back({s, k});
    }
  }
  auto energy = [this](const StateRef& r) { return sectors_[r.sector].eigenvalues()(r.column); };
  std::stable_sort(order_.begin(), order_.end(),
                   [&](const StateRef& a, const StateRef& b) { return energy(a) < energy(b); });
  energies_.resize(static_cast<Eigen::Index>(order_.size()));
  for (std::size_t k = 0; k < order_.size(); ++k) {
    energies_(static_cast<Eigen::Index>(k)) = energy(order_[k]);
  }
}

ComplexVector ChainSpectrum::state(Eigen::Index k) const {
  const StateRef& ref = order_.at(static_cast<std::size_t>(k));
  const SectorSpectrum& sector = sectors_[ref.sector];
  ComplexVector out = ComplexVector::Zero(Eigen::Index{1} << n_spins_);
  std::visit(
      [&](const auto& e) {
        const auto column = e.eigenvectors.col(ref.column);
        for (std::size_t r = 0; r < sector.sector.basis.size(); ++r) {
          out(sector.sector.basis[r]) = column(static_cast<Eigen::Index>(r));
        }
      },
      sector.eig);
  return out;
}

} // namespace spinwit
