#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "spinwit/linalg.hpp"

namespace spinwit {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Computational basis label. Site 0 is the most significant bit, so for two
/// spins the index order is |00>, |01>, |10>, |11>.
using BasisState = std::uint32_t;

inline constexpr BasisState site_bit(int n_spins, int site) {
  return BasisState{1} << (n_spins - 1 - site);
}

Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Pauli matrix `p` on `site`, identity elsewhere, as a dense 2^n matrix.
ComplexMatrix embed_pauli(Pauli p, int site, int n_spins);

/// One Pauli string acting on a chain. Y sites carry both mask bits.
struct PauliString {
  BasisState x_mask = 0;
  BasisState z_mask = 0;

  [[nodiscard]] Pauli at(int n_spins, int site) const;
  auto operator<=>(const PauliString&) const = default;
};

/// All strings sharing one flip pattern. Acting on |s> gives
/// sum_k amplitude_k * (-1)^popcount(s & z_mask_k) |s ^ x_mask>.
struct FlipGroup {
  BasisState x_mask = 0;
  std::vector<std::pair<BasisState, cplx>> phases;

  [[nodiscard]] cplx amplitude(BasisState s) const;
};

/// Sum of weighted Pauli strings on n_spins qubits. Hamiltonians are held in
/// this form and only materialized per symmetry block.
class PauliSum {
public:
  explicit PauliSum(int n_spins);

  [[nodiscard]] int n_spins() const { return n_spins_; }
  [[nodiscard]] Eigen::Index dim() const { return Eigen::Index{1} << n_spins_; }

  void add(cplx coeff, std::span<const std::pair<int, Pauli>> factors);
  void add(cplx coeff, std::initializer_list<std::pair<int, Pauli>> factors) {
    add(coeff, std::span<const std::pair<int, Pauli>>(factors.begin(), factors.size()));
  }
  void add(cplx coeff, PauliString string);
  PauliSum& operator+=(const PauliSum& other);

  /// Terms with |coeff| below `tol` dropped.
  [[nodiscard]] PauliSum pruned(double tol = 1e-15) const;
  [[nodiscard]] const std::map<PauliString, cplx>& terms() const { return terms_; }
  [[nodiscard]] std::vector<FlipGroup> flip_groups() const;

  [[nodiscard]] ComplexVector apply(const ComplexVector& v) const;
  [[nodiscard]] cplx expectation(const ComplexVector& v) const;
  [[nodiscard]] ComplexMatrix to_dense() const;

  /// Matrix elements between the states of `basis`; `position` maps a full
  /// basis index to its row in the block, or -1 when outside it.
  [[nodiscard]] ComplexMatrix block(std::span<const BasisState> basis,
                                    std::span<const std::int32_t> position) const;

  /// The same operator with site s relabelled to permutation[s].
  [[nodiscard]] PauliSum relabeled(std::span<const int> permutation) const;

private:
  int n_spins_;
  std::map<PauliString, cplx> terms_;
};

} // namespace spinwit
