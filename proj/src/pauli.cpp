#include "spinwit/pauli.hpp"

#include <bit>
#include <string>

namespace spinwit {

namespace {

constexpr cplx kI{0.0, 1.0};

cplx i_power(int k) {
  switch (k & 3) {
  case 0: return {1.0, 0.0};
  case 1: return {0.0, 1.0};
  case 2: return {-1.0, 0.0};
  default: return {0.0, -1.0};
  }
}

double parity_sign(BasisState s) { return (std::popcount(s) & 1) ? -1.0 : 1.0; }

} // namespace

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
  case Pauli::I: m << 1, 0, 0, 1; break;
  case Pauli::X: m << 0, 1, 1, 0; break;
  case Pauli::Y: m << 0, -kI, kI, 0; break;
  case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

ComplexMatrix embed_pauli(Pauli p, int site, int n_spins) {
  PauliSum op(n_spins);
  op.add(1.0, {{site, p}});
  return op.to_dense();
}

Pauli PauliString::at(int n_spins, int site) const {
  const BasisState bit = site_bit(n_spins, site);
  const bool x = x_mask & bit;
  const bool z = z_mask & bit;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

cplx FlipGroup::amplitude(BasisState s) const {
  cplx out{0.0, 0.0};
  for (const auto& [z_mask, phase] : phases) {
    out += parity_sign(s & z_mask) * phase;
  }
  return out;
}

PauliSum::PauliSum(int n_spins) : n_spins_(n_spins) {
  if (n_spins < 1 || n_spins > 16) {
    throw DimensionError("PauliSum: unsupported spin count " + std::to_string(n_spins));
  }
}

void PauliSum::add(cplx coeff, std::span<const std::pair<int, Pauli>> factors) {
  PauliString string;
  for (const auto& [site, p] : factors) {
    if (site < 0 || site >= n_spins_) {
      throw InvalidInput("PauliSum::add: site " + std::to_string(site) + " out of range");
    }
    const BasisState bit = site_bit(n_spins_, site);
    if ((string.x_mask | string.z_mask) & bit) {
      throw InvalidInput("PauliSum::add: site " + std::to_string(site) + " repeated");
    }
    if (p == Pauli::X || p == Pauli::Y) string.x_mask |= bit;
    if (p == Pauli::Z || p == Pauli::Y) string.z_mask |= bit;
  }
  add(coeff, string);
}

void PauliSum::add(cplx coeff, PauliString string) {
  if (coeff == cplx{0.0, 0.0}) {
    return;
  }
  terms_[string] += coeff;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_spins_ != n_spins_) {
    throw DimensionError("PauliSum: spin count mismatch");
  }
  for (const auto& [string, coeff] : other.terms_) {
    add(coeff, string);
  }
  return *this;
}

PauliSum PauliSum::pruned(double tol) const {
  PauliSum out(n_spins_);
  for (const auto& [string, coeff] : terms_) {
    if (std::abs(coeff) >= tol) {
      out.terms_.emplace(string, coeff);
    }
  }
  return out;
}

std::vector<FlipGroup> PauliSum::flip_groups() const {
  std::map<BasisState, FlipGroup> groups;
  for (const auto& [string, coeff] : terms_) {
    const int y_count = std::popcount(string.x_mask & string.z_mask);
    auto& group = groups[string.x_mask];
    group.x_mask = string.x_mask;
    group.phases.emplace_back(string.z_mask, coeff * i_power(y_count));
  }
  std::vector<FlipGroup> out;
  out.reserve(groups.size());
  for (auto& [mask, group] : groups) {
    out.push_back(std::move(group));
  }
  return out;
}

ComplexVector PauliSum::apply(const ComplexVector& v) const {
  if (v.size() != dim()) {
    throw DimensionError("PauliSum::apply: vector length mismatch");
  }
  ComplexVector out = ComplexVector::Zero(dim());
  for (const auto& group : flip_groups()) {
    for (Eigen::Index s = 0; s < dim(); ++s) {
      const auto state = static_cast<BasisState>(s);
      out(state ^ group.x_mask) += group.amplitude(state) * v(s);
    }
  }
  return out;
}

cplx PauliSum::expectation(const ComplexVector& v) const { return v.dot(apply(v)); }

ComplexMatrix PauliSum::to_dense() const {
  if (dim() > kMaxDimension) {
    throw DimensionError("PauliSum::to_dense: dimension " + std::to_string(dim()) +
                         " exceeds the cap of " + std::to_string(kMaxDimension));
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (const auto& group : flip_groups()) {
    for (Eigen::Index s = 0; s < dim(); ++s) {
      const auto state = static_cast<BasisState>(s);
      out(state ^ group.x_mask, s) += group.amplitude(state);
    }
  }
  return out;
}

ComplexMatrix PauliSum::block(std::span<const BasisState> basis,
                              std::span<const std::int32_t> position) const {
  const auto n = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  const auto groups = flip_groups();
  for (Eigen::Index col = 0; col < n; ++col) {
    const BasisState s = basis[static_cast<std::size_t>(col)];
    for (const auto& group : groups) {
      const std::int32_t row = position[s ^ group.x_mask];
      if (row >= 0) {
        out(row, col) += group.amplitude(s);
      }
    }
  }
  return out;
}

PauliSum PauliSum::relabeled(std::span<const int> permutation) const {
  if (static_cast<int>(permutation.size()) != n_spins_) {
    throw DimensionError("PauliSum::relabeled: permutation size mismatch");
  }
  BasisState seen = 0;
  for (int target : permutation) {
    if (target < 0 || target >= n_spins_ || (seen & site_bit(n_spins_, target))) {
      throw InvalidInput("PauliSum::relabeled: not a permutation of the sites");
    }
    seen |= site_bit(n_spins_, target);
  }
  PauliSum out(n_spins_);
  for (const auto& [string, coeff] : terms_) {
    PauliString moved;
    for (int site = 0; site < n_spins_; ++site) {
      const BasisState from = site_bit(n_spins_, site);
      const BasisState to = site_bit(n_spins_, permutation[static_cast<std::size_t>(site)]);
      if (string.x_mask & from) moved.x_mask |= to;
      if (string.z_mask & from) moved.z_mask |= to;
    }
    out.add(coeff, moved);
  }
  return out;
}

} // namespace spinwit
