#pragma once

#include <vector>

#include "spinwit/entanglement.hpp"
#include "spinwit/spectrum.hpp"

namespace spinwit {

/// Inverse temperature in units of 1/J (k_B = 1), or the zero-temperature
/// limit.
class InverseTemperature {
public:
  explicit InverseTemperature(double beta);
  static InverseTemperature ground();

  [[nodiscard]] bool is_ground() const { return ground_; }
  /// +infinity for the ground-state limit.
  [[nodiscard]] double value() const;

private:
  InverseTemperature() = default;
  double beta_ = 0.0;
  bool ground_ = false;
};

/// Degeneracy window for the ground-state limit, relative to max |E|.
inline constexpr double kGroundDegeneracyTolerance = 1e-9;

/// Gibbs weights exp(-beta (E_k - E_min)) / Z aligned with `energies`
/// (ascending). The ground limit spreads weight uniformly over the
/// numerically degenerate ground subspace.
Eigen::VectorXd boltzmann_weights(const Eigen::VectorXd& energies, InverseTemperature beta);

struct ThermalEnsemble {
  SharedSpectrum spectrum;
  InverseTemperature beta{0.0};
  Eigen::VectorXd weights;
};

ThermalEnsemble make_ensemble(SharedSpectrum spectrum, InverseTemperature beta);

struct ThermalObservables {
  double u = 0.0;                                // <H> / N
  Eigen::Vector3d m = Eigen::Vector3d::Zero();   // sum_i <sigma_i> / N
};

ThermalObservables observables(const ThermalEnsemble& ensemble);

/// As above, after checking that the ensemble belongs to a chain of the
/// model's size. Throws InvalidInput on mismatch.
template <typename Model>
ThermalObservables observables(const ThermalEnsemble& ensemble, const Model& model) {
  if (ensemble.spectrum->n_spins() != model.n_spins) {
    throw InvalidInput("observables: ensemble and model have different spin counts");
  }
  return observables(ensemble);
}

/// Reduced matrix of spins (first_site, first_site + 1 mod N), 0-based.
TwoSiteDensity reduce_pair(const ThermalEnsemble& ensemble, int first_site);

/// Per-spin magnetization of a pure state.
Eigen::Vector3d magnetization(const ComplexVector& state, int n_spins);

/// Reduced matrix of spins (site_i, site_j) for a pure state, with site_i
/// as the first factor.
TwoSiteDensity pair_density(const ComplexVector& state, int n_spins, int site_i, int site_j);

/// Per-eigenstate energies, magnetizations and pair matrices for one bond.
/// Built once in O(dim^2); every temperature afterwards costs O(dim).
class EigenstateTable {
public:
  EigenstateTable(SharedSpectrum spectrum, int first_site = 0);

  [[nodiscard]] const ChainSpectrum& spectrum() const { return *spectrum_; }
  [[nodiscard]] int first_site() const { return first_site_; }

  [[nodiscard]] ThermalObservables observables(const Eigen::VectorXd& weights) const;
  [[nodiscard]] TwoSiteDensity pair_density(const Eigen::VectorXd& weights) const;

private:
  SharedSpectrum spectrum_;
  int first_site_;
  Eigen::Matrix3Xd magnetizations_;
  std::vector<Eigen::Matrix4cd> pairs_;
};

} // namespace spinwit
