#include "spinwit/thermal.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spinwit {

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidInput("inverse temperature must be finite and >= 0, got " +
                       std::to_string(beta));
  }
}

InverseTemperature InverseTemperature::ground() {
  InverseTemperature t;
  t.ground_ = true;
  return t;
}

double InverseTemperature::value() const {
  return ground_ ? std::numeric_limits<double>::infinity() : beta_;
}

Eigen::VectorXd boltzmann_weights(const Eigen::VectorXd& energies, InverseTemperature beta) {
  const Eigen::Index dim = energies.size();
  if (dim == 0) {
    return {};
  }
  const double e_min = energies.minCoeff();
  Eigen::VectorXd w(dim);
  if (beta.is_ground()) {
    const double window = kGroundDegeneracyTolerance * energies.cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < dim; ++k) {
      w(k) = (energies(k) - e_min <= window) ? 1.0 : 0.0;
    }
  } else {
    w = (-beta.value() * (energies.array() - e_min)).exp();
  }
  return w / w.sum();
}

ThermalEnsemble make_ensemble(SharedSpectrum spectrum, InverseTemperature beta) {
  ThermalEnsemble ens{std::move(spectrum), beta, {}};
  ens.weights = boltzmann_weights(ens.spectrum->energies(), beta);
  return ens;
}

Eigen::Vector3d magnetization(const ComplexVector& state, int n_spins) {
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  const Eigen::Index dim = state.size();
  for (int site = 0; site < n_spins; ++site) {
    const BasisState bit = site_bit(n_spins, site);
    for (Eigen::Index s = 0; s < dim; ++s) {
      const auto state_s = static_cast<BasisState>(s);
      const cplx flipped = std::conj(state(state_s ^ bit)) * state(s);
      const bool down = state_s & bit;
      m.x() += flipped.real();
      // sigma^y |0> = i|1>, sigma^y |1> = -i|0>
      m.y() += down ? flipped.imag() : -flipped.imag();
      m.z() += (down ? -1.0 : 1.0) * std::norm(state(s));
    }
  }
  return m / n_spins;
}

TwoSiteDensity pair_density(const ComplexVector& state, int n_spins, int site_i, int site_j) {
  if (site_i == site_j || site_i < 0 || site_j < 0 || site_i >= n_spins || site_j >= n_spins) {
    throw InvalidInput("pair_density: invalid site pair");
  }
  const BasisState bi = site_bit(n_spins, site_i);
  const BasisState bj = site_bit(n_spins, site_j);
  const BasisState pattern[4] = {0, bj, bi, bi | bj};
  TwoSiteDensity rho = TwoSiteDensity::Zero();
  for (Eigen::Index s = 0; s < state.size(); ++s) {
    const auto state_s = static_cast<BasisState>(s);
    if (state_s & (bi | bj)) {
      continue;
    }
    cplx amp[4];
    for (int p = 0; p < 4; ++p) {
      amp[p] = state(state_s | pattern[p]);
    }
    for (int p = 0; p < 4; ++p) {
      if (amp[p] == cplx{0.0, 0.0}) {
        continue;
      }
      for (int q = 0; q < 4; ++q) {
        rho(p, q) += amp[p] * std::conj(amp[q]);
      }
    }
  }
  return rho;
}

namespace {

void check_site(const ChainSpectrum& spectrum, int first_site) {
  if (first_site < 0 || first_site >= spectrum.n_spins()) {
    throw InvalidInput("reduce_pair: site " + std::to_string(first_site) + " out of range [0, " +
                       std::to_string(spectrum.n_spins()) + ")");
  }
}

void check_weights(const ChainSpectrum& spectrum, const Eigen::VectorXd& weights) {
  if (weights.size() != spectrum.dim()) {
    throw DimensionError("EigenstateTable: " + std::to_string(weights.size()) +
                         " weights for " + std::to_string(spectrum.dim()) + " eigenstates");
  }
}

} // namespace

ThermalObservables observables(const ThermalEnsemble& ensemble) {
  const ChainSpectrum& spectrum = *ensemble.spectrum;
  ThermalObservables out;
  out.u = ensemble.weights.dot(spectrum.energies()) / spectrum.n_spins();
  for (Eigen::Index k = 0; k < spectrum.dim(); ++k) {
    if (ensemble.weights(k) == 0.0) {
      continue;
    }
    out.m += ensemble.weights(k) * magnetization(spectrum.state(k), spectrum.n_spins());
  }
  return out;
}

TwoSiteDensity reduce_pair(const ThermalEnsemble& ensemble, int first_site) {
  const ChainSpectrum& spectrum = *ensemble.spectrum;
  check_site(spectrum, first_site);
  const int n = spectrum.n_spins();
  TwoSiteDensity rho = TwoSiteDensity::Zero();
  for (Eigen::Index k = 0; k < spectrum.dim(); ++k) {
    if (ensemble.weights(k) == 0.0) {
      continue;
    }
    rho += ensemble.weights(k) * pair_density(spectrum.state(k), n, first_site, (first_site + 1) % n);
  }
  return rho;
}

EigenstateTable::EigenstateTable(SharedSpectrum spectrum, int first_site)
    : spectrum_(std::move(spectrum)), first_site_(first_site) {
  check_site(*spectrum_, first_site);
  const int n = spectrum_->n_spins();
  const Eigen::Index dim = spectrum_->dim();
  magnetizations_.resize(3, dim);
  pairs_.resize(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) {
    const ComplexVector v = spectrum_->state(k);
    magnetizations_.col(k) = magnetization(v, n);
    pairs_[static_cast<std::size_t>(k)] = spinwit::pair_density(v, n, first_site, (first_site + 1) % n);
  }
}

ThermalObservables EigenstateTable::observables(const Eigen::VectorXd& weights) const {
  check_weights(*spectrum_, weights);
  ThermalObservables out;
  out.u = weights.dot(spectrum_->energies()) / spectrum_->n_spins();
  out.m = magnetizations_ * weights;
  return out;
}

TwoSiteDensity EigenstateTable::pair_density(const Eigen::VectorXd& weights) const {
  check_weights(*spectrum_, weights);
  TwoSiteDensity rho = TwoSiteDensity::Zero();
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const double w = weights(static_cast<Eigen::Index>(k));
    if (w != 0.0) {
      rho += w * pairs_[k];
    }
  }
  return rho;
}

} // namespace spinwit
