#pragma once

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "spinwit/entanglement.hpp"

namespace testing {

using spinwit::cplx;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(rng()); }

inline Eigen::MatrixXcd random_complex(Eigen::Index rows, Eigen::Index cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    m.data()[i] = cplx(gaussian(), gaussian());
  }
  return m;
}

inline Eigen::MatrixXcd random_hermitian(Eigen::Index dim) {
  const Eigen::MatrixXcd g = random_complex(dim, dim);
  return 0.5 * (g + g.adjoint());
}

inline Eigen::Vector3d random_vector3(double scale = 1.0) {
  return scale * Eigen::Vector3d(uniform(), uniform(), uniform());
}

// Haar-ish unitary from the QR of a Ginibre matrix.
inline Eigen::MatrixXcd random_unitary(Eigen::Index dim) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(random_complex(dim, dim));
  return qr.householderQ();
}

// Full-rank random state rho = G G^dagger / Tr.
inline spinwit::TwoSiteDensity random_density() {
  const Eigen::Matrix4cd g = random_complex(4, 4);
  const Eigen::Matrix4cd rho = g * g.adjoint();
  return rho / rho.trace();
}

inline Eigen::Matrix2cd random_qubit_state() {
  const Eigen::Matrix2cd g = random_complex(2, 2);
  const Eigen::Matrix2cd rho = g * g.adjoint();
  return rho / rho.trace();
}

inline Eigen::Vector2cd random_qubit_vector() {
  Eigen::Vector2cd v(cplx(gaussian(), gaussian()), cplx(gaussian(), gaussian()));
  return v / v.norm();
}

// Convex mixture of a few random product states.
inline spinwit::TwoSiteDensity random_separable() {
  const int terms = 1 + static_cast<int>(rng()() % 4);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  double total = 0.0;
  for (int k = 0; k < terms; ++k) {
    const double p = uniform(0.05, 1.0);
    const Eigen::Matrix2cd ra = random_qubit_state();
    const Eigen::Matrix2cd rb = random_qubit_state();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        rho.block<2, 2>(2 * i, 2 * j) += p * ra(i, j) * rb;
      }
    }
    total += p;
  }
  return rho / total;
}

// Valid X state: random positive diagonal, coherences inside the positivity
// bounds ad >= |y|^2 and bc >= |z|^2.
inline spinwit::XStateView random_x_state() {
  spinwit::XStateView x;
  double w[4];
  double sum = 0.0;
  for (double& v : w) {
    v = uniform(0.0, 1.0);
    sum += v;
  }
  x.a = w[0] / sum;
  x.b = w[1] / sum;
  x.c = w[2] / sum;
  x.d = w[3] / sum;
  const double py = uniform(0.0, 1.0);
  const double pz = uniform(0.0, 1.0);
  x.y = std::polar(py * std::sqrt(x.a * x.d), uniform(-M_PI, M_PI));
  x.z = std::polar(pz * std::sqrt(x.b * x.c), uniform(-M_PI, M_PI));
  return x;
}

} // namespace testing
