#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// shares code with the library: Hamiltonians are built from explicit
// Kronecker products, eigenvalues come from a cyclic Jacobi sweep, and
// reduced states from a dense partial trace of the full density matrix.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

struct Pauli2 {
  CMat i = CMat::Identity(2, 2);
  CMat x{{0, 1}, {1, 0}};
  CMat y{{0, cplx(0, -1)}, {cplx(0, 1), 0}};
  CMat z{{1, 0}, {0, -1}};
};

inline CMat kron2(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

// ops[s] placed on site s (site 0 leftmost), identity where ops[s] is empty.
inline CMat chain_product(const std::vector<CMat>& ops) {
  CMat out = CMat::Identity(1, 1);
  for (const CMat& op : ops) {
    out = kron2(out, op.size() ? op : CMat::Identity(2, 2));
  }
  return out;
}

inline CMat two_site(int n, int i, const CMat& a, int j, const CMat& b) {
  std::vector<CMat> ops(static_cast<std::size_t>(n));
  ops[static_cast<std::size_t>(i)] = a;
  ops[static_cast<std::size_t>(j)] = b;
  return chain_product(ops);
}

inline CMat one_site(int n, int i, const CMat& a) {
  std::vector<CMat> ops(static_cast<std::size_t>(n));
  ops[static_cast<std::size_t>(i)] = a;
  return chain_product(ops);
}

inline std::vector<std::pair<int, int>> ring_bonds(int n, bool periodic) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < n; ++i) {
    bonds.emplace_back(i, i + 1);
  }
  if (periodic && n >= 3) {
    bonds.emplace_back(n - 1, 0);
  }
  return bonds;
}

// sum_bonds J (XX + YY + ZZ)
inline CMat heisenberg(int n, double j, bool periodic = true) {
  const Pauli2 p;
  const auto dim = Eigen::Index{1} << n;
  CMat h = CMat::Zero(dim, dim);
  for (auto [a, b] : ring_bonds(n, periodic)) {
    h += j * (two_site(n, a, p.x, b, p.x) + two_site(n, a, p.y, b, p.y) +
              two_site(n, a, p.z, b, p.z));
  }
  return h;
}

// -J sum (lambda X_i X_{i+1} + Z_i)
inline CMat transverse_ising(int n, double j, double lambda, bool periodic = true) {
  const Pauli2 p;
  const auto dim = Eigen::Index{1} << n;
  CMat h = CMat::Zero(dim, dim);
  for (auto [a, b] : ring_bonds(n, periodic)) {
    h -= j * lambda * two_site(n, a, p.x, b, p.x);
  }
  for (int s = 0; s < n; ++s) {
    h -= j * one_site(n, s, p.z);
  }
  return h;
}

// Cyclic Jacobi on a real symmetric matrix. Returns eigenvalues ascending
// and the matching eigenvectors as columns.
inline std::pair<Eigen::VectorXd, RMat> jacobi_symmetric(RMat a) {
  const Eigen::Index n = a.rows();
  RMat v = RMat::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        off += a(p, q) * a(p, q);
      }
    }
    if (off < 1e-30 * std::max(1.0, a.squaredNorm())) {
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) {
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    order[static_cast<std::size_t>(i)] = i;
  }
  std::sort(order.begin(), order.end(), [&](auto l, auto r) { return a(l, l) < a(r, r); });
  Eigen::VectorXd values(n);
  RMat vectors(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return {values, vectors};
}

// Hermitian M of size n embedded as the real symmetric [[Re, -Im], [Im, Re]].
// Every eigenvalue of M appears twice in the embedding.
struct HermitianSpectrum {
  Eigen::VectorXd doubled_values;  // size 2n, ascending
  RMat doubled_vectors;            // columns (x; y) with x + iy an eigenvector of M

  [[nodiscard]] Eigen::VectorXd values() const {
    Eigen::VectorXd out(doubled_values.size() / 2);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
      out(i) = doubled_values(2 * i);
    }
    return out;
  }

  // sum_k g(E_k) |v_k><v_k| over the complex eigenbasis of M.
  template <typename Fn>
  [[nodiscard]] CMat spectral_sum(Fn&& g) const {
    const Eigen::Index n = doubled_values.size() / 2;
    CMat out = CMat::Zero(n, n);
    for (Eigen::Index k = 0; k < 2 * n; ++k) {
      const Eigen::VectorXcd v =
          doubled_vectors.col(k).head(n).cast<cplx>() +
          cplx(0, 1) * doubled_vectors.col(k).tail(n).cast<cplx>();
      out += 0.5 * g(doubled_values(k)) * v * v.adjoint();
    }
    return out;
  }
};

inline HermitianSpectrum hermitian_spectrum(const CMat& m) {
  const Eigen::Index n = m.rows();
  RMat big(2 * n, 2 * n);
  big.topLeftCorner(n, n) = m.real();
  big.topRightCorner(n, n) = -m.imag();
  big.bottomLeftCorner(n, n) = m.imag();
  big.bottomRightCorner(n, n) = m.real();
  auto [values, vectors] = jacobi_symmetric(big);
  return {values, vectors};
}

// Gibbs state exp(-beta H)/Z; beta < 0 selects the uniform ground-space mixture.
inline CMat gibbs_state(const CMat& h, double beta) {
  const HermitianSpectrum spec = hermitian_spectrum(h);
  const double e0 = spec.doubled_values(0);
  const double scale = std::max(1.0, spec.doubled_values.cwiseAbs().maxCoeff());
  CMat rho = beta < 0 ? spec.spectral_sum([&](double e) {
    return std::abs(e - e0) < 1e-8 * scale ? 1.0 : 0.0;
  })
                      : spec.spectral_sum([&](double e) { return std::exp(-beta * (e - e0)); });
  return rho / rho.trace();
}

// Reduced matrix of sites (i, j) of an n-site state, i as the first factor.
inline CMat partial_trace_pair(const CMat& rho, int n, int i, int j) {
  CMat out = CMat::Zero(4, 4);
  const auto dim = Eigen::Index{1} << n;
  auto bit = [n](Eigen::Index s, int site) { return (s >> (n - 1 - site)) & 1; };
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      bool same_env = true;
      for (int s = 0; s < n && same_env; ++s) {
        if (s != i && s != j && bit(r, s) != bit(c, s)) {
          same_env = false;
        }
      }
      if (same_env) {
        out(2 * bit(r, i) + bit(r, j), 2 * bit(c, i) + bit(c, j)) += rho(r, c);
      }
    }
  }
  return out;
}

// Transpose on the first qubit, written out index by index.
inline CMat partial_transpose_first(const CMat& rho) {
  CMat out(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          out(2 * a + b, 2 * c + d) = rho(2 * c + b, 2 * a + d);
        }
      }
    }
  }
  return out;
}

inline double min_pt_eigenvalue(const CMat& rho) {
  return hermitian_spectrum(partial_transpose_first(rho)).values()(0);
}

} // namespace oracle
