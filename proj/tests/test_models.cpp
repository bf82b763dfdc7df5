#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "oracle/oracle.hpp"
#include "spinwit/spectrum.hpp"
#include "support.hpp"

using namespace spinwit;

namespace {

Eigen::VectorXd sorted_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eig<cplx>(m).eigenvalues;
}

GeneralChainModel random_general(int n, Boundary boundary) {
  GeneralChainModel g;
  g.n_spins = n;
  g.boundary = boundary;
  g.field_B = testing::random_vector3();
  g.exchange_J = testing::random_vector3();
  g.dm_A = testing::random_vector3(0.5);
  g.cvec_C = testing::random_vector3(0.7);
  return g;
}

} // namespace

TEST_CASE("PauliSum: strings, arithmetic and errors") {
  PauliSum h(3);
  h.add(2.0, {{0, Pauli::X}, {2, Pauli::Y}});
  h.add(1.0, {{2, Pauli::Y}, {0, Pauli::X}});
  REQUIRE(h.terms().size() == 1);
  const auto& [string, coeff] = *h.terms().begin();
  CHECK(coeff == cplx(3.0, 0.0));
  CHECK(string.at(3, 0) == Pauli::X);
  CHECK(string.at(3, 1) == Pauli::I);
  CHECK(string.at(3, 2) == Pauli::Y);

  const ComplexMatrix dense = h.to_dense();
  const ComplexMatrix expected = 3.0 * oracle::two_site(3, 0, oracle::Pauli2{}.x, 2,
                                                        oracle::Pauli2{}.y);
  CHECK(max_abs(dense - expected) < 1e-15);

  PauliSum other(3);
  other.add(-3.0, {{0, Pauli::X}, {2, Pauli::Y}});
  h += other;
  CHECK(h.pruned().terms().empty());

  CHECK_THROWS_AS(h.add(1.0, {{1, Pauli::Z}, {1, Pauli::X}}), InvalidInput);
  CHECK_THROWS_AS(h.add(1.0, {{3, Pauli::Z}}), InvalidInput);
  CHECK_THROWS_AS(PauliSum(0), InvalidInput);
  PauliSum wrong(2);
  CHECK_THROWS_AS(h += wrong, InvalidInput);
}

TEST_CASE("PauliSum: apply and expectation agree with the dense matrix") {
  const PauliSum h = hamiltonian_terms(random_general(5, Boundary::periodic));
  const ComplexMatrix dense = h.to_dense();
  const ComplexVector v = testing::random_complex(32, 1);
  CHECK(max_abs(h.apply(v) - dense * v) < 1e-12);
  CHECK(std::abs(h.expectation(v) - v.dot(dense * v)) < 1e-11);
}

TEST_CASE("chain_bonds: periodic wrap and two-spin special case") {
  using Bonds = std::vector<std::pair<int, int>>;
  CHECK(chain_bonds(4, Boundary::periodic) == Bonds{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(chain_bonds(4, Boundary::open) == Bonds{{0, 1}, {1, 2}, {2, 3}});
  CHECK(chain_bonds(2, Boundary::periodic) == Bonds{{0, 1}});
  CHECK(chain_bonds(2, Boundary::open) == Bonds{{0, 1}});
}

TEST_CASE("build_hamiltonian matches kron-built references") {
  for (int n : {2, 3, 4, 5}) {
    CAPTURE(n);
    const ComplexMatrix heis = build_hamiltonian(XYZChainModel::heisenberg(0.7, n));
    CHECK(max_abs(heis - oracle::heisenberg(n, 0.7)) < 1e-14);
    const ComplexMatrix ising = build_hamiltonian(XYZChainModel::transverse_ising(1.3, 0.6, n));
    CHECK(max_abs(ising - oracle::transverse_ising(n, 1.3, 0.6)) < 1e-14);
    const ComplexMatrix open = build_hamiltonian(XYZChainModel::heisenberg(1.0, n, Boundary::open));
    CHECK(max_abs(open - oracle::heisenberg(n, 1.0, false)) < 1e-14);
  }
}

TEST_CASE("build_hamiltonian: spec spectra") {
  const Eigen::VectorXd free2 =
      sorted_eigenvalues(build_hamiltonian(XYZChainModel::transverse_ising(1.0, 0.0, 2)));
  CHECK(max_abs(free2 - Eigen::Vector4d(-2, 0, 0, 2)) < 1e-12);

  const Eigen::VectorXd ring3 = sorted_eigenvalues(build_hamiltonian(XYZChainModel::heisenberg(1.0, 3)));
  for (int k = 0; k < 4; ++k) {
    CHECK(ring3(k) == doctest::Approx(-3.0).epsilon(1e-12));
    CHECK(ring3(k + 4) == doctest::Approx(3.0).epsilon(1e-12));
  }
}

TEST_CASE("build_hamiltonian: DM matrix element on two open spins") {
  GeneralChainModel g;
  g.n_spins = 2;
  g.boundary = Boundary::open;
  g.dm_A = {0.0, 0.0, 0.3};
  const ComplexMatrix h = build_hamiltonian(g);
  CHECK(std::abs(h(1, 2) - cplx(0.0, 0.6)) < 1e-15);
  CHECK(std::abs(h(2, 1) - cplx(0.0, -0.6)) < 1e-15);
}

TEST_CASE("build_hamiltonian: general model against explicit expansion") {
  const GeneralChainModel g = random_general(4, Boundary::periodic);
  const oracle::Pauli2 p;
  const oracle::CMat s[3] = {p.x, p.y, p.z};
  oracle::CMat ref = oracle::CMat::Zero(16, 16);
  for (int site = 0; site < 4; ++site) {
    for (int a = 0; a < 3; ++a) {
      ref -= g.field_B(a) * oracle::one_site(4, site, s[a]);
    }
  }
  for (auto [i, j] : oracle::ring_bonds(4, true)) {
    for (int a = 0; a < 3; ++a) {
      ref += g.exchange_J(a) * oracle::two_site(4, i, s[a], j, s[a]);
      for (int b = 0; b < 3; ++b) {
        ref += g.cvec_C(a) * g.cvec_C(b) * oracle::two_site(4, i, s[a], j, s[b]);
      }
    }
    // A . (s_i x s_j), components written out.
    ref += g.dm_A(0) * (oracle::two_site(4, i, p.y, j, p.z) - oracle::two_site(4, i, p.z, j, p.y));
    ref += g.dm_A(1) * (oracle::two_site(4, i, p.z, j, p.x) - oracle::two_site(4, i, p.x, j, p.z));
    ref += g.dm_A(2) * (oracle::two_site(4, i, p.x, j, p.y) - oracle::two_site(4, i, p.y, j, p.x));
  }
  CHECK(max_abs(build_hamiltonian(g) - ref) < 1e-13);
}

TEST_CASE("build_hamiltonian: traceless without field, real without cross couplings") {
  GeneralChainModel g = random_general(5, Boundary::periodic);
  g.field_B.setZero();
  const ComplexMatrix h = build_hamiltonian(g);
  CHECK(std::abs(h.trace()) < 1e-10 * 32 * max_abs(h));

  XYZChainModel xyz;
  xyz.n_spins = 5;
  xyz.jx = 0.4;
  xyz.jy = -1.1;
  xyz.jz = 0.8;
  xyz.h = 0.5;
  CHECK(max_abs(build_hamiltonian(xyz).imag()) < 1e-14);
}

TEST_CASE("model validation") {
  GeneralChainModel g;
  g.n_spins = 1;
  CHECK_THROWS_AS(g.validate(), InvalidInput);
  g.n_spins = kMaxSpins + 1;
  CHECK_THROWS_AS(build_hamiltonian(g), InvalidInput);
  g.n_spins = 3;
  g.dm_A(1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(hamiltonian_terms(g), InvalidInput);

  XYZChainModel xyz = XYZChainModel::heisenberg(1.0, 3);
  xyz.h = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(xyz.validate(), InvalidInput);
}

TEST_CASE("as_general: only antisymmetric off-diagonal exchange maps") {
  XYZChainModel xyz;
  xyz.n_spins = 4;
  xyz.jx = 0.5;
  xyz.jy = 0.7;
  xyz.jz = -0.2;
  xyz.jxy = 0.3;
  xyz.jyx = -0.3;
  xyz.h = 0.9;
  const auto g = as_general(xyz);
  REQUIRE(g.has_value());
  CHECK(g->dm_A.isApprox(Eigen::Vector3d(0, 0, 0.3)));
  CHECK(g->field_B.isApprox(Eigen::Vector3d(0, 0, -0.9)));
  CHECK(max_abs(build_hamiltonian(*g) - build_hamiltonian(xyz)) < 1e-14);

  xyz.jyx = 0.3;
  CHECK_FALSE(as_general(xyz).has_value());
}

TEST_CASE("conjugate_local: identity, single-site flip and spectrum invariance") {
  const ComplexMatrix h = build_hamiltonian(XYZChainModel::heisenberg(1.0, 4));
  CHECK(conjugate_local(h, LocalRotation(Eigen::Vector3d::Zero())) == h);

  // exp(i pi/2 Z) X exp(-i pi/2 Z) = -X
  const ComplexMatrix x = pauli_matrix(Pauli::X);
  const ComplexMatrix rotated = conjugate_local(x, LocalRotation(Eigen::Vector3d(0, 0, M_PI / 2)));
  CHECK(max_abs(rotated + x) < 1e-15);

  for (int trial = 0; trial < 5; ++trial) {
    const LocalRotation rot(testing::random_vector3(2.0));
    const ComplexMatrix conj = conjugate_local(h, rot);
    CHECK(is_hermitian(conj));
    CHECK(max_abs(sorted_eigenvalues(conj) - sorted_eigenvalues(h)) < 1e-10);
  }
}

TEST_CASE("conjugate_local: dense and Pauli routes agree, per-site angles") {
  const PauliSum h = hamiltonian_terms(random_general(4, Boundary::open));
  std::vector<Eigen::Vector3d> angles;
  for (int s = 0; s < 4; ++s) {
    angles.push_back(testing::random_vector3(1.5));
  }
  const LocalRotation rot(angles);

  const ComplexMatrix dense = conjugate_local(h.to_dense(), rot);
  const ComplexMatrix pauli = conjugate_local(h, rot).to_dense();
  CHECK(max_abs(dense - pauli) < 1e-12);

  // Explicit (U1 x ... x U4) H (U1 x ... x U4)^dagger.
  ComplexMatrix u = ComplexMatrix::Identity(1, 1);
  for (int s = 0; s < 4; ++s) {
    u = kron(u, rot.unitary(s));
  }
  CHECK(max_abs(dense - u * h.to_dense() * u.adjoint()) < 1e-12);

  CHECK_THROWS_AS(conjugate_local(ComplexMatrix::Identity(8, 8), rot), DimensionError);
  CHECK_THROWS_AS(LocalRotation(Eigen::Vector3d(0, std::nan(""), 0)), InvalidInput);
}

TEST_CASE("LocalRotation: unitary and adjoint action") {
  const LocalRotation rot(testing::random_vector3(1.0));
  const Eigen::Matrix2cd u = rot.unitary(0);
  CHECK(max_abs(u * u.adjoint() - Eigen::Matrix2cd::Identity()) < 1e-14);
  const Eigen::Matrix3d o = rot.adjoint_action(0);
  CHECK(max_abs(o * o.transpose() - Eigen::Matrix3d::Identity()) < 1e-14);
  const Pauli paulis[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int a = 0; a < 3; ++a) {
    Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
    for (int b = 0; b < 3; ++b) {
      expected += o(b, a) * pauli_matrix(paulis[b]);
    }
    CHECK(max_abs(u * pauli_matrix(paulis[a]) * u.adjoint() - expected) < 1e-14);
  }
}

TEST_CASE("symmetry_sectors: detection and dimensions") {
  const auto heis = symmetry_sectors(XYZChainModel::heisenberg(1.0, 4));
  CHECK(heis.kind == SectorKind::total_sz);
  CHECK(heis.dims() == std::vector<std::size_t>{1, 4, 6, 4, 1});

  const auto ising = symmetry_sectors(XYZChainModel::transverse_ising(1.0, 0.5, 4));
  CHECK(ising.kind == SectorKind::parity);
  CHECK(ising.dims() == std::vector<std::size_t>{8, 8});

  XYZChainModel xyz;
  xyz.n_spins = 4;
  xyz.jx = 1.0;
  xyz.jy = 0.3;
  CHECK(symmetry_sectors(xyz).kind == SectorKind::parity);

  GeneralChainModel tilted;
  tilted.n_spins = 4;
  tilted.exchange_J = {1, 1, 1};
  tilted.field_B = {0.2, 0, 0.5};
  const auto full = symmetry_sectors(tilted);
  CHECK(full.kind == SectorKind::full);
  CHECK(full.dims() == std::vector<std::size_t>{16});

  // Every basis state belongs to exactly one sector.
  std::vector<BasisState> all;
  for (const auto& s : heis.sectors) {
    all.insert(all.end(), s.basis.begin(), s.basis.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<BasisState> expected(16);
  std::iota(expected.begin(), expected.end(), 0u);
  CHECK(all == expected);
}

TEST_CASE("ChainSpectrum: blocked and full diagonalization agree") {
  const std::vector<PauliSum> hamiltonians = {
      hamiltonian_terms(XYZChainModel::heisenberg(1.0, 6)),
      hamiltonian_terms(XYZChainModel::transverse_ising(1.0, 0.8, 6)),
      hamiltonian_terms(random_general(5, Boundary::periodic)),
  };
  for (const PauliSum& h : hamiltonians) {
    const ChainSpectrum blocked = ChainSpectrum::diagonalize(h);
    const ChainSpectrum full = ChainSpectrum::diagonalize(h, false);
    CHECK(full.kind() == SectorKind::full);
    CHECK(max_abs(blocked.energies() - full.energies()) < 1e-10);
    CHECK(max_abs(blocked.energies() - sorted_eigenvalues(h.to_dense())) < 1e-10);

    const ComplexMatrix dense = h.to_dense();
    for (Eigen::Index k = 0; k < blocked.dim(); k += 7) {
      const ComplexVector v = blocked.state(k);
      CHECK(std::abs(v.norm() - 1.0) < 1e-12);
      CHECK(max_abs(dense * v - blocked.energies()(k) * v) < 1e-10);
    }
  }
}

TEST_CASE("ChainSpectrum: real blocks for real Hamiltonians") {
  const ChainSpectrum heis = ChainSpectrum::diagonalize(hamiltonian_terms(XYZChainModel::heisenberg(1.0, 4)));
  for (const auto& s : heis.sectors()) {
    CHECK(s.is_real());
  }
  GeneralChainModel dm;
  dm.n_spins = 4;
  dm.exchange_J = {1, 1, 1};
  dm.dm_A = {0, 0, 0.4};
  const ChainSpectrum complex = ChainSpectrum::diagonalize(hamiltonian_terms(dm));
  CHECK(complex.kind() == SectorKind::total_sz);
  CHECK(std::any_of(complex.sectors().begin(), complex.sectors().end(),
                    [](const SectorSpectrum& s) { return !s.is_real(); }));
}

TEST_CASE("ChainSpectrum: from_dense and error paths") {
  const ComplexMatrix h = oracle::heisenberg(3, 1.0);
  const ChainSpectrum s = ChainSpectrum::from_dense(3, h);
  CHECK(s.energies()(0) == doctest::Approx(-3.0));
  CHECK_THROWS_AS(ChainSpectrum::from_dense(4, h), DimensionError);
  CHECK_THROWS(static_cast<void>(s.state(8)));
}

TEST_CASE("translation invariance of periodic spectra") {
  const PauliSum h = hamiltonian_terms(random_general(6, Boundary::periodic));
  const Eigen::VectorXd reference = ChainSpectrum::diagonalize(h).energies();
  std::vector<int> shift(6);
  for (int s = 0; s < 6; ++s) {
    shift[static_cast<std::size_t>(s)] = (s + 1) % 6;
  }
  const PauliSum shifted = h.relabeled(shift);
  CHECK(max_abs(shifted.to_dense() - h.to_dense()) < 1e-13);
  CHECK(max_abs(ChainSpectrum::diagonalize(shifted).energies() - reference) < 1e-10);

  const std::vector<int> reflect = {5, 4, 3, 2, 1, 0};
  CHECK(max_abs(ChainSpectrum::diagonalize(h.relabeled(reflect)).energies() - reference) < 1e-10);

  CHECK_THROWS_AS(static_cast<void>(h.relabeled(std::vector<int>{0, 0, 1, 2, 3, 4})), InvalidInput);
}
