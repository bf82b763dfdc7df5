#include "spinwit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinwit {

namespace {

const char* const kBasisLabels[4] = {"00", "01", "10", "11"};

constexpr std::array<std::pair<int, int>, 8> kOffPattern = {{
    {0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}};

} // namespace

void validate_density(const TwoSiteDensity& rho) {
  if (!is_hermitian(rho)) {
    throw InvalidInput("two-site density is not Hermitian");
  }
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw InvalidInput("two-site density has trace " + std::to_string(trace));
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < -1e-10) {
    throw InvalidInput("two-site density has negative eigenvalue " +
                       std::to_string(solver.eigenvalues()(0)));
  }
}

Eigen::Matrix4cd partial_transpose(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd out;
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

NegativityResult negativity(const TwoSiteDensity& rho) {
  NegativityResult out;
  out.spectrum.diagonalizer = hermitian_eig<cplx>(partial_transpose(rho));
  out.spectrum.mu = out.spectrum.diagonalizer.eigenvalues;
  out.spectrum.mu_min = out.spectrum.mu(0);
  out.negativity = 2.0 * std::max(0.0, -out.spectrum.mu_min);
  return out;
}

TwoSiteDensity XStateView::to_matrix() const {
  TwoSiteDensity m = TwoSiteDensity::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  m(0, 3) = y;
  m(3, 0) = std::conj(y);
  m(1, 2) = z;
  m(2, 1) = std::conj(z);
  return m;
}

bool XStateView::is_valid(double tol) const {
  return std::abs(a + b + c + d - 1.0) <= tol && a >= -tol && b >= -tol && c >= -tol &&
         d >= -tol && a * d >= std::norm(y) - tol && b * c >= std::norm(z) - tol;
}

XStateView extract_x_state(const TwoSiteDensity& rho, double tol) {
  for (auto [r, c] : kOffPattern) {
    if (std::abs(rho(r, c)) > tol) {
      throw StructureViolation(std::string("not an X state: <") + kBasisLabels[r] + "|rho|" +
                               kBasisLabels[c] + "> = " + std::to_string(std::abs(rho(r, c))) +
                               " exceeds " + std::to_string(tol));
    }
  }
  XStateView x;
  x.a = rho(0, 0).real();
  x.b = rho(1, 1).real();
  x.c = rho(2, 2).real();
  x.d = rho(3, 3).real();
  x.y = rho(0, 3);
  x.z = rho(1, 2);
  return x;
}

ClosedFormMu mu_closed_forms(const XStateView& x) {
  ClosedFormMu out;
  out.mu1 = 0.5 * (x.a + x.d - std::sqrt((x.a - x.d) * (x.a - x.d) + 4.0 * std::norm(x.z)));
  out.mu2 = 0.5 * (x.b + x.c - std::sqrt((x.b - x.c) * (x.b - x.c) + 4.0 * std::norm(x.y)));
  out.branch = out.mu2 < out.mu1 ? 2 : 1;
  out.mu_min = std::min(out.mu1, out.mu2);

  constexpr double slack = 1e-12;
  if (out.mu1 < -kEntanglementGuard && !(x.a * x.d < x.b * x.c + slack)) {
    throw std::logic_error("mu1 < 0 but ad >= bc");
  }
  if (out.mu2 < -kEntanglementGuard && !(x.b * x.c < x.a * x.d + slack)) {
    throw std::logic_error("mu2 < 0 but bc >= ad");
  }
  return out;
}

Eigen::Vector4d x_state_pt_eigenvalues(const XStateView& x) {
  const double s1 = std::sqrt((x.a - x.d) * (x.a - x.d) + 4.0 * std::norm(x.z));
  const double s2 = std::sqrt((x.b - x.c) * (x.b - x.c) + 4.0 * std::norm(x.y));
  Eigen::Vector4d mu(0.5 * (x.a + x.d - s1), 0.5 * (x.a + x.d + s1), 0.5 * (x.b + x.c - s2),
                     0.5 * (x.b + x.c + s2));
  std::sort(mu.begin(), mu.end());
  return mu;
}

} // namespace spinwit
