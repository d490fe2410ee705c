#pragma once

// Test-only helpers. Oracles here are written directly from the definitions
// and do not call into the code paths they are used to check.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "entsep/qstate.hpp"
#include "entsep/rng.hpp"

namespace entsep::testing {

inline constexpr double ln2 = std::numbers::ln2;

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// -sum p ln p straight from the definition.
inline double oracle_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

inline double oracle_h2(double x) { return oracle_entropy({x, 1.0 - x}); }

// Basis ket |i l> of a d x d system.
inline ComplexVector ket(int d, int i, int l) {
  ComplexVector v = ComplexVector::Zero(d * d);
  v[i * d + l] = 1.0;
  return v;
}

// Largest singular value of a 2x2 matrix from the closed-form eigenvalues of
// A^dagger A: (t + sqrt(t^2 - 4 det)) / 2.
inline double oracle_norm_2x2(const ComplexMatrix& a) {
  const ComplexMatrix g = a.adjoint() * a;
  const double t = g.trace().real();
  const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
  return std::sqrt(0.5 * (t + std::sqrt(std::max(0.0, t * t - 4.0 * det))));
}

// Random two-qubit states spread over the entangled and separable regions:
// random rank, and half of them mixed with a random Bell-type vector.
inline DensityMatrix mixed_test_state(CounterRng& rng) {
  const int rank = 1 + static_cast<int>(rng.uniform() * 4.0);
  const DensityMatrix base = random_density_matrix(2, 2, std::min(rank, 4), rng);
  if (rng.uniform() < 0.5) return base;
  // local unitaries applied to a Bell vector keep it maximally entangled
  const ComplexVector a = haar_vector(2, rng), b = haar_vector(2, rng);
  Eigen::Matrix2cd ua, ub;
  ua << a[0], -std::conj(a[1]), a[1], std::conj(a[0]);
  ub << b[0], -std::conj(b[1]), b[1], std::conj(b[0]);
  ComplexVector bell(4);
  bell << 0.0, 1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2, 0.0;
  Eigen::Matrix4cd u;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) u.block<2, 2>(2 * r, 2 * c) = ua(r, c) * ub;
  const ComplexVector v = u * bell;
  const double w = rng.uniform();
  ComplexMatrix m = (1.0 - w) * base.matrix() + w * v * v.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(2, 2, std::move(m));
}

inline ProductParams random_params(CounterRng& rng) {
  return {rng.uniform() * std::numbers::pi / 2, rng.uniform() * std::numbers::pi / 2,
          rng.uniform() * 2 * std::numbers::pi, rng.uniform() * 2 * std::numbers::pi};
}

}  // namespace entsep::testing
