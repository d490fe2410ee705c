#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entsep/rng.hpp"

namespace entsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double herm = 1e-9;
inline constexpr double trace = 1e-9;
inline constexpr double norm = 1e-9;
inline constexpr double psd = 1e-9;
// Eigenvalues closer than this are treated as one degenerate level.
inline constexpr double eig_gap = 1e-8;
}  // namespace tol

// Raised when a constructed or loaded object breaks one of its invariants.
// The message names the invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Subsystem { A, B };

// Pure state of a dimA x dimB system. Amplitudes are ordered |i>_A|l>_B with
// index i * dimB + l.
class PureState {
 public:
  PureState(int dim_a, int dim_b, ComplexVector amplitudes);

  // Rescales to unit norm before validating; rejects the zero vector.
  static PureState normalized(int dim_a, int dim_b, ComplexVector amplitudes);
  static PureState product(const ComplexVector& a, const ComplexVector& b);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  int dim_a_;
  int dim_b_;
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity, unit trace and positivity.
  DensityMatrix(int dim_a, int dim_b, ComplexMatrix matrix);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int dim_a, int dim_b);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  int dim_a_;
  int dim_b_;
  ComplexMatrix matrix_;
};

// Angles of a two-qubit pure product state
//   (cos a |0> + e^{i delta} sin a |1>) (x) (cos b |0> + e^{i gamma} sin b |1>).
struct ProductParams {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double gamma = 0.0;

  // Same ray, with alpha, beta in [0, pi/2] and delta, gamma in [0, 2 pi).
  ProductParams canonical() const;
};

struct SeparableEnsemble {
  std::vector<double> weights;
  std::vector<ComplexVector> factors_a;
  std::vector<ComplexVector> factors_b;

  DensityMatrix realize() const;
};

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

PureState product_state(const ProductParams& p);

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which);
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem which);

// Reduced state after tracing out `traced`.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem traced);
ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);
ComplexMatrix partial_trace(const PureState& psi, Subsystem traced);

double min_eigenvalue(const ComplexMatrix& hermitian);
double max_hermitian_deviation(const ComplexMatrix& m);

struct PptResult {
  bool ppt;
  double min_eigenvalue;
};

// Positivity of the partial transpose. Exact separability test for 2x2.
PptResult is_ppt(const DensityMatrix& rho);

PureState random_pure_product(int dim, CounterRng& rng);
PureState random_pure_product(int dim, std::uint64_t seed);

SeparableEnsemble random_separable_mixture(int dim, int terms, CounterRng& rng);
SeparableEnsemble random_separable_mixture(int dim, int terms, std::uint64_t seed);

// Ginibre-distributed state of the given rank; rank 1 gives a Haar pure state.
DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank, CounterRng& rng);

}  // namespace entsep
