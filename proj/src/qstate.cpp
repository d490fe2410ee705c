#include "entsep/qstate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/random/exponential_distribution.hpp>
#include <unsupported/Eigen/KroneckerProduct>

namespace entsep {

namespace {

void require_dims(int dim_a, int dim_b, const char* what) {
  if (dim_a < 2 || dim_b < 2) {
    std::ostringstream msg;
    msg << what << ": subsystem dimensions must be >= 2 (got " << dim_a << "x" << dim_b << ")";
    throw ValidationError(msg.str());
  }
}

double wrap_2pi(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r -= two_pi;
  return r;
}

// Maps (angle, phase) of cos(angle)|0> + e^{i phase} sin(angle)|1> to an
// equivalent pair with angle in [0, pi/2], up to a global phase.
void canonical_pair(double& angle, double& phase) {
  constexpr double pi = std::numbers::pi;
  double a = std::fmod(angle, pi);  // shifting by pi only flips the global sign
  if (a < 0.0) a += pi;
  if (a > pi / 2) {
    a = pi - a;
    phase += pi;
  }
  angle = a;
  phase = wrap_2pi(phase);
}

}  // namespace

PureState::PureState(int dim_a, int dim_b, ComplexVector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  require_dims(dim_a_, dim_b_, "PureState");
  if (amplitudes_.size() != dim_a_ * dim_b_) {
    throw ValidationError("PureState: amplitude count does not match dimA*dimB");
  }
  const double n2 = amplitudes_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol::norm) {
    std::ostringstream msg;
    msg << "PureState: squared norm " << n2 << " differs from 1 by more than " << tol::norm;
    throw ValidationError(msg.str());
  }
}

PureState PureState::normalized(int dim_a, int dim_b, ComplexVector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) throw ValidationError("PureState: zero vector cannot be normalized");
  return PureState(dim_a, dim_b, amplitudes / n);
}

PureState PureState::product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector v = Eigen::kroneckerProduct(a, b).eval();
  return PureState(static_cast<int>(a.size()), static_cast<int>(b.size()), std::move(v));
}

DensityMatrix::DensityMatrix(int dim_a, int dim_b, ComplexMatrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  require_dims(dim_a_, dim_b_, "DensityMatrix");
  const int n = dim_a_ * dim_b_;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    std::ostringstream msg;
    msg << "DensityMatrix: matrix is " << matrix_.rows() << "x" << matrix_.cols()
        << ", expected " << n << "x" << n;
    throw ValidationError(msg.str());
  }
  if (!matrix_.allFinite()) throw ValidationError("DensityMatrix: non-finite entries");
  const double herm_dev = max_hermitian_deviation(matrix_);
  if (herm_dev > tol::herm) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max |m - m^dagger| = " << herm_dev << ")";
    throw ValidationError(msg.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol::trace) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << tr.real() << (tr.imag() < 0 ? "" : "+") << tr.imag()
        << "i is not 1";
    throw ValidationError(msg.str());
  }
  const double lmin = min_eigenvalue(matrix_);
  if (lmin < -tol::psd) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue " << lmin << ")";
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.dim_a(), psi.dim_b(), psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim_a, int dim_b) {
  const int n = dim_a * dim_b;
  return DensityMatrix(dim_a, dim_b, ComplexMatrix::Identity(n, n) / static_cast<double>(n));
}

ProductParams ProductParams::canonical() const {
  ProductParams out = *this;
  canonical_pair(out.alpha, out.delta);
  canonical_pair(out.beta, out.gamma);
  return out;
}

DensityMatrix SeparableEnsemble::realize() const {
  if (weights.empty() || weights.size() != factors_a.size() || weights.size() != factors_b.size()) {
    throw ValidationError("SeparableEnsemble: weights and factors must be non-empty and aligned");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ValidationError("SeparableEnsemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > tol::trace) {
    throw ValidationError("SeparableEnsemble: weights do not sum to 1");
  }
  const int da = static_cast<int>(factors_a.front().size());
  const int db = static_cast<int>(factors_b.front().size());
  ComplexMatrix rho = ComplexMatrix::Zero(da * db, da * db);
  for (std::size_t n = 0; n < weights.size(); ++n) {
    const ComplexVector v = Eigen::kroneckerProduct(factors_a[n], factors_b[n]).eval();
    rho.noalias() += weights[n] * (v * v.adjoint());
  }
  return DensityMatrix(da, db, std::move(rho));
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

PureState product_state(const ProductParams& p) {
  const Complex ed = std::polar(1.0, p.delta);
  const Complex eg = std::polar(1.0, p.gamma);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  ComplexVector v(4);
  v << ca * cb, eg * (ca * sb), ed * (sa * cb), ed * eg * (sa * sb);
  return PureState(2, 2, std::move(v));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem which) {
  const int n = dim_a * dim_b;
  ComplexMatrix out(n, n);
  for (int i = 0; i < dim_a; ++i)
    for (int l = 0; l < dim_b; ++l)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k) {
          const int row = i * dim_b + l;
          const int col = j * dim_b + k;
          if (which == Subsystem::A) {
            out(row, col) = m(j * dim_b + l, i * dim_b + k);
          } else {
            out(row, col) = m(i * dim_b + k, j * dim_b + l);
          }
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem which) {
  return partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b(), which);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, Subsystem traced) {
  if (traced == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int l = 0; l < dim_b; ++l) out(i, j) += m(i * dim_b + l, j * dim_b + l);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (int l = 0; l < dim_b; ++l)
    for (int k = 0; k < dim_b; ++k)
      for (int i = 0; i < dim_a; ++i) out(l, k) += m(i * dim_b + l, i * dim_b + k);
  return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
  return partial_trace(rho.matrix(), rho.dim_a(), rho.dim_b(), traced);
}

ComplexMatrix partial_trace(const PureState& psi, Subsystem traced) {
  return partial_trace(psi.projector(), psi.dim_a(), psi.dim_b(), traced);
}

double max_hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

PptResult is_ppt(const DensityMatrix& rho) {
  const double lmin = min_eigenvalue(partial_transpose(rho, Subsystem::B));
  return {lmin >= -tol::psd, lmin};
}

PureState random_pure_product(int dim, CounterRng& rng) {
  require_dims(dim, dim, "random_pure_product");
  const ComplexVector a = haar_vector(dim, rng);
  const ComplexVector b = haar_vector(dim, rng);
  return PureState::product(a, b);
}

PureState random_pure_product(int dim, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_pure_product(dim, rng);
}

SeparableEnsemble random_separable_mixture(int dim, int terms, CounterRng& rng) {
  require_dims(dim, dim, "random_separable_mixture");
  if (terms < 1) throw ValidationError("random_separable_mixture: terms must be >= 1");
  SeparableEnsemble ens;
  boost::random::exponential_distribution<double> expo(1.0);
  double total = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double w = expo(rng);
    ens.weights.push_back(w);
    total += w;
    ens.factors_a.push_back(haar_vector(dim, rng));
    ens.factors_b.push_back(haar_vector(dim, rng));
  }
  for (double& w : ens.weights) w /= total;
  return ens;
}

SeparableEnsemble random_separable_mixture(int dim, int terms, std::uint64_t seed) {
  CounterRng rng(seed);
  return random_separable_mixture(dim, terms, rng);
}

DensityMatrix random_density_matrix(int dim_a, int dim_b, int rank, CounterRng& rng) {
  const int n = dim_a * dim_b;
  if (rank < 1 || rank > n) throw ValidationError("random_density_matrix: rank out of range");
  ComplexMatrix g(n, rank);
  for (int c = 0; c < rank; ++c)
    for (int r = 0; r < n; ++r) {
      const double re = normal_deviate(rng);
      const double im = normal_deviate(rng);
      g(r, c) = {re, im};
    }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(dim_a, dim_b, std::move(rho));
}

}  // namespace entsep
