#include "entsep/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "entsep/entropy.hpp"

namespace entsep {

namespace {

constexpr double kProjectorTol = 1e-9;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Finds the eigenspace of every observable that contains each basis vector.
CommonBasis common_basis_for(const std::vector<SpectralObservable>& observables,
                             const BellBasis& basis) {
  CommonBasis cb;
  cb.unitary = basis.unitary();
  for (const auto& obs : observables) {
    std::vector<int> levels;
    for (const auto& v : basis.vectors) {
      int found = -1;
      for (std::size_t k = 0; k < obs.eigenspaces().size(); ++k) {
        const double weight = (v.adjoint() * obs.eigenspaces()[k].projector * v)(0, 0).real();
        if (std::abs(weight - 1.0) < 1e-9) {
          found = static_cast<int>(k);
          break;
        }
      }
      if (found < 0) {
        throw ValidationError("common basis: vector is not an eigenvector of " + obs.label());
      }
      levels.push_back(found);
    }
    cb.level_of.push_back(std::move(levels));
  }
  return cb;
}

OperatorSet bell_diagonal_set(std::string name, int d, const BellBasis& basis,
                              const std::vector<std::vector<double>>& table,
                              const std::vector<std::string>& labels, double sep_floor) {
  OperatorSet set;
  set.name = std::move(name);
  set.local_dim = d;
  for (std::size_t j = 0; j < table.size(); ++j) {
    set.observables.push_back(bell_diagonal(basis, table[j], labels[j]));
  }
  set.sep_floor = sep_floor;
  set.global_floor = 0.0;
  set.common_basis = common_basis_for(set.observables, basis);
  return set;
}

OperatorSet correlation_set(std::string name, int count, double sep_floor) {
  static const char* labels[] = {"X", "Y", "Z"};
  OperatorSet set;
  set.name = std::move(name);
  set.local_dim = 2;
  for (int j = 1; j <= count; ++j) {
    set.observables.push_back(spectral_decompose(tensor_product(pauli(j), pauli(j)), labels[j - 1]));
  }
  set.sep_floor = sep_floor;
  set.global_floor = 0.0;
  set.common_basis = common_basis_for(set.observables, bell_basis_2());
  return set;
}

}  // namespace

int Eigenspace::rank() const {
  return static_cast<int>(std::lround(projector.trace().real()));
}

SpectralObservable::SpectralObservable(std::string label, std::vector<Eigenspace> eigenspaces)
    : label_(std::move(label)), eigenspaces_(std::move(eigenspaces)) {
  if (eigenspaces_.empty()) throw ValidationError(label_ + ": observable has no eigenspaces");
  const Eigen::Index n = eigenspaces_.front().projector.rows();
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < eigenspaces_.size(); ++k) {
    const ComplexMatrix& p = eigenspaces_[k].projector;
    if (p.rows() != n || p.cols() != n) throw ValidationError(label_ + ": projector sizes differ");
    if (max_hermitian_deviation(p) > kProjectorTol) {
      throw ValidationError(label_ + ": projector is not Hermitian");
    }
    if ((p * p - p).cwiseAbs().maxCoeff() > kProjectorTol) {
      throw ValidationError(label_ + ": projector is not idempotent");
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (std::abs(eigenspaces_[k].value - eigenspaces_[m].value) <= tol::eig_gap) {
        throw ValidationError(label_ + ": eigenvalues are not distinct");
      }
      if ((p * eigenspaces_[m].projector).cwiseAbs().maxCoeff() > kProjectorTol) {
        throw ValidationError(label_ + ": projectors are not mutually orthogonal");
      }
    }
    total += p;
  }
  if ((total - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > kProjectorTol) {
    throw ValidationError(label_ + ": projectors do not sum to the identity");
  }
}

int SpectralObservable::dim() const {
  return static_cast<int>(eigenspaces_.front().projector.rows());
}

std::vector<double> SpectralObservable::eigenvalues() const {
  std::vector<double> out;
  for (const auto& e : eigenspaces_) out.push_back(e.value);
  return out;
}

std::vector<int> SpectralObservable::ranks() const {
  std::vector<int> out;
  for (const auto& e : eigenspaces_) out.push_back(e.rank());
  return out;
}

ComplexMatrix SpectralObservable::matrix() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (const auto& e : eigenspaces_) m += e.value * e.projector;
  return m;
}

ComplexMatrix BellBasis::unitary() const {
  const int n = dim * dim;
  ComplexMatrix u(n, n);
  for (int v = 0; v < n; ++v) u.col(v) = vectors[v];
  return u;
}

ComplexMatrix pauli(int axis) {
  // |0>, |1> are the +1, -1 eigenvectors of sigma^(1). sigma^(2) and sigma^(3)
  // follow so that sigma^(1) sigma^(2) = i sigma^(3) and the Bell-basis sign
  // table of X, Y, Z holds.
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  switch (axis) {
    case 1:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    case 2:
      s << 0.0, i, -i, 0.0;
      break;
    case 3:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    default:
      throw std::out_of_range("pauli: axis must be 1, 2 or 3");
  }
  return s;
}

BellBasis bell_basis_2() {
  BellBasis b;
  b.dim = 2;
  ComplexVector v(4);
  v << kInvSqrt2, 0.0, 0.0, kInvSqrt2;
  b.vectors.push_back(v);
  v << kInvSqrt2, 0.0, 0.0, -kInvSqrt2;
  b.vectors.push_back(v);
  v << 0.0, kInvSqrt2, kInvSqrt2, 0.0;
  b.vectors.push_back(v);
  v << 0.0, kInvSqrt2, -kInvSqrt2, 0.0;
  b.vectors.push_back(v);
  return b;
}

BellBasis me_basis(int d) {
  if (d < 2) throw ValidationError("me_basis: d must be >= 2");
  BellBasis b;
  b.dim = d;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      ComplexVector v = ComplexVector::Zero(d * d);
      for (int i = 0; i < d; ++i) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(i * t) / d;
        v[i * d + (i + s) % d] = std::polar(amp, phase);
      }
      b.vectors.push_back(std::move(v));
    }
  }
  return b;
}

SpectralObservable bell_diagonal(const BellBasis& basis, const std::vector<double>& eigenvalues,
                                 std::string label) {
  if (eigenvalues.size() != basis.vectors.size()) {
    throw ValidationError(label + ": need one eigenvalue per basis vector");
  }
  std::vector<double> levels = eigenvalues;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(),
                           [](double a, double b) { return std::abs(a - b) <= tol::eig_gap; }),
               levels.end());
  const int n = basis.dim * basis.dim;
  std::vector<Eigenspace> spaces;
  for (double x : levels) {
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (std::size_t v = 0; v < eigenvalues.size(); ++v) {
      if (std::abs(eigenvalues[v] - x) <= tol::eig_gap) {
        p += basis.vectors[v] * basis.vectors[v].adjoint();
      }
    }
    spaces.push_back({x, std::move(p)});
  }
  return SpectralObservable(std::move(label), std::move(spaces));
}

SpectralObservable spectral_decompose(const ComplexMatrix& m, std::string label, double gap) {
  if (m.rows() != m.cols()) throw ValidationError(label + ": matrix is not square");
  if (max_hermitian_deviation(m) > tol::herm) {
    throw ValidationError(label + ": matrix is not Hermitian");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  std::vector<Eigenspace> spaces;
  Eigen::Index start = 0;
  const Eigen::Index n = values.size();
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k == n || values[k] - values[k - 1] > gap) {
      const Eigen::Index count = k - start;
      const ComplexMatrix block = vectors.middleCols(start, count);
      const double mean = values.segment(start, count).mean();
      spaces.push_back({mean, block * block.adjoint()});
      start = k;
    }
  }
  return SpectralObservable(std::move(label), std::move(spaces));
}

OperatorSet xy_set() { return correlation_set("xy", 2, std::numbers::ln2); }

OperatorSet xyz_set() { return correlation_set("xyz", 3, 2.0 * std::numbers::ln2); }

OperatorSet set_1_3() {
  const std::vector<std::vector<double>> table = {
      {+1, -1, -1, -1},
      {-1, +1, -1, -1},
      {-1, -1, +1, -1},
      {-1, -1, -1, +1},
  };
  std::vector<std::string> labels;
  for (int j = 1; j <= 4; ++j) labels.push_back("X^(1,3)_" + std::to_string(j));
  return bell_diagonal_set("1_3", 2, bell_basis_2(), table, labels, 2.0 * std::numbers::ln2);
}

OperatorSet set_1_1_2() {
  const std::vector<std::vector<double>> table = {
      {0, 0, +1, -1},
      {0, +1, 0, -1},
      {0, +1, -1, 0},
      {+1, 0, 0, -1},
      {+1, 0, -1, 0},
      {+1, -1, 0, 0},
  };
  std::vector<std::string> labels;
  for (int j = 1; j <= 6; ++j) labels.push_back("X^(1,1,2)_" + std::to_string(j));
  return bell_diagonal_set("1_1_2", 2, bell_basis_2(), table, labels, 5.0 * std::numbers::ln2);
}

OperatorSet x_1111() {
  return bell_diagonal_set("1111", 2, bell_basis_2(), {{1, 2, 3, 4}}, {"X^(1,1,1,1)"},
                           std::numbers::ln2);
}

OperatorSet spin_set() {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  OperatorSet set;
  set.name = "spin";
  set.local_dim = 2;
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix s = tensor_product(pauli(j), id) + tensor_product(id, pauli(j));
    set.observables.push_back(spectral_decompose(s, "S" + std::to_string(j)));
  }
  set.sep_floor = 3.0 * std::numbers::ln2;
  set.global_floor = 0.0;
  return set;
}

OperatorSet bell_set_extreme(int d) {
  const BellBasis basis = me_basis(d);
  std::vector<double> values(d * d);
  std::iota(values.begin(), values.end(), 1.0);
  return bell_diagonal_set("extreme", d, basis, {values}, {"X^(1,...,1)"},
                           std::log(static_cast<double>(d)));
}

OperatorSet bell_set_one_rest(int d) {
  const BellBasis basis = me_basis(d);
  const int n = d * d;
  std::vector<std::vector<double>> table;
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) {
    std::vector<double> row(n, -1.0);
    row[v] = +1.0;
    table.push_back(std::move(row));
    labels.push_back("X^(1," + std::to_string(n - 1) + ")_" + std::to_string(v + 1));
  }
  return bell_diagonal_set("onerest", d, basis, table, labels,
                           d * binary_entropy(1.0 / static_cast<double>(d)));
}

OperatorSet operator_set_by_name(std::string_view name, int d) {
  if (name == "extreme") return bell_set_extreme(d);
  if (name == "onerest") return bell_set_one_rest(d);
  if (d != 2) {
    throw ValidationError("operator set '" + std::string(name) + "' is defined only for d = 2");
  }
  if (name == "xy") return xy_set();
  if (name == "xyz") return xyz_set();
  if (name == "1_3") return set_1_3();
  if (name == "1_1_2") return set_1_1_2();
  if (name == "1111") return x_1111();
  if (name == "spin") return spin_set();
  throw ValidationError("unknown operator set '" + std::string(name) + "'");
}

std::vector<std::string> operator_set_names() {
  return {"xy", "xyz", "1_3", "1_1_2", "1111", "spin", "extreme", "onerest"};
}

}  // namespace entsep
