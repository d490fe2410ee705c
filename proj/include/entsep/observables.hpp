#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entsep/qstate.hpp"

namespace entsep {

// One eigenvalue of an observable together with the projector onto its
// eigenspace.
struct Eigenspace {
  double value;
  ComplexMatrix projector;

  int rank() const;
};

// Observable stored through its spectral decomposition: distinct eigenvalues
// and mutually orthogonal projectors summing to the identity.
class SpectralObservable {
 public:
  SpectralObservable(std::string label, std::vector<Eigenspace> eigenspaces);

  const std::string& label() const { return label_; }
  const std::vector<Eigenspace>& eigenspaces() const { return eigenspaces_; }
  int dim() const;
  std::vector<double> eigenvalues() const;
  std::vector<int> ranks() const;

  // sum_k x_k X_k
  ComplexMatrix matrix() const;

 private:
  std::string label_;
  std::vector<Eigenspace> eigenspaces_;
};

// Orthonormal basis of maximally entangled vectors for a d x d system.
struct BellBasis {
  int dim = 0;
  std::vector<ComplexVector> vectors;

  // Basis vectors as the columns of a d^2 x d^2 unitary.
  ComplexMatrix unitary() const;
};

// Common eigenbasis of a commuting set, with each observable described by
// the eigenspace index it assigns to every basis vector.
struct CommonBasis {
  ComplexMatrix unitary;
  std::vector<std::vector<int>> level_of;  // [observable][basis vector]
};

struct OperatorSet {
  std::string name;
  int local_dim = 2;
  std::vector<SpectralObservable> observables;
  double sep_floor = 0.0;     // minimum total uncertainty over separable states
  double global_floor = 0.0;  // minimum total uncertainty over all states
  std::optional<CommonBasis> common_basis;

  int dim() const { return local_dim * local_dim; }
};

ComplexMatrix pauli(int axis);

BellBasis bell_basis_2();

// For shift s and Fourier index t,
//   |Psi_{s,t}> = d^{-1/2} sum_i e^{2 pi i i t / d} |i, i+s mod d>,
// ordered v = s*d + t. For d = 2 this reproduces Psi_1..Psi_4.
BellBasis me_basis(int d);

// Observable diagonal in `basis` with the given eigenvalue per basis vector.
SpectralObservable bell_diagonal(const BellBasis& basis, const std::vector<double>& eigenvalues,
                                 std::string label);

// Eigenvalues closer than `gap` are merged into one degenerate eigenspace.
SpectralObservable spectral_decompose(const ComplexMatrix& m, std::string label,
                                      double gap = tol::eig_gap);

OperatorSet xy_set();
OperatorSet xyz_set();
OperatorSet set_1_3();
OperatorSet set_1_1_2();
OperatorSet x_1111();
OperatorSet spin_set();
OperatorSet bell_set_extreme(int d);
OperatorSet bell_set_one_rest(int d);

// Lookup by short name: xy, xyz, 1_3, 1_1_2, 1111, spin, extreme, onerest.
// The two-qubit sets ignore d (it must be 2).
OperatorSet operator_set_by_name(std::string_view name, int d = 2);
std::vector<std::string> operator_set_names();

}  // namespace entsep
