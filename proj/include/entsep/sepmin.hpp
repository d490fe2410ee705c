#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entsep/observables.hpp"
#include "entsep/optimize.hpp"
#include "entsep/qstate.hpp"

namespace entsep {

struct MinimizerConfig {
  int starts = 512;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;  // objective tolerance of the local polish
  int max_evaluations = 20000;  // per start
  unsigned threads = 1;
  bool keep_start_records = false;
};

// Default multistart counts: 512 for two qubits, 4096 above.
int default_starts(int d);

struct StartRecord {
  int index = 0;
  double initial = 0.0;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct MinimizationResult {
  double value = 0.0;
  std::vector<double> argmin_params;
  ComplexVector argmin_state;           // normalized joint vector
  std::optional<ProductParams> argmin_angles;  // two-qubit product search only
  int starts = 0;
  bool converged = false;
  std::vector<StartRecord> records;     // filled when keep_start_records is set
};

// Minimum total uncertainty over pure product states, which by concavity of
// the entropy equals the minimum over all separable states. d = 2 searches the
// four product angles; d > 2 searches two unnormalized complex factors.
MinimizationResult minimize_sep(const OperatorSet& set, int d, const MinimizerConfig& config);

// Minimum total uncertainty over all pure states of the joint system. Starts
// are eigenvectors of random combinations of the observables and of their
// squares, followed by low-discrepancy points.
MinimizationResult minimize_global(const OperatorSet& set, const MinimizerConfig& config);

struct GapResult {
  MinimizationResult separable;
  MinimizationResult global;
  double gap() const { return separable.value - global.value; }
};

GapResult gap(const OperatorSet& set, const MinimizerConfig& config);

struct ProjectionCapReport {
  int d = 0;
  int samples = 0;
  double max_projection = 0.0;  // max over samples and basis vectors of Q_v
  int violations = 0;           // samples with some Q_v > 1/d + 1e-9
  int min_support = 0;          // fewest basis vectors with Q_v > 1e-12
  bool support_bound_holds() const { return min_support >= d; }
};

// Samples random pure product states and checks their projections on the
// maximally entangled basis never exceed 1/d.
ProjectionCapReport projection_cap_check(int d, int samples, std::uint64_t seed);

// Projection probabilities of a joint state on me_basis(d).
std::vector<double> basis_projections(const BellBasis& basis, const ComplexVector& psi);

}  // namespace entsep
