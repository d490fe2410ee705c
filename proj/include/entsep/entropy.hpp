#pragma once

#include <span>
#include <vector>

#include "entsep/observables.hpp"
#include "entsep/qstate.hpp"

namespace entsep {

// Probabilities below this are treated as exact zeros before taking logs.
inline constexpr double kProbabilityFloor = 1e-15;

// Measurement-outcome distribution; entries in [-1e-12, 0) are clamped to 0.
class OutcomeDistribution {
 public:
  explicit OutcomeDistribution(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// All entropies are in nats.
double shannon(std::span<const double> probs);
double shannon(const OutcomeDistribution& p);
double binary_entropy(double x);
// -x ln x with F(0) = 0.
double f_func(double x);

OutcomeDistribution outcome_distribution(const SpectralObservable& obs, const DensityMatrix& rho);
OutcomeDistribution outcome_distribution(const SpectralObservable& obs, const PureState& psi);

double entropic_uncertainty(const SpectralObservable& obs, const DensityMatrix& rho);
double entropic_uncertainty(const SpectralObservable& obs, const PureState& psi);

// Largest singular value.
double operator_norm(const ComplexMatrix& m);

// -2 ln max_{k,k'} ||X_k Y_k'||: lower bound on H(X) + H(Y) for every state.
double pair_bound(const SpectralObservable& a, const SpectralObservable& b);

double total_uncertainty(const OperatorSet& set, const DensityMatrix& rho);
double total_uncertainty(const OperatorSet& set, const PureState& psi);

// Fast total uncertainty on (not necessarily normalized) joint vectors, for
// use inside optimizers. Sets with a common eigenbasis are evaluated from the
// basis-projection probabilities; others through their projectors.
class UncertaintyEvaluator {
 public:
  explicit UncertaintyEvaluator(const OperatorSet& set);

  double operator()(const ComplexVector& psi) const;
  int dim() const { return dim_; }

 private:
  int dim_;
  std::optional<CommonBasis> basis_;
  ComplexMatrix basis_adjoint_;
  std::vector<int> level_counts_;
  std::vector<std::vector<ComplexMatrix>> projectors_;
};

}  // namespace entsep
