#include "entsep/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entsep {

namespace {

constexpr double kNegativeSlack = 1e-12;
constexpr double kSumTol = 1e-9;

void require_dim(int obs_dim, int state_dim, const std::string& label) {
  if (obs_dim != state_dim) {
    std::ostringstream msg;
    msg << label << ": observable acts on dimension " << obs_dim << " but the state has dimension "
        << state_dim;
    throw ValidationError(msg.str());
  }
}

double clamped_term(double p) { return p < kProbabilityFloor ? 0.0 : -p * std::log(p); }

}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("OutcomeDistribution: empty");
  double total = 0.0;
  for (double& p : probs_) {
    if (!(p >= -kNegativeSlack)) {
      throw ValidationError("OutcomeDistribution: negative probability " + std::to_string(p));
    }
    p = std::max(p, 0.0);
    total += p;
  }
  if (std::abs(total - 1.0) > kSumTol) {
    throw ValidationError("OutcomeDistribution: probabilities sum to " + std::to_string(total));
  }
}

double shannon(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) h += clamped_term(p);
  return h;
}

double shannon(const OutcomeDistribution& p) { return shannon(p.probs()); }

double binary_entropy(double x) {
  if (!(x >= -kNegativeSlack && x <= 1.0 + kNegativeSlack)) {
    throw std::domain_error("binary_entropy: argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  return clamped_term(x) + clamped_term(1.0 - x);
}

double f_func(double x) {
  if (!(x >= -kNegativeSlack && x <= 1.0 + kNegativeSlack)) {
    throw std::domain_error("f_func: argument outside [0, 1]");
  }
  return clamped_term(std::clamp(x, 0.0, 1.0));
}

OutcomeDistribution outcome_distribution(const SpectralObservable& obs, const DensityMatrix& rho) {
  require_dim(obs.dim(), rho.dim(), obs.label());
  std::vector<double> probs;
  for (const auto& e : obs.eigenspaces()) {
    probs.push_back((e.projector * rho.matrix()).trace().real());
  }
  return OutcomeDistribution(std::move(probs));
}

OutcomeDistribution outcome_distribution(const SpectralObservable& obs, const PureState& psi) {
  require_dim(obs.dim(), psi.dim(), obs.label());
  std::vector<double> probs;
  for (const auto& e : obs.eigenspaces()) {
    probs.push_back((psi.amplitudes().adjoint() * e.projector * psi.amplitudes())(0, 0).real());
  }
  return OutcomeDistribution(std::move(probs));
}

double entropic_uncertainty(const SpectralObservable& obs, const DensityMatrix& rho) {
  return shannon(outcome_distribution(obs, rho));
}

double entropic_uncertainty(const SpectralObservable& obs, const PureState& psi) {
  return shannon(outcome_distribution(obs, psi));
}

double operator_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

double pair_bound(const SpectralObservable& a, const SpectralObservable& b) {
  require_dim(a.dim(), b.dim(), a.label() + "/" + b.label());
  double c = 0.0;
  for (const auto& x : a.eigenspaces())
    for (const auto& y : b.eigenspaces()) c = std::max(c, operator_norm(x.projector * y.projector));
  // c >= 1/sqrt(dim) always; rounding can nudge it past 1
  return std::max(0.0, -2.0 * std::log(std::min(c, 1.0)));
}

double total_uncertainty(const OperatorSet& set, const DensityMatrix& rho) {
  double total = 0.0;
  for (const auto& obs : set.observables) total += entropic_uncertainty(obs, rho);
  return total;
}

double total_uncertainty(const OperatorSet& set, const PureState& psi) {
  double total = 0.0;
  for (const auto& obs : set.observables) total += entropic_uncertainty(obs, psi);
  return total;
}

UncertaintyEvaluator::UncertaintyEvaluator(const OperatorSet& set)
    : dim_(set.dim()), basis_(set.common_basis) {
  if (basis_) {
    basis_adjoint_ = basis_->unitary.adjoint();
    for (const auto& obs : set.observables) {
      level_counts_.push_back(static_cast<int>(obs.eigenspaces().size()));
    }
    return;
  }
  for (const auto& obs : set.observables) {
    std::vector<ComplexMatrix> ps;
    for (const auto& e : obs.eigenspaces()) ps.push_back(e.projector);
    projectors_.push_back(std::move(ps));
  }
}

double UncertaintyEvaluator::operator()(const ComplexVector& psi) const {
  const double n2 = psi.squaredNorm();
  double total = 0.0;
  if (basis_) {
    const Eigen::VectorXd q = (basis_adjoint_ * psi).cwiseAbs2() / n2;
    std::vector<double> probs;
    for (std::size_t j = 0; j < basis_->level_of.size(); ++j) {
      probs.assign(level_counts_[j], 0.0);
      const auto& levels = basis_->level_of[j];
      for (Eigen::Index v = 0; v < q.size(); ++v) probs[levels[v]] += q[v];
      total += shannon(probs);
    }
    return total;
  }
  std::vector<double> probs;
  for (const auto& ps : projectors_) {
    probs.clear();
    for (const auto& p : ps) probs.push_back((psi.adjoint() * p * psi)(0, 0).real() / n2);
    total += shannon(probs);
  }
  return total;
}

}  // namespace entsep
