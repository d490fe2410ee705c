#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "entsep/observables.hpp"
#include "entsep/qstate.hpp"

namespace entsep {

// A violation must clear the bound by more than this, so states sitting on the
// separable floor are never reported as entangled.
inline constexpr double kVerdictTol = 1e-9;

struct CriterionVerdict {
  std::string criterion_id;
  double value = 0.0;  // total uncertainty, nats
  double bound = 0.0;  // separable floor, nats
  double margin = 0.0; // value - bound; negative means the bound is undercut
  bool violated = false;

  double value_bits() const;
  double bound_bits() const;
};

struct Criterion {
  std::string id;
  OperatorSet set;
};

// Stable ids: E8-XY, E12-XYZ, E14-1_3, E16-1_1_2, E18-1111, E22-SPIN,
// E33-EXTREME-<d>, E37-ONEREST-<d>.
std::vector<Criterion> two_qubit_criteria();
std::vector<Criterion> dxd_criteria(int d);
// Two-qubit list for d = 2, the d x d pair otherwise.
std::vector<Criterion> criteria_for(int d);
Criterion criterion_by_id(std::string_view id);

CriterionVerdict evaluate(const OperatorSet& set, const DensityMatrix& rho,
                          double verdict_tol = kVerdictTol);
CriterionVerdict evaluate(const Criterion& c, const DensityMatrix& rho,
                          double verdict_tol = kVerdictTol);

// verdicts[state][criterion], computed on `threads` workers; order follows the
// inputs regardless of scheduling.
std::vector<std::vector<CriterionVerdict>> evaluate_batch(std::span<const Criterion> criteria,
                                                          std::span<const DensityMatrix> states,
                                                          unsigned threads = 1);

// Bell-basis projection probabilities of a two-qubit product state
//   Q1 = (q0 + q1)/2, Q2 = (q0 - q1)/2, Q3 = (1 - q0 + q2)/2, Q4 = (1 - q0 - q2)/2.
struct QParams {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q = 0.0;

  std::array<double, 4> bell_probabilities() const;
};

QParams qparams(const ProductParams& p);

// Closed forms of the total uncertainty on the product state of `p`.
double closed_form_xy(const ProductParams& p);
double closed_form_xyz(const QParams& q);
double closed_form_1_3(const QParams& q);
// Same quantity regrouped as two conditional binary entropies per Bell pair.
double closed_form_1_3_grouped(const QParams& q);
double closed_form_1111(const QParams& q);
double closed_form_spin(const ProductParams& p);

struct SplitUncertainty {
  double f0 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;

  double total() const { return f0 + f1 + f2; }
};

SplitUncertainty closed_form_1_1_2(const QParams& q);

// H2(q0) + H2(1/2 + min(q0, 1 - q0)); minimum ln 2 at q0 = 1/2.
double g_func(double q0);

struct ImplicationReport {
  double xy = 0.0;   // H(X) + H(Y)
  double xyz = 0.0;  // H(X) + H(Y) + H(Z)
  bool xy_violated = false;
  bool xyz_violated = false;

  // A violation of the XY bound must come with a violation of the XYZ bound.
  bool consistent() const { return !xy_violated || xyz_violated; }
};

ImplicationReport implication_check(const DensityMatrix& rho);

}  // namespace entsep
