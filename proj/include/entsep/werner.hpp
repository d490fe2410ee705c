#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "entsep/qstate.hpp"

namespace entsep {

// w_p = (1 - p)/4 * I + p |Psi_4><Psi_4|, separable iff p <= 1/3.
struct WernerPoint {
  double p;
  DensityMatrix state;
};

WernerPoint werner(double p);

// Ids of the six two-qubit criteria, in threshold-table order.
const std::vector<std::string>& werner_criterion_ids();

// Total uncertainty of w_p for a two-qubit criterion, in closed form.
double werner_closed_form(std::string_view criterion_id, double p);
double werner_bound(std::string_view criterion_id);

// Mixing parameter above which the criterion certifies w_p as entangled,
// found by bisection after checking the closed form decreases on a
// 1000-point grid. Throws std::domain_error when the closed form is not
// monotone or never crosses the bound.
double werner_threshold(std::string_view criterion_id, double tol = 1e-6);

struct SweepRow {
  double p = 0.0;
  std::vector<double> values;
  std::vector<double> bounds;
  std::vector<bool> violated;
  bool ppt = false;
};

struct SweepTable {
  std::vector<std::string> criterion_ids;
  std::vector<SweepRow> rows;

  // Header: p, <id>_value, <id>_violated for each criterion, ppt_flag.
  // Floats use 12 significant digits; flags are 0/1.
  void write_csv(std::ostream& out) const;
};

// Evaluates every criterion on w_p through the matrix pipeline, one row per
// grid point in grid order.
SweepTable werner_sweep(const std::vector<std::string>& criterion_ids, const std::vector<double>& p_grid,
                        unsigned threads = 1);

std::vector<double> linear_grid(double lo, double hi, int steps);

}  // namespace entsep
