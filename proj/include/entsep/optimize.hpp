#pragma once

#include <functional>
#include <span>
#include <vector>

namespace entsep {

using Objective = std::function<double(std::span<const double>)>;

struct LocalResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Golden-section search for a local minimum of f on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo, double hi, double xtol,
                      int& evaluations);

// Cyclic coordinate descent: each sweep line-searches every coordinate over
// [x_i - width, x_i + width] and halves `width` afterwards.
LocalResult coordinate_descent(const Objective& f, std::vector<double> x0, double width, int sweeps);

struct NelderMeadOptions {
  double step = 0.1;         // initial simplex edge
  double ftol = 1e-10;       // stop when f(worst) - f(best) <= ftol ...
  double xtol = 1e-9;        // ... and the simplex diameter <= xtol
  int max_evaluations = 20000;
  int max_restarts = 4;      // restart from the best vertex until no further gain
};

LocalResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts);

// Coordinate golden-section sweeps followed by a Nelder-Mead polish.
struct RefineOptions {
  double width = 0.5;
  int sweeps = 2;
  NelderMeadOptions simplex;
};

LocalResult refine(const Objective& f, std::vector<double> x0, const RefineOptions& opts);

}  // namespace entsep
