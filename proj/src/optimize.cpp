#include "entsep/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entsep {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio

}  // namespace

double golden_section(const std::function<double(double)>& f, double lo, double hi, double xtol,
                      int& evaluations) {
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c), fd = f(d);
  evaluations += 2;
  while (hi - lo > xtol) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
    ++evaluations;
  }
  return fc <= fd ? c : d;
}

LocalResult coordinate_descent(const Objective& f, std::vector<double> x0, double width, int sweeps) {
  LocalResult r;
  r.x = std::move(x0);
  r.value = f(r.x);
  r.evaluations = 1;
  std::vector<double> trial = r.x;
  for (int s = 0; s < sweeps; ++s) {
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      trial = r.x;
      auto line = [&](double t) {
        trial[i] = t;
        return f(trial);
      };
      const double best_t = golden_section(line, r.x[i] - width, r.x[i] + width, 1e-6 * width, r.evaluations);
      trial[i] = best_t;
      const double v = f(trial);
      ++r.evaluations;
      // golden section finds a local minimum of the slice; keep it only if it helps
      if (v < r.value) {
        r.value = v;
        r.x[i] = best_t;
      }
    }
    width *= 0.5;
  }
  r.converged = true;
  return r;
}

LocalResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  LocalResult best;
  best.x = std::move(x0);
  best.value = f(best.x);
  best.evaluations = 1;

  std::vector<std::vector<double>> simplex(n + 1);
  std::vector<double> values(n + 1);
  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);

  auto eval = [&](const std::vector<double>& x) {
    ++best.evaluations;
    return f(x);
  };

  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    const double start_value = best.value;
    simplex[0] = best.x;
    values[0] = best.value;
    for (std::size_t i = 0; i < n; ++i) {
      simplex[i + 1] = best.x;
      simplex[i + 1][i] += opts.step;
      values[i + 1] = eval(simplex[i + 1]);
    }

    bool tolerance_met = false;
    while (best.evaluations < opts.max_evaluations) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t lo = order.front(), hi = order.back(), second = order[n - 1];

      double diameter = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        double dist = 0.0;
        for (std::size_t i = 0; i < n; ++i) dist = std::max(dist, std::abs(simplex[k][i] - simplex[lo][i]));
        diameter = std::max(diameter, dist);
      }
      if (values[hi] - values[lo] <= opts.ftol || diameter <= opts.xtol) {
        tolerance_met = true;
        break;
      }

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == hi) continue;
        for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i] / static_cast<double>(n);
      }
      for (std::size_t i = 0; i < n; ++i) xr[i] = centroid[i] + (centroid[i] - simplex[hi][i]);
      const double fr = eval(xr);
      if (fr < values[lo]) {
        for (std::size_t i = 0; i < n; ++i) xe[i] = centroid[i] + 2.0 * (centroid[i] - simplex[hi][i]);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex[hi] = xe;
          values[hi] = fe;
        } else {
          simplex[hi] = xr;
          values[hi] = fr;
        }
        continue;
      }
      if (fr < values[second]) {
        simplex[hi] = xr;
        values[hi] = fr;
        continue;
      }
      const bool outside = fr < values[hi];
      for (std::size_t i = 0; i < n; ++i) {
        xc[i] = outside ? centroid[i] + 0.5 * (xr[i] - centroid[i])
                        : centroid[i] + 0.5 * (simplex[hi][i] - centroid[i]);
      }
      const double fc = eval(xc);
      if (fc < (outside ? fr : values[hi])) {
        simplex[hi] = xc;
        values[hi] = fc;
        continue;
      }
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == lo) continue;
        for (std::size_t i = 0; i < n; ++i) simplex[k][i] = simplex[lo][i] + 0.5 * (simplex[k][i] - simplex[lo][i]);
        values[k] = eval(simplex[k]);
      }
    }

    const std::size_t lo = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    if (values[lo] < best.value) {
      best.value = values[lo];
      best.x = simplex[lo];
    }
    if (!tolerance_met) {
      best.converged = false;
      return best;
    }
    // a restart that gains nothing confirms the point
    if (start_value - best.value <= opts.ftol && restart > 0) {
      best.converged = true;
      return best;
    }
  }
  best.converged = true;
  return best;
}

LocalResult refine(const Objective& f, std::vector<double> x0, const RefineOptions& opts) {
  LocalResult coarse = coordinate_descent(f, std::move(x0), opts.width, opts.sweeps);
  LocalResult polished = nelder_mead(f, coarse.x, opts.simplex);
  polished.evaluations += coarse.evaluations;
  return polished;
}

}  // namespace entsep
