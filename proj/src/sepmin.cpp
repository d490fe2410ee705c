#include "entsep/sepmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/distributions/normal.hpp>
#include <boost/random/sobol.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "entsep/entropy.hpp"
#include "entsep/parallel.hpp"
#include "entsep/rng.hpp"

namespace entsep {

namespace {

constexpr double kDegenerateNorm = 1e-200;
constexpr double kPenalty = 1e6;

// Cranley-Patterson shifted Sobol points in [0,1)^dim. The shift depends only
// on the seed, so a run with more starts extends a run with fewer.
std::vector<std::vector<double>> sobol_points(int count, int dim, std::uint64_t seed) {
  CounterRng rng = CounterRng(seed).split(0x50b01);
  std::vector<double> shift(dim);
  for (auto& s : shift) s = rng.uniform();
  boost::random::sobol engine(static_cast<std::size_t>(dim));
  std::vector<std::vector<double>> points(count, std::vector<double>(dim));
  for (auto& p : points) {
    for (int k = 0; k < dim; ++k) {
      const double u = static_cast<double>(engine()) * 0x1.0p-64;
      p[k] = std::fmod(u + shift[k], 1.0);
    }
  }
  return points;
}

double to_normal(double u) {
  static const boost::math::normal standard;
  return boost::math::quantile(standard, std::clamp(u, 1e-12, 1.0 - 1e-12));
}

ComplexVector complex_from(std::span<const double> x, std::size_t offset, int n) {
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) v[i] = {x[offset + i], x[offset + n + i]};
  return v;
}

ComplexVector angles_to_vector(std::span<const double> x) {
  const Complex ed = std::polar(1.0, x[2]);
  const Complex eg = std::polar(1.0, x[3]);
  const double ca = std::cos(x[0]), sa = std::sin(x[0]);
  const double cb = std::cos(x[1]), sb = std::sin(x[1]);
  ComplexVector v(4);
  v << ca * cb, eg * (ca * sb), ed * (sa * cb), ed * eg * (sa * sb);
  return v;
}

ComplexVector factors_to_vector(std::span<const double> x, int d) {
  const ComplexVector a = complex_from(x, 0, d);
  const ComplexVector b = complex_from(x, 2 * d, d);
  return Eigen::kroneckerProduct(a, b).eval();
}

struct SearchSpace {
  int params = 0;
  std::function<ComplexVector(std::span<const double>)> to_state;
  RefineOptions refine;
};

MinimizationResult run_multistart(const OperatorSet& set, const SearchSpace& space,
                                  const std::vector<std::vector<double>>& starts,
                                  const MinimizerConfig& config) {
  const UncertaintyEvaluator evaluate(set);
  const Objective objective = [&](std::span<const double> x) {
    const ComplexVector psi = space.to_state(x);
    if (!(psi.squaredNorm() > kDegenerateNorm)) return kPenalty;
    return evaluate(psi);
  };

  RefineOptions refine = space.refine;
  refine.simplex.ftol = config.tolerance;
  refine.simplex.max_evaluations = config.max_evaluations;

  std::vector<LocalResult> results(starts.size());
  std::vector<double> initial(starts.size());
  detail::parallel_for(starts.size(), config.threads, [&](std::size_t i) {
    initial[i] = objective(starts[i]);
    results[i] = entsep::refine(objective, starts[i], refine);
  });

  MinimizationResult out;
  out.starts = static_cast<int>(starts.size());
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[best].value) best = i;
  }
  out.value = results[best].value;
  out.argmin_params = results[best].x;
  const ComplexVector psi = space.to_state(results[best].x);
  out.argmin_state = psi / psi.norm();
  out.converged = results[best].converged;
  if (config.keep_start_records) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      out.records.push_back({static_cast<int>(i), initial[i], results[i].value, results[i].evaluations,
                             results[i].converged});
    }
  }
  return out;
}

void require_config(const MinimizerConfig& config) {
  if (config.starts < 1) throw ValidationError("minimizer: starts must be >= 1");
  if (!(config.tolerance > 0.0)) throw ValidationError("minimizer: tolerance must be positive");
}

}  // namespace

int default_starts(int d) { return d == 2 ? 512 : 4096; }

MinimizationResult minimize_sep(const OperatorSet& set, int d, const MinimizerConfig& config) {
  require_config(config);
  if (d < 2 || set.dim() != d * d) {
    throw ValidationError("minimize_sep: operator set '" + set.name + "' does not act on a " +
                          std::to_string(d) + "x" + std::to_string(d) + " system");
  }
  SearchSpace space;
  std::vector<std::vector<double>> starts;
  if (d == 2) {
    space.params = 4;
    space.to_state = angles_to_vector;
    space.refine.width = std::numbers::pi / 4;
    space.refine.sweeps = 2;
    space.refine.simplex.step = 0.2;
    starts = sobol_points(config.starts, 4, config.seed);
    for (auto& p : starts) {
      p[0] *= std::numbers::pi / 2;
      p[1] *= std::numbers::pi / 2;
      p[2] *= 2 * std::numbers::pi;
      p[3] *= 2 * std::numbers::pi;
    }
  } else {
    space.params = 4 * d;
    space.to_state = [d](std::span<const double> x) { return factors_to_vector(x, d); };
    space.refine.width = 0.5;
    space.refine.sweeps = 1;
    space.refine.simplex.step = 0.25;
    starts = sobol_points(config.starts, 4 * d, config.seed);
    for (auto& p : starts)
      for (auto& u : p) u = to_normal(u);
  }
  MinimizationResult out = run_multistart(set, space, starts, config);
  if (d == 2) {
    const auto& x = out.argmin_params;
    out.argmin_angles = ProductParams{x[0], x[1], x[2], x[3]}.canonical();
  }
  return out;
}

MinimizationResult minimize_global(const OperatorSet& set, const MinimizerConfig& config) {
  require_config(config);
  const int n = set.dim();
  SearchSpace space;
  space.params = 2 * n;
  space.to_state = [n](std::span<const double> x) { return complex_from(x, 0, n); };
  space.refine.width = 0.5;
  space.refine.sweeps = 1;
  space.refine.simplex.step = 0.25;

  auto as_params = [n](const ComplexVector& v) {
    std::vector<double> x(2 * n);
    for (int i = 0; i < n; ++i) {
      x[i] = v[i].real();
      x[n + i] = v[i].imag();
    }
    return x;
  };

  std::vector<std::vector<double>> starts;
  CounterRng rng = CounterRng(config.seed).split(0xe16e);
  ComplexMatrix linear = ComplexMatrix::Zero(n, n);
  ComplexMatrix squares = ComplexMatrix::Zero(n, n);
  for (const auto& obs : set.observables) {
    const ComplexMatrix m = obs.matrix();
    linear += (2.0 * rng.uniform() - 1.0) * m;
    squares += (0.5 + rng.uniform()) * (m * m);
  }
  for (const ComplexMatrix* m : {&linear, &squares}) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(*m);
    for (int k = 0; k < n && static_cast<int>(starts.size()) < config.starts; ++k) {
      starts.push_back(as_params(solver.eigenvectors().col(k)));
    }
  }
  const int remaining = config.starts - static_cast<int>(starts.size());
  for (auto& p : sobol_points(remaining, 2 * n, config.seed)) {
    for (auto& u : p) u = to_normal(u);
    starts.push_back(std::move(p));
  }
  return run_multistart(set, space, starts, config);
}

GapResult gap(const OperatorSet& set, const MinimizerConfig& config) {
  return {minimize_sep(set, set.local_dim, config), minimize_global(set, config)};
}

std::vector<double> basis_projections(const BellBasis& basis, const ComplexVector& psi) {
  std::vector<double> q;
  q.reserve(basis.vectors.size());
  for (const auto& v : basis.vectors) q.push_back(std::norm(v.dot(psi)));
  return q;
}

ProjectionCapReport projection_cap_check(int d, int samples, std::uint64_t seed) {
  if (d < 2) throw ValidationError("projection_cap_check: d must be >= 2");
  const BellBasis basis = me_basis(d);
  ProjectionCapReport report;
  report.d = d;
  report.samples = samples;
  report.min_support = std::numeric_limits<int>::max();
  const double cap = 1.0 / d + 1e-9;
  const CounterRng root(seed);
  for (int s = 0; s < samples; ++s) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(s));
    const PureState psi = random_pure_product(d, rng);
    const auto q = basis_projections(basis, psi.amplitudes());
    const double qmax = *std::max_element(q.begin(), q.end());
    report.max_projection = std::max(report.max_projection, qmax);
    if (qmax > cap) ++report.violations;
    const int support = static_cast<int>(std::count_if(q.begin(), q.end(), [](double x) { return x > 1e-12; }));
    report.min_support = std::min(report.min_support, support);
  }
  if (samples == 0) report.min_support = 0;
  return report;
}

}  // namespace entsep
