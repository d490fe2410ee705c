#include <cmath>
#include <numbers>

#include "doctest.h"

#include "entsep/optimize.hpp"

using namespace entsep;

namespace {

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    s += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
  }
  return s;
}

double shifted_bowl(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * std::pow(x[i] - 0.1 * i, 2);
  return s;
}

}  // namespace

TEST_CASE("golden section") {
  int evals = 0;
  const double x = golden_section([](double t) { return (t - 0.3) * (t - 0.3); }, -1.0, 2.0, 1e-10, evals);
  CHECK(x == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(evals > 0);
  CHECK(evals < 100);

  evals = 0;
  const double c = golden_section([](double t) { return std::cos(t); }, 2.0, 4.0, 1e-10, evals);
  CHECK(c == doctest::Approx(std::numbers::pi).epsilon(1e-8));
}

TEST_CASE("coordinate descent solves a separable bowl") {
  const LocalResult r = coordinate_descent(shifted_bowl, {1.0, -1.0, 0.5, 2.0}, 3.0, 2);
  REQUIRE(r.x.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(r.x[i] == doctest::Approx(0.1 * i).epsilon(1e-5));
  CHECK(r.value < 1e-9);
  CHECK(r.evaluations > 0);
}

TEST_CASE("coordinate descent never makes things worse") {
  const std::vector<double> x0 = {-1.2, 1.0};
  const LocalResult r = coordinate_descent(rosenbrock, x0, 0.5, 3);
  CHECK(r.value <= rosenbrock(x0));
}

TEST_CASE("Nelder-Mead") {
  SUBCASE("Rosenbrock in 2 and 4 dimensions") {
    for (std::size_t n : {2u, 4u}) {
      std::vector<double> x0(n, -1.0);
      const LocalResult r = nelder_mead(rosenbrock, x0, {});
      CHECK(r.converged);
      CHECK(r.value < 1e-9);
      for (double v : r.x) CHECK(v == doctest::Approx(1.0).epsilon(1e-4));
    }
  }
  SUBCASE("evaluation budget is respected") {
    NelderMeadOptions opts;
    opts.max_evaluations = 50;
    const LocalResult r = nelder_mead(rosenbrock, {-1.2, 1.0}, opts);
    CHECK(r.evaluations <= 50 + 8);
    CHECK_FALSE(r.converged);
  }
  SUBCASE("deterministic") {
    const LocalResult a = nelder_mead(rosenbrock, {0.3, -0.7, 1.1}, {});
    const LocalResult b = nelder_mead(rosenbrock, {0.3, -0.7, 1.1}, {});
    CHECK(a.value == b.value);
    CHECK(a.x == b.x);
    CHECK(a.evaluations == b.evaluations);
  }
}

TEST_CASE("refine chains both stages") {
  RefineOptions opts;
  opts.width = 1.0;
  const LocalResult r = refine(shifted_bowl, {2.0, 2.0, 2.0}, opts);
  CHECK(r.converged);
  CHECK(r.value < 1e-10);
}
