#include "entsep/werner.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "entsep/criteria.hpp"
#include "entsep/entropy.hpp"
#include "entsep/observables.hpp"
#include "entsep/parallel.hpp"

namespace entsep {

namespace {

constexpr int kMonotoneGrid = 1000;

std::string format_float(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

WernerPoint werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("werner: p must lie in [0, 1]");
  const ComplexVector singlet = bell_basis_2().vectors[3];
  ComplexMatrix m = (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4) + p * singlet * singlet.adjoint();
  return {p, DensityMatrix(2, 2, std::move(m))};
}

const std::vector<std::string>& werner_criterion_ids() {
  static const std::vector<std::string> ids = {"E8-XY",     "E12-XYZ",  "E14-1_3",
                                               "E16-1_1_2", "E18-1111", "E22-SPIN"};
  return ids;
}

double werner_closed_form(std::string_view id, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("werner_closed_form: p must lie in [0, 1]");
  const double even = (1.0 + p) / 2.0;
  const double low = (1.0 - p) / 4.0;
  const double high = (1.0 + 3.0 * p) / 4.0;
  if (id == "E8-XY") return 2.0 * binary_entropy(even);
  if (id == "E12-XYZ") return 3.0 * binary_entropy(even);
  if (id == "E14-1_3") return 3.0 * binary_entropy(low) + binary_entropy(high);
  if (id == "E16-1_1_2") return 3.0 * binary_entropy(even) + 3.0 * f_func(high) + 9.0 * f_func(low);
  if (id == "E18-1111") return 3.0 * f_func(low) + f_func(high);
  if (id == "E22-SPIN") return 3.0 * f_func(even) + 6.0 * f_func(low);
  throw ValidationError("werner: unknown criterion id '" + std::string(id) + "'");
}

double werner_bound(std::string_view id) {
  constexpr double ln2 = std::numbers::ln2;
  if (id == "E8-XY" || id == "E18-1111") return ln2;
  if (id == "E12-XYZ" || id == "E14-1_3") return 2.0 * ln2;
  if (id == "E16-1_1_2") return 5.0 * ln2;
  if (id == "E22-SPIN") return 3.0 * ln2;
  throw ValidationError("werner: unknown criterion id '" + std::string(id) + "'");
}

double werner_threshold(std::string_view id, double tol) {
  const double bound = werner_bound(id);
  auto excess = [&](double p) { return werner_closed_form(id, p) - bound; };

  double prev = werner_closed_form(id, 0.0);
  for (int k = 1; k <= kMonotoneGrid; ++k) {
    const double cur = werner_closed_form(id, static_cast<double>(k) / kMonotoneGrid);
    if (cur > prev + 1e-12) {
      throw std::domain_error("werner_threshold: closed form of " + std::string(id) + " is not decreasing");
    }
    prev = cur;
  }
  double lo = 0.0, hi = 1.0;
  if (!(excess(lo) >= 0.0 && excess(hi) < 0.0)) {
    throw std::domain_error("criterion " + std::string(id) + " never fires on Werner family");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void SweepTable::write_csv(std::ostream& out) const {
  out << "p";
  for (const auto& id : criterion_ids) out << ',' << id << "_value," << id << "_violated";
  out << ",ppt_flag\n";
  for (const auto& row : rows) {
    out << format_float(row.p);
    for (std::size_t c = 0; c < row.values.size(); ++c) {
      out << ',' << format_float(row.values[c]) << ',' << (row.violated[c] ? 1 : 0);
    }
    out << ',' << (row.ppt ? 1 : 0) << '\n';
  }
}

SweepTable werner_sweep(const std::vector<std::string>& criterion_ids, const std::vector<double>& p_grid,
                        unsigned threads) {
  std::vector<Criterion> criteria;
  for (const auto& id : criterion_ids) {
    Criterion c = criterion_by_id(id);
    if (c.set.local_dim != 2) throw ValidationError("werner_sweep: " + id + " is not a two-qubit criterion");
    criteria.push_back(std::move(c));
  }
  SweepTable table;
  table.criterion_ids = criterion_ids;
  table.rows.resize(p_grid.size());
  detail::parallel_for(p_grid.size(), threads, [&](std::size_t i) {
    const WernerPoint w = werner(p_grid[i]);
    SweepRow& row = table.rows[i];
    row.p = w.p;
    for (const auto& c : criteria) {
      const CriterionVerdict v = evaluate(c, w.state);
      row.values.push_back(v.value);
      row.bounds.push_back(v.bound);
      row.violated.push_back(v.violated);
    }
    row.ppt = is_ppt(w.state).ppt;
  });
  return table;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw ValidationError("grid: steps must be >= 1");
  if (steps == 1) return {lo};
  std::vector<double> grid(steps);
  for (int k = 0; k < steps; ++k) grid[k] = lo + (hi - lo) * k / (steps - 1);
  grid.back() = hi;
  return grid;
}

}  // namespace entsep
