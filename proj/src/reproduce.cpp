#include "entsep/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "entsep/entropy.hpp"
#include "entsep/observables.hpp"
#include "entsep/sepmin.hpp"
#include "entsep/werner.hpp"

namespace entsep {

namespace {

ReproRow compare(std::string quantity, double reference, double computed, double tolerance,
                 std::string note = {}) {
  ReproRow r{std::move(quantity), reference, computed, tolerance, false, false, std::move(note)};
  r.pass = std::abs(computed - reference) <= tolerance;
  return r;
}

ReproRow cap(std::string quantity, double reference, double computed, double tolerance) {
  ReproRow r{std::move(quantity), reference, computed, tolerance, true, false, "upper bound"};
  r.pass = computed <= reference + tolerance;
  return r;
}

}  // namespace

std::vector<ReproRow> reproduce(const ReproduceOptions& options) {
  constexpr double ln2 = std::numbers::ln2;
  std::vector<ReproRow> rows;

  const double reported[] = {0.78, 0.65, 0.68, 0.72, 0.74, 0.55};
  const auto& ids = werner_criterion_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    rows.push_back(compare("threshold " + ids[k], reported[k], werner_threshold(ids[k]), 0.01));
  }

  MinimizerConfig config;
  config.starts = options.starts_two_qubit;
  config.seed = options.seed;
  config.threads = options.threads;
  const std::pair<OperatorSet, double> floors[] = {
      {xy_set(), ln2},          {xyz_set(), 2 * ln2}, {set_1_3(), 2 * ln2},
      {set_1_1_2(), 5 * ln2},   {x_1111(), ln2},      {spin_set(), 3 * ln2},
  };
  for (const auto& [set, floor] : floors) {
    rows.push_back(compare("E_sep " + set.name, floor, minimize_sep(set, 2, config).value, 1e-3));
  }
  for (const auto& set : {xyz_set(), x_1111(), spin_set()}) {
    rows.push_back(compare("E " + set.name, 0.0, minimize_global(set, config).value, 1e-6));
  }
  rows.push_back(cap("max Q_v d=2", 0.5, projection_cap_check(2, 10000, options.seed).max_projection, 1e-9));

  if (options.d >= 3) {
    const int d = options.d;
    const std::string suffix = " d=" + std::to_string(d);
    MinimizerConfig dd = config;
    dd.starts = options.starts_dxd;
    rows.push_back(compare("E_sep extreme" + suffix, std::log(static_cast<double>(d)),
                           minimize_sep(bell_set_extreme(d), d, dd).value, 5e-3));
    rows.push_back(compare("E_sep onerest" + suffix, d * binary_entropy(1.0 / d),
                           minimize_sep(bell_set_one_rest(d), d, dd).value, 5e-3, "numerically supported"));
    rows.push_back(cap("max Q_v" + suffix, 1.0 / d, projection_cap_check(d, 10000, options.seed).max_projection,
                       1e-9));
  }
  return rows;
}

void write_report(std::ostream& out, const std::vector<ReproRow>& rows) {
  char line[256];
  std::snprintf(line, sizeof line, "%-26s %14s %14s %10s  %s\n", "quantity", "reference", "computed",
                "tolerance", "result");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-26s %14.9f %14.9f %10.1e  %s%s%s\n", r.quantity.c_str(), r.reference,
                  r.computed, r.tolerance, r.pass ? "PASS" : "FAIL", r.note.empty() ? "" : "  # ",
                  r.note.c_str());
    out << line;
  }
}

}  // namespace entsep
