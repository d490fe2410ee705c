#include "entsep/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entsep/entropy.hpp"
#include "entsep/parallel.hpp"

namespace entsep {

namespace {

// w * H2(part / w), taken as 0 when the group carries no weight.
double weighted_binary(double w, double part) {
  if (w < 1e-300) return 0.0;
  return w * binary_entropy(std::clamp(part / w, 0.0, 1.0));
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// -w ln w for any w >= 0 (weights here may exceed 1).
double neg_wlogw(double w) { return w < 1e-300 ? 0.0 : -w * std::log(w); }

}  // namespace

double CriterionVerdict::value_bits() const { return value / std::numbers::ln2; }
double CriterionVerdict::bound_bits() const { return bound / std::numbers::ln2; }

std::vector<Criterion> two_qubit_criteria() {
  return {
      {"E8-XY", xy_set()},       {"E12-XYZ", xyz_set()}, {"E14-1_3", set_1_3()},
      {"E16-1_1_2", set_1_1_2()}, {"E18-1111", x_1111()}, {"E22-SPIN", spin_set()},
  };
}

std::vector<Criterion> dxd_criteria(int d) {
  const std::string suffix = "-" + std::to_string(d);
  return {
      {"E33-EXTREME" + suffix, bell_set_extreme(d)},
      {"E37-ONEREST" + suffix, bell_set_one_rest(d)},
  };
}

std::vector<Criterion> criteria_for(int d) { return d == 2 ? two_qubit_criteria() : dxd_criteria(d); }

Criterion criterion_by_id(std::string_view id) {
  for (auto& c : two_qubit_criteria())
    if (c.id == id) return c;
  for (const std::string_view prefix : {"E33-EXTREME-", "E37-ONEREST-"}) {
    if (id.starts_with(prefix)) {
      const std::string digits(id.substr(prefix.size()));
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        const int d = std::stoi(digits);
        for (auto& c : dxd_criteria(d))
          if (c.id == id) return c;
      }
    }
  }
  throw ValidationError("unknown criterion id '" + std::string(id) + "'");
}

CriterionVerdict evaluate(const OperatorSet& set, const DensityMatrix& rho, double verdict_tol) {
  CriterionVerdict v;
  v.criterion_id = set.name;
  v.value = total_uncertainty(set, rho);
  v.bound = set.sep_floor;
  v.margin = v.value - v.bound;
  v.violated = v.value < v.bound - verdict_tol;
  return v;
}

CriterionVerdict evaluate(const Criterion& c, const DensityMatrix& rho, double verdict_tol) {
  CriterionVerdict v = evaluate(c.set, rho, verdict_tol);
  v.criterion_id = c.id;
  return v;
}

std::vector<std::vector<CriterionVerdict>> evaluate_batch(std::span<const Criterion> criteria,
                                                          std::span<const DensityMatrix> states,
                                                          unsigned threads) {
  std::vector<std::vector<CriterionVerdict>> out(states.size());
  detail::parallel_for(states.size(), threads, [&](std::size_t i) {
    out[i].reserve(criteria.size());
    for (const auto& c : criteria) out[i].push_back(evaluate(c, states[i]));
  });
  return out;
}

std::array<double, 4> QParams::bell_probabilities() const {
  return {(q0 + q1) / 2.0, (q0 - q1) / 2.0, (1.0 - q0 + q2) / 2.0, (1.0 - q0 - q2) / 2.0};
}

QParams qparams(const ProductParams& p) {
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  QParams out;
  out.q0 = ca * ca * cb * cb + sa * sa * sb * sb;
  out.q = 2.0 * ca * cb * sa * sb;
  out.q1 = out.q * std::cos(p.delta + p.gamma);
  out.q2 = out.q * std::cos(p.delta - p.gamma);
  return out;
}

double closed_form_xy(const ProductParams& p) {
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double plus = ca * ca * cb * cb + sa * sa * sb * sb;
  const double corr = std::sin(p.delta) * std::sin(p.gamma) * std::sin(2 * p.alpha) * std::sin(2 * p.beta);
  return binary_entropy(clamp01(plus)) + binary_entropy(clamp01((1.0 - corr) / 2.0));
}

double closed_form_xyz(const QParams& q) {
  return binary_entropy(clamp01(q.q0)) + binary_entropy(clamp01((1.0 + q.q2 - q.q1) / 2.0)) +
         binary_entropy(clamp01((1.0 + q.q1 + q.q2) / 2.0));
}

double closed_form_1_3(const QParams& q) {
  double total = 0.0;
  for (double x : q.bell_probabilities()) total += binary_entropy(clamp01(x));
  return total;
}

double closed_form_1_3_grouped(const QParams& q) {
  const double a = q.q0, b = 2.0 - q.q0;  // weights of {Q1, Q2} and {1-Q1, 1-Q2}
  const double c = 1.0 - q.q0, e = 1.0 + q.q0;
  const double first = neg_wlogw(a) + neg_wlogw(b) + weighted_binary(a, (a + q.q1) / 2.0) +
                       weighted_binary(b, (b + q.q1) / 2.0);
  const double second = neg_wlogw(c) + neg_wlogw(e) + weighted_binary(c, (c + q.q2) / 2.0) +
                        weighted_binary(e, (e + q.q2) / 2.0);
  return first + second;
}

double closed_form_1111(const QParams& q) {
  double total = 0.0;
  for (double x : q.bell_probabilities()) total += f_func(clamp01(x));
  return total;
}

SplitUncertainty closed_form_1_1_2(const QParams& q) {
  SplitUncertainty s;
  s.f0 = closed_form_xyz(q);
  const double p0 = clamp01(q.q0), r0 = 1.0 - p0;
  s.f1 = 3.0 * weighted_binary(p0, (p0 + q.q1) / 2.0) + 3.0 * f_func(p0);
  s.f2 = 3.0 * weighted_binary(r0, (r0 + q.q2) / 2.0) + 3.0 * f_func(r0);
  return s;
}

double closed_form_spin(const ProductParams& p) {
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double s2a = std::sin(2 * p.alpha), s2b = std::sin(2 * p.beta);
  const double sd = std::sin(p.delta), sg = std::sin(p.gamma);
  const double cd = std::cos(p.delta), cg = std::cos(p.gamma);
  auto F = [](double x) { return f_func(clamp01(x)); };

  const double s1 = F(ca * ca * sb * sb + sa * sa * cb * cb) + F(ca * ca * cb * cb) + F(sa * sa * sb * sb);
  const double s2 = F((1.0 - sd * sg * s2a * s2b) / 2.0) + F((1.0 - sd * s2a) * (1.0 - sg * s2b) / 4.0) +
                    F((1.0 + sd * s2a) * (1.0 + sg * s2b) / 4.0);
  const double s3 = F((1.0 - cd * cg * s2a * s2b) / 2.0) + F((1.0 - cd * s2a) * (1.0 - cg * s2b) / 4.0) +
                    F((1.0 + cd * s2a) * (1.0 + cg * s2b) / 4.0);
  return s1 + s2 + s3;
}

double g_func(double q0) {
  if (!(q0 >= 0.0 && q0 <= 1.0)) throw std::domain_error("g_func: q0 outside [0, 1]");
  return binary_entropy(q0) + binary_entropy(0.5 + std::min(q0, 1.0 - q0));
}

ImplicationReport implication_check(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw ValidationError("implication_check: requires a two-qubit state");
  }
  static const OperatorSet xyz = xyz_set();
  ImplicationReport r;
  const double hx = entropic_uncertainty(xyz.observables[0], rho);
  const double hy = entropic_uncertainty(xyz.observables[1], rho);
  const double hz = entropic_uncertainty(xyz.observables[2], rho);
  r.xy = hx + hy;
  r.xyz = hx + hy + hz;
  r.xy_violated = r.xy < std::numbers::ln2 - kVerdictTol;
  r.xyz_violated = r.xyz < 2.0 * std::numbers::ln2 - kVerdictTol;
  return r;
}

}  // namespace entsep
