#include "entsep/cli.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "entsep/criteria.hpp"
#include "entsep/observables.hpp"
#include "entsep/reproduce.hpp"
#include "entsep/sepmin.hpp"
#include "entsep/state_io.hpp"
#include "entsep/werner.hpp"

namespace entsep::cli {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Chooses between the caller's stream and an --out file.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ValidationError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ostream* stream_;
  std::unique_ptr<std::ofstream> file_;
};

struct CheckArgs {
  std::string state_file;
  std::string format = "text";
  std::string out;
  bool bits = false;
  double verdict_tol = kVerdictTol;
};

struct SweepArgs {
  std::string criteria = "all";
  double p_min = 0.0;
  double p_max = 1.0;
  int steps = 101;
  std::string csv;
  unsigned threads = 1;
};

struct MinimizeArgs {
  std::string set;
  int d = 2;
  int starts = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double tolerance = 1e-10;
  std::string csv;
  std::string format = "text";
  std::string out;
};

struct BellsetArgs {
  std::string set;
  int d = 2;
  std::string out;
};

struct ReproduceArgs {
  int d = 0;
  int starts = 512;
  int starts_dxd = 4096;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const DensityMatrix rho = read_state_file(args.state_file);
  if (rho.dim_a() != rho.dim_b()) {
    throw ValidationError("state file: criteria need a d x d system, got " + std::to_string(rho.dim_a()) + "x" +
                          std::to_string(rho.dim_b()));
  }
  const int d = rho.dim_a();
  std::vector<CriterionVerdict> verdicts;
  bool any = false;
  for (const auto& c : criteria_for(d)) {
    verdicts.push_back(evaluate(c, rho, args.verdict_tol));
    any = any || verdicts.back().violated;
  }
  const PptResult ppt = is_ppt(rho);
  // PPT is necessary and sufficient only for two qubits
  const bool consistent = d != 2 || !any || !ppt.ppt;
  const double unit = args.bits ? std::numbers::ln2 : 1.0;
  const char* unit_name = args.bits ? "bits" : "nats";

  Sink sink(out, args.out);
  std::ostream& os = *sink;
  if (args.format == "json") {
    nlohmann::json j;
    j["unit"] = unit_name;
    j["verdicts"] = nlohmann::json::array();
    for (const auto& v : verdicts) {
      j["verdicts"].push_back({{"id", v.criterion_id},
                               {"value", v.value / unit},
                               {"bound", v.bound / unit},
                               {"margin", v.margin / unit},
                               {"violated", v.violated}});
    }
    j["ppt"] = {{"ppt", ppt.ppt}, {"min_eigenvalue", ppt.min_eigenvalue}, {"consistent", consistent}};
    j["entangled"] = any;
    os << j.dump(2) << '\n';
  } else if (args.format == "csv") {
    os << "id,value,bound,margin,violated\n";
    for (const auto& v : verdicts) {
      os << v.criterion_id << ',' << fmt(v.value / unit) << ',' << fmt(v.bound / unit) << ','
         << fmt(v.margin / unit) << ',' << (v.violated ? 1 : 0) << '\n';
    }
    os << "PPT," << fmt(ppt.min_eigenvalue) << ",," << ',' << (ppt.ppt ? 1 : 0) << '\n';
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %16s %16s %16s  %s\n", "criterion", (std::string("value/") + unit_name).c_str(),
                  (std::string("bound/") + unit_name).c_str(), "margin", "violated");
    os << line;
    for (const auto& v : verdicts) {
      std::snprintf(line, sizeof line, "%-16s %16.12f %16.12f %16.12f  %s\n", v.criterion_id.c_str(), v.value / unit,
                    v.bound / unit, v.margin / unit, v.violated ? "yes" : "no");
      os << line;
    }
    os << "PPT cross-check: min eigenvalue of partial transpose = " << fmt(ppt.min_eigenvalue)
       << (ppt.ppt ? " (PPT)" : " (NPT)") << (consistent ? ", consistent" : ", INCONSISTENT") << '\n';
  }
  return any ? kEntangled : kOk;
}

int cmd_werner_sweep(const SweepArgs& args, std::ostream& out) {
  std::vector<std::string> ids;
  if (args.criteria == "all") {
    ids = werner_criterion_ids();
  } else {
    std::stringstream ss(args.criteria);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) ids.push_back(id);
  }
  if (!(args.p_min >= 0.0 && args.p_max <= 1.0 && args.p_min <= args.p_max)) {
    throw ValidationError("werner-sweep: need 0 <= p-min <= p-max <= 1");
  }
  const SweepTable table = werner_sweep(ids, linear_grid(args.p_min, args.p_max, args.steps), args.threads);
  Sink sink(out, args.csv);
  table.write_csv(*sink);
  return kOk;
}

nlohmann::json state_json(const ComplexVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v[i].real(), v[i].imag()});
  return a;
}

int cmd_minimize(const MinimizeArgs& args, std::ostream& out) {
  const OperatorSet set = operator_set_by_name(args.set, args.d);
  MinimizerConfig config;
  config.starts = args.starts > 0 ? args.starts : default_starts(args.d);
  config.seed = args.seed;
  config.threads = args.threads;
  config.tolerance = args.tolerance;
  config.keep_start_records = !args.csv.empty();
  const GapResult result = gap(set, config);

  if (!args.csv.empty()) {
    std::ofstream csv(args.csv);
    if (!csv) throw ValidationError("cannot open " + args.csv);
    csv << "search,start,initial,value,evaluations,converged\n";
    for (const auto* r : {&result.separable, &result.global}) {
      const char* search = r == &result.separable ? "separable" : "global";
      for (const auto& s : r->records) {
        csv << search << ',' << s.index << ',' << fmt(s.initial) << ',' << fmt(s.value) << ',' << s.evaluations
            << ',' << (s.converged ? 1 : 0) << '\n';
      }
    }
  }

  Sink sink(out, args.out);
  std::ostream& os = *sink;
  const bool converged = result.separable.converged && result.global.converged;
  if (args.format == "json") {
    nlohmann::json j = {{"set", set.name},
                        {"d", args.d},
                        {"starts", config.starts},
                        {"seed", config.seed},
                        {"E_sep", result.separable.value},
                        {"E", result.global.value},
                        {"gap", result.gap()},
                        {"claimed_sep_floor", set.sep_floor},
                        {"converged", converged},
                        {"argmin_separable", state_json(result.separable.argmin_state)},
                        {"argmin_global", state_json(result.global.argmin_state)}};
    if (const auto& a = result.separable.argmin_angles) {
      j["argmin_angles"] = {{"alpha", a->alpha}, {"beta", a->beta}, {"delta", a->delta}, {"gamma", a->gamma}};
    }
    os << j.dump(2) << '\n';
  } else {
    os << "set " << set.name << "  d=" << args.d << "  starts=" << config.starts << "  seed=" << config.seed << '\n';
    os << "E_sep = " << fmt(result.separable.value) << "  (claimed floor " << fmt(set.sep_floor) << ")\n";
    os << "E     = " << fmt(result.global.value) << '\n';
    os << "Delta = " << fmt(result.gap()) << '\n';
    if (const auto& a = result.separable.argmin_angles) {
      os << "argmin alpha=" << fmt(a->alpha) << " beta=" << fmt(a->beta) << " delta=" << fmt(a->delta)
         << " gamma=" << fmt(a->gamma) << '\n';
    } else {
      os << "argmin |psi> =";
      for (Eigen::Index i = 0; i < result.separable.argmin_state.size(); ++i) {
        const Complex z = result.separable.argmin_state[i];
        os << ' ' << fmt(z.real()) << (z.imag() < 0 ? "" : "+") << fmt(z.imag()) << 'i';
      }
      os << '\n';
    }
    if (args.d > 2) os << "note: d > 2 floors are numerically supported, not certified\n";
    os << "converged " << (converged ? "yes" : "no") << '\n';
  }
  return converged ? kOk : kNumericalFailure;
}

int cmd_bellset(const BellsetArgs& args, std::ostream& out) {
  const OperatorSet set = operator_set_by_name(args.set, args.d);
  nlohmann::json j = {{"name", set.name},
                      {"d", set.local_dim},
                      {"sep_floor", set.sep_floor},
                      {"global_floor", set.global_floor},
                      {"observables", nlohmann::json::array()}};
  for (const auto& obs : set.observables) {
    nlohmann::json o = {{"label", obs.label()}, {"eigenvalues", obs.eigenvalues()}};
    o["projectors"] = nlohmann::json::array();
    for (const auto& e : obs.eigenspaces()) o["projectors"].push_back(matrix_to_json(e.projector));
    j["observables"].push_back(std::move(o));
  }
  Sink sink(out, args.out);
  *sink << j.dump(2) << '\n';
  return kOk;
}

int cmd_reproduce(const ReproduceArgs& args, std::ostream& out) {
  ReproduceOptions options;
  options.d = args.d;
  options.starts_two_qubit = args.starts;
  options.starts_dxd = args.starts_dxd;
  options.seed = args.seed;
  options.threads = args.threads;
  const auto rows = reproduce(options);
  Sink sink(out, args.out);
  write_report(*sink, rows);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  *sink << (all ? "all rows pass\n" : "some rows FAIL\n");
  return all ? kOk : kNumericalFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic separability criteria for bipartite quantum states", "entsep"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate every criterion on a state file");
  check_cmd->add_option("state", check.state_file, "State file (JSON)")->required();
  check_cmd->add_option("--format", check.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  check_cmd->add_flag("--bits", check.bits, "Report entropies in bits");
  check_cmd->add_option("--verdict-tol", check.verdict_tol, "Margin a violation must clear (nats)")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--out", check.out, "Write the report here instead of stdout");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("werner-sweep", "Tabulate criteria across Werner states");
  sweep_cmd->add_option("--criteria", sweep.criteria, "'all' or comma-separated criterion ids");
  sweep_cmd->add_option("--p-min", sweep.p_min);
  sweep_cmd->add_option("--p-max", sweep.p_max);
  sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", sweep.csv, "CSV output path (default stdout)");
  sweep_cmd->add_option("--threads", sweep.threads)->check(CLI::PositiveNumber);

  MinimizeArgs minimize;
  auto* min_cmd = app.add_subcommand("minimize", "Separable and global minima of an operator set");
  min_cmd->add_option("--set", minimize.set, "xy, xyz, 1_3, 1_1_2, 1111, spin, extreme, onerest")->required();
  min_cmd->add_option("--d", minimize.d, "Local dimension")->check(CLI::Range(2, 16));
  min_cmd->add_option("--starts", minimize.starts, "Multistart count (default 512 for d=2, 4096 above)");
  min_cmd->add_option("--seed", minimize.seed);
  min_cmd->add_option("--threads", minimize.threads)->check(CLI::PositiveNumber);
  min_cmd->add_option("--tolerance", minimize.tolerance, "Objective tolerance of the local polish")
      ->check(CLI::PositiveNumber);
  min_cmd->add_option("--csv", minimize.csv, "Write one row per start here");
  min_cmd->add_option("--format", minimize.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  min_cmd->add_option("--out", minimize.out);

  BellsetArgs bellset;
  auto* bell_cmd = app.add_subcommand("bellset", "Export an operator set as JSON");
  bell_cmd->add_option("--set", bellset.set)->required();
  bell_cmd->add_option("--d", bellset.d)->check(CLI::Range(2, 16));
  bell_cmd->add_option("--out", bellset.out);

  ReproduceArgs repro;
  auto* repro_cmd = app.add_subcommand("reproduce", "Reference-vs-computed table of thresholds and floors");
  repro_cmd->add_option("--d", repro.d, "Also run the d x d rows for this d (>= 3)")->check(CLI::Range(3, 8));
  repro_cmd->add_option("--starts", repro.starts)->check(CLI::PositiveNumber);
  repro_cmd->add_option("--starts-dxd", repro.starts_dxd)->check(CLI::PositiveNumber);
  repro_cmd->add_option("--seed", repro.seed);
  repro_cmd->add_option("--threads", repro.threads)->check(CLI::PositiveNumber);
  repro_cmd->add_option("--out", repro.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  auto* sub = app.get_subcommands().front();
  std::uint64_t seed = 0;
  if (sub == min_cmd) seed = minimize.seed;
  if (sub == repro_cmd) seed = repro.seed;
  err << "# entsep " << kVersion << " command=" << sub->get_name() << " seed=" << seed << '\n';

  try {
    if (sub == check_cmd) return cmd_check(check, out);
    if (sub == sweep_cmd) return cmd_werner_sweep(sweep, out);
    if (sub == min_cmd) return cmd_minimize(minimize, out);
    if (sub == bell_cmd) return cmd_bellset(bellset, out);
    return cmd_reproduce(repro, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace entsep::cli
