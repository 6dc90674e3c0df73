#include "vclass/cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "vclass/distributions.hpp"
#include "vclass/errors.hpp"
#include "vclass/extremal.hpp"
#include "vclass/metrics.hpp"
#include "vclass/verify.hpp"

namespace vclass::cli {
namespace {

using nlohmann::ordered_json;

// Thrown for missing or unreadable files.
class IoError : public std::runtime_error {
 public:
  IoError(std::string what, int code) : std::runtime_error(std::move(what)), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::string read_file(const std::optional<std::string>& path) {
  if (!path) throw std::invalid_argument("--input is required for this command");
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw IoError("cannot read " + *path, kExitNoInput);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DiscreteDistribution load_input(const CliConfig& config) {
  DiscreteDistribution d = distribution_from_json(read_file(config.input_path));
  return config.standardize ? standardize(d) : d;
}

void print_kv(std::ostream& out, std::string_view key, double value) {
  out << key << " = " << format_real(value) << '\n';
}

void print_kv(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << " = " << value << '\n';
}

// Emits a flat record as "key = value" lines or a JSON object.
class Record {
 public:
  void add(std::string_view key, double value) {
    json_[std::string(key)] = value;
    lines_.emplace_back(std::string(key), format_real(value));
  }
  void add(std::string_view key, std::string_view value) {
    json_[std::string(key)] = std::string(value);
    lines_.emplace_back(std::string(key), std::string(value));
  }
  void add(std::string_view key, bool value) {
    json_[std::string(key)] = value;
    lines_.emplace_back(std::string(key), value ? "true" : "false");
  }
  void write(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::kJson) {
      out << json_.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : lines_) print_kv(out, k, v);
  }

 private:
  ordered_json json_ = ordered_json::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

int cmd_constants(const CliConfig& config, std::ostream& out) {
  const ExtremalConstants c = solve_constants(config.tol);
  Record r;
  r.add("x_phi", c.x_phi);
  r.add("c_phi", c.c_phi);
  r.add("target", c.target);
  r.add("solve_tol", c.solve_tol);
  r.add("crossover", c.c_phi / kBerryEsseenC1);
  r.write(out, config.format);
  return kExitOk;
}

int cmd_delta(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const DiscreteDistribution d = load_input(config);
  const DistanceReport report = kolmogorov_distance(d);
  const bool in_class = is_in_V(d, 1e-9);
  const double c_phi = extremal_constants().c_phi;
  Record r;
  r.add("delta", report.delta);
  r.add("argmax_x", report.argmax_x);
  r.add("side", to_string(report.side));
  r.add("gap_sign", to_string(report.gap_sign));
  r.add("in_class_V", in_class);
  r.add("c_phi", c_phi);
  r.write(out, config.format);
  if (!in_class) {
    err << "warning: input is not mean-0 variance-1 (tol 1e-9); the bound does not apply\n";
    return kExitClassViolation;
  }
  if (report.delta > c_phi + kBoundSlack) {
    err << "error: distance exceeds c_phi\n";
    return kExitClassViolation;
  }
  return kExitOk;
}

int cmd_extremal(const CliConfig& config, std::ostream& out) {
  const ExtremalConstants c = solve_constants(config.tol);
  out << distribution_to_json(extremal_distribution(c, config.mirror)) << '\n';
  return kExitOk;
}

int cmd_sweep(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SweepResult sweep = sweep_two_point(config.a_min, config.a_max, config.n_grid, config.mirror);
  write_sweep_csv(out, sweep);
  print_kv(err, "best_a", sweep.best_a);
  print_kv(err, "best_delta", sweep.best_delta);
  if (sweep.extreme_parameters) {
    err << "note: grid extends outside [1e-3, 1e3]; distances there are numerically delicate\n";
  }
  return kExitOk;
}

int cmd_curves(const CliConfig& config, std::ostream& out) {
  write_curves_csv(out, dump_curves(config.range_min, config.range_max, config.step));
  return kExitOk;
}

int cmd_verify(const CliConfig& config, std::ostream& out) {
  const ExtremalConstants& c = extremal_constants();
  int failures = 0;

  const double eq = kolmogorov_distance(extremal_distribution(c, false)).delta;
  const double eq_mirror = kolmogorov_distance(extremal_distribution(c, true)).delta;
  const bool equality_ok = std::abs(eq - c.c_phi) <= 1e-10 && std::abs(eq_mirror - c.c_phi) <= 1e-10;
  failures += equality_ok ? 0 : 1;

  const SweepResult sweep = sweep_two_point(1e-2, 1e2, 2000);
  const bool sweep_ok =
      std::abs(sweep.best_a - c.x_phi) <= 1e-6 && std::abs(sweep.best_delta - c.c_phi) <= 1e-8;
  failures += sweep_ok ? 0 : 1;

  const CampaignSummary campaign =
      random_V_campaign(config.trials, config.max_atoms, config.seed,
                        config.biased ? Sampler::kNearExtremal : Sampler::kUniform);
  failures += static_cast<int>(campaign.violations.size());

  print_kv(out, "x_phi", c.x_phi);
  print_kv(out, "c_phi", c.c_phi);
  print_kv(out, "extremal_delta", eq);
  print_kv(out, "mirrored_extremal_delta", eq_mirror);
  print_kv(out, "sweep_best_a", sweep.best_a);
  print_kv(out, "sweep_best_delta", sweep.best_delta);
  out << "trials = " << campaign.trials << '\n';
  print_kv(out, "max_delta", campaign.max_delta);
  print_kv(out, "min_cantelli_slack", campaign.min_cantelli_slack);
  out << "violations = " << campaign.violations.size() << '\n';
  for (const Violation& v : campaign.violations) {
    ordered_json rec = {{"trial", v.trial}, {"kind", v.kind}, {"value", v.value},
                        {"distribution", ordered_json::parse(v.distribution_json)}};
    out << rec.dump() << '\n';
  }
  if (!equality_ok) out << "FAIL extremal equality\n";
  if (!sweep_ok) out << "FAIL sweep agreement\n";
  out << (failures == 0 ? "PASS" : "FAIL") << '\n';
  return failures == 0 ? kExitOk : kExitFailure;
}

int cmd_compare(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const DiscreteDistribution d = load_input(config);
  if (!is_in_V(d, 1e-9)) {
    err << "warning: input is not mean-0 variance-1 (tol 1e-9); comparison does not apply\n";
    return kExitClassViolation;
  }
  const ComparisonReport c = compare_berry_esseen(d, extremal_constants());
  Record r;
  r.add("beta", c.beta);
  r.add("c1", c.c1);
  r.add("be_bound", c.be_bound);
  r.add("uniform_bound", c.uniform_bound);
  r.add("winner", to_string(c.winner));
  r.add("crossover", c.crossover);
  r.write(out, config.format);
  return kExitOk;
}

int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kConstants: return cmd_constants(config, out);
    case Command::kDelta: return cmd_delta(config, out, err);
    case Command::kExtremal: return cmd_extremal(config, out);
    case Command::kSweep: return cmd_sweep(config, out, err);
    case Command::kCurves: return cmd_curves(config, out);
    case Command::kVerify: return cmd_verify(config, out);
    case Command::kCompare: return cmd_compare(config, out, err);
  }
  return kExitUsage;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw IoError("cannot write " + *config.output_path, kExitCantCreate);
      return dispatch(config, file, err);
    }
    return dispatch(config, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitClassViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return config.input_path && (config.command == Command::kDelta ||
                                 config.command == Command::kCompare)
               ? kExitData
               : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform distance between mean-0 variance-1 laws and the standard normal"};
  app.footer(
      "Exit codes: 0 success; 1 verification failure or internal error; 2 input outside the "
      "mean-0 variance-1 class; 64 usage error; 65 malformed input data; 66 unreadable input; "
      "73 unwritable output.");
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string input;
  std::string output;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::kText}, {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}};
  app.add_option("--tol", config.tol, "Root bracket width for the constants")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized campaigns")->capture_default_str();
  app.add_option("--format", config.format, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--input", input, "Distribution JSON file");
  app.add_option("--output", output, "Write results to this file instead of stdout");

  app.add_subcommand("constants", "Print x_phi, c_phi, 1/sqrt(8 pi) and the Berry-Esseen crossover")
      ->callback([&] { config.command = Command::kConstants; });

  auto* delta = app.add_subcommand("delta", "Uniform distance of a JSON distribution to the normal");
  delta->add_flag("--standardize", config.standardize, "Standardize the input first");
  delta->callback([&] { config.command = Command::kDelta; });

  auto* extremal = app.add_subcommand("extremal", "Print the extremal two-point law as JSON");
  extremal->add_flag("--mirror", config.mirror, "Print the law of -X instead");
  extremal->callback([&] { config.command = Command::kExtremal; });

  auto* sweep = app.add_subcommand("sweep", "Distance across the two-point family (CSV)");
  sweep->add_option("--a-min", config.a_min)->capture_default_str();
  sweep->add_option("--a-max", config.a_max)->capture_default_str();
  sweep->add_option("--n-grid", config.n_grid)->capture_default_str();
  sweep->add_flag("--mirror", config.mirror, "Sweep the mirrored family");
  sweep->callback([&] { config.command = Command::kSweep; });

  auto* curves = app.add_subcommand("curves", "Curve data: 1/(1+x^2), Phi(-|x|), psi, Phi, F_phi (CSV)");
  curves->add_option("--min", config.range_min)->capture_default_str();
  curves->add_option("--max", config.range_max)->capture_default_str();
  curves->add_option("--step", config.step)->capture_default_str();
  curves->callback([&] { config.command = Command::kCurves; });

  auto* verify = app.add_subcommand("verify", "Run the full verification campaign");
  verify->add_option("--trials", config.trials)->capture_default_str();
  verify->add_option("--max-atoms", config.max_atoms)->capture_default_str();
  verify->add_flag("--biased", config.biased, "Sample near-extremal two-point shapes");
  verify->callback([&] { config.command = Command::kVerify; });

  auto* compare = app.add_subcommand("compare", "Compare the uniform bound with c1 * beta");
  compare->add_flag("--standardize", config.standardize, "Standardize the input first");
  compare->callback([&] { config.command = Command::kCompare; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!input.empty()) config.input_path = input;
  if (!output.empty()) config.output_path = output;
  return run(config, out, err);
}

}  // namespace vclass::cli
