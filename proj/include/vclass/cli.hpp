#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace vclass::cli {

enum class Command { kConstants, kDelta, kExtremal, kSweep, kCurves, kVerify, kCompare };
enum class OutputFormat { kText, kJson, kCsv };

// sysexits(3) values, plus 2 for inputs outside the mean-0 variance-1 class.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitClassViolation = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCantCreate = 73;

struct CliConfig {
  Command command = Command::kConstants;
  double tol = 1e-12;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::kText;

  bool mirror = false;       // extremal, sweep
  bool standardize = false;  // delta, compare

  double a_min = 1e-2;  // sweep
  double a_max = 1e2;
  int n_grid = 2000;

  double range_min = -5.0;  // curves
  double range_max = 5.0;
  double step = 0.01;

  int trials = 10000;  // verify
  int max_atoms = 12;
  bool biased = false;
};

/// Executes one command. Diagnostics go to err; results go to out unless
/// output_path is set.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a CliConfig and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vclass::cli
