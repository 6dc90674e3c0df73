#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "vclass/distributions.hpp"

namespace vclass {

struct GoldenSectionResult {
  double x;
  double value;
  int iterations;
};

/// Maximizes a unimodal f on [lo, hi] until the bracket is no wider than tol.
GoldenSectionResult golden_section_maximize(const std::function<double(double)>& f, double lo,
                                            double hi, double tol);

struct SweepPoint {
  double a;
  double delta;
};

struct SweepResult {
  std::vector<SweepPoint> grid;
  double best_a = 0.0;
  double best_delta = 0.0;
  int refine_iterations = 0;
  // Some grid parameter lies outside [1e-3, 1e3].
  bool extreme_parameters = false;
};

inline constexpr double kSweepRefineTol = 1e-9;

/// Distance of make_two_point(a) (or its mirror) on a log-spaced grid over
/// [a_min, a_max], then golden-section refinement around every grid local
/// maximum. The family is invariant under a -> 1/a combined with mirroring, so
/// its maxima come in pairs; refined maxima within 1e-12 of each other resolve
/// to the smaller a.
SweepResult sweep_two_point(double a_min, double a_max, int n_grid, bool mirrored = false);

enum class Sampler {
  kUniform,       // 2..max_atoms atoms uniform on [-5, 5], flat simplex weights
  kNearExtremal,  // two-point laws with a within 5% of x_phi, optionally perturbed
};

inline constexpr std::array<double, 5> kCantelliProbes = {0.1, 0.5, 1.0, 2.0, 5.0};
inline constexpr double kBoundSlack = 1e-12;

/// Draws one standardized distribution. Uses only raw 64-bit engine output so
/// the stream is identical across standard library implementations.
DiscreteDistribution sample_distribution(std::mt19937_64& rng, int max_atoms, Sampler sampler);

struct Violation {
  std::size_t trial;
  std::string kind;  // "distance" or "cantelli@<x>"
  double value;      // delta, or the negative slack
  std::string distribution_json;
};

struct CampaignSummary {
  std::size_t trials = 0;
  std::vector<Violation> violations;
  double max_delta = 0.0;
  std::size_t max_delta_trial = 0;
  std::string max_delta_distribution_json;
  double min_cantelli_slack = 1.0;
};

/// Checks delta <= c_phi + 1e-12 and the tail bounds at kCantelliProbes on
/// n_trials seeded random class members. Sequential, so a seed reproduces the
/// summary bitwise.
CampaignSummary random_V_campaign(int n_trials, int max_atoms, std::uint64_t seed,
                                  Sampler sampler = Sampler::kUniform);

struct CurveSeries {
  std::string name;
  std::vector<double> y;
};

/// Shared x grid and one y column per curve: cantelli_bound = 1/(1+x^2),
/// normal_tail = Phi(-|x|), psi, normal_cdf, f_phi.
struct CurveDump {
  std::vector<double> x;
  std::vector<CurveSeries> series;

  const CurveSeries& column(std::string_view name) const;
};

/// Requires range_min < range_max and 0 < step <= (range_max - range_min)/2.
CurveDump dump_curves(double range_min, double range_max, double step);

/// Comma-separated, header row, 17 significant digits.
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);
void write_curves_csv(std::ostream& out, const CurveDump& dump);

/// %.17g formatting shared by every text writer.
std::string format_real(double value);

}  // namespace vclass
