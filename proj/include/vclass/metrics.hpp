#pragma once

#include <string_view>

#include "vclass/distributions.hpp"
#include "vclass/extremal.hpp"

namespace vclass {

/// One-summand Berry-Esseen constant (literature value, not recomputed).
inline constexpr double kBerryEsseenC1 = 0.37035;

/// Earlier, less precise published location and height of the maximum of psi.
/// Kept for regression checks only.
inline constexpr double kHistoricalRoot = 0.2135;
inline constexpr double kHistoricalBound = 0.5416;

enum class Side { kLeftLimit, kRightValue };
enum class GapSign { kFAbove, kFBelow };

std::string_view to_string(Side side);
std::string_view to_string(GapSign sign);

/// sup_x |F(x) - Phi(x)| and where it is attained.
struct DistanceReport {
  double delta = 0.0;
  double argmax_x = 0.0;
  Side side = Side::kRightValue;
  GapSign gap_sign = GapSign::kFAbove;
};

/// Exact uniform distance to the standard normal.
///
/// F is constant between atoms and Phi is increasing, so |F - Phi| is
/// monotone on every constancy interval and its supremum there is a limit at
/// an endpoint atom. The supremum over the line is therefore the largest of
/// the 2n numbers |F(x_i-) - Phi(x_i)| and |F(x_i) - Phi(x_i)|. Ties keep the
/// first candidate in (atom, left before right) order.
DistanceReport kolmogorov_distance(const DiscreteDistribution& d);

struct CantelliReport {
  double x_probe = 0.0;
  double lower_tail = 0.0;  // P(X <= -x)
  double upper_tail = 0.0;  // P(X >= x)
  double bound = 0.0;       // 1/(1+x^2)
  bool satisfied = false;
  double slack = 0.0;       // bound - max(tails)
};

/// One-sided tail bounds for a mean-0 variance-1 law at probe x > 0.
/// Throws std::invalid_argument for x <= 0 and PreconditionError when d is
/// not in the class at tolerance 1e-9.
CantelliReport cantelli_check(const DiscreteDistribution& d, double x);

enum class Bound { kBerryEsseen, kUniform };
std::string_view to_string(Bound bound);

struct ComparisonReport {
  double beta = 0.0;
  double c1 = kBerryEsseenC1;
  double be_bound = 0.0;
  double uniform_bound = 0.0;
  Bound winner = Bound::kBerryEsseen;
  double crossover = 0.0;  // c_phi / c1
};

/// Compares c1 * beta with c_phi. Throws InconsistencyError if beta < 1 - 1e-9.
ComparisonReport compare_berry_esseen(const DiscreteDistribution& d,
                                      const ExtremalConstants& constants);

}  // namespace vclass
