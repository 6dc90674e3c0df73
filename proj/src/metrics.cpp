#include "vclass/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vclass/errors.hpp"
#include "vclass/specfun.hpp"

namespace vclass {

std::string_view to_string(Side side) {
  return side == Side::kLeftLimit ? "left_limit" : "right_value";
}

std::string_view to_string(GapSign sign) {
  return sign == GapSign::kFAbove ? "F_above" : "F_below";
}

std::string_view to_string(Bound bound) {
  return bound == Bound::kUniform ? "uniform" : "berry_esseen";
}

DistanceReport kolmogorov_distance(const DiscreteDistribution& d) {
  DistanceReport best;
  best.delta = -1.0;
  const auto consider = [&best](double x, double f, double phi, Side side) {
    const double gap = f - phi;
    if (std::abs(gap) > best.delta) {
      best.delta = std::abs(gap);
      best.argmax_x = x;
      best.side = side;
      best.gap_sign = gap > 0.0 ? GapSign::kFAbove : GapSign::kFBelow;
    }
  };
  for (const Atom& atom : d.atoms()) {
    const double phi = normal_cdf(atom.x);
    consider(atom.x, d.cdf_left_limit(atom.x), phi, Side::kLeftLimit);
    consider(atom.x, d.cdf_at(atom.x), phi, Side::kRightValue);
  }
  return best;
}

CantelliReport cantelli_check(const DiscreteDistribution& d, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("cantelli_check: probe must be positive and finite");
  }
  if (!is_in_V(d, 1e-9)) {
    throw PreconditionError("cantelli_check: distribution is not mean-0 variance-1");
  }
  CantelliReport r;
  r.x_probe = x;
  r.lower_tail = d.cdf_at(-x);
  r.upper_tail = 1.0 - d.cdf_left_limit(x);
  r.bound = 1.0 / (1.0 + x * x);
  const double worst = std::max(r.lower_tail, r.upper_tail);
  r.slack = r.bound - worst;
  r.satisfied = worst <= r.bound + 1e-12;
  return r;
}

ComparisonReport compare_berry_esseen(const DiscreteDistribution& d,
                                      const ExtremalConstants& constants) {
  const MomentSummary m = moments(d);
  if (m.beta < 1.0 - 1e-9) {
    throw InconsistencyError(
        "compare_berry_esseen: third absolute moment below 1 contradicts unit variance");
  }
  ComparisonReport r;
  r.beta = m.beta;
  r.c1 = kBerryEsseenC1;
  r.be_bound = kBerryEsseenC1 * m.beta;
  r.uniform_bound = constants.c_phi;
  r.crossover = constants.c_phi / kBerryEsseenC1;
  r.winner = r.uniform_bound < r.be_bound ? Bound::kUniform : Bound::kBerryEsseen;
  return r;
}

}  // namespace vclass
