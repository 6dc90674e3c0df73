#include "vclass/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace vclass {

DiscreteDistribution::DiscreteDistribution(std::vector<Atom> atoms) {
  for (const Atom& atom : atoms) {
    if (!std::isfinite(atom.x)) throw std::invalid_argument("atom location must be finite");
    if (!std::isfinite(atom.p) || atom.p < 0.0) {
      throw std::invalid_argument("atom mass must be finite and nonnegative");
    }
  }
  std::erase_if(atoms, [](const Atom& a) { return a.p == 0.0; });
  if (atoms.empty()) throw std::invalid_argument("distribution has no mass");
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& l, const Atom& r) { return l.x < r.x; });

  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const Atom& atom : atoms) {
    if (!merged.empty() && atom.x - merged.back().x < kMergeDistance) {
      merged.back().p += atom.p;
    } else {
      merged.push_back(atom);
    }
  }

  double total = 0.0;
  for (const Atom& atom : merged) total += atom.p;
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw std::invalid_argument("atom masses must sum to 1");
  }
  // Deviations at the level of summation rounding are left alone so that
  // reconstructing from an existing distribution's atoms is the identity.
  const double rounding = static_cast<double>(merged.size()) * 0x1.0p-52;
  if (std::abs(total - 1.0) > rounding) {
    for (Atom& atom : merged) atom.p /= total;
  }
  atoms_ = std::move(merged);
  build_cumulative();
}

DiscreteDistribution::DiscreteDistribution(Trusted, std::vector<Atom> atoms)
    : atoms_(std::move(atoms)) {
  build_cumulative();
}

void DiscreteDistribution::build_cumulative() {
  cumulative_.assign(atoms_.size() + 1, 0.0);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    cumulative_[i + 1] = cumulative_[i] + atoms_[i].p;
  }
  cumulative_.back() = 1.0;
}

double DiscreteDistribution::cdf_at(double x) const {
  if (std::isnan(x)) throw std::domain_error("cdf_at: NaN argument");
  const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                   [](double v, const Atom& a) { return v < a.x; });
  return std::min(1.0, cumulative_[static_cast<std::size_t>(it - atoms_.begin())]);
}

double DiscreteDistribution::cdf_left_limit(double x) const {
  if (std::isnan(x)) throw std::domain_error("cdf_left_limit: NaN argument");
  const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                   [](const Atom& a, double v) { return a.x < v; });
  return std::min(1.0, cumulative_[static_cast<std::size_t>(it - atoms_.begin())]);
}

DiscreteDistribution DiscreteDistribution::mirrored() const {
  std::vector<Atom> flipped;
  flipped.reserve(atoms_.size());
  for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
    flipped.push_back({-it->x, it->p});
  }
  return DiscreteDistribution(Trusted{}, std::move(flipped));
}

MomentSummary moments(const DiscreteDistribution& d) {
  double mean = 0.0;
  for (const Atom& a : d.atoms()) mean += a.p * a.x;
  // Central second moment; equal to E[X^2] - mean^2 without the cancellation.
  double variance = 0.0;
  double beta = 0.0;
  for (const Atom& a : d.atoms()) {
    const double c = a.x - mean;
    variance += a.p * c * c;
    beta += a.p * std::abs(a.x) * a.x * a.x;
  }
  return {mean, variance, beta};
}

bool is_in_V(const DiscreteDistribution& d, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_in_V: tol must be positive");
  const MomentSummary m = moments(d);
  return std::abs(m.mean) <= tol && std::abs(m.variance - 1.0) <= tol;
}

DiscreteDistribution make_two_point(TwoPointParam param) {
  const double a = param.a;
  if (!std::isfinite(a) || !(a > 0.0) || !std::isfinite(1.0 / a)) {
    throw std::invalid_argument("make_two_point: a must be positive with finite 1/a");
  }
  const double a2 = a * a;
  return DiscreteDistribution(DiscreteDistribution::Trusted{},
                              {{-1.0 / a, a2 / (1.0 + a2)}, {a, 1.0 / (1.0 + a2)}});
}

bool is_extreme_parameter(TwoPointParam param) { return param.a < 1e-3 || param.a > 1e3; }

DiscreteDistribution extremal_distribution(const ExtremalConstants& constants, bool mirrored) {
  DiscreteDistribution d = make_two_point({constants.x_phi});
  return mirrored ? d.mirrored() : d;
}

DiscreteDistribution standardize(const DiscreteDistribution& d) {
  const MomentSummary m = moments(d);
  if (!(m.variance > 1e-12)) {
    throw std::invalid_argument("standardize: variance is degenerate");
  }
  const double sd = std::sqrt(m.variance);
  std::vector<Atom> scaled;
  scaled.reserve(d.size());
  for (const Atom& a : d.atoms()) scaled.push_back({(a.x - m.mean) / sd, a.p});
  return DiscreteDistribution(std::move(scaled));
}

}  // namespace vclass
