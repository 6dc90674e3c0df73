#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vclass/extremal.hpp"

namespace vclass {

struct Atom {
  double x;
  double p;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Parameter a > 0 of the mean-0 variance-1 family with atoms -1/a and a.
struct TwoPointParam {
  double a;
};

/// Finite distribution with strictly increasing atoms and positive masses.
/// The CDF is right-continuous. Immutable after construction.
class DiscreteDistribution {
 public:
  /// Atoms may arrive unsorted. Zero-mass atoms are dropped, atoms closer
  /// than kMergeDistance are merged, and masses summing to 1 within
  /// kSumTolerance are renormalized. Anything else throws
  /// std::invalid_argument.
  explicit DiscreteDistribution(std::vector<Atom> atoms);

  static constexpr double kMergeDistance = 1e-14;
  static constexpr double kSumTolerance = 1e-9;

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  /// P(X <= x).
  double cdf_at(double x) const;
  /// P(X < x).
  double cdf_left_limit(double x) const;

  /// Law of -X. Mirroring twice reproduces the atoms bitwise.
  DiscreteDistribution mirrored() const;

 private:
  struct Trusted {};
  DiscreteDistribution(Trusted, std::vector<Atom> atoms);
  void build_cumulative();

  friend DiscreteDistribution make_two_point(TwoPointParam param);

  std::vector<Atom> atoms_;
  // cumulative_[i] = P(X < atoms_[i].x); cumulative_.back() == 1.
  std::vector<double> cumulative_;
};

struct MomentSummary {
  double mean;
  double variance;
  double beta;  // E|X|^3
};

MomentSummary moments(const DiscreteDistribution& d);

/// |mean| <= tol and |variance - 1| <= tol.
bool is_in_V(const DiscreteDistribution& d, double tol);

/// Atoms {(-1/a, a^2/(1+a^2)), (a, 1/(1+a^2))}.
DiscreteDistribution make_two_point(TwoPointParam param);

/// Outside [1e-3, 1e3] one atom dominates the distance range; results there
/// are flagged by callers.
bool is_extreme_parameter(TwoPointParam param);

/// F_Phi = make_two_point(x_phi), or the law of -X_Phi when mirrored.
DiscreteDistribution extremal_distribution(const ExtremalConstants& constants, bool mirrored);

/// x -> (x - mean)/sd. Throws std::invalid_argument if variance <= 1e-12.
DiscreteDistribution standardize(const DiscreteDistribution& d);

/// Tag written into and accepted from serialized distributions.
inline constexpr std::string_view kDistributionFormat = "vclass-dist/1";

/// {"format": "vclass-dist/1", "atoms": [{"x": ..., "p": ...}, ...]}.
/// The format key is optional on input; when present it must match.
/// Throws DataError on malformed text or schema.
DiscreteDistribution distribution_from_json(std::string_view text);
std::string distribution_to_json(const DiscreteDistribution& d, int indent = 2);

}  // namespace vclass
