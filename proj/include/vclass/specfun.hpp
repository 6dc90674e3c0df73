#pragma once

#include <string_view>

namespace vclass {

struct AccuracySpec {
  double abs_tol;
  std::string_view description;
};

/// Accuracy contract of normal_cdf / normal_sf on |x| <= kNormalClamp.
inline constexpr AccuracySpec kNormalAccuracy{
    1e-15, "absolute error of normal_cdf and normal_sf over |x| <= 40"};

/// Beyond this magnitude normal_cdf returns exactly 0 or 1.
inline constexpr double kNormalClamp = 40.0;

inline constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

/// erfc(x) by W. J. Cody's rational Chebyshev approximations.
///
/// Three ranges: |x| <= 0.46875 (erf rational), 0.46875 < |x| <= 4 and
/// |x| > 4 (erfc rationals scaled by a split exp(-x^2)). Results below the
/// smallest subnormal flush to zero.
double complementary_erf(double x);

/// Standard normal density. Throws std::domain_error on non-finite input.
double normal_pdf(double t);

/// Standard normal distribution function. Accepts +/-inf; throws
/// std::domain_error on NaN.
double normal_cdf(double x);

/// Upper tail 1 - normal_cdf(x), evaluated without cancellation for x > 0.
double normal_sf(double x);

}  // namespace vclass
