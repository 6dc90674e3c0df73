#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "../oracle/high_precision.hpp"
#include "vclass/specfun.hpp"

using namespace vclass;

TEST_CASE("normal_pdf reference values") {
  // Frozen from the 450-digit oracle; re-derived below.
  CHECK(normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-16));
  CHECK(normal_pdf(1.0) == doctest::Approx(0.24197072451914337).epsilon(1e-16));
  CHECK(std::abs(normal_pdf(0.0) - oracle::normal_pdf(0.0)) <= 1e-16);
  CHECK(std::abs(normal_pdf(1.0) - oracle::normal_pdf(1.0)) <= 1e-16);
  for (double t : {0.1, 0.5, 2.0, 7.5, 30.0}) CHECK(normal_pdf(t) == normal_pdf(-t));
  CHECK(normal_pdf(30.0) > 0.0);
}

TEST_CASE("normal_pdf rejects non-finite input") {
  CHECK_THROWS_AS(normal_pdf(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  CHECK_THROWS_AS(normal_pdf(INFINITY), std::domain_error);
}

TEST_CASE("normal_cdf reference values") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(std::abs(normal_cdf(1.0) - 0.8413447460685429) <= 1e-15);
  CHECK(std::abs(normal_cdf(-0.21310518) - 0.41563) <= 1e-5);
  CHECK(normal_cdf(-INFINITY) == 0.0);
  CHECK(normal_cdf(INFINITY) == 1.0);
  CHECK(normal_cdf(-41.0) == 0.0);
  CHECK(normal_cdf(41.0) == 1.0);
  CHECK_THROWS_AS(normal_cdf(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("normal_sf reference values") {
  CHECK(normal_sf(0.0) == 0.5);
  CHECK(std::abs(normal_sf(10.0) - 7.62e-24) <= 1e-25);
  CHECK(normal_sf(10.0) == doctest::Approx(7.619853024160526e-24).epsilon(1e-14));
  for (double x = -5.0; x <= 5.0; x += 0.125) {
    CHECK(std::abs(normal_sf(x) - (1.0 - normal_cdf(x))) <= 2 * kNormalAccuracy.abs_tol);
    CHECK(std::abs(normal_sf(x) - normal_cdf(-x)) <= 2 * kNormalAccuracy.abs_tol);
  }
  CHECK_THROWS_AS(normal_sf(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("absolute error against the series oracle over [-40, 40]") {
  REQUIRE(kNormalAccuracy.abs_tol <= 1e-15);
  double worst = 0.0;
  for (int k = -400; k <= 400; ++k) {
    const double x = 0.1 * k + 0.0123;
    const double ref = oracle::normal_cdf(x);
    worst = std::max(worst, std::abs(normal_cdf(x) - ref));
    worst = std::max(worst, std::abs(normal_sf(-x) - ref));
  }
  CHECK(worst <= kNormalAccuracy.abs_tol);
}

TEST_CASE("relative accuracy of the upper tail") {
  for (double x : {1.0, 3.0, 5.0, 8.0, 12.0, 20.0, 27.0, 35.0}) {
    const double ref = oracle::normal_sf(x);
    // Rounding x/sqrt(2) alone perturbs the exponent by about x^2 * 1.1e-16.
    CHECK(std::abs(normal_sf(x) - ref) <= (1e-14 + 2.5e-16 * x * x) * ref);
  }
}

TEST_CASE("monotone and symmetric on a grid over [-40, 40]") {
  double prev = normal_cdf(-40.0);
  for (int k = -40000; k <= 40000; ++k) {
    const double x = k * 1e-3;
    const double v = normal_cdf(x);
    CHECK_MESSAGE(prev <= v, "x = " << x);
    CHECK(std::abs(v + normal_cdf(-x) - 1.0) <= 2e-15);
    prev = v;
  }
}

TEST_CASE("central differences of the cdf match the pdf") {
  const double h = 1e-5;
  for (double x = -6.0; x <= 6.0; x += 0.01) {
    const double fd = (normal_cdf(x + h) - normal_cdf(x - h)) / (2 * h);
    CHECK(std::abs(fd - normal_pdf(x)) <= 1e-7);
  }
}

TEST_CASE("upper tail stays positive while representable") {
  // P(Z > x) drops below the smallest subnormal near x = 38.47; the correctly
  // rounded value is zero beyond that.
  for (double x = 0.0; x <= 38.0; x += 0.01) CHECK(normal_sf(x) > 0.0);
  CHECK(oracle::normal_sf(38.5) == 0.0);
  CHECK(normal_sf(40.0) == 0.0);
}

TEST_CASE("complementary_erf") {
  CHECK(complementary_erf(0.0) == 1.0);
  for (double x : {-3.0, -0.3, 0.2, 0.47, 1.5, 4.0, 4.5, 9.0}) {
    const double ref = oracle::erfc(x);
    CHECK(complementary_erf(x) == doctest::Approx(ref).epsilon(1e-14));
  }
  CHECK(complementary_erf(30.0) == 0.0);
  CHECK(complementary_erf(-30.0) == 2.0);
}
