#include "vclass/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vclass/specfun.hpp"

namespace vclass {

double psi(double x) {
  if (std::isnan(x)) throw std::domain_error("psi: NaN argument");
  return 1.0 / (1.0 + x * x) - normal_sf(std::abs(x));
}

double psi_derivative(double x) {
  if (std::isnan(x)) throw std::domain_error("psi_derivative: NaN argument");
  if (x < 0.0) return -psi_derivative(-x);
  const double q = 1.0 + x * x;
  return -2.0 * x / (q * q) + normal_pdf(x);
}

double u(double x) {
  if (!(x > 0.0)) throw std::domain_error("u: argument must be positive");
  const double q = 1.0 + x * x;
  const double value = x * std::exp(0.5 * x * x) / (q * q);
  if (!std::isfinite(value)) throw std::range_error("u: exp(x^2/2) overflows");
  return value;
}

double u_log_derivative(double x, LogDerivativeForm form) {
  if (std::isnan(x) || x == 0.0) throw std::domain_error("u_log_derivative: pole at x = 0");
  const double q = 1.0 + x * x;
  if (form == LogDerivativeForm::kRaw) return 1.0 / x + x - 4.0 * x / q;
  const double w = 1.0 - x * x;
  return w * w / (x * q);
}

ExtremalConstants solve_constants(double tol) {
  if (!(tol > 0.0 && tol <= 1e-6)) {
    throw std::invalid_argument("solve_constants: tol must lie in (0, 1e-6]");
  }
  const auto f = [](double x) { return u(x) - kStationaryLevel; };

  double lo = 1e-6;
  double hi = 1.0;
  if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
    throw std::logic_error("solve_constants: initial bracket does not straddle the root");
  }

  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }

  double x = 0.5 * (lo + hi);
  double best_x = x;
  double best_residual = INFINITY;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double fx = f(x);
    if (std::abs(fx) < best_residual) {
      best_residual = std::abs(fx);
      best_x = x;
    }
    if (fx == 0.0) {
      lo = hi = x;
      break;
    }
    (fx < 0.0 ? lo : hi) = x;
    if (hi - lo <= tol || std::nextafter(lo, hi) >= hi) break;

    const double step = fx / (u(x) * u_log_derivative(x));
    double next = x - step;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    } else if (std::abs(step) < 0.25 * tol) {
      // Converged: pin both sides of the bracket around the Newton point.
      const double left = std::max(lo, next - 0.25 * tol);
      const double right = std::min(hi, next + 0.25 * tol);
      if (f(left) < 0.0) lo = left;
      if (f(right) > 0.0) hi = right;
    }
    x = next;
  }
  if (best_x < lo || best_x > hi) best_x = 0.5 * (lo + hi);

  ExtremalConstants out;
  out.x_phi = best_x;
  out.c_phi = psi(best_x);
  out.target = kStationaryLevel;
  out.solve_tol = hi - lo;
  return out;
}

const ExtremalConstants& extremal_constants() {
  static const ExtremalConstants constants = solve_constants(1e-12);
  return constants;
}

}  // namespace vclass
