#pragma once

namespace vclass {

/// 1/sqrt(8*pi), the level of u at the maximizer of psi.
inline constexpr double kStationaryLevel = 0.19947114020071633896997302996719;

/// Location and height of the maximum of psi, with the bracket width the
/// root search terminated at.
struct ExtremalConstants {
  double x_phi = 0.0;
  double c_phi = 0.0;
  double target = kStationaryLevel;
  double solve_tol = 0.0;
};

/// psi(x) = 1/(1+x^2) - P(Z <= -|x|). Even; positive; max c_phi at +/-x_phi.
double psi(double x);

/// psi'(x) = -2x/(1+x^2)^2 + pdf(x) for x >= 0, odd reflection for x < 0.
/// At x = 0 the right derivative pdf(0) is returned.
double psi_derivative(double x);

/// u(x) = x e^{x^2/2} / (1+x^2)^2 for x > 0. psi'(x) = 0 iff u(x) = 1/sqrt(8 pi).
/// Throws std::domain_error for x <= 0 and std::range_error on overflow.
double u(double x);

enum class LogDerivativeForm {
  kRaw,         // 1/x + x - 4x/(1+x^2)
  kSimplified,  // (1-x^2)^2 / (x(1+x^2))
};

/// (ln u)'(x). Both forms agree; the simplified one vanishes exactly at x = 1.
double u_log_derivative(double x, LogDerivativeForm form = LogDerivativeForm::kSimplified);

/// Solves u(x) = 1/sqrt(8 pi) on [1e-6, 1]: bisection down to width 1e-4, then
/// safeguarded Newton until the sign-change bracket is no wider than tol.
/// Requires 0 < tol <= 1e-6. Deterministic.
ExtremalConstants solve_constants(double tol);

/// Constants solved once at tol = 1e-12 and cached for the process lifetime.
const ExtremalConstants& extremal_constants();

}  // namespace vclass
