#pragma once

#include <complex>

namespace gaborsech {

using cdouble = std::complex<double>;

enum class ThetaKind { Theta1, Theta2, Theta3, Theta4 };

/// Default series threshold: terms below this (relative to the partial
/// sum plus one) are dropped.
inline constexpr double kThetaRelEps = 1e-16;

/// A real nome q in (0,1) together with the series truncation order it
/// implies. The nome is stored through log(q) so that nomes of the form
/// exp(-pi*gamma) keep full relative precision in q^(n^2).
///
/// Admissible strip: theta_eval accepts complex z with
///   |Im z| <= 2 * lambda   and   (Im z)^2 / lambda <= 600,
/// where lambda = -log(q). The first bound covers the period shift
/// z + pi*i*gamma used for nomes exp(-pi*gamma); the second keeps the
/// largest series term below exp(600).
class ThetaNome {
 public:
  explicit ThetaNome(double q, double rel_eps = kThetaRelEps);

  /// q = exp(log_q), log_q < 0.
  static ThetaNome from_log(double log_q, double rel_eps = kThetaRelEps);
  /// q = exp(-pi * gamma).
  static ThetaNome from_gamma(double gamma);
  /// q = exp(-pi / gamma), the modular partner of from_gamma(gamma).
  static ThetaNome from_inverse_gamma(double gamma);

  double q() const noexcept { return q_; }
  double log_q() const noexcept { return log_q_; }
  double rel_eps() const noexcept { return rel_eps_; }
  /// Truncation order for real arguments: ceil(sqrt(ln eps / ln q)) + 2.
  int n_max() const noexcept { return n_max_; }

  /// Copy whose truncation order is raised to at least n (used to check
  /// truncation consistency).
  ThetaNome with_order(int n) const;

  /// Truncation order needed at |Im z| = abs_imag.
  int order_for(double abs_imag) const noexcept;

  /// True if z lies in the admissible strip documented above.
  bool in_strip(cdouble z) const noexcept;

 private:
  ThetaNome(double log_q, double rel_eps, int);

  double q_;
  double log_q_;
  double rel_eps_;
  int n_max_;
};

/// Truncated symmetric theta series, terms n and -n (or n and -1-n for
/// theta1/theta2) paired and accumulated from the largest index down.
cdouble theta_eval(ThetaKind kind, cdouble z, const ThetaNome& nome);

/// Real-argument fast path. For q > e^(-1) it sums the image of the
/// series under the imaginary transformation, which keeps full relative
/// accuracy as q -> 1; otherwise it is the q-series in real arithmetic.
double theta_eval_real(ThetaKind kind, double x, const ThetaNome& nome);

/// theta1'(0) = 2 sum (-1)^n (2n+1) q^((n+1/2)^2), strictly positive; for
/// q > e^(-1) evaluated through the transformed series as above.
double theta1_prime0(const ThetaNome& nome);

/// Both sides of the Jacobi imaginary transformation for theta3 with
/// tau = i*gamma:
///   lhs = theta3(z; e^(-pi gamma))
///   rhs = gamma^(-1/2) exp(-z^2/(pi gamma)) theta3(-i z/gamma; e^(-pi/gamma))
struct ModularCheck {
  cdouble lhs;
  cdouble rhs;
  double abs_diff;
  double rel_diff;  // abs_diff / |lhs|, or abs_diff when lhs == 0
};

ModularCheck theta3_modular(cdouble z, double gamma);

/// The special case z = pi*i*(1/2 - t)*gamma, where the right-hand side
/// reduces to gamma^(-1/2) exp(pi gamma (1/2-t)^2) theta3(pi(1/2-t); e^(-pi/gamma)).
ModularCheck theta3_modular_at(double t, double gamma);

/// theta(z + pi*i*gamma; e^(-pi gamma)) through the quasi-period table:
///   theta3 -> e^(pi gamma) e^(-2iz) theta3(z),
///   theta4 -> -e^(pi gamma) e^(-2iz) theta4(z).
/// Only Theta3 and Theta4 are supported.
cdouble theta_quasi_period_shift(ThetaKind kind, cdouble z, double gamma);

}  // namespace gaborsech
