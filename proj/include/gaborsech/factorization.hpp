#pragma once

#include <optional>
#include <vector>

#include "gaborsech/zak.hpp"

namespace gaborsech {

/// E(gamma) = pi^(1/2) (gamma/2)^(3/4) theta1'(0; e^(-pi gamma)), the constant
/// relating the secant and Gaussian Zak transforms.
double constant_E(double gamma);

struct FactorizationReport {
  double gamma = 0.0;
  double E_claimed = 0.0;
  double max_abs_residual = 0.0;
  /// max |R| / max |E Zg1| over the grid.
  double max_rel_residual = 0.0;
  /// Separability defect of log(Zg2/Zg1); absent when the grid touches a
  /// Zak zero.
  std::optional<double> rank1_defect;
  GridSpec grid;
};

/// Evaluates R(t,nu) = Zg2(t,nu) theta4(pi nu; e^(-pi gamma)) theta4(pi t; e^(-pi/gamma))
///                     - E Zg1(t,nu)
/// with Zg2 from the lattice sum and Zg1 from its theta closed form.
/// Requires n_t, n_nu >= 8.
FactorizationReport verify_factorization(double gamma, const GridSpec& grid);

/// log(numer/denom) on a common grid, row-major over t then nu.
struct LogRatioGrid {
  int n_t = 0;
  int n_nu = 0;
  std::vector<cdouble> values;
};

/// Throws ZeroDivision if some |denom| < 1e-13 * max |denom|, and
/// InvalidArgument if the grids differ.
LogRatioGrid log_ratio(const ZakField& numer, const ZakField& denom);

/// Largest mixed second difference of the log-ratio,
///   L(j+1,k+1) - L(j+1,k) - L(j,k+1) + L(j,k),
/// split into its real (log-modulus) and imaginary (phase, wrapped to
/// (-pi, pi]) parts. Both vanish iff the ratio is a product of a t-part
/// and a nu-part on the grid.
struct SeparabilityDefect {
  double modulus = 0.0;
  double phase = 0.0;
  double value() const { return modulus > phase ? modulus : phase; }
};

SeparabilityDefect rank1_factor_test(const LogRatioGrid& log_ratios);

}  // namespace gaborsech
