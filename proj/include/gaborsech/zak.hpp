#pragma once

#include <complex>
#include <vector>

#include "gaborsech/theta.hpp"
#include "gaborsech/windows.hpp"

namespace gaborsech {

/// Which evaluator fills a Zak field.
///   Direct: the lattice sum  sum_l g(t - l) e^(2 pi i l nu).
///   Closed: theta-function closed forms (Gaussian, and the secant through
///           its factorization against the Gaussian).
enum class ZakMethod { Direct, Closed };

const char* to_string(ZakMethod method) noexcept;

/// Default truncation for the direct sums: the larger of
/// ceil(20 / (pi gamma)) + 10 and the smallest l_max whose decay bound
/// (zak_tail_bound) is below 1e-16.
int default_zak_truncation(const WindowSpec& w);

/// Direct Zak sum over l = m + k, |k| <= l_max, where m is the integer
/// nearest to t. Throws TruncationTooSmall when the decay bound of the
/// neglected terms exceeds 1e-10.
cdouble zak_direct(const WindowSpec& w, double t, double nu, int l_max);
cdouble zak_direct(const WindowSpec& w, double t, double nu);

/// (2 gamma)^(1/4) e^(-pi gamma t^2) theta3(pi(nu - i gamma t); e^(-pi gamma)),
/// evaluated at the representative of t in [-1/2, 1/2] and carried back
/// with Zg(t + m, nu) = e^(2 pi i m nu) Zg(t, nu).
cdouble zak_gaussian_closed(double gamma, double t, double nu);

/// (pi gamma / 2)^(1/2) sum_n e^(2 pi i n nu) / cosh(pi gamma (t - n)),
/// truncated like zak_direct.
cdouble zak_sech_series(double gamma, double t, double nu, int n_max);
cdouble zak_sech_series(double gamma, double t, double nu);

/// Closed form of the secant's Zak transform:
///   2^(-1/2) pi^(1/2) gamma theta1'(0; q) e^(-pi gamma t^2) theta3(pi(nu - i gamma t); q)
///     / [theta4(pi nu; q) theta4(pi t; q')],   q = e^(-pi gamma), q' = e^(-pi/gamma).
cdouble zak_sech_closed(double gamma, double t, double nu);

/// Dispatches to the evaluator for the window kind and method.
cdouble zak_eval(const WindowSpec& w, double t, double nu, ZakMethod method);

/// Sample positions (j / n_t + t_offset, k / n_nu + nu_offset).
struct GridSpec {
  int n_t = 64;
  int n_nu = 64;
  double t_offset = 0.0;
  double nu_offset = 0.0;

  /// Offsets 1/(2 n_t), 1/(2 n_nu): never hits t = 1/2 or nu = 1/2 for
  /// even resolutions.
  static GridSpec half_offset(int n_t, int n_nu);
  static GridSpec square(int n, double offset = 0.0);

  double t_at(int j) const noexcept { return static_cast<double>(j) / n_t + t_offset; }
  double nu_at(int k) const noexcept { return static_cast<double>(k) / n_nu + nu_offset; }

  /// Throws InvalidArgument unless n_t, n_nu >= min_size and offsets lie in [0,1).
  void validate(int min_size = 2) const;
};

/// Zak samples on a unit-cell grid, row-major over t then nu.
struct ZakField {
  GridSpec grid;
  WindowSpec window;
  ZakMethod method = ZakMethod::Direct;
  int truncation = 0;  // l_max for Direct, theta n_max (real axis) for Closed
  std::vector<cdouble> values;

  const cdouble& at(int j, int k) const { return values[static_cast<std::size_t>(j) * grid.n_nu + k]; }
  double max_abs() const;
};

/// l_max applies to the Direct method; 0 selects default_zak_truncation.
ZakField zak_grid(const WindowSpec& w, const GridSpec& grid, ZakMethod method, int l_max = 0);

}  // namespace gaborsech
