#pragma once

#include <span>
#include <vector>

#include "gaborsech/zak.hpp"

namespace gaborsech {

// Critical density a = b = 1. The frame operator acts in the Zak domain
// as multiplication by |Zg|^2; canonical dual and tight windows follow
// from 1/(Zg)^* and Zg/|Zg|. These integrals are only formal near
// t = n + 1/2, where Zg(t, 1/2) vanishes, so every routine here rejects
// t closer than eps_half to a half-integer. Membership of the dual in
// L^p and the limit of S_a^(-1/2) g as a -> 1 are not computed.

inline constexpr double kDefaultEpsHalf = 1e-3;
inline constexpr int kDefaultQuadrature = 512;
inline constexpr int kMaxQuadrature = 1 << 17;

/// Distance from t to the nearest point of Z + 1/2.
double half_integer_distance(double t);

/// |Zg(t,nu)|^2 from the closed-form evaluator.
double zz_scalar(const WindowSpec& w, double t, double nu);

/// Result of a periodic trapezoid rule over nu in [0,1). Starting from
/// n_quad nodes the rule is doubled until two successive results agree
/// (or kMaxQuadrature is passed); `value` is the finer result, `shift`
/// the difference to the coarser one and `n_quad` the finer node count.
struct QuadratureValue {
  double value = 0.0;
  double imag_residual = 0.0;
  double shift = 0.0;
  int n_quad = 0;
};

/// g^d(t) = int_0^1 dnu / (Zg)^*(t,nu). Converged when doubling moves the
/// result by at most 1e-8 relative; QuadratureNotConverged otherwise.
QuadratureValue dual_numeric(const WindowSpec& w, double t, int n_quad = kDefaultQuadrature,
                             double eps_half = kDefaultEpsHalf,
                             ZakMethod method = ZakMethod::Direct);

/// Secant dual at gamma = 1, nome e^(-pi):
///   g^d(t + n) = 2^(1/2) (-1)^n theta4(pi t)^2 e^(2 pi t^2 + 2 pi n t)
///                / (pi^(1/2) theta1'(0)^2 cosh(pi (t + n))),   |t| < 1/2.
/// DomainError unless |t_frac| < 1/2 - eps_half.
double dual_sech_closed(double t_frac, int n, double eps_half = kDefaultEpsHalf);

/// Convenience: splits t into t_frac + n and calls dual_sech_closed.
double dual_sech_closed_at(double t, double eps_half = kDefaultEpsHalf);

/// Gaussian dual at gamma = 1, nome e^(-pi):
///   g^d(t) = 2^(3/4) / theta1'(0) * e^(pi t^2) * sum_{n >= 1, n - 1/2 >= |t|} (-1)^(n+1) e^(-pi (n-1/2)^2).
/// DomainError within eps_half of a half-integer.
double dual_gauss_series(double t, double eps_half = kDefaultEpsHalf);

/// g^t(t) = int_0^1 Zg / |Zg| dnu. Convergence is judged in absolute terms
/// (the integrand has unit modulus): QuadratureNotConverged above 1e-8.
QuadratureValue tight_window(const WindowSpec& w, double t, int n_quad = kDefaultQuadrature,
                             double eps_half = kDefaultEpsHalf,
                             ZakMethod method = ZakMethod::Direct);

/// Sample points avoiding half-integer neighbourhoods, with the uniform
/// spacing used as the quadrature weight of discrete L^2 distances.
struct ProfileGrid {
  std::vector<double> t_values;
  double spacing = 0.0;
  double eps_half = kDefaultEpsHalf;
};

/// n equispaced points on [lo, hi], minus those within eps_half of Z + 1/2.
ProfileGrid make_profile_grid(double lo, double hi, int n, double eps_half = kDefaultEpsHalf);

/// 200 points on [-3, 3] with the default exclusion radius.
ProfileGrid standard_profile_grid();

struct SampledProfile {
  std::vector<double> t_values;
  std::vector<double> values;
  double eps_half = kDefaultEpsHalf;
  double spacing = 0.0;
  double gamma = 0.0;
  int n_quad = 0;
};

SampledProfile tight_profile(const WindowSpec& w, const ProfileGrid& grid,
                             int n_quad = kDefaultQuadrature);
SampledProfile dual_profile(const WindowSpec& w, const ProfileGrid& grid,
                            int n_quad = kDefaultQuadrature);

/// sqrt(spacing * sum (f - g)^2).
double discrete_l2_distance(std::span<const double> f, std::span<const double> g, double spacing);

/// Discrete L^2 distance between the tight windows of the Gaussian and the
/// secant at the same gamma.
double tight_equality_check(double gamma, const ProfileGrid& grid,
                            int n_quad = kDefaultQuadrature);

/// sin(pi t)/(pi t), 1 at t = 0.
double sinc_pi(double t);
/// Indicator of (-1/2, 1/2).
double haar_indicator(double t);

struct LimitDistance {
  double gamma = 0.0;
  double to_sinc = 0.0;
  double to_indicator = 0.0;
};

/// Distances from g^t_gamma (Gaussian generator) to sinc(pi .) and to the
/// Haar indicator, in the order given.
std::vector<LimitDistance> limit_profiles(std::span<const double> gammas, const ProfileGrid& grid,
                                          int n_quad = kDefaultQuadrature);

/// True when to_sinc decreases strictly as gamma decreases along the list
/// (sorted internally), and likewise to_indicator as gamma increases.
bool sinc_trend_holds(std::span<const LimitDistance> d);
bool indicator_trend_holds(std::span<const LimitDistance> d);

}  // namespace gaborsech
