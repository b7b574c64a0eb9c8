#include "gaborsech/critical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gaborsech/errors.hpp"
#include "gaborsech/parallel.hpp"

namespace gaborsech {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-8;
constexpr double kSeriesCutoff = 1e-18;

void require_admissible(double t, double eps_half) {
  if (!(eps_half > 0.0 && eps_half < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "eps_half must lie in (0, 1/2)");
  }
  if (half_integer_distance(t) < eps_half) {
    std::ostringstream os;
    os << "t = " << t << " lies within " << eps_half << " of a half-integer";
    throw Error(ErrorCode::TooCloseToHalfInteger, os.str());
  }
}

void require_nodes(int n_quad) {
  if (n_quad < 64) throw Error(ErrorCode::InvalidArgument, "n_quad must be >= 64");
}

/// Periodic trapezoid rule with nodes k/n, doubled until converged.
/// `allowed` maps (|finer result|, mean |f|) to the admissible shift.
template <class Integrand, class Tolerance>
QuadratureValue trapezoid(Integrand f, int n_quad, Tolerance allowed) {
  auto rule = [&](int n, double& mean_abs) {
    cdouble sum(0.0, 0.0);
    double abs_sum = 0.0;
    for (int k = 0; k < n; ++k) {
      const cdouble v = f(static_cast<double>(k) / n);
      sum += v;
      abs_sum += std::abs(v);
    }
    mean_abs = abs_sum / n;
    return sum / static_cast<double>(n);
  };
  double mean_abs = 0.0;
  cdouble coarse = rule(n_quad, mean_abs);
  for (int n = 2 * n_quad; n <= kMaxQuadrature; n *= 2) {
    const cdouble fine = rule(n, mean_abs);
    const double shift = std::abs(fine - coarse);
    if (shift <= allowed(std::abs(fine), mean_abs)) {
      return QuadratureValue{fine.real(), std::abs(fine.imag()), shift, n};
    }
    coarse = fine;
  }
  std::ostringstream os;
  os << "trapezoid rule not converged at " << kMaxQuadrature << " nodes";
  throw Error(ErrorCode::QuadratureNotConverged, os.str());
}

double theta1_prime0_unit() { return theta1_prime0(ThetaNome::from_gamma(1.0)); }

}  // namespace

double half_integer_distance(double t) { return std::abs(t - std::floor(t) - 0.5); }

double zz_scalar(const WindowSpec& w, double t, double nu) {
  return std::norm(zak_eval(w, t, nu, ZakMethod::Closed));
}

QuadratureValue dual_numeric(const WindowSpec& w, double t, int n_quad, double eps_half,
                             ZakMethod method) {
  require_admissible(t, eps_half);
  require_nodes(n_quad);
  return trapezoid(
      [&](double nu) { return 1.0 / std::conj(zak_eval(w, t, nu, method)); }, n_quad,
      [](double value, double mean_abs) {
        return kQuadTol * std::max(value, 1e-12 * mean_abs);
      });
}

double dual_sech_closed(double t_frac, int n, double eps_half) {
  if (!(std::abs(t_frac) < 0.5 - eps_half)) {
    std::ostringstream os;
    os << "t = " << t_frac << " outside (-1/2 + eps, 1/2 - eps) with eps = " << eps_half;
    throw Error(ErrorCode::DomainError, os.str());
  }
  const ThetaNome nome = ThetaNome::from_gamma(1.0);
  const double th4 = theta_eval_real(ThetaKind::Theta4, kPi * t_frac, nome);
  const double tp = theta1_prime0(nome);
  const double x = std::abs(kPi * (t_frac + n));
  // e^(2 pi t^2 + 2 pi n t) / cosh(x) with the growth folded into one exponent
  const double ratio = 2.0 * std::exp(2.0 * kPi * t_frac * t_frac + 2.0 * kPi * n * t_frac - x) /
                       (1.0 + std::exp(-2.0 * x));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(2.0 / kPi) * th4 * th4 * ratio / (tp * tp);
}

double dual_sech_closed_at(double t, double eps_half) {
  const double n = std::floor(t + 0.5);
  return dual_sech_closed(t - n, static_cast<int>(n), eps_half);
}

double dual_gauss_series(double t, double eps_half) {
  if (half_integer_distance(t) < eps_half) {
    std::ostringstream os;
    os << "t = " << t << " lies within " << eps_half << " of a half-integer";
    throw Error(ErrorCode::DomainError, os.str());
  }
  const double at = std::abs(t);
  const int n0 = std::max(1, static_cast<int>(std::ceil(at + 0.5)));
  double sum = 0.0;
  double first = 0.0;
  for (int n = n0;; ++n) {
    const double h = n - 0.5;
    const double term = std::exp(kPi * (t * t - h * h));
    if (n == n0) first = term;
    sum += (n % 2 == 0) ? -term : term;
    if (term < kSeriesCutoff * first) break;
  }
  return std::pow(2.0, 0.75) / theta1_prime0_unit() * sum;
}

QuadratureValue tight_window(const WindowSpec& w, double t, int n_quad, double eps_half,
                             ZakMethod method) {
  require_admissible(t, eps_half);
  require_nodes(n_quad);
  return trapezoid(
      [&](double nu) {
        const cdouble z = zak_eval(w, t, nu, method);
        const double m = std::abs(z);
        if (m == 0.0) throw Error(ErrorCode::ZeroDivision, "Zak transform vanishes on the node set");
        return z / m;
      },
      n_quad, [](double, double) { return kQuadTol; });
}

ProfileGrid make_profile_grid(double lo, double hi, int n, double eps_half) {
  if (n < 2 || !(hi > lo)) throw Error(ErrorCode::InvalidArgument, "profile grid needs n >= 2, hi > lo");
  ProfileGrid g;
  g.eps_half = eps_half;
  g.spacing = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double t = lo + (hi - lo) * i / (n - 1);
    if (half_integer_distance(t) >= eps_half) g.t_values.push_back(t);
  }
  return g;
}

ProfileGrid standard_profile_grid() { return make_profile_grid(-3.0, 3.0, 200, kDefaultEpsHalf); }

namespace {

template <class Eval>
SampledProfile sample_profile(const WindowSpec& w, const ProfileGrid& grid, int n_quad, Eval eval) {
  SampledProfile p;
  p.t_values = grid.t_values;
  p.values.resize(grid.t_values.size());
  p.eps_half = grid.eps_half;
  p.spacing = grid.spacing;
  p.gamma = w.gamma;
  p.n_quad = n_quad;
  parallel_for(p.values.size(), [&](std::size_t i) { p.values[i] = eval(p.t_values[i]); });
  return p;
}

}  // namespace

SampledProfile tight_profile(const WindowSpec& w, const ProfileGrid& grid, int n_quad) {
  return sample_profile(w, grid, n_quad, [&](double t) {
    return tight_window(w, t, n_quad, grid.eps_half).value;
  });
}

SampledProfile dual_profile(const WindowSpec& w, const ProfileGrid& grid, int n_quad) {
  return sample_profile(w, grid, n_quad, [&](double t) {
    return dual_numeric(w, t, n_quad, grid.eps_half).value;
  });
}

double discrete_l2_distance(std::span<const double> f, std::span<const double> g, double spacing) {
  if (f.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "profiles differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = f[i] - g[i];
    acc += d * d;
  }
  return std::sqrt(acc * spacing);
}

double tight_equality_check(double gamma, const ProfileGrid& grid, int n_quad) {
  const SampledProfile a = tight_profile(WindowSpec::gaussian(gamma), grid, n_quad);
  const SampledProfile b = tight_profile(WindowSpec::hyperbolic_secant(gamma), grid, n_quad);
  return discrete_l2_distance(a.values, b.values, grid.spacing);
}

double sinc_pi(double t) {
  if (t == 0.0) return 1.0;
  return std::sin(kPi * t) / (kPi * t);
}

double haar_indicator(double t) { return std::abs(t) < 0.5 ? 1.0 : 0.0; }

std::vector<LimitDistance> limit_profiles(std::span<const double> gammas, const ProfileGrid& grid,
                                          int n_quad) {
  std::vector<double> sinc(grid.t_values.size()), haar(grid.t_values.size());
  for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
    sinc[i] = sinc_pi(grid.t_values[i]);
    haar[i] = haar_indicator(grid.t_values[i]);
  }
  std::vector<LimitDistance> out;
  out.reserve(gammas.size());
  for (double gamma : gammas) {
    const SampledProfile p = tight_profile(WindowSpec::gaussian(gamma), grid, n_quad);
    out.push_back({gamma, discrete_l2_distance(p.values, sinc, grid.spacing),
                   discrete_l2_distance(p.values, haar, grid.spacing)});
  }
  return out;
}

namespace {

std::vector<LimitDistance> sorted_by_gamma(std::span<const LimitDistance> d) {
  std::vector<LimitDistance> s(d.begin(), d.end());
  std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.gamma < y.gamma; });
  return s;
}

}  // namespace

bool sinc_trend_holds(std::span<const LimitDistance> d) {
  const auto s = sorted_by_gamma(d);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i - 1].to_sinc < s[i].to_sinc)) return false;
  }
  return true;
}

bool indicator_trend_holds(std::span<const LimitDistance> d) {
  const auto s = sorted_by_gamma(d);
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i - 1].to_indicator > s[i].to_indicator)) return false;
  }
  return true;
}

}  // namespace gaborsech
