#include "gaborsech/zak.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gaborsech/errors.hpp"
#include "gaborsech/parallel.hpp"

namespace gaborsech {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailTarget = 1e-16;
constexpr double kTailLimit = 1e-10;

void check_truncation(const WindowSpec& w, int l_max) {
  if (l_max < 1) throw Error(ErrorCode::InvalidArgument, "Zak truncation must be >= 1");
  const double bound = zak_tail_bound(w, l_max);
  if (bound > kTailLimit) {
    std::ostringstream os;
    os << "truncation " << l_max << " leaves a tail bound of " << bound << " (limit "
       << kTailLimit << ")";
    throw Error(ErrorCode::TruncationTooSmall, os.str());
  }
}

double nearest_integer(double t) { return std::floor(t + 0.5); }

cdouble unit_phase(double cycles) {
  const double frac = cycles - std::floor(cycles);
  return std::polar(1.0, 2.0 * kPi * frac);
}

}  // namespace

const char* to_string(ZakMethod method) noexcept {
  return method == ZakMethod::Direct ? "direct" : "closed";
}

int default_zak_truncation(const WindowSpec& w) {
  int l_max = static_cast<int>(std::ceil(20.0 / (w.gamma * kPi))) + 10;
  int certified = 1;
  while (zak_tail_bound(w, certified) >= kTailTarget) ++certified;
  return std::max(l_max, certified);
}

cdouble zak_direct(const WindowSpec& w, double t, double nu, int l_max) {
  check_truncation(w, l_max);
  const double m = nearest_integer(t);
  const double s = t - m;
  const double nu_r = nu - std::floor(nu);
  cdouble sum(0.0, 0.0);
  for (int k = l_max; k >= 1; --k) {
    sum += eval_window(w, s - k) * unit_phase(k * nu_r);
    sum += eval_window(w, s + k) * unit_phase(-k * nu_r);
  }
  sum += eval_window(w, s);
  return sum * unit_phase(m * nu_r);
}

cdouble zak_direct(const WindowSpec& w, double t, double nu) {
  return zak_direct(w, t, nu, default_zak_truncation(w));
}

cdouble zak_gaussian_closed(double gamma, double t, double nu) {
  const WindowSpec w = WindowSpec::gaussian(gamma);
  const ThetaNome nome = ThetaNome::from_gamma(gamma);
  const double m = nearest_integer(t);
  const double s = t - m;
  const double nu_r = nu - std::floor(nu);
  const cdouble z(kPi * nu_r, -kPi * gamma * s);
  const cdouble value =
      window_peak(w) * std::exp(-kPi * gamma * s * s) * theta_eval(ThetaKind::Theta3, z, nome);
  return value * unit_phase(m * nu_r);
}

cdouble zak_sech_series(double gamma, double t, double nu, int n_max) {
  const WindowSpec w = WindowSpec::hyperbolic_secant(gamma);
  check_truncation(w, n_max);
  const double m = nearest_integer(t);
  const double nu_r = nu - std::floor(nu);
  auto sech = [&](double x) {
    const double ax = std::abs(kPi * gamma * x);
    return ax > 350.0 ? 0.0 : 1.0 / std::cosh(ax);
  };
  cdouble sum(0.0, 0.0);
  for (int k = n_max; k >= 1; --k) {
    const double n_hi = m + k;
    const double n_lo = m - k;
    sum += sech(t - n_hi) * unit_phase(n_hi * nu_r);
    sum += sech(t - n_lo) * unit_phase(n_lo * nu_r);
  }
  sum += sech(t - m) * unit_phase(m * nu_r);
  return std::sqrt(kPi * gamma / 2.0) * sum;
}

cdouble zak_sech_series(double gamma, double t, double nu) {
  return zak_sech_series(gamma, t, nu,
                         default_zak_truncation(WindowSpec::hyperbolic_secant(gamma)));
}

cdouble zak_sech_closed(double gamma, double t, double nu) {
  if (!(gamma > 0.0)) throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  const ThetaNome nome = ThetaNome::from_gamma(gamma);
  const ThetaNome nome_dual = ThetaNome::from_inverse_gamma(gamma);
  const double m = nearest_integer(t);
  const double s = t - m;
  const double nu_r = nu - std::floor(nu);

  const double prefactor = std::sqrt(kPi / 2.0) * gamma * theta1_prime0(nome);
  const cdouble numer = std::exp(-kPi * gamma * s * s) *
                        theta_eval(ThetaKind::Theta3, cdouble(kPi * nu_r, -kPi * gamma * s), nome);
  const double denom = theta_eval_real(ThetaKind::Theta4, kPi * nu_r, nome) *
                       theta_eval_real(ThetaKind::Theta4, kPi * s, nome_dual);
  return prefactor * numer / denom * unit_phase(m * nu_r);
}

cdouble zak_eval(const WindowSpec& w, double t, double nu, ZakMethod method) {
  if (w.kind == WindowKind::Gaussian) {
    return method == ZakMethod::Direct ? zak_direct(w, t, nu) : zak_gaussian_closed(w.gamma, t, nu);
  }
  return method == ZakMethod::Direct ? zak_sech_series(w.gamma, t, nu)
                                     : zak_sech_closed(w.gamma, t, nu);
}

GridSpec GridSpec::half_offset(int n_t, int n_nu) {
  return GridSpec{n_t, n_nu, 0.5 / n_t, 0.5 / n_nu};
}

GridSpec GridSpec::square(int n, double offset) { return GridSpec{n, n, offset, offset}; }

void GridSpec::validate(int min_size) const {
  if (n_t < min_size || n_nu < min_size) {
    std::ostringstream os;
    os << "grid " << n_t << "x" << n_nu << " below minimum resolution " << min_size;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (!(t_offset >= 0.0 && t_offset < 1.0 && nu_offset >= 0.0 && nu_offset < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "grid offsets must lie in [0,1)");
  }
}

double ZakField::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

ZakField zak_grid(const WindowSpec& w, const GridSpec& grid, ZakMethod method, int l_max) {
  grid.validate(2);
  ZakField field;
  field.grid = grid;
  field.window = w;
  field.method = method;
  if (l_max <= 0) l_max = default_zak_truncation(w);
  if (method == ZakMethod::Direct) check_truncation(w, l_max);
  field.truncation = method == ZakMethod::Direct ? l_max : ThetaNome::from_gamma(w.gamma).n_max();
  field.values.resize(static_cast<std::size_t>(grid.n_t) * grid.n_nu);

  parallel_for(static_cast<std::size_t>(grid.n_t), [&](std::size_t j) {
    const double t = grid.t_at(static_cast<int>(j));
    for (int k = 0; k < grid.n_nu; ++k) {
      const double nu = grid.nu_at(k);
      cdouble v;
      if (method == ZakMethod::Direct) {
        v = w.kind == WindowKind::Gaussian ? zak_direct(w, t, nu, l_max)
                                           : zak_sech_series(w.gamma, t, nu, l_max);
      } else {
        v = zak_eval(w, t, nu, ZakMethod::Closed);
      }
      field.values[j * static_cast<std::size_t>(grid.n_nu) + k] = v;
    }
  });
  return field;
}

}  // namespace gaborsech
