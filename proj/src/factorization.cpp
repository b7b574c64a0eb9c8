#include "gaborsech/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaborsech/errors.hpp"
#include "gaborsech/parallel.hpp"

namespace gaborsech {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroRatio = 1e-13;

double wrap_phase(double x) {
  x = std::remainder(x, 2.0 * kPi);
  return x <= -kPi ? x + 2.0 * kPi : x;
}

}  // namespace

double constant_E(double gamma) {
  const ThetaNome nome = ThetaNome::from_gamma(gamma);
  return std::sqrt(kPi) * std::pow(gamma / 2.0, 0.75) * theta1_prime0(nome);
}

FactorizationReport verify_factorization(double gamma, const GridSpec& grid) {
  grid.validate(8);
  const WindowSpec sech = WindowSpec::hyperbolic_secant(gamma);
  const WindowSpec gauss = WindowSpec::gaussian(gamma);
  const ThetaNome nome = ThetaNome::from_gamma(gamma);
  const ThetaNome nome_dual = ThetaNome::from_inverse_gamma(gamma);
  const double E = constant_E(gamma);
  const int l_max = default_zak_truncation(sech);

  const std::size_t n = static_cast<std::size_t>(grid.n_t) * grid.n_nu;
  std::vector<double> residual(n), reference(n);
  ZakField zg2{grid, sech, ZakMethod::Direct, l_max, std::vector<cdouble>(n)};
  ZakField zg1{grid, gauss, ZakMethod::Closed, nome.n_max(), std::vector<cdouble>(n)};

  parallel_for(static_cast<std::size_t>(grid.n_t), [&](std::size_t j) {
    const double t = grid.t_at(static_cast<int>(j));
    const double theta_t = theta_eval_real(ThetaKind::Theta4, kPi * t, nome_dual);
    for (int k = 0; k < grid.n_nu; ++k) {
      const double nu = grid.nu_at(k);
      const std::size_t idx = j * static_cast<std::size_t>(grid.n_nu) + k;
      const cdouble z2 = zak_sech_series(gamma, t, nu, l_max);
      const cdouble z1 = zak_gaussian_closed(gamma, t, nu);
      const double theta_nu = theta_eval_real(ThetaKind::Theta4, kPi * nu, nome);
      residual[idx] = std::abs(z2 * theta_nu * theta_t - E * z1);
      reference[idx] = std::abs(E * z1);
      zg2.values[idx] = z2;
      zg1.values[idx] = z1;
    }
  });

  FactorizationReport report;
  report.gamma = gamma;
  report.E_claimed = E;
  report.grid = grid;
  report.max_abs_residual = *std::max_element(residual.begin(), residual.end());
  const double ref = *std::max_element(reference.begin(), reference.end());
  report.max_rel_residual = report.max_abs_residual / ref;

  try {
    report.rank1_defect = rank1_factor_test(log_ratio(zg2, zg1)).value();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroDivision) throw;
  }
  return report;
}

LogRatioGrid log_ratio(const ZakField& numer, const ZakField& denom) {
  if (numer.grid.n_t != denom.grid.n_t || numer.grid.n_nu != denom.grid.n_nu ||
      numer.values.size() != denom.values.size()) {
    throw Error(ErrorCode::InvalidArgument, "log_ratio needs fields on the same grid");
  }
  const double floor_n = kZeroRatio * numer.max_abs();
  const double floor_d = kZeroRatio * denom.max_abs();
  LogRatioGrid out{numer.grid.n_t, numer.grid.n_nu, {}};
  out.values.resize(numer.values.size());
  for (std::size_t i = 0; i < numer.values.size(); ++i) {
    if (std::abs(denom.values[i]) < floor_d || std::abs(numer.values[i]) < floor_n) {
      throw Error(ErrorCode::ZeroDivision, "Zak field vanishes on the grid; use an offset grid");
    }
    out.values[i] = std::log(numer.values[i] / denom.values[i]);
  }
  return out;
}

SeparabilityDefect rank1_factor_test(const LogRatioGrid& g) {
  if (g.n_t < 2 || g.n_nu < 2 ||
      g.values.size() != static_cast<std::size_t>(g.n_t) * g.n_nu) {
    throw Error(ErrorCode::InvalidArgument, "log-ratio grid must be at least 2x2 and complete");
  }
  auto at = [&](int j, int k) { return g.values[static_cast<std::size_t>(j) * g.n_nu + k]; };
  SeparabilityDefect d;
  for (int j = 0; j + 1 < g.n_t; ++j) {
    for (int k = 0; k + 1 < g.n_nu; ++k) {
      const cdouble mixed = at(j + 1, k + 1) - at(j + 1, k) - at(j, k + 1) + at(j, k);
      d.modulus = std::max(d.modulus, std::abs(mixed.real()));
      d.phase = std::max(d.phase, std::abs(wrap_phase(mixed.imag())));
    }
  }
  return d;
}

}  // namespace gaborsech
