#pragma once

// Brute-force reference implementations used by the tests. They share no
// code with the library: plain symmetric sums in long double with generous
// fixed truncation, straightforward quadrature, and no closed forms.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;
inline constexpr long double kPi = std::numbers::pi_v<long double>;

/// theta_k(z; q) by the defining bilateral series over |n| <= n_terms.
inline std::complex<double> theta(int kind, std::complex<double> zd, double qd, int n_terms = 80) {
  const cld z(zd.real(), zd.imag());
  const long double lq = std::log(static_cast<long double>(qd));
  const cld i(0, 1);
  cld sum = 0;
  for (int n = -n_terms; n <= n_terms; ++n) {
    const long double nl = n;
    switch (kind) {
      case 1:
        sum += (n % 2 == 0 ? 1.0L : -1.0L) * std::exp((nl + 0.5L) * (nl + 0.5L) * lq) *
               std::exp((2 * nl + 1) * i * z);
        break;
      case 2:
        sum += std::exp((nl + 0.5L) * (nl + 0.5L) * lq) * std::exp((2 * nl + 1) * i * z);
        break;
      case 3:
        sum += std::exp(nl * nl * lq) * std::exp(2 * nl * i * z);
        break;
      default:
        sum += (n % 2 == 0 ? 1.0L : -1.0L) * std::exp(nl * nl * lq) * std::exp(2 * nl * i * z);
        break;
    }
  }
  if (kind == 1) sum /= i;
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// theta4'(z; q) = sum (-1)^n q^(n^2) 2 n i e^(2 n i z).
inline std::complex<double> theta4_prime(std::complex<double> zd, double qd, int n_terms = 80) {
  const cld z(zd.real(), zd.imag());
  const long double lq = std::log(static_cast<long double>(qd));
  const cld i(0, 1);
  cld sum = 0;
  for (int n = -n_terms; n <= n_terms; ++n) {
    const long double nl = n;
    sum += (n % 2 == 0 ? 1.0L : -1.0L) * std::exp(nl * nl * lq) * 2.0L * nl * i *
           std::exp(2 * nl * i * z);
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// theta1'(0) by differentiating the sine series term by term.
inline double theta1_prime0(double qd, int n_terms = 80) {
  const long double lq = std::log(static_cast<long double>(qd));
  long double sum = 0;
  for (int n = n_terms; n >= 0; --n) {
    sum += (n % 2 == 0 ? 1.0L : -1.0L) * (2 * n + 1) * std::exp((n + 0.5L) * (n + 0.5L) * lq);
  }
  return static_cast<double>(2 * sum);
}

inline long double gaussian(long double gamma, long double t) {
  return std::pow(2 * gamma, 0.25L) * std::exp(-kPi * gamma * t * t);
}

inline long double sech_window(long double gamma, long double t) {
  return std::sqrt(kPi * gamma / 2) / std::cosh(kPi * gamma * t);
}

/// sum_{|l| <= l_max} g(t - l) e^(2 pi i l nu) in long double.
inline std::complex<double> zak(const std::function<long double(long double)>& g, double t,
                                double nu, int l_max = 400) {
  cld sum = 0;
  for (int l = -l_max; l <= l_max; ++l) {
    const long double ph = 2 * kPi * l * static_cast<long double>(nu);
    sum += g(static_cast<long double>(t) - l) * cld(std::cos(ph), std::sin(ph));
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// Composite Simpson rule on [lo, hi] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * f(lo + k * h);
  return s * h / 3.0;
}

/// Maximum of a unimodal function on [lo, hi] by golden-section search.
inline double golden_max(const std::function<double(double)>& f, double lo, double hi,
                         int iterations = 200) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int k = 0; k < iterations && hi - lo > 1e-15; ++k) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? f1 : f2;
}

}  // namespace oracle
