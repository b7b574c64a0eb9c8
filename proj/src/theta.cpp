#include "gaborsech/theta.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gaborsech/errors.hpp"

namespace gaborsech {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStripWidthFactor = 2.0;
constexpr double kMaxLogTerm = 600.0;

int base_order(double lambda, double rel_eps) {
  return static_cast<int>(std::ceil(std::sqrt(std::log(rel_eps) / -lambda))) + 2;
}

void check_strip(const ThetaNome& nome, cdouble z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::InvalidArgument, "theta argument is not finite");
  }
  if (!nome.in_strip(z)) {
    std::ostringstream os;
    os << "|Im z| = " << std::abs(z.imag()) << " outside the admissible strip for q = "
       << nome.q();
    throw Error(ErrorCode::ArgumentOutOfStrip, os.str());
  }
}

// Below this lambda = -log(q) the real-axis series are evaluated in their
// Poisson-summed form
//   theta3(x) = (pi/lambda)^(1/2) sum_n exp(-(x - pi n)^2 / lambda),
// with the sign (-1)^n for theta2 and theta1 and the shift n -> n + 1/2
// for theta4 and theta1. The terms then decay like exp(-pi^2 k^2 / lambda)
// and nothing cancels, whereas the q-series of theta4 and theta1'
// lose all relative accuracy as q -> 1.
constexpr double kModularSwitch = 1.0;
constexpr double kTransformedCutoff = 45.0;

int transformed_terms(double lambda) {
  return static_cast<int>(std::ceil(std::sqrt(kTransformedCutoff * lambda) / kPi)) + 2;
}

double theta_real_transformed(ThetaKind kind, double x, double lambda) {
  const bool half = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta4;
  const bool alternating = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta2;
  const double shift = half ? 0.5 : 0.0;
  const double centre = std::round(x / kPi - shift);
  if (std::abs(centre) > 1e15) throw Error(ErrorCode::InvalidArgument, "theta argument too large");
  const auto m0 = static_cast<long long>(centre);
  const auto term = [&](long long n) {
    const double d = x - kPi * (static_cast<double>(n) + shift);
    const double w = std::exp(-d * d / lambda);
    return (alternating && n % 2 != 0) ? -w : w;
  };
  double sum = 0.0;
  for (int k = transformed_terms(lambda); k >= 1; --k) sum += term(m0 + k) + term(m0 - k);
  sum += term(m0);
  return std::sqrt(kPi / lambda) * sum;
}

}  // namespace

ThetaNome::ThetaNome(double q, double rel_eps) : ThetaNome(0.0, rel_eps, 0) {
  if (!(q > 0.0 && q < 1.0)) {
    std::ostringstream os;
    os << "nome q = " << q << " not in (0,1)";
    throw Error(ErrorCode::NomeOutOfRange, os.str());
  }
  q_ = q;
  log_q_ = std::log(q);
  n_max_ = base_order(-log_q_, rel_eps_);
}

ThetaNome::ThetaNome(double log_q, double rel_eps, int)
    : q_(std::exp(log_q)), log_q_(log_q), rel_eps_(rel_eps), n_max_(1) {
  if (!(rel_eps > 0.0 && rel_eps < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "series threshold must lie in (0,1)");
  }
  if (log_q < 0.0 && std::isfinite(log_q)) n_max_ = base_order(-log_q, rel_eps);
}

ThetaNome ThetaNome::from_log(double log_q, double rel_eps) {
  if (!(log_q < 0.0) || !std::isfinite(log_q) || std::exp(log_q) <= 0.0) {
    std::ostringstream os;
    os << "log q = " << log_q << " does not give a nome in (0,1)";
    throw Error(ErrorCode::NomeOutOfRange, os.str());
  }
  return ThetaNome(log_q, rel_eps, 0);
}

ThetaNome ThetaNome::from_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::NomeOutOfRange, "exp(-pi*gamma) needs gamma > 0");
  }
  return from_log(-kPi * gamma);
}

ThetaNome ThetaNome::from_inverse_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::NomeOutOfRange, "exp(-pi/gamma) needs gamma > 0");
  }
  return from_log(-kPi / gamma);
}

ThetaNome ThetaNome::with_order(int n) const {
  ThetaNome copy = *this;
  if (n > copy.n_max_) copy.n_max_ = n;
  return copy;
}

int ThetaNome::order_for(double abs_imag) const noexcept {
  const double lambda = -log_q_;
  const double y = std::abs(abs_imag);
  const double need = (y + std::sqrt(y * y + lambda * -std::log(rel_eps_))) / lambda;
  const int n = static_cast<int>(std::ceil(need)) + 2;
  return n > n_max_ ? n : n_max_;
}

bool ThetaNome::in_strip(cdouble z) const noexcept {
  const double lambda = -log_q_;
  const double y = std::abs(z.imag());
  return y <= kStripWidthFactor * lambda && y * y / lambda <= kMaxLogTerm;
}

cdouble theta_eval(ThetaKind kind, cdouble z, const ThetaNome& nome) {
  check_strip(nome, z);
  const int n_top = nome.order_for(z.imag());
  const double lq = nome.log_q();
  const double x = z.real();
  const double y = z.imag();

  // exp(a + i*m*z) = exp(a - m*y) * exp(i*m*x), kept as one exponent so
  // that neither factor overflows on its own.
  auto pair_terms = [&](double a, double m, cdouble& plus, cdouble& minus) {
    plus = std::exp(cdouble(a - m * y, m * x));
    minus = std::exp(cdouble(a + m * y, -m * x));
  };

  cdouble sum(0.0, 0.0);
  cdouble plus, minus;
  switch (kind) {
    case ThetaKind::Theta1:
    case ThetaKind::Theta2: {
      const bool odd = kind == ThetaKind::Theta1;
      for (int n = n_top; n >= 0; --n) {
        const double h = n + 0.5;
        pair_terms(h * h * lq, 2.0 * n + 1.0, plus, minus);
        const double sign = (odd && (n % 2 != 0)) ? -1.0 : 1.0;
        sum += sign * (odd ? plus - minus : plus + minus);
      }
      // theta1 carries the 1/i prefactor
      return odd ? cdouble(sum.imag(), -sum.real()) : sum;
    }
    case ThetaKind::Theta3:
    case ThetaKind::Theta4: {
      const bool alternating = kind == ThetaKind::Theta4;
      for (int n = n_top; n >= 1; --n) {
        pair_terms(static_cast<double>(n) * n * lq, 2.0 * n, plus, minus);
        const double sign = (alternating && (n % 2 != 0)) ? -1.0 : 1.0;
        sum += sign * (plus + minus);
      }
      return sum + 1.0;
    }
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown theta kind");
}

double theta_eval_real(ThetaKind kind, double x, const ThetaNome& nome) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "theta argument is not finite");
  if (-nome.log_q() < kModularSwitch) return theta_real_transformed(kind, x, -nome.log_q());
  const int n_top = nome.n_max();
  const double lq = nome.log_q();
  double sum = 0.0;
  switch (kind) {
    case ThetaKind::Theta1:
    case ThetaKind::Theta2: {
      const bool odd = kind == ThetaKind::Theta1;
      for (int n = n_top; n >= 0; --n) {
        const double h = n + 0.5;
        const double m = 2.0 * n + 1.0;
        const double w = std::exp(h * h * lq);
        if (odd) {
          sum += (n % 2 != 0 ? -w : w) * std::sin(m * x);
        } else {
          sum += w * std::cos(m * x);
        }
      }
      return 2.0 * sum;
    }
    case ThetaKind::Theta3:
    case ThetaKind::Theta4: {
      const bool alternating = kind == ThetaKind::Theta4;
      for (int n = n_top; n >= 1; --n) {
        const double w = std::exp(static_cast<double>(n) * n * lq);
        sum += ((alternating && n % 2 != 0) ? -w : w) * std::cos(2.0 * n * x);
      }
      return 1.0 + 2.0 * sum;
    }
  }
  throw Error(ErrorCode::UnsupportedKind, "unknown theta kind");
}

double theta1_prime0(const ThetaNome& nome) {
  const double lq = nome.log_q();
  if (-lq < kModularSwitch) {
    const double lambda = -lq;
    const int k_max = transformed_terms(lambda);
    double acc = 0.0;
    for (int n = k_max; n >= 0; --n) {
      const double h = kPi * (n + 0.5);
      const double term = (2.0 * n + 1.0) * std::exp(-h * h / lambda);
      acc += (n % 2 != 0) ? -term : term;
    }
    return 2.0 * std::sqrt(kPi / lambda) * (kPi / lambda) * acc;
  }
  double sum = 0.0;
  for (int n = nome.n_max(); n >= 0; --n) {
    const double h = n + 0.5;
    const double term = (2.0 * n + 1.0) * std::exp(h * h * lq);
    sum += (n % 2 != 0) ? -term : term;
  }
  return 2.0 * sum;
}

ModularCheck theta3_modular(cdouble z, double gamma) {
  const ThetaNome q = ThetaNome::from_gamma(gamma);
  const ThetaNome q_dual = ThetaNome::from_inverse_gamma(gamma);
  ModularCheck out;
  out.lhs = theta_eval(ThetaKind::Theta3, z, q);
  const cdouble w = cdouble(0.0, -1.0) * z / gamma;
  out.rhs = std::exp(-z * z / (kPi * gamma)) * theta_eval(ThetaKind::Theta3, w, q_dual) /
            std::sqrt(gamma);
  out.abs_diff = std::abs(out.lhs - out.rhs);
  const double scale = std::abs(out.lhs);
  out.rel_diff = scale > 0.0 ? out.abs_diff / scale : out.abs_diff;
  return out;
}

ModularCheck theta3_modular_at(double t, double gamma) {
  const ThetaNome q = ThetaNome::from_gamma(gamma);
  const ThetaNome q_dual = ThetaNome::from_inverse_gamma(gamma);
  const double s = 0.5 - t;
  ModularCheck out;
  out.lhs = theta_eval(ThetaKind::Theta3, cdouble(0.0, kPi * s * gamma), q);
  out.rhs = std::exp(kPi * gamma * s * s) *
            theta_eval_real(ThetaKind::Theta3, kPi * s, q_dual) / std::sqrt(gamma);
  out.abs_diff = std::abs(out.lhs - out.rhs);
  const double scale = std::abs(out.lhs);
  out.rel_diff = scale > 0.0 ? out.abs_diff / scale : out.abs_diff;
  return out;
}

cdouble theta_quasi_period_shift(ThetaKind kind, cdouble z, double gamma) {
  if (kind != ThetaKind::Theta3 && kind != ThetaKind::Theta4) {
    throw Error(ErrorCode::UnsupportedKind, "quasi-period shift is tabulated for theta3/theta4 only");
  }
  const ThetaNome nome = ThetaNome::from_gamma(gamma);
  const cdouble factor = std::exp(cdouble(kPi * gamma, 0.0) - cdouble(0.0, 2.0) * z);
  const cdouble base = theta_eval(kind, z, nome);
  return kind == ThetaKind::Theta3 ? factor * base : -factor * base;
}

}  // namespace gaborsech
