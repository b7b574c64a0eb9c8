#include "gaborsech/windows.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <sstream>

#include "gaborsech/errors.hpp"

namespace gaborsech {

namespace {

constexpr double kPi = std::numbers::pi;
// Beyond this |pi gamma t| the secant is below 2 e^-350 and returned as 0.
constexpr double kSechCutoff = 350.0;

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    std::ostringstream os;
    os << "window scale gamma = " << gamma << " must be positive and finite";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

__extension__ using i128 = __int128;

Rational from_wide(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr auto lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) {
    throw Error(ErrorCode::InvalidArgument, "rational arithmetic overflow");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

const char* to_string(WindowKind kind) noexcept {
  return kind == WindowKind::Gaussian ? "gaussian" : "sech";
}

WindowSpec WindowSpec::gaussian(double gamma) { return make(WindowKind::Gaussian, gamma); }

WindowSpec WindowSpec::hyperbolic_secant(double gamma) {
  return make(WindowKind::HyperbolicSecant, gamma);
}

WindowSpec WindowSpec::make(WindowKind kind, double gamma) {
  check_gamma(gamma);
  return WindowSpec{kind, gamma};
}

double window_peak(const WindowSpec& w) {
  return w.kind == WindowKind::Gaussian ? std::pow(2.0 * w.gamma, 0.25)
                                        : std::sqrt(kPi * w.gamma / 2.0);
}

double eval_window(const WindowSpec& w, double t) {
  if (w.kind == WindowKind::Gaussian) {
    return window_peak(w) * std::exp(-kPi * w.gamma * t * t);
  }
  const double x = std::abs(kPi * w.gamma * t);
  if (x > kSechCutoff) return 0.0;
  // 1/cosh x = 2 e^-x / (1 + e^-2x)
  const double e = std::exp(-x);
  return window_peak(w) * 2.0 * e / (1.0 + e * e);
}

WindowSpec dilate(const WindowSpec& w, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    std::ostringstream os;
    os << "dilation factor c = " << c << " must be positive";
    throw Error(ErrorCode::NonpositiveDilation, os.str());
  }
  const double gamma = w.kind == WindowKind::Gaussian ? w.gamma * c * c : w.gamma * c;
  return WindowSpec::make(w.kind, gamma);
}

double decay_radius(const WindowSpec& w, double rel) {
  if (!(rel > 0.0 && rel < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "decay level must lie in (0,1)");
  }
  if (w.kind == WindowKind::Gaussian) {
    return std::sqrt(-std::log(rel) / (kPi * w.gamma));
  }
  return std::acosh(1.0 / rel) / (kPi * w.gamma);
}

double zak_tail_bound(const WindowSpec& w, int l_max) {
  const double c = window_peak(w);
  const double pg = kPi * w.gamma;
  const double h = l_max + 0.5;
  if (w.kind == WindowKind::Gaussian) {
    return 2.0 * c * std::exp(-pg * h * h) / (1.0 - std::exp(-2.0 * pg * (l_max + 1.0)));
  }
  // 1/cosh x <= 2 e^-|x|
  return 4.0 * c * std::exp(-pg * h) / (1.0 - std::exp(-pg));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    if (!part.empty() && part.front() == '+') part.remove_prefix(1);
    const auto* end = part.data() + part.size();
    const auto res = std::from_chars(part.data(), end, v);
    if (part.empty() || res.ec != std::errc() || res.ptr != end) {
      throw Error(ErrorCode::InvalidArgument,
                  "cannot parse rational '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational '" + std::string(text) + "' has zero denominator");
  }
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return from_wide(static_cast<i128>(x.num_) * y.num_, static_cast<i128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  return from_wide(static_cast<i128>(x.num_) * y.den_, static_cast<i128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const i128 lhs = static_cast<i128>(x.num_) * y.den_;
  const i128 rhs = static_cast<i128>(y.num_) * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LatticeParams LatticeParams::make(Rational a, Rational b) {
  if (!a.is_positive() || !b.is_positive()) {
    throw Error(ErrorCode::InvalidArgument,
                "lattice constants must be positive (a = " + a.str() + ", b = " + b.str() + ")");
  }
  return LatticeParams{a, b};
}

ReducedSystem reduce_lattice(const WindowSpec& w, const LatticeParams& lat) {
  if (lat.is_reduced()) return {w, lat};
  return {dilate(w, 1.0 / lat.b.value()), LatticeParams::make(lat.a * lat.b, Rational(1))};
}

}  // namespace gaborsech
