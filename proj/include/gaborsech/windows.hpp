#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gaborsech {

enum class WindowKind { Gaussian, HyperbolicSecant };

const char* to_string(WindowKind kind) noexcept;

/// Unit-norm analytic window.
///   Gaussian:          (2 gamma)^(1/4) exp(-pi gamma t^2)
///   HyperbolicSecant:  (pi gamma / 2)^(1/2) / cosh(pi gamma t)
struct WindowSpec {
  WindowKind kind = WindowKind::HyperbolicSecant;
  double gamma = 1.0;

  /// Validating constructors; gamma must be positive and finite.
  static WindowSpec gaussian(double gamma);
  static WindowSpec hyperbolic_secant(double gamma);
  static WindowSpec make(WindowKind kind, double gamma);

  bool operator==(const WindowSpec&) const = default;
};

double eval_window(const WindowSpec& w, double t);

/// Peak value g(0).
double window_peak(const WindowSpec& w);

/// The window family is closed under (D_c f)(t) = c^(1/2) f(ct):
/// Gaussian(gamma) -> Gaussian(gamma c^2), HyperbolicSecant(gamma) -> HyperbolicSecant(gamma c).
WindowSpec dilate(const WindowSpec& w, double c);

/// Smallest r >= 0 with g(t) <= rel * g(0) for all |t| >= r.
double decay_radius(const WindowSpec& w, double rel);

/// Upper bound for sum_{|k| > l_max} |g(s - k)| over |s| <= 1/2, i.e. the
/// tail of a Zak-type sum whose window of summation is centred on the
/// nearest integer to t.
double zak_tail_bound(const WindowSpec& w, int l_max);

/// Exact rational p/q with q > 0 and gcd(p, q) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "p/q" or "p" (optionally signed).
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  bool is_positive() const noexcept { return num_ > 0; }

  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend bool operator==(const Rational& x, const Rational& y) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Lattice constants of the Gabor system (g, a, b).
struct LatticeParams {
  Rational a{1};
  Rational b{1};

  /// Validating constructor: a, b > 0.
  static LatticeParams make(Rational a, Rational b);

  Rational density() const { return a * b; }
  bool is_reduced() const { return b == Rational(1); }
  bool operator==(const LatticeParams&) const = default;
};

struct ReducedSystem {
  WindowSpec window;
  LatticeParams lattice;
};

/// (g, a, b) -> (D_{1/b} g, a b, 1). Frame bounds are unchanged since D_c
/// is unitary and maps the system (g, a, b) onto (D_c g, a/c, b c).
ReducedSystem reduce_lattice(const WindowSpec& w, const LatticeParams& lat);

}  // namespace gaborsech
