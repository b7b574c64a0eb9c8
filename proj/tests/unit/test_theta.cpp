#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gaborsech/errors.hpp"
#include "gaborsech/theta.hpp"
#include "../oracles.hpp"

using namespace gaborsech;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cdouble x, cdouble y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

}  // namespace

TEST_SUITE("theta") {
  TEST_CASE("series matches brute-force sums in the strip") {
    std::mt19937 rng(20240601);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
      const double gamma = 0.25 + 3.75 * unit(rng);
      const ThetaNome nome = ThetaNome::from_gamma(gamma);
      const double y_max = std::min(2.0 * -nome.log_q(), 6.0);
      const cdouble z(kPi * (2.0 * unit(rng) - 1.0), y_max * (2.0 * unit(rng) - 1.0));
      for (int k = 1; k <= 4; ++k) {
        const cdouble got = theta_eval(static_cast<ThetaKind>(k - 1), z, nome);
        const cdouble want = oracle::theta(k, z, nome.q());
        CHECK(rel(got, want) < 1e-13);
      }
    }
  }

  TEST_CASE("reference values") {
    const ThetaNome e_pi = ThetaNome::from_gamma(1.0);
    CHECK(theta1_prime0(e_pi) == doctest::Approx(0.90676765516773122).epsilon(1e-15));
    const ThetaNome half(0.5);
    CHECK(theta_eval_real(ThetaKind::Theta4, 0.0, half) ==
          doctest::Approx(0.121124208002580502).epsilon(1e-14));
  }

  TEST_CASE("transformed real path keeps relative accuracy near q = 1") {
    // mpmath, 30 digits
    const ThetaNome q8(0.8);
    CHECK(theta_eval_real(ThetaKind::Theta1, 0.7, q8) == doctest::Approx(0.125447957242064460).epsilon(1e-14));
    CHECK(theta_eval_real(ThetaKind::Theta2, 0.7, q8) == doctest::Approx(0.417462348745670773).epsilon(1e-14));
    CHECK(theta_eval_real(ThetaKind::Theta3, 0.7, q8) == doctest::Approx(0.417462348764418617).epsilon(1e-14));
    CHECK(theta_eval_real(ThetaKind::Theta4, 0.7, q8) == doctest::Approx(0.125447957932960168).epsilon(1e-14));
    CHECK(theta1_prime0(q8) == doctest::Approx(0.00166603464558768596).epsilon(1e-14));
    const ThetaNome q99(0.99);
    CHECK(theta_eval_real(ThetaKind::Theta4, 0.0, q99) > 0.0);
    CHECK(theta1_prime0(q99) > 0.0);
  }

  TEST_CASE("real fast path equals complex path") {
    const ThetaNome nome(0.3);
    const ThetaNome near_one(0.6);
    for (int k = 0; k < 4; ++k) {
      for (double x = -3.0; x <= 3.0; x += 0.37) {
        const auto kind = static_cast<ThetaKind>(k);
        CHECK(std::abs(theta_eval_real(kind, x, nome) - theta_eval(kind, x, nome).real()) < 1e-15);
        CHECK(std::abs(theta_eval_real(kind, x, near_one) - theta_eval(kind, x, near_one).real()) < 1e-14);
      }
    }
  }

  TEST_CASE("triple product for theta1 prime on twenty nomes") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.01, 0.95);
    for (int trial = 0; trial < 20; ++trial) {
      const ThetaNome nome(unit(rng));
      const double lhs = theta1_prime0(nome);
      const double rhs = theta_eval_real(ThetaKind::Theta2, 0.0, nome) *
                         theta_eval_real(ThetaKind::Theta3, 0.0, nome) *
                         theta_eval_real(ThetaKind::Theta4, 0.0, nome);
      CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);
      if (nome.q() < 0.5) CHECK(std::abs(lhs - oracle::theta1_prime0(nome.q())) / std::abs(rhs) < 1e-13);
    }
  }

  TEST_CASE("half-period shift takes theta4 to theta3") {
    const ThetaNome nome = ThetaNome::from_gamma(0.7);
    for (double x = -4.0; x <= 4.0; x += 0.05) {
      CHECK(std::abs(theta_eval_real(ThetaKind::Theta3, x, nome) -
                     theta_eval_real(ThetaKind::Theta4, x + kPi / 2, nome)) < 1e-13);
    }
  }

  TEST_CASE("theta4 is positive, even and pi-periodic on the real line") {
    for (double q : {0.01, 0.3, 0.7, 0.95, 0.995}) {
      const ThetaNome nome(q);
      for (double x = -5.0; x <= 5.0; x += 0.013) {
        const double v = theta_eval_real(ThetaKind::Theta4, x, nome);
        CHECK(v > 0.0);
        CHECK(std::abs(v - theta_eval_real(ThetaKind::Theta4, -x, nome)) < 1e-14 * std::max(1.0, v));
        CHECK(std::abs(v - theta_eval_real(ThetaKind::Theta4, x + kPi, nome)) <
              1e-13 * std::max(1.0, v));
      }
    }
  }

  TEST_CASE("doubling the truncation order leaves values unchanged") {
    const ThetaNome nome = ThetaNome::from_gamma(0.25);
    const ThetaNome wide = nome.with_order(2 * nome.order_for(0.5));
    for (double x = -1.0; x <= 1.0; x += 0.1) {
      const cdouble z(x, 0.5);
      for (int k = 0; k < 4; ++k) {
        const auto kind = static_cast<ThetaKind>(k);
        CHECK(rel(theta_eval(kind, z, nome), theta_eval(kind, z, wide)) < 1e-15);
      }
    }
  }

  TEST_CASE("modular transformation of theta3") {
    for (double gamma : {0.5, 1.0, 2.0}) {
      for (double t : {0.0, 0.3, 0.49}) {
        const ModularCheck m = theta3_modular_at(t, gamma);
        CHECK(m.rel_diff < 1e-11);
      }
      const ModularCheck general = theta3_modular(cdouble(0.4, 0.3), gamma);
      CHECK(general.rel_diff < 1e-12);
    }
  }

  TEST_CASE("derivative of theta4 at the half quasi-period") {
    for (double gamma : {0.5, 1.0, 2.0}) {
      const double q = std::exp(-kPi * gamma);
      const cdouble lhs = oracle::theta4_prime(cdouble(0.0, 0.5 * kPi * gamma), q);
      const cdouble rhs =
          cdouble(0.0, 1.0) * std::exp(0.25 * kPi * gamma) * theta1_prime0(ThetaNome::from_gamma(gamma));
      CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-13);
    }
  }

  TEST_CASE("quasi-period table") {
    const double gamma = 0.8;
    const ThetaNome nome = ThetaNome::from_gamma(gamma);
    const cdouble z(0.3, -0.2);
    const cdouble shifted = z + cdouble(0.0, kPi * gamma);
    for (auto kind : {ThetaKind::Theta3, ThetaKind::Theta4}) {
      const cdouble direct = oracle::theta(kind == ThetaKind::Theta3 ? 3 : 4, shifted, nome.q());
      CHECK(rel(theta_quasi_period_shift(kind, z, gamma), direct) < 1e-13);
    }
    CHECK_THROWS_AS(theta_quasi_period_shift(ThetaKind::Theta1, z, gamma), Error);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(ThetaNome(0.0), Error);
    CHECK_THROWS_AS(ThetaNome(1.0), Error);
    CHECK_THROWS_AS(ThetaNome(-0.2), Error);
    const ThetaNome nome(0.5);
    try {
      theta_eval(ThetaKind::Theta3, cdouble(0.0, 10.0), nome);
      FAIL("expected ArgumentOutOfStrip");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ArgumentOutOfStrip);
    }
  }
}
