#include <doctest.h>

#include <cmath>

#include "gaborsech/errors.hpp"
#include "gaborsech/windows.hpp"
#include "../oracles.hpp"

using namespace gaborsech;

TEST_SUITE("windows") {
  TEST_CASE("windows have unit norm") {
    for (double gamma : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      for (auto w : {WindowSpec::gaussian(gamma), WindowSpec::hyperbolic_secant(gamma)}) {
        const double r = 40.0 / gamma;
        const double norm2 = oracle::simpson(
            [&](double t) { return eval_window(w, t) * eval_window(w, t); }, -r, r, 40000);
        CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("pointwise values against the defining formulas") {
    for (double t : {-3.0, -0.7, 0.0, 0.2, 1.5, 9.0}) {
      CHECK(eval_window(WindowSpec::gaussian(1.3), t) ==
            doctest::Approx(static_cast<double>(oracle::gaussian(1.3L, t))).epsilon(1e-14));
      CHECK(eval_window(WindowSpec::hyperbolic_secant(0.6), t) ==
            doctest::Approx(static_cast<double>(oracle::sech_window(0.6L, t))).epsilon(1e-14));
    }
    CHECK(window_peak(WindowSpec::hyperbolic_secant(2.0)) == doctest::Approx(std::sqrt(M_PI)));
    CHECK(eval_window(WindowSpec::hyperbolic_secant(1.0), 500.0) >= 0.0);
  }

  TEST_CASE("dilation is pointwise c^(1/2) g(ct)") {
    for (double c : {0.5, 1.5, 3.0}) {
      for (auto w : {WindowSpec::gaussian(0.8), WindowSpec::hyperbolic_secant(0.8)}) {
        const WindowSpec d = dilate(w, c);
        CHECK(d.kind == w.kind);
        for (double t = -2.0; t <= 2.0; t += 0.25) {
          CHECK(eval_window(d, t) == doctest::Approx(std::sqrt(c) * eval_window(w, c * t)).epsilon(1e-13));
        }
      }
    }
    CHECK_THROWS_AS(dilate(WindowSpec::gaussian(1.0), 0.0), Error);
    CHECK_THROWS_AS(dilate(WindowSpec::gaussian(1.0), -2.0), Error);
  }

  TEST_CASE("decay radius and tail bound are upper bounds") {
    for (auto w : {WindowSpec::gaussian(0.25), WindowSpec::hyperbolic_secant(0.25),
                   WindowSpec::gaussian(2.0), WindowSpec::hyperbolic_secant(2.0)}) {
      const double r = decay_radius(w, 1e-12);
      for (double t = r; t < r + 5.0; t += 0.1) {
        CHECK(eval_window(w, t) <= 1e-12 * window_peak(w) * (1 + 1e-12));
      }
      for (int l_max : {5, 10, 30}) {
        double worst = 0.0;
        for (double s = -0.5; s <= 0.5; s += 0.05) {
          double tail = 0.0;
          for (int k = l_max + 1; k < l_max + 4000; ++k) {
            tail += eval_window(w, s - k) + eval_window(w, s + k);
          }
          worst = std::max(worst, tail);
        }
        CHECK(worst <= zak_tail_bound(w, l_max) * (1 + 1e-12));
      }
    }
  }

  TEST_CASE("invalid gamma") {
    CHECK_THROWS_AS(WindowSpec::gaussian(0.0), Error);
    CHECK_THROWS_AS(WindowSpec::hyperbolic_secant(-1.0), Error);
    CHECK_THROWS_AS(WindowSpec::hyperbolic_secant(std::nan("")), Error);
  }

  TEST_CASE("rationals") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK((Rational(2, 3) / Rational(4, 3)) == Rational(1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(1, 3).value() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
    CHECK_THROWS_AS(LatticeParams::make(Rational(0), Rational(1)), Error);
  }

  TEST_CASE("lattice reduction to b = 1") {
    const auto lat = LatticeParams::make(Rational(2, 3), Rational(2, 3));
    const ReducedSystem sech = reduce_lattice(WindowSpec::hyperbolic_secant(1.0), lat);
    CHECK(sech.lattice.a == Rational(4, 9));
    CHECK(sech.lattice.b == Rational(1));
    CHECK(sech.window.gamma == doctest::Approx(1.5));
    const ReducedSystem gauss =
        reduce_lattice(WindowSpec::gaussian(1.0), LatticeParams::make(Rational(1, 2), Rational(1, 2)));
    CHECK(gauss.lattice.a == Rational(1, 4));
    CHECK(gauss.window.gamma == doctest::Approx(4.0));
    CHECK(LatticeParams::make(Rational(3, 4), Rational(1)).is_reduced());
  }
}
