#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "gaborsech/errors.hpp"
#include "gaborsech/framebounds.hpp"
#include "../oracles.hpp"

using namespace gaborsech;

namespace {

constexpr double kPi = std::numbers::pi;

// Fiber of (1/b) M M^* for a general lattice with a b = p/q, built without
// dilating the window: rows advance by 1/b, the pattern repeats after p rows
// and q columns.
Eigen::MatrixXcd general_fiber(const WindowSpec& w, double a, double b, int p, int q, double t,
                               double nu, int images) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(p, q);
  for (int j = -images; j <= images; ++j) {
    const std::complex<double> phase = std::polar(1.0, 2.0 * kPi * j * nu);
    for (int r = 0; r < p; ++r) {
      for (int n = 0; n < q; ++n) {
        f(r, n) += eval_window(w, t - r / b - n * a - j * p / b) * phase;
      }
    }
  }
  return f / std::sqrt(b);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
};

// Same sample points as the library scan, mapped back to the unreduced
// time axis t = t_reduced / b.
Range general_scan(const WindowSpec& w, Rational a, Rational b, int t_grid, int nu_grid) {
  const Rational ab = a * b;
  const int p = static_cast<int>(ab.num());
  const int q = static_cast<int>(ab.den());
  Range out;
  for (int i = 0; i < t_grid; ++i) {
    const double t_red = (i + 0.5) / (static_cast<double>(t_grid) * q);
    for (int k = 0; k < nu_grid; ++k) {
      const Eigen::MatrixXcd f =
          general_fiber(w, a.value(), b.value(), p, q, t_red / b.value(), static_cast<double>(k) / nu_grid, 60);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
      const auto& s = svd.singularValues();
      out.lo = std::min(out.lo, s(s.size() - 1) * s(s.size() - 1));
      out.hi = std::max(out.hi, s(0) * s(0));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("framebounds") {
  TEST_CASE("singular extremes against the eigenvalues of M M^T") {
    std::mt19937 rng(11);
    std::normal_distribution<double> normal;
    for (auto [rows, cols] : {std::pair{7, 12}, std::pair{12, 12}, std::pair{30, 45}}) {
      Eigen::MatrixXd m(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = normal(rng);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m * m.transpose());
      const SingularExtremes e = singular_extremes(m);
      CHECK(e.sigma_max_sq == doctest::Approx(eig.eigenvalues().maxCoeff()).epsilon(1e-12));
      CHECK(std::abs(e.sigma_min_sq - eig.eigenvalues().minCoeff()) < 1e-12 * e.sigma_max_sq);
    }
    const Eigen::MatrixXd tall = Eigen::MatrixXd::Ones(5, 3);
    CHECK(singular_extremes(tall).sigma_min_sq == 0.0);
    CHECK(singular_extremes(tall).sigma_max_sq == doctest::Approx(15.0));
  }

  TEST_CASE("finite sections are compressions of the fiber family") {
    const WindowSpec w = WindowSpec::hyperbolic_secant(2.0);
    const Rational a(1, 4);
    const LatticeParams lat = LatticeParams::make(a, Rational(1));
    for (double t : {0.03, 0.11, 0.2}) {
      double fib_lo = std::numeric_limits<double>::infinity();
      double fib_hi = 0.0;
      for (int k = 0; k < 2048; ++k) {
        const SingularExtremes e = fiber_extremes(fiber_matrix(w, a, t, k / 2048.0, 40));
        fib_lo = std::min(fib_lo, e.sigma_min_sq);
        fib_hi = std::max(fib_hi, e.sigma_max_sq);
      }
      const SingularExtremes sec = singular_extremes(build_ronshen(w, lat, t, 40, 220));
      CHECK(sec.sigma_min_sq >= fib_lo - 1e-9);
      CHECK(sec.sigma_max_sq <= fib_hi + 1e-9);
      CHECK(sec.sigma_max_sq >= fib_hi - 1e-2);
      CHECK(sec.sigma_min_sq <= fib_lo + 1e-2);
    }
  }

  TEST_CASE("reduction to b = 1 preserves the bounds") {
    FrameBoundsOptions opts;
    opts.t_grid = 6;
    opts.nu_grid = 6;
    opts.check_convergence = false;
    struct Case {
      WindowSpec w;
      Rational a, b;
    };
    for (const Case& c : {Case{WindowSpec::hyperbolic_secant(1.0), Rational(2, 3), Rational(2, 3)},
                          Case{WindowSpec::gaussian(1.0), Rational(1, 2), Rational(3, 4)},
                          Case{WindowSpec::hyperbolic_secant(0.7), Rational(3, 2), Rational(1, 2)}}) {
      const FrameBoundsReport r = frame_bounds_estimate(c.w, LatticeParams::make(c.a, c.b), opts);
      const Range oracle_range = general_scan(c.w, c.a, c.b, opts.t_grid, opts.nu_grid);
      CHECK(r.A_est == doctest::Approx(oracle_range.lo).epsilon(1e-10));
      CHECK(r.B_est == doctest::Approx(oracle_range.hi).epsilon(1e-10));
    }
  }

  TEST_CASE("reduced window parameters") {
    const FrameBoundsOptions opts{4, 4, 0, false, false};
    const FrameBoundsReport r = frame_bounds_estimate(
        WindowSpec::hyperbolic_secant(1.0), LatticeParams::make(Rational(2, 3), Rational(2, 3)), opts);
    CHECK(r.reduced_a == Rational(4, 9));
    CHECK(r.reduced_window.gamma == doctest::Approx(1.5));
    CHECK(r.fiber_rows == 4);
    CHECK(r.fiber_cols == 9);
  }

  TEST_CASE("m_delta against grid maximisation of theta4") {
    for (double delta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const double q = std::exp(-kPi * delta);
      const auto theta4 = [&](double z) { return oracle::theta(4, z, q, 40).real(); };
      int best = 0;
      double best_v = -1.0;
      const int n = 1000;
      for (int i = 0; i <= n; ++i) {
        const double v = theta4(kPi * i / n * 0.999);
        if (v > best_v) {
          best_v = v;
          best = i;
        }
      }
      const double lo = kPi * std::max(0, best - 1) / n * 0.999;
      const double hi = kPi * std::min(n, best + 1) / n * 0.999;
      const double peak = oracle::golden_max(theta4, lo, hi);
      CHECK(std::abs(m_delta(delta) - 1.0 / (peak * peak)) < 1e-10);
    }
  }

  TEST_CASE("sandwich and monotone trend for the secant at gamma = 1") {
    const double frozen[] = {3.6261482578817787, 1.7201365701183866, 1.1318853496043433};
    const Rational ab[] = {Rational(1, 2), Rational(2, 3), Rational(3, 4)};
    double previous = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
      const FrameBoundsReport r =
          frame_bounds_estimate(WindowSpec::hyperbolic_secant(1.0), LatticeParams::make(ab[i], ab[i]));
      CHECK(r.converged);
      CHECK(r.A_est > 0.0);
      CHECK(std::isfinite(r.B_est));
      REQUIRE(r.A_analytic.has_value());
      CHECK(*r.A_analytic > 0.0);
      CHECK(*r.A_analytic <= r.A_est + 1e-6);
      CHECK(r.A_est == doctest::Approx(frozen[i]).epsilon(1e-9));
      CHECK(r.A_est < previous);
      previous = r.A_est;
    }
  }

  TEST_CASE("near-critical lattice on a small grid") {
    const FrameBoundsOptions opts{16, 16, 0, true, true};
    const FrameBoundsReport r = frame_bounds_estimate(
        WindowSpec::hyperbolic_secant(1.0), LatticeParams::make(Rational(9, 10), Rational(9, 10)), opts);
    CHECK(r.fiber_rows == 81);
    CHECK(r.fiber_cols == 100);
    CHECK(r.A_est > 0.0);
    CHECK(r.A_est < 1.0);
    CHECK(*r.A_analytic <= r.A_est + 1e-6);
  }

  TEST_CASE("critical density degenerates") {
    for (auto w : {WindowSpec::gaussian(1.0), WindowSpec::hyperbolic_secant(1.0)}) {
      FrameBoundsOptions coarse;
      coarse.t_grid = 64;
      FrameBoundsOptions fine = coarse;
      fine.t_grid = 256;
      const auto lat = LatticeParams::make(Rational(1), Rational(1));
      const FrameBoundsReport rc = frame_bounds_estimate(w, lat, coarse);
      const FrameBoundsReport rf = frame_bounds_estimate(w, lat, fine);
      CHECK(rf.A_est < rc.A_est);
      CHECK(rf.A_est < 1e-2);
      CHECK_FALSE(rf.A_analytic.has_value());
      CHECK(rf.note.find("not a frame") != std::string::npos);
    }
  }

  TEST_CASE("errors") {
    const WindowSpec w = WindowSpec::hyperbolic_secant(1.0);
    CHECK_THROWS_AS(frame_bounds_estimate(w, LatticeParams::make(Rational(3, 2), Rational(1))), Error);
    CHECK_THROWS_AS(frame_bounds_estimate_reduced(w, LatticeParams::make(Rational(1, 2), Rational(1, 2))),
                    Error);
    CHECK_THROWS_AS(analytic_lower_bound(1.0, LatticeParams::make(Rational(1), Rational(1))), Error);
    const auto half = LatticeParams::make(Rational(1, 2), Rational(1));
    try {
      build_ronshen(w, half, 0.1, 20, 20);
      FAIL("expected TruncationTooSmall");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TruncationTooSmall);
    }
    CHECK_NOTHROW(build_ronshen(w, half, 0.1, 20, 60));
    CHECK_THROWS_AS(m_delta(0.0), Error);
  }
}
