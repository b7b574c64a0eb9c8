#include "gaborsech/framebounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "gaborsech/errors.hpp"
#include "gaborsech/factorization.hpp"
#include "gaborsech/parallel.hpp"
#include "gaborsech/theta.hpp"

namespace gaborsech {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdgeDecay = 1e-12;
constexpr double kImageDecay = 1e-18;
constexpr double kSingularFloor = 1e-14;
constexpr double kConvergenceTol = 1e-6;

void require_reduced(const LatticeParams& lat) {
  if (!lat.is_reduced()) {
    throw Error(ErrorCode::NotReduced,
                "lattice b = " + lat.b.str() + " must be reduced to b = 1 first");
  }
}

/// Window samples g(t - r - n a - j p) for one t, laid out [j][r][n].
struct FiberSamples {
  int p = 0;
  int q = 0;
  int images = 0;
  std::vector<double> g;

  FiberSamples(const WindowSpec& w, const Rational& a, double t, int images_)
      : p(static_cast<int>(a.num())), q(static_cast<int>(a.den())), images(images_) {
    const double av = a.value();
    g.resize(static_cast<std::size_t>(2 * images + 1) * p * q);
    std::size_t idx = 0;
    for (int j = -images; j <= images; ++j) {
      for (int r = 0; r < p; ++r) {
        for (int n = 0; n < q; ++n) {
          g[idx++] = eval_window(w, t - r - n * av - static_cast<double>(j) * p);
        }
      }
    }
  }

  Eigen::MatrixXcd assemble(double nu) const {
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(p, q);
    std::size_t idx = 0;
    const double nu_r = nu - std::floor(nu);
    for (int j = -images; j <= images; ++j) {
      const double cyc = j * nu_r;
      const std::complex<double> phase = std::polar(1.0, 2.0 * kPi * (cyc - std::floor(cyc)));
      for (int r = 0; r < p; ++r) {
        for (int n = 0; n < q; ++n) f(r, n) += g[idx++] * phase;
      }
    }
    return f;
  }
};

struct PerT {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  double nu_lo = 0.0;
};

PerT scan_nu(const WindowSpec& w, const Rational& a, double t, int nu_grid, int images) {
  const FiberSamples samples(w, a, t, images);
  PerT out;
  for (int k = 0; k < nu_grid; ++k) {
    const double nu = static_cast<double>(k) / nu_grid;
    const SingularExtremes e = fiber_extremes(samples.assemble(nu));
    if (e.sigma_min_sq < out.lo) {
      out.lo = e.sigma_min_sq;
      out.nu_lo = nu;
    }
    out.hi = std::max(out.hi, e.sigma_max_sq);
  }
  return out;
}

struct ScanResult {
  double A = 0.0;
  double B = 0.0;
  double t_min = 0.0;
  double nu_min = 0.0;
};

ScanResult scan(const WindowSpec& w, const Rational& a, const FrameBoundsOptions& opts,
                int images) {
  const int q = static_cast<int>(a.den());
  std::vector<PerT> rows(static_cast<std::size_t>(opts.t_grid));
  parallel_for(rows.size(), [&](std::size_t i) {
    const double t = (static_cast<double>(i) + 0.5) / (static_cast<double>(opts.t_grid) * q);
    rows[i] = scan_nu(w, a, t, opts.nu_grid, images);
  });
  ScanResult res;
  res.A = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].lo < res.A) {
      res.A = rows[i].lo;
      res.t_min = (static_cast<double>(i) + 0.5) / (static_cast<double>(opts.t_grid) * q);
      res.nu_min = rows[i].nu_lo;
    }
    res.B = std::max(res.B, rows[i].hi);
  }
  return res;
}

}  // namespace

RonShenMatrix build_ronshen(const WindowSpec& w, const LatticeParams& lat, double t, int L_row,
                            int N_col) {
  require_reduced(lat);
  if (L_row < 4 || N_col < 4) {
    throw Error(ErrorCode::InvalidArgument, "Ron-Shen truncations must be >= 4");
  }
  RonShenMatrix m;
  m.t = t;
  m.L_row = L_row;
  m.N_col = N_col;
  m.a = lat.a;
  m.entries.resize(2 * L_row + 1, 2 * N_col + 1);
  const double av = lat.a.value();
  for (int l = -L_row; l <= L_row; ++l) {
    for (int n = -N_col; n <= N_col; ++n) {
      m.entries(l + L_row, n + N_col) = eval_window(w, t - n * av - l);
    }
  }
  const Eigen::VectorXd col_norms = m.entries.colwise().norm();
  const double edge = std::max(col_norms(0), col_norms(col_norms.size() - 1));
  if (edge > kEdgeDecay * col_norms.maxCoeff()) {
    std::ostringstream os;
    os << "edge column norm " << edge << " exceeds " << kEdgeDecay
       << " x max column norm; raise N_col (need N_col*a beyond L_row + window width)";
    throw Error(ErrorCode::TruncationTooSmall, os.str());
  }
  return m;
}

SingularExtremes singular_extremes(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorCode::InvalidArgument, "empty matrix");
  }
  if (!m.allFinite()) throw Error(ErrorCode::NumericalFailure, "matrix has non-finite entries");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "singular value decomposition did not converge");
  }
  const Eigen::VectorXd& s = svd.singularValues();
  SingularExtremes out;
  out.sigma_max_sq = s(0) * s(0);
  out.sigma_min_sq = m.rows() > m.cols() ? 0.0 : s(s.size() - 1) * s(s.size() - 1);
  return out;
}

SingularExtremes singular_extremes(const RonShenMatrix& m) { return singular_extremes(m.entries); }

Eigen::MatrixXcd fiber_matrix(const WindowSpec& w, const Rational& a, double t, double nu,
                              int images) {
  if (!a.is_positive()) throw Error(ErrorCode::InvalidArgument, "a must be positive");
  if (images < 1) throw Error(ErrorCode::InvalidArgument, "row images must be >= 1");
  return FiberSamples(w, a, t, images).assemble(nu);
}

int default_row_images(const WindowSpec& w, const Rational& a) {
  const double p = static_cast<double>(a.num());
  // arguments t - r - n a lie in (-2p, 1) for t in [0, 1/q)
  return static_cast<int>(std::ceil((decay_radius(w, kImageDecay) + 2.0 * p) / p)) + 1;
}

SingularExtremes fiber_extremes(const Eigen::MatrixXcd& f) {
  if (f.rows() == 0 || f.cols() == 0) throw Error(ErrorCode::InvalidArgument, "empty fiber");
  SingularExtremes out;
  if (f.rows() == 1) {
    out.sigma_min_sq = out.sigma_max_sq = f.squaredNorm();
    return out;
  }
  const Eigen::MatrixXcd gram = f * f.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "fiber eigenvalue iteration did not converge");
  }
  const Eigen::VectorXd& ev = eig.eigenvalues();
  out.sigma_min_sq = std::max(0.0, ev(0));
  out.sigma_max_sq = ev(ev.size() - 1);
  if (f.rows() > f.cols()) out.sigma_min_sq = 0.0;
  return out;
}

FrameBoundsReport frame_bounds_estimate_reduced(const WindowSpec& w, const LatticeParams& lat,
                                                const FrameBoundsOptions& opts) {
  require_reduced(lat);
  if (opts.t_grid < 1 || opts.nu_grid < 2) {
    throw Error(ErrorCode::InvalidArgument, "frame-bound grids need t_grid >= 1, nu_grid >= 2");
  }
  if (lat.a > Rational(1)) {
    throw Error(ErrorCode::DomainError, "a*b = " + lat.a.str() + " > 1 cannot give a frame");
  }
  const int images = opts.row_images > 0 ? opts.row_images : default_row_images(w, lat.a);

  FrameBoundsReport rep;
  rep.window = w;
  rep.lattice = lat;
  rep.reduced_window = w;
  rep.reduced_a = lat.a;
  rep.t_grid_size = opts.t_grid;
  rep.nu_grid_size = opts.nu_grid;
  rep.row_images = images;
  rep.fiber_rows = static_cast<int>(lat.a.num());
  rep.fiber_cols = static_cast<int>(lat.a.den());

  const ScanResult base = scan(w, lat.a, opts, images);
  rep.A_est = base.A;
  rep.B_est = base.B;
  rep.t_at_min = base.t_min;
  rep.nu_at_min = base.nu_min;

  if (opts.check_convergence) {
    const ScanResult doubled = scan(w, lat.a, opts, 2 * images);
    const double a_scale = std::max(std::abs(base.A), kSingularFloor * base.B);
    rep.converged = std::abs(doubled.A - base.A) <= kConvergenceTol * a_scale &&
                    std::abs(doubled.B - base.B) <= kConvergenceTol * base.B;
  }
  if (rep.A_est < kSingularFloor) {
    rep.A_est = 0.0;
    rep.numerically_singular = true;
  }
  if (lat.a == Rational(1)) {
    rep.note = "not a frame at critical density (a*b = 1); A_est is a grid minimum that tends to 0";
  }
  return rep;
}

FrameBoundsReport frame_bounds_estimate(const WindowSpec& w, const LatticeParams& lat,
                                        const FrameBoundsOptions& opts) {
  if (lat.density() > Rational(1)) {
    throw Error(ErrorCode::DomainError,
                "a*b = " + lat.density().str() + " > 1 cannot give a frame");
  }
  const ReducedSystem red = reduce_lattice(w, lat);
  FrameBoundsReport rep = frame_bounds_estimate_reduced(red.window, red.lattice, opts);
  rep.window = w;
  rep.lattice = lat;
  rep.reduced_window = red.window;
  if (opts.analytic_bound && w.kind == WindowKind::HyperbolicSecant &&
      lat.density() < Rational(1)) {
    FrameBoundsOptions inner = opts;
    inner.analytic_bound = false;
    rep.A_analytic = analytic_lower_bound(w.gamma, lat, inner);
  }
  return rep;
}

double m_delta(double delta) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidArgument, "m_delta needs delta > 0");
  const double peak = theta_eval_real(ThetaKind::Theta3, 0.0, ThetaNome::from_gamma(delta));
  return 1.0 / (peak * peak);
}

double analytic_lower_bound(double gamma, const LatticeParams& lat,
                            const FrameBoundsOptions& opts) {
  if (!(lat.density() < Rational(1))) {
    throw Error(ErrorCode::DomainError,
                "analytic lower bound needs a*b < 1, got " + lat.density().str());
  }
  const ReducedSystem red = reduce_lattice(WindowSpec::hyperbolic_secant(gamma), lat);
  const double g = red.window.gamma;
  FrameBoundsOptions inner = opts;
  inner.analytic_bound = false;
  const FrameBoundsReport gauss =
      frame_bounds_estimate_reduced(WindowSpec::gaussian(g), red.lattice, inner);
  const double E = constant_E(g);
  return m_delta(g) * m_delta(1.0 / g) * E * E * gauss.A_est;
}

}  // namespace gaborsech
