#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "gaborsech/windows.hpp"

namespace gaborsech {

/// Finite section of the Ron-Shen pre-Gramian M_g(t) = (g(t - n a - l))_{l,n}
/// for a lattice reduced to b = 1: rows |l| <= L_row, columns |n| <= N_col.
/// Row l is stored at index l + L_row, column n at n + N_col.
struct RonShenMatrix {
  double t = 0.0;
  int L_row = 0;
  int N_col = 0;
  Rational a{1};
  Eigen::MatrixXd entries;
};

/// Builds the section and checks that the retained rows are complete:
/// the norm of each edge column (n = +-N_col) must stay below 1e-12 times
/// the largest column norm, otherwise TruncationTooSmall. Needs
/// N_col * a >~ L_row + window width. Throws NotReduced if b != 1.
RonShenMatrix build_ronshen(const WindowSpec& w, const LatticeParams& lat, double t, int L_row,
                            int N_col);

/// Extreme eigenvalues of M M^T, i.e. squared extreme singular values of M.
/// sigma_min_sq is 0 when M has more rows than columns.
struct SingularExtremes {
  double sigma_min_sq = 0.0;
  double sigma_max_sq = 0.0;
};

/// Dense SVD (Eigen::BDCSVD); relative accuracy ~1e-13 in sigma_max_sq and
/// absolute accuracy ~1e-15 * sigma_max_sq in sigma_min_sq for sections up
/// to a few hundred rows.
SingularExtremes singular_extremes(const Eigen::MatrixXd& m);
SingularExtremes singular_extremes(const RonShenMatrix& m);

/// Fiber of M_g(t) M_g(t)^* for a = p/q, b = 1. The operator commutes with
/// the row shift l -> l + p, so its spectrum is the union over nu in [0,1)
/// of the squared singular values of the p x q matrix
///   F(t,nu)_{r,n} = sum_{|j| <= images} g(t - r - n a - j p) e^(2 pi i j nu),
/// 0 <= r < p, 0 <= n < q. Its singular values are 1/q-periodic in t.
Eigen::MatrixXcd fiber_matrix(const WindowSpec& w, const Rational& a, double t, double nu,
                              int images);

/// Smallest image count whose neglected entries are below 1e-18 * g(0).
int default_row_images(const WindowSpec& w, const Rational& a);

SingularExtremes fiber_extremes(const Eigen::MatrixXcd& fiber);

struct FrameBoundsOptions {
  int t_grid = 64;          // points per t-period [0, 1/q), half-offset
  int nu_grid = 64;         // points k/nu_grid, includes nu = 0 and 1/2
  int row_images = 0;       // 0 selects default_row_images
  bool check_convergence = true;
  bool analytic_bound = true;  // fill A_analytic for secant windows with ab < 1
};

/// Frame-bound estimate for (g, a, b). A_est is a grid minimum over
/// (t, nu) and therefore an upper estimate of the true lower bound;
/// B_est is a grid maximum and a lower estimate of the true upper bound.
struct FrameBoundsReport {
  WindowSpec window;
  LatticeParams lattice;
  WindowSpec reduced_window;
  Rational reduced_a{1};
  double A_est = 0.0;
  double B_est = 0.0;
  double t_at_min = 0.0;
  double nu_at_min = 0.0;
  int t_grid_size = 0;
  int nu_grid_size = 0;
  int row_images = 0;
  int fiber_rows = 0;
  int fiber_cols = 0;
  std::optional<double> A_analytic;
  bool converged = false;
  bool numerically_singular = false;
  std::string note;
};

/// Reduces to b = 1 and scans the fibers. Requires ab <= 1 (DomainError).
FrameBoundsReport frame_bounds_estimate(const WindowSpec& w, const LatticeParams& lat,
                                        const FrameBoundsOptions& opts = {});

/// Same scan for an already reduced lattice; NotReduced if b != 1.
FrameBoundsReport frame_bounds_estimate_reduced(const WindowSpec& w, const LatticeParams& lat,
                                                const FrameBoundsOptions& opts = {});

/// m_delta = min_z 1/theta4(z; e^(-pi delta))^2 = 1/theta3(0; e^(-pi delta))^2.
double m_delta(double delta);

/// m_gamma m_{1/gamma} E(gamma)^2 A_{1,gamma} for the secant system after
/// reduction to b = 1, where A_{1,gamma} is the Gaussian estimate on the
/// same reduced lattice. Requires ab < 1 exactly.
double analytic_lower_bound(double gamma, const LatticeParams& lat,
                            const FrameBoundsOptions& opts = {});

}  // namespace gaborsech
