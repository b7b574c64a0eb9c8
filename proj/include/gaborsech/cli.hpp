#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaborsech/critical.hpp"
#include "gaborsech/theta.hpp"
#include "gaborsech/windows.hpp"
#include "gaborsech/zak.hpp"

namespace gaborsech::cli {

enum class Subcommand { Theta, Zak, VerifyIdentity, FrameBounds, Dual, Tight, Limits };
enum class OutputFormat { Json, Csv };

const char* to_string(Subcommand s) noexcept;

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Bad command line; the message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  int exit_code() const noexcept { return kExitUsage; }
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Theta;
  WindowKind window = WindowKind::HyperbolicSecant;
  double gamma = 1.0;
  Rational a{1, 2};
  Rational b{1, 2};
  int grid_t = 64;
  int grid_nu = 64;
  bool half_offset = false;
  int trunc = 0;  // 0: module default
  int quad = kDefaultQuadrature;
  double eps_half = kDefaultEpsHalf;
  double tol = 1e-9;
  std::string out;  // empty: artifact on stdout
  OutputFormat format = OutputFormat::Json;
  bool json_errors = false;

  // theta
  ThetaKind theta_kind = ThetaKind::Theta3;
  std::optional<double> q;  // overrides exp(-pi gamma)
  double z_re = 0.0;
  double z_im = 0.0;

  // zak, dual, tight
  ZakMethod method = ZakMethod::Direct;

  // dual, tight, limits
  std::optional<double> t;
  double t_min = -3.0;
  double t_max = 3.0;
  int points = 200;
  std::vector<double> gammas{1.0, 0.5, 0.25, 2.0, 4.0};

  /// Set when --help was requested; run() prints it and exits 0.
  std::optional<std::string> help_text;
};

/// Parses argv without the program name. Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes the configured computation. The artifact goes to `out` (or
/// to the --out file, in which case the one-line summary goes to `out`);
/// the summary and diagnostics go to `err`. Returns 0, 1 or 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run, mapping UsageError to exit 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaborsech::cli
