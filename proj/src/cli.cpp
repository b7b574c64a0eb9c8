#include "gaborsech/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaborsech/errors.hpp"
#include "gaborsech/factorization.hpp"
#include "gaborsech/framebounds.hpp"
#include "gaborsech/serialize.hpp"

namespace gaborsech::cli {

using nlohmann::json;

const char* to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::Theta: return "theta";
    case Subcommand::Zak: return "zak";
    case Subcommand::VerifyIdentity: return "verify-identity";
    case Subcommand::FrameBounds: return "frame-bounds";
    case Subcommand::Dual: return "dual";
    case Subcommand::Tight: return "tight";
    case Subcommand::Limits: return "limits";
  }
  return "unknown";
}

namespace {

const std::map<std::string, Subcommand>& subcommand_table() {
  static const std::map<std::string, Subcommand> table{
      {"theta", Subcommand::Theta},
      {"zak", Subcommand::Zak},
      {"verify-identity", Subcommand::VerifyIdentity},
      {"frame-bounds", Subcommand::FrameBounds},
      {"dual", Subcommand::Dual},
      {"tight", Subcommand::Tight},
      {"limits", Subcommand::Limits},
  };
  return table;
}

const char* subcommand_description(Subcommand s) {
  switch (s) {
    case Subcommand::Theta: return "Evaluate a Jacobi theta function";
    case Subcommand::Zak: return "Sample the Zak transform of a window on the unit cell";
    case Subcommand::VerifyIdentity: return "Check the secant/Gaussian Zak factorization on a grid";
    case Subcommand::FrameBounds: return "Estimate Gabor frame bounds for a rational lattice";
    case Subcommand::Dual: return "Canonical dual window at critical density";
    case Subcommand::Tight: return "Canonical tight window at critical density";
    case Subcommand::Limits: return "Distances of tight windows to the sinc and Haar limits";
  }
  return "";
}

// Flags accepted by each subcommand in addition to --out, --format and
// --json-errors.
const std::set<std::string>& allowed_flags(Subcommand s) {
  static const std::map<Subcommand, std::set<std::string>> table{
      {Subcommand::Theta, {"--gamma", "--q", "--kind", "--z", "--z-im"}},
      {Subcommand::Zak,
       {"--window", "--gamma", "--grid", "--grid-t", "--grid-nu", "--half-offset", "--trunc",
        "--method"}},
      {Subcommand::VerifyIdentity,
       {"--gamma", "--grid", "--grid-t", "--grid-nu", "--half-offset", "--tol"}},
      {Subcommand::FrameBounds,
       {"--window", "--gamma", "--a", "--b", "--grid", "--grid-t", "--grid-nu", "--trunc"}},
      {Subcommand::Dual,
       {"--window", "--gamma", "--t", "--t-min", "--t-max", "--points", "--quad", "--eps-half",
        "--method"}},
      {Subcommand::Tight,
       {"--window", "--gamma", "--t", "--t-min", "--t-max", "--points", "--quad", "--eps-half",
        "--method"}},
      {Subcommand::Limits, {"--gammas", "--t-min", "--t-max", "--points", "--quad", "--eps-half"}},
  };
  return table.at(s);
}

Rational parse_positive_rational(const std::string& flag, const std::string& text) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
  }
  if (!r.is_positive()) throw UsageError(flag + " must be positive, got '" + text + "'");
  return r;
}

void require_positive(const std::string& flag, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw UsageError(flag + " must be positive and finite");
}

void require_at_least(const std::string& flag, int x, int lo) {
  if (x < lo) throw UsageError(flag + " must be at least " + std::to_string(lo));
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Gabor frames of Gaussian and hyperbolic secant windows", "gaborsech"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string window = "sech";
  std::string a_text = "1/2";
  std::string b_text = "1/2";
  std::string format = "json";
  std::string kind = "3";
  std::string method = "direct";
  int grid = 0;
  double q = 0.0;
  double t = 0.0;

  std::map<std::string, CLI::Option*> opts;
  auto reg = [&](CLI::Option* o, const std::string& name) { opts[name] = o; };

  reg(app.add_option("--window", window, "Window: sech or gaussian")
          ->check(CLI::IsMember({"sech", "gaussian"})),
      "--window");
  reg(app.add_option("--gamma", cfg.gamma, "Window parameter gamma > 0"), "--gamma");
  reg(app.add_option("--a", a_text, "Time shift a as p/q"), "--a");
  reg(app.add_option("--b", b_text, "Frequency shift b as p/q"), "--b");
  reg(app.add_option("--grid", grid, "Grid size in both directions"), "--grid");
  reg(app.add_option("--grid-t", cfg.grid_t, "Grid size in t"), "--grid-t");
  reg(app.add_option("--grid-nu", cfg.grid_nu, "Grid size in nu"), "--grid-nu");
  reg(app.add_flag("--half-offset", cfg.half_offset, "Shift grid samples by half a step"),
      "--half-offset");
  reg(app.add_option("--trunc", cfg.trunc, "Series truncation (Zak sums, fiber images)"),
      "--trunc");
  reg(app.add_option("--quad", cfg.quad, "Initial quadrature nodes"), "--quad");
  reg(app.add_option("--eps-half", cfg.eps_half, "Exclusion radius around half-integers"),
      "--eps-half");
  reg(app.add_option("--tol", cfg.tol, "Pass threshold for verify-identity"), "--tol");
  reg(app.add_option("--out", cfg.out, "Write the artifact to this path"), "--out");
  reg(app.add_option("--format", format, "Artifact format: json or csv")
          ->check(CLI::IsMember({"json", "csv"})),
      "--format");
  reg(app.add_flag("--json-errors", cfg.json_errors, "Report errors as JSON"), "--json-errors");
  reg(app.add_option("--kind", kind, "Theta kind 1..4")->check(CLI::IsMember({"1", "2", "3", "4"})),
      "--kind");
  reg(app.add_option("--q", q, "Nome q in (0,1); default exp(-pi gamma)"), "--q");
  reg(app.add_option("--z", cfg.z_re, "Real part of the theta argument"), "--z");
  reg(app.add_option("--z-im", cfg.z_im, "Imaginary part of the theta argument"), "--z-im");
  reg(app.add_option("--method", method, "Evaluator: direct or closed")
          ->check(CLI::IsMember({"direct", "closed"})),
      "--method");
  reg(app.add_option("--t", t, "Single evaluation point"), "--t");
  reg(app.add_option("--t-min", cfg.t_min, "Profile start"), "--t-min");
  reg(app.add_option("--t-max", cfg.t_max, "Profile end"), "--t-max");
  reg(app.add_option("--points", cfg.points, "Profile sample count"), "--points");
  reg(app.add_option("--gammas", cfg.gammas, "Comma separated gamma list")->delimiter(','),
      "--gammas");

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, s] : subcommand_table()) {
    subs[name] = app.add_subcommand(name, subcommand_description(s))->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) {
        cfg.help_text = sub->help();
        return cfg;
      }
    }
    cfg.help_text = app.help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    cfg.help_text = app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cfg.subcommand = subcommand_table().at(name);
  }

  const auto& allowed = allowed_flags(cfg.subcommand);
  for (const auto& [name, opt] : opts) {
    if (opt->count() == 0) continue;
    if (name == "--out" || name == "--format" || name == "--json-errors") continue;
    if (!allowed.count(name)) {
      throw UsageError(name + " is not accepted by '" + std::string(to_string(cfg.subcommand)) + "'");
    }
  }
  auto given = [&](const char* name) { return opts.at(name)->count() > 0; };

  cfg.window = window == "gaussian" ? WindowKind::Gaussian : WindowKind::HyperbolicSecant;
  cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  cfg.method = method == "closed" ? ZakMethod::Closed : ZakMethod::Direct;
  cfg.theta_kind = static_cast<ThetaKind>(std::stoi(kind) - 1);

  require_positive("--gamma", cfg.gamma);
  cfg.a = parse_positive_rational("--a", a_text);
  cfg.b = parse_positive_rational("--b", b_text);

  if (given("--grid")) {
    require_at_least("--grid", grid, 2);
    if (!given("--grid-t")) cfg.grid_t = grid;
    if (!given("--grid-nu")) cfg.grid_nu = grid;
  }
  require_at_least("--grid-t", cfg.grid_t, 2);
  require_at_least("--grid-nu", cfg.grid_nu, 2);
  if (given("--trunc")) require_at_least("--trunc", cfg.trunc, 1);
  require_at_least("--quad", cfg.quad, 64);
  require_at_least("--points", cfg.points, 2);
  require_positive("--tol", cfg.tol);
  require_positive("--eps-half", cfg.eps_half);
  if (cfg.eps_half >= 0.5) throw UsageError("--eps-half must be below 1/2");
  if (!std::isfinite(cfg.t_min) || !std::isfinite(cfg.t_max) || !(cfg.t_min < cfg.t_max)) {
    throw UsageError("--t-min must be below --t-max");
  }
  if (given("--q")) {
    if (!(q > 0.0 && q < 1.0)) throw UsageError("--q must lie in (0,1)");
    cfg.q = q;
  }
  if (given("--t")) {
    if (!std::isfinite(t)) throw UsageError("--t must be finite");
    cfg.t = t;
  }
  if (given("--gammas")) {
    if (cfg.gammas.empty()) throw UsageError("--gammas must not be empty");
    for (double g : cfg.gammas) require_positive("--gammas", g);
  }
  return cfg;
}

namespace {

struct Artifact {
  std::string body;
  std::string summary;
  bool failed = false;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

WindowSpec window_of(const RunConfig& cfg) { return WindowSpec::make(cfg.window, cfg.gamma); }

GridSpec grid_of(const RunConfig& cfg) {
  return cfg.half_offset ? GridSpec::half_offset(cfg.grid_t, cfg.grid_nu)
                         : GridSpec{cfg.grid_t, cfg.grid_nu, 0.0, 0.0};
}

const char* theta_name(ThetaKind k) {
  switch (k) {
    case ThetaKind::Theta1: return "theta1";
    case ThetaKind::Theta2: return "theta2";
    case ThetaKind::Theta3: return "theta3";
    case ThetaKind::Theta4: return "theta4";
  }
  return "theta";
}

Artifact run_theta(const RunConfig& cfg) {
  const ThetaNome nome = cfg.q ? ThetaNome(*cfg.q) : ThetaNome::from_gamma(cfg.gamma);
  const cdouble z(cfg.z_re, cfg.z_im);
  const cdouble v = theta_eval(cfg.theta_kind, z, nome);
  Artifact a;
  if (cfg.format == OutputFormat::Json) {
    a.body = dump(json{{"type", "theta"},
                       {"kind", theta_name(cfg.theta_kind)},
                       {"q", nome.q()},
                       {"z", json::array({z.real(), z.imag()})},
                       {"value", json::array({v.real(), v.imag()})},
                       {"order", nome.order_for(std::abs(z.imag()))}});
  } else {
    a.body = "kind,q,z_re,z_im,re,im\n" + std::string(theta_name(cfg.theta_kind)) + "," +
             format_double(nome.q()) + "," + format_double(z.real()) + "," +
             format_double(z.imag()) + "," + format_double(v.real()) + "," +
             format_double(v.imag()) + "\n";
  }
  a.summary = std::string(theta_name(cfg.theta_kind)) + "(" + format_double(z.real()) + " + " +
              format_double(z.imag()) + "i; q=" + format_double(nome.q()) +
              ") = " + format_double(v.real()) + " + " + format_double(v.imag()) + "i";
  return a;
}

Artifact run_zak(const RunConfig& cfg) {
  const ZakField field = zak_grid(window_of(cfg), grid_of(cfg), cfg.method, cfg.trunc);
  Artifact a;
  a.body = cfg.format == OutputFormat::Json ? dump(to_json(field)) : to_csv(field);
  a.summary = "zak " + std::string(to_string(cfg.window)) + " gamma=" + format_double(cfg.gamma) +
              " method=" + to_string(cfg.method) + " grid=" + std::to_string(cfg.grid_t) + "x" +
              std::to_string(cfg.grid_nu) + " max|Zg|=" + format_double(field.max_abs());
  return a;
}

Artifact run_verify(const RunConfig& cfg) {
  const FactorizationReport r = verify_factorization(cfg.gamma, grid_of(cfg));
  Artifact a;
  a.failed = !(r.max_rel_residual < cfg.tol);
  if (cfg.format == OutputFormat::Json) {
    a.body = dump(to_json(r));
  } else {
    a.body = "gamma,E_claimed,max_abs_residual,max_rel_residual,rank1_defect\n" +
             format_double(r.gamma) + "," + format_double(r.E_claimed) + "," +
             format_double(r.max_abs_residual) + "," + format_double(r.max_rel_residual) + "," +
             (r.rank1_defect ? format_double(*r.rank1_defect) : std::string()) + "\n";
  }
  a.summary = std::string(a.failed ? "FAIL" : "PASS") + " verify-identity gamma=" +
              format_double(r.gamma) + " max_abs_residual=" + format_double(r.max_abs_residual) +
              " max_rel_residual=" + format_double(r.max_rel_residual) +
              " tol=" + format_double(cfg.tol);
  return a;
}

Artifact run_frame_bounds(const RunConfig& cfg) {
  FrameBoundsOptions opts;
  opts.t_grid = cfg.grid_t;
  opts.nu_grid = cfg.grid_nu;
  opts.row_images = cfg.trunc;
  const FrameBoundsReport r =
      frame_bounds_estimate(window_of(cfg), LatticeParams::make(cfg.a, cfg.b), opts);
  Artifact a;
  a.body = cfg.format == OutputFormat::Json ? dump(to_json(r))
                                            : frame_bounds_csv_header() + to_csv_row(r);
  a.summary = "frame-bounds " + std::string(to_string(cfg.window)) +
              " gamma=" + format_double(cfg.gamma) + " a=" + cfg.a.str() + " b=" + cfg.b.str() +
              " A_est=" + format_double(r.A_est) + " B_est=" + format_double(r.B_est) +
              (r.A_analytic ? " A_analytic=" + format_double(*r.A_analytic) : std::string()) +
              " converged=" + (r.converged ? "true" : "false");
  if (!r.note.empty()) a.summary += " (" + r.note + ")";
  return a;
}

double closed_dual(const RunConfig& cfg, double t) {
  if (cfg.gamma != 1.0) {
    throw Error(ErrorCode::DomainError, "closed-form duals are available only at gamma = 1");
  }
  return cfg.window == WindowKind::HyperbolicSecant ? dual_sech_closed_at(t, cfg.eps_half)
                                                    : dual_gauss_series(t, cfg.eps_half);
}

Artifact single_value(const RunConfig& cfg, const char* what, double t, double value,
                      const QuadratureValue* quad) {
  Artifact a;
  const std::string method = quad ? std::string("numeric-") + to_string(cfg.method) : "closed";
  if (cfg.format == OutputFormat::Json) {
    json j{{"type", std::string(what) + "_value"},
           {"window", to_json(window_of(cfg))},
           {"t", t},
           {"value", value},
           {"method", method},
           {"eps_half", cfg.eps_half}};
    if (quad) {
      j["n_quad"] = quad->n_quad;
      j["shift"] = quad->shift;
      j["imag_residual"] = quad->imag_residual;
    }
    a.body = dump(j);
  } else {
    a.body = "t,value\n" + format_double(t) + "," + format_double(value) + "\n";
  }
  a.summary = std::string(what) + " " + to_string(cfg.window) + " gamma=" +
              format_double(cfg.gamma) + " t=" + format_double(t) + " value=" +
              format_double(value) + " method=" + method;
  return a;
}

Artifact profile_artifact(const RunConfig& cfg, const char* what, const SampledProfile& p) {
  Artifact a;
  a.body = cfg.format == OutputFormat::Json ? dump(to_json(p, what)) : to_csv(p);
  a.summary = std::string(what) + " " + to_string(cfg.window) + " gamma=" +
              format_double(cfg.gamma) + " points=" + std::to_string(p.t_values.size()) +
              " on [" + format_double(cfg.t_min) + ", " + format_double(cfg.t_max) + "]";
  return a;
}

Artifact run_dual(const RunConfig& cfg) {
  const WindowSpec w = window_of(cfg);
  if (cfg.t) {
    if (cfg.method == ZakMethod::Closed) {
      return single_value(cfg, "dual", *cfg.t, closed_dual(cfg, *cfg.t), nullptr);
    }
    const QuadratureValue v = dual_numeric(w, *cfg.t, cfg.quad, cfg.eps_half);
    return single_value(cfg, "dual", *cfg.t, v.value, &v);
  }
  const ProfileGrid grid = make_profile_grid(cfg.t_min, cfg.t_max, cfg.points, cfg.eps_half);
  if (cfg.method == ZakMethod::Closed) {
    SampledProfile p;
    p.t_values = grid.t_values;
    p.eps_half = grid.eps_half;
    p.spacing = grid.spacing;
    p.gamma = cfg.gamma;
    p.values.reserve(grid.t_values.size());
    for (double t : grid.t_values) p.values.push_back(closed_dual(cfg, t));
    return profile_artifact(cfg, "dual_profile", p);
  }
  return profile_artifact(cfg, "dual_profile", dual_profile(w, grid, cfg.quad));
}

Artifact run_tight(const RunConfig& cfg) {
  const WindowSpec w = window_of(cfg);
  if (cfg.t) {
    const QuadratureValue v = tight_window(w, *cfg.t, cfg.quad, cfg.eps_half, cfg.method);
    return single_value(cfg, "tight", *cfg.t, v.value, &v);
  }
  const ProfileGrid grid = make_profile_grid(cfg.t_min, cfg.t_max, cfg.points, cfg.eps_half);
  return profile_artifact(cfg, "tight_profile", tight_profile(w, grid, cfg.quad));
}

Artifact run_limits(const RunConfig& cfg) {
  const ProfileGrid grid = make_profile_grid(cfg.t_min, cfg.t_max, cfg.points, cfg.eps_half);
  const std::vector<LimitDistance> d = limit_profiles(cfg.gammas, grid, cfg.quad);
  Artifact a;
  a.body = cfg.format == OutputFormat::Json ? dump(to_json(std::span<const LimitDistance>(d)))
                                            : to_csv(std::span<const LimitDistance>(d));
  std::ostringstream os;
  os << "limits";
  for (const auto& x : d) {
    os << " gamma=" << format_double(x.gamma) << ":sinc=" << format_double(x.to_sinc)
       << ",indicator=" << format_double(x.to_indicator);
  }
  a.summary = os.str();
  return a;
}

Artifact dispatch(const RunConfig& cfg) {
  switch (cfg.subcommand) {
    case Subcommand::Theta: return run_theta(cfg);
    case Subcommand::Zak: return run_zak(cfg);
    case Subcommand::VerifyIdentity: return run_verify(cfg);
    case Subcommand::FrameBounds: return run_frame_bounds(cfg);
    case Subcommand::Dual: return run_dual(cfg);
    case Subcommand::Tight: return run_tight(cfg);
    case Subcommand::Limits: return run_limits(cfg);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown subcommand");
}

void report_error(bool as_json, const std::string& code, const std::string& message,
                  std::ostream& err) {
  if (as_json) {
    err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
  } else {
    err << "error: " << code << ": " << message << "\n";
  }
}

std::string strip_code(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.help_text) {
    out << *cfg.help_text;
    return kExitOk;
  }
  Artifact artifact;
  try {
    artifact = dispatch(cfg);
  } catch (const Error& e) {
    report_error(cfg.json_errors, to_string(e.code()), strip_code(e), err);
    return kExitComputation;
  } catch (const std::exception& e) {
    report_error(cfg.json_errors, "InternalError", e.what(), err);
    return kExitComputation;
  }

  if (cfg.out.empty()) {
    out << artifact.body;
    err << artifact.summary << "\n";
  } else {
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    file << artifact.body;
    file.close();
    if (!file) {
      report_error(cfg.json_errors, "IoError", "cannot write '" + cfg.out + "'", err);
      return kExitComputation;
    }
    out << artifact.summary << "\n";
  }
  if (artifact.failed) {
    if (cfg.json_errors) {
      report_error(true, "CheckFailed", artifact.summary, err);
    }
    return kExitComputation;
  }
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    const bool as_json = std::find(args.begin(), args.end(), "--json-errors") != args.end();
    report_error(as_json, "UsageError", e.what(), err);
    return e.exit_code();
  }
  return run(cfg, out, err);
}

}  // namespace gaborsech::cli
