#include "gaborsech/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "gaborsech/errors.hpp"

namespace gaborsech {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // snprintf follows LC_NUMERIC; the library never changes it, but be strict.
  for (char* c = buf; *c; ++c) {
    if (*c == ',') *c = '.';
  }
  return buf;
}

json to_json(const WindowSpec& w) { return json{{"kind", to_string(w.kind)}, {"gamma", w.gamma}}; }

json to_json(const GridSpec& g) {
  return json{{"n_t", g.n_t}, {"n_nu", g.n_nu}, {"t_offset", g.t_offset}, {"nu_offset", g.nu_offset}};
}

json to_json(const ZakField& field) {
  json re = json::array();
  json im = json::array();
  for (const auto& v : field.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"type", "zak_field"},
              {"window", to_json(field.window)},
              {"method", to_string(field.method)},
              {"truncation", field.truncation},
              {"grid", to_json(field.grid)},
              {"layout", "row-major t then nu"},
              {"re", std::move(re)},
              {"im", std::move(im)}};
}

json to_json(const FactorizationReport& r) {
  json j{{"type", "factorization_report"},
         {"gamma", r.gamma},
         {"E_claimed", r.E_claimed},
         {"max_abs_residual", r.max_abs_residual},
         {"max_rel_residual", r.max_rel_residual},
         {"grid", to_json(r.grid)}};
  j["rank1_defect"] = r.rank1_defect ? json(*r.rank1_defect) : json(nullptr);
  return j;
}

json to_json(const FrameBoundsReport& r) {
  json j{{"type", "frame_bounds_report"},
         {"window", to_json(r.window)},
         {"a", r.lattice.a.str()},
         {"b", r.lattice.b.str()},
         {"reduced_window", to_json(r.reduced_window)},
         {"reduced_a", r.reduced_a.str()},
         {"A_est", r.A_est},
         {"B_est", r.B_est},
         {"t_at_min", r.t_at_min},
         {"nu_at_min", r.nu_at_min},
         {"t_grid", r.t_grid_size},
         {"nu_grid", r.nu_grid_size},
         {"row_images", r.row_images},
         {"fiber_shape", json::array({r.fiber_rows, r.fiber_cols})},
         {"converged", r.converged},
         {"numerically_singular", r.numerically_singular},
         {"note", r.note}};
  j["A_analytic"] = r.A_analytic ? json(*r.A_analytic) : json(nullptr);
  return j;
}

json to_json(const SampledProfile& p, const char* what) {
  return json{{"type", what},       {"gamma", p.gamma},    {"n_quad", p.n_quad},
              {"eps_half", p.eps_half}, {"spacing", p.spacing}, {"t", p.t_values},
              {"value", p.values}};
}

json to_json(std::span<const LimitDistance> limits) {
  json rows = json::array();
  for (const auto& d : limits) {
    rows.push_back({{"gamma", d.gamma}, {"to_sinc", d.to_sinc}, {"to_indicator", d.to_indicator}});
  }
  return json{{"type", "limit_profiles"},
              {"distances", std::move(rows)},
              {"sinc_trend", sinc_trend_holds(limits)},
              {"indicator_trend", indicator_trend_holds(limits)}};
}

WindowSpec window_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gaussian") return WindowSpec::gaussian(j.at("gamma").get<double>());
    if (kind == "sech") return WindowSpec::hyperbolic_secant(j.at("gamma").get<double>());
    throw Error(ErrorCode::InvalidArgument, "unknown window kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("window: ") + e.what());
  }
}

GridSpec grid_from_json(const json& j) {
  try {
    GridSpec g{j.at("n_t").get<int>(), j.at("n_nu").get<int>(), j.at("t_offset").get<double>(),
               j.at("nu_offset").get<double>()};
    g.validate(2);
    return g;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("grid: ") + e.what());
  }
}

ZakField zak_field_from_json(const json& j) {
  try {
    if (j.at("type") != "zak_field") throw Error(ErrorCode::InvalidArgument, "not a zak_field");
    ZakField f;
    f.window = window_from_json(j.at("window"));
    f.grid = grid_from_json(j.at("grid"));
    const std::string method = j.at("method").get<std::string>();
    if (method != "direct" && method != "closed") {
      throw Error(ErrorCode::InvalidArgument, "unknown Zak method '" + method + "'");
    }
    f.method = method == "direct" ? ZakMethod::Direct : ZakMethod::Closed;
    f.truncation = j.at("truncation").get<int>();
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    const std::size_t n = static_cast<std::size_t>(f.grid.n_t) * f.grid.n_nu;
    if (re.size() != n || im.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "zak_field arrays do not match the grid");
    }
    f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.values[i] = cdouble(re[i], im[i]);
    return f;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("zak_field: ") + e.what());
  }
}

std::string to_csv(const ZakField& field) {
  std::ostringstream os;
  os << "t,nu,re,im\n";
  for (int j = 0; j < field.grid.n_t; ++j) {
    for (int k = 0; k < field.grid.n_nu; ++k) {
      const cdouble v = field.at(j, k);
      os << format_double(field.grid.t_at(j)) << ',' << format_double(field.grid.nu_at(k)) << ','
         << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const SampledProfile& p) {
  std::ostringstream os;
  os << "t,value\n";
  for (std::size_t i = 0; i < p.t_values.size(); ++i) {
    os << format_double(p.t_values[i]) << ',' << format_double(p.values[i]) << '\n';
  }
  return os.str();
}

std::string frame_bounds_csv_header() { return "gamma,a,b,A_est,B_est,A_analytic,converged\n"; }

std::string to_csv_row(const FrameBoundsReport& r) {
  std::ostringstream os;
  os << format_double(r.window.gamma) << ',' << r.lattice.a.str() << ',' << r.lattice.b.str() << ','
     << format_double(r.A_est) << ',' << format_double(r.B_est) << ','
     << (r.A_analytic ? format_double(*r.A_analytic) : std::string()) << ','
     << (r.converged ? "true" : "false") << '\n';
  return os.str();
}

std::string to_csv(std::span<const LimitDistance> limits) {
  std::ostringstream os;
  os << "gamma,to_sinc,to_indicator\n";
  for (const auto& d : limits) {
    os << format_double(d.gamma) << ',' << format_double(d.to_sinc) << ','
       << format_double(d.to_indicator) << '\n';
  }
  return os.str();
}

}  // namespace gaborsech
