#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaborsech/cli.hpp"
#include "gaborsech/critical.hpp"
#include "gaborsech/errors.hpp"
#include "gaborsech/factorization.hpp"
#include "gaborsech/framebounds.hpp"
#include "gaborsech/serialize.hpp"
#include "gaborsech/theta.hpp"
#include "gaborsech/zak.hpp"

namespace py = pybind11;
using namespace gaborsech;

namespace {

WindowKind parse_window(const std::string& name) {
  if (name == "sech") return WindowKind::HyperbolicSecant;
  if (name == "gaussian") return WindowKind::Gaussian;
  throw Error(ErrorCode::InvalidArgument, "window must be 'sech' or 'gaussian', got '" + name + "'");
}

ZakMethod parse_method(const std::string& name) {
  if (name == "direct") return ZakMethod::Direct;
  if (name == "closed") return ZakMethod::Closed;
  throw Error(ErrorCode::InvalidArgument, "method must be 'direct' or 'closed', got '" + name + "'");
}

ThetaKind parse_kind(int kind) {
  if (kind < 1 || kind > 4) throw Error(ErrorCode::InvalidArgument, "theta kind must be 1..4");
  return static_cast<ThetaKind>(kind - 1);
}

// Reports become plain dicts through their JSON form.
py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::array_t<double> as_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gabor frames of Gaussian and hyperbolic secant windows";

  static py::exception<Error> exc(m, "GaborsechError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("theta",
        [](int kind, std::complex<double> z, double q) { return theta_eval(parse_kind(kind), z, ThetaNome(q)); },
        py::arg("kind"), py::arg("z"), py::arg("q"), "Jacobi theta function theta_kind(z; q).");
  m.def("theta_real",
        [](int kind, double x, double q) { return theta_eval_real(parse_kind(kind), x, ThetaNome(q)); },
        py::arg("kind"), py::arg("x"), py::arg("q"));
  m.def("theta1_prime0", [](double q) { return theta1_prime0(ThetaNome(q)); }, py::arg("q"));

  m.def("window",
        [](const std::string& window, double gamma, double t) {
          return eval_window(WindowSpec::make(parse_window(window), gamma), t);
        },
        py::arg("window"), py::arg("gamma"), py::arg("t"));

  m.def("zak",
        [](const std::string& window, double gamma, double t, double nu, const std::string& method) {
          return zak_eval(WindowSpec::make(parse_window(window), gamma), t, nu, parse_method(method));
        },
        py::arg("window"), py::arg("gamma"), py::arg("t"), py::arg("nu"), py::arg("method") = "direct");

  m.def("zak_grid",
        [](const std::string& window, double gamma, int n_t, int n_nu, const std::string& method,
           bool half_offset) {
          const GridSpec grid = half_offset ? GridSpec::half_offset(n_t, n_nu) : GridSpec{n_t, n_nu, 0.0, 0.0};
          ZakField f;
          {
            py::gil_scoped_release release;
            f = zak_grid(WindowSpec::make(parse_window(window), gamma), grid, parse_method(method));
          }
          py::array_t<std::complex<double>> out({n_t, n_nu});
          std::copy(f.values.begin(), f.values.end(), out.mutable_data());
          return out;
        },
        py::arg("window"), py::arg("gamma"), py::arg("n_t") = 64, py::arg("n_nu") = 64,
        py::arg("method") = "direct", py::arg("half_offset") = false,
        "Zak samples at (j/n_t, k/n_nu), shape (n_t, n_nu).");

  m.def("constant_E", &constant_E, py::arg("gamma"));
  m.def("verify_identity",
        [](double gamma, int n_t, int n_nu, bool half_offset) {
          const GridSpec grid = half_offset ? GridSpec::half_offset(n_t, n_nu) : GridSpec{n_t, n_nu, 0.0, 0.0};
          FactorizationReport r;
          {
            py::gil_scoped_release release;
            r = verify_factorization(gamma, grid);
          }
          return to_python(to_json(r));
        },
        py::arg("gamma"), py::arg("n_t") = 64, py::arg("n_nu") = 64, py::arg("half_offset") = false);

  m.def("frame_bounds",
        [](const std::string& window, double gamma, const std::string& a, const std::string& b,
           int t_grid, int nu_grid) {
          FrameBoundsOptions opts;
          opts.t_grid = t_grid;
          opts.nu_grid = nu_grid;
          const WindowSpec w = WindowSpec::make(parse_window(window), gamma);
          const LatticeParams lat = LatticeParams::make(Rational::parse(a), Rational::parse(b));
          FrameBoundsReport r;
          {
            py::gil_scoped_release release;
            r = frame_bounds_estimate(w, lat, opts);
          }
          return to_python(to_json(r));
        },
        py::arg("window"), py::arg("gamma"), py::arg("a"), py::arg("b"), py::arg("t_grid") = 64,
        py::arg("nu_grid") = 64, "Frame-bound estimate; a and b are rationals such as '2/3'.");
  m.def("m_delta", &m_delta, py::arg("delta"));

  m.def("dual",
        [](const std::string& window, double gamma, double t, int n_quad, double eps_half) {
          return dual_numeric(WindowSpec::make(parse_window(window), gamma), t, n_quad, eps_half).value;
        },
        py::arg("window"), py::arg("gamma"), py::arg("t"), py::arg("n_quad") = kDefaultQuadrature,
        py::arg("eps_half") = kDefaultEpsHalf);
  m.def("dual_sech_closed", &dual_sech_closed_at, py::arg("t"), py::arg("eps_half") = kDefaultEpsHalf);
  m.def("dual_gauss_series", &dual_gauss_series, py::arg("t"), py::arg("eps_half") = kDefaultEpsHalf);
  m.def("tight",
        [](const std::string& window, double gamma, double t, int n_quad, double eps_half) {
          return tight_window(WindowSpec::make(parse_window(window), gamma), t, n_quad, eps_half).value;
        },
        py::arg("window"), py::arg("gamma"), py::arg("t"), py::arg("n_quad") = kDefaultQuadrature,
        py::arg("eps_half") = kDefaultEpsHalf);
  m.def("tight_profile",
        [](const std::string& window, double gamma, double t_min, double t_max, int points,
           double eps_half) {
          const ProfileGrid grid = make_profile_grid(t_min, t_max, points, eps_half);
          SampledProfile p;
          {
            py::gil_scoped_release release;
            p = tight_profile(WindowSpec::make(parse_window(window), gamma), grid);
          }
          return py::make_tuple(as_array(p.t_values), as_array(p.values));
        },
        py::arg("window"), py::arg("gamma"), py::arg("t_min") = -3.0, py::arg("t_max") = 3.0,
        py::arg("points") = 200, py::arg("eps_half") = kDefaultEpsHalf,
        "Tight window samples (t, values); points near half-integers are dropped.");
  m.def("limit_distances",
        [](const std::vector<double>& gammas) {
          std::vector<LimitDistance> d;
          {
            py::gil_scoped_release release;
            d = limit_profiles(gammas, standard_profile_grid());
          }
          return to_python(to_json(std::span<const LimitDistance>(d)));
        },
        py::arg("gammas"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::main_entry(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end in-process; returns (exit code, stdout, stderr).");
}
