#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "dal/dynamics.hpp"
#include "dal/entanglement.hpp"
#include "dal/error.hpp"
#include "dal/explore.hpp"
#include "dal/spectral.hpp"
#include "dal/steady.hpp"

namespace py = pybind11;
using namespace dal;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const ComplexMatrix& m) {
  ComplexArray out({m.rows(), m.cols()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
  }
  return out;
}

ComplexMatrix from_numpy(const ComplexArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a 2-d array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  std::vector<Complex> data(a.data(), a.data() + rows * cols);
  return ComplexMatrix(rows, cols, std::move(data));
}

Interval interval_from(const py::handle& h) {
  const auto pair = h.cast<std::pair<double, double>>();
  return {pair.first, pair.second};
}

Bounds bounds_from(const py::dict& d) {
  Bounds b;
  for (const auto& [key, value] : d) {
    const auto name = key.cast<std::string>();
    if (name == "j") b.j = interval_from(value);
    else if (name == "j_c") b.j_c = interval_from(value);
    else if (name == "omega_c") b.omega_c = interval_from(value);
    else if (name == "gamma_c") b.gamma_c = interval_from(value);
    else if (name == "gamma") b.gamma = value.cast<double>();
    else throw Error(ErrorKind::InvalidParams, "unknown bounds key '" + name + "'");
  }
  return b;
}

py::dict params_dict(const ModelParams& p) {
  py::dict d;
  d["omega_c"] = p.omega_c;
  d["j"] = p.j;
  d["j_c"] = p.j_c;
  d["gamma"] = p.gamma;
  d["gamma_c"] = p.gamma_c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bindings for the dal steady-state entanglement library";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> dal_error(m, "DalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = dal_error;
      py::object instance = exc(e.what());
      instance.attr("kind") = to_string(e.kind());
      PyErr_SetObject(exc.ptr(), instance.ptr());
    }
  });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double omega_c, double j, double j_c, double gamma, double gamma_c) {
             ModelParams p;
             p.omega_c = omega_c;
             p.j = j;
             p.j_c = j_c;
             p.gamma = gamma;
             p.gamma_c = gamma_c;
             p.validate();
             return p;
           }),
           py::kw_only(), py::arg("omega_c") = 0.0, py::arg("j") = 0.0, py::arg("j_c") = 0.0,
           py::arg("gamma") = 1e-3, py::arg("gamma_c") = 1e-3)
      .def_readwrite("omega_c", &ModelParams::omega_c)
      .def_readwrite("j", &ModelParams::j)
      .def_readwrite("j_c", &ModelParams::j_c)
      .def_readwrite("gamma", &ModelParams::gamma)
      .def_readwrite("gamma_c", &ModelParams::gamma_c)
      .def("to_dict", &params_dict)
      .def("__eq__", [](const ModelParams& a, const ModelParams& b) { return a == b; })
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(omega_c=" + std::to_string(p.omega_c) + ", j=" + std::to_string(p.j) +
               ", j_c=" + std::to_string(p.j_c) + ", gamma=" + std::to_string(p.gamma) +
               ", gamma_c=" + std::to_string(p.gamma_c) + ")";
      });

  m.def("hamiltonian", [](const ModelParams& p) { return to_numpy(build_hamiltonian(p)); });

  m.def(
      "steady_state",
      [](const ModelParams& p) {
        const auto r = steady_state(p);
        py::dict d;
        d["rho"] = to_numpy(r.rho.matrix());
        d["residual"] = r.residual;
        d["gap"] = r.nullspace_gap;
        d["min_eigenvalue"] = r.min_eigenvalue;
        return d;
      },
      "Stationary state and solver diagnostics as a dict.");
  m.def("steady_negativity", [](const ModelParams& p) { return steady_negativity(p); });

  m.def("negativity", [](const ComplexArray& rho) {
    return negativity(DensityMatrix(from_numpy(rho)));
  });
  m.def("partial_trace_c", [](const ComplexArray& rho) {
    return to_numpy(partial_trace_c(from_numpy(rho)));
  });
  m.def("two_qubit_analytic", &two_qubit_analytic, py::arg("j"), py::arg("gamma"));
  m.def("optimal_two_qubit_coupling", [](double gamma) {
    const auto r = optimal_two_qubit_coupling(gamma);
    return std::make_pair(r.j_star, r.n_star);
  });

  m.def("hamiltonian_spectrum", [](const ModelParams& p) {
    const auto s = hamiltonian_spectrum(p);
    return std::make_pair(s.energies, to_numpy(s.states));
  });
  m.def("fidelities", [](const ComplexArray& rho, const ModelParams& p) {
    return fidelities(DensityMatrix(from_numpy(rho)), hamiltonian_spectrum(p)).values;
  });
  m.def("eigenstate_negativity", [](const ModelParams& p, std::size_t n) {
    return eigenstate_negativity(hamiltonian_spectrum(p), n);
  });
  m.def("truncated_mixture_negativity", [](const ModelParams& p, std::vector<std::size_t> idx) {
    const auto s = hamiltonian_spectrum(p);
    const auto f = fidelities(steady_state(p).rho, s);
    return negativity(partial_trace_c(truncated_mixture(s, f, idx).rho));
  });

  m.def(
      "sweep_2d",
      [](const ModelParams& tmpl, std::tuple<double, double, std::size_t> w,
         std::tuple<double, double, std::size_t> jc, std::size_t jobs) {
        const Axis wa{std::get<0>(w), std::get<1>(w), std::get<2>(w)};
        const Axis ja{std::get<0>(jc), std::get<1>(jc), std::get<2>(jc)};
        SweepGrid g;
        {
          py::gil_scoped_release release;
          g = sweep_2d(tmpl, wa, ja, jobs);
        }
        py::array_t<double> values({g.omega_c_axis.size(), g.j_c_axis.size()});
        std::copy(g.values.begin(), g.values.end(), values.mutable_data());
        return py::make_tuple(g.omega_c_axis, g.j_c_axis, values);
      },
      py::arg("template"), py::arg("omega_c"), py::arg("j_c"), py::arg("jobs") = 1,
      "Returns (omega_c values, j_c values, negativity[omega_c, j_c]). Axes are "
      "(min, max, points).");
  m.def(
      "scan_gamma_c",
      [](const ModelParams& tmpl, std::vector<double> points, std::size_t jobs) {
        ScanCurve c;
        {
          py::gil_scoped_release release;
          c = scan_gamma_c(tmpl, points, jobs);
        }
        std::vector<double> n;
        for (const auto& pt : c.points) n.push_back(pt.negativity);
        return n;
      },
      py::arg("template"), py::arg("gamma_c"), py::arg("jobs") = 1);
  m.def("find_crossover", &find_crossover, py::arg("template"), py::arg("bracket"),
        py::arg("reference"), py::arg("tolerance") = 1e-3);
  m.def(
      "maximize_entanglement",
      [](const py::dict& bounds, std::size_t n_starts, std::uint64_t seed, std::size_t jobs) {
        const Bounds b = bounds_from(bounds);
        OptResult r;
        {
          py::gil_scoped_release release;
          r = maximize_entanglement(b, n_starts, seed, jobs);
        }
        py::dict d;
        d["best_params"] = params_dict(r.best_params);
        d["best_negativity"] = r.best_n;
        d["evaluations"] = r.evaluations;
        d["starts"] = r.starts;
        return d;
      },
      py::arg("bounds") = py::dict(), py::arg("n_starts") = 32, py::arg("seed") = 1,
      py::arg("jobs") = 1);

  m.def(
      "fidelity_trajectory",
      [](const ModelParams& p, std::vector<double> times) {
        const auto traj = fidelity_trajectory(p, excited_a_initial_state(), times);
        py::array_t<double> f({traj.times.size(), std::size_t{8}});
        auto view = f.mutable_unchecked<2>();
        for (std::size_t k = 0; k < traj.times.size(); ++k) {
          for (std::size_t n = 0; n < 8; ++n) view(k, n) = traj.fidelity_rows[k].values[n];
        }
        return f;
      },
      py::arg("params"), py::arg("times"),
      "Fidelities F_n(t) from the excited-A initial state; times must start at 0.");
}
