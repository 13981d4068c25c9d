#include <pybind11/pybind11.h>

#include "kronmod/commands.hpp"

namespace py = pybind11;

namespace {

py::object g_needs_extension;

kronmod::json to_cpp(const py::object& obj) {
  auto dumps = py::module_::import("json").attr("dumps");
  return kronmod::json::parse(dumps(obj).cast<std::string>());
}

py::object to_py(const kronmod::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

kronmod::CommandOptions options(const py::object& field, std::uint64_t seed) {
  kronmod::CommandOptions o;
  o.seed = seed;
  if (!field.is_none()) {
    try {
      o.field = kronmod::Field::parse(field.cast<std::string>());
    } catch (const std::invalid_argument& e) {
      throw py::value_error(e.what());
    }
  }
  return o;
}

// Returns the report; raises only when the command produced nothing but an error.
py::object run(const std::string& name, const kronmod::json& input, const kronmod::CommandOptions& o) {
  kronmod::CommandResult r;
  {
    py::gil_scoped_release release;
    r = kronmod::run_command(name, input, o);
  }
  const kronmod::json& out = r.output;
  if (out.contains("error") && out.size() == 2) {
    std::string kind = out["error"], message = out["message"];
    if (kind == "needs_extension") {
      PyErr_SetString(g_needs_extension.ptr(), message.c_str());
      throw py::error_already_set();
    }
    if (kind == "invalid_input") throw py::value_error(message);
    throw std::runtime_error(message);
  }
  return to_py(out);
}

py::object command(const char* name, const py::object& value, const py::object& field, std::uint64_t seed,
                   bool inverse = false) {
  kronmod::CommandOptions o = options(field, seed);
  o.inverse = inverse;
  return run(name, to_cpp(value), o);
}

}  // namespace

PYBIND11_MODULE(_kronmod, m) {
  m.doc() = "Exact computations with 2x2 Kronecker modules over four linear forms";
  g_needs_extension = py::exception<kronmod::NeedsExtension>(m, "NeedsExtension", PyExc_ArithmeticError);

  const auto field = py::arg("field") = py::none();
  const auto seed = py::arg("seed") = 0;

  m.def("inv", [](py::object v, py::object f) { return command("inv", v, f, 0); }, py::arg("module"), field);
  m.def("stab", [](py::object v, py::object f) { return command("stab", v, f, 0); }, py::arg("module"), field);
  m.def("normal_form", [](py::object v, py::object f, std::uint64_t s) { return command("nf", v, f, s); },
        py::arg("module"), field, seed);
  m.def("eta", [](py::object v, py::object f) { return command("eta", v, f, 0); }, py::arg("module"), field);
  m.def("eta_inverse",
        [](py::object v, py::object f, std::uint64_t s) { return command("eta", v, f, s, true); },
        py::arg("point"), field, seed);
  m.def("fiber", [](py::object v, py::object f) { return command("fiber", v, f, 0); }, py::arg("q"), field);
  m.def("beta", [](py::object v, py::object f) { return command("beta", v, f, 0); }, py::arg("psi"), field);
  m.def("alpha", [](py::object v, py::object f) { return command("alpha", v, f, 0); }, py::arg("psi"), field);
  m.def("classify", [](py::object v, py::object f) { return command("classify", v, f, 0)["region"]; },
        py::arg("psi"), field);
  m.def("snake", [](py::object v, py::object f) { return command("snake", v, f, 0); }, py::arg("psi"), field);
  m.def(
      "check",
      [](py::object f, std::uint64_t s, std::size_t trials, std::string suite, unsigned workers) {
        kronmod::CommandOptions o = options(f, s);
        o.trials = trials;
        o.suite = std::move(suite);
        o.workers = workers;
        kronmod::CommandResult r;
        {
          py::gil_scoped_release release;
          r = kronmod::run_command("check", kronmod::json::object(), o);
        }
        if (r.exit_code == kronmod::kExitInvalid) throw py::value_error(r.output["message"].get<std::string>());
        kronmod::json out = r.output;
        out["details"] = r.lines;
        return to_py(out);
      },
      field, seed, py::arg("trials") = 1000, py::arg("suite") = "all", py::arg("workers") = 0);
}
