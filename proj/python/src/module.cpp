#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <sstream>

#include "ordhomeo/cli.hpp"
#include "ordhomeo/dynamics.hpp"
#include "ordhomeo/error.hpp"
#include "ordhomeo/fixed_points.hpp"
#include "ordhomeo/text_format.hpp"

namespace py = pybind11;
using namespace ordhomeo;

namespace
{

Ordinal from_int(py::int_ const &n)
{
  std::string digits = py::str(py::handle(n));
  if (!digits.empty() && digits[0] == '-')
    throw DomainError("ordinals are non-negative, got " + digits);
  return Ordinal::finite(Natural(digits));
}

Natural natural(py::int_ const &n) { return Natural(std::string(py::str(py::handle(n)))); }

std::vector<std::optional<py::int_>> sigma_to_py(std::vector<std::optional<std::size_t>> const &s)
{
  std::vector<std::optional<py::int_>> out;
  for (auto const &j : s)
    out.push_back(j ? std::optional<py::int_>(py::int_(*j)) : std::nullopt);
  return out;
}

} // namespace

PYBIND11_MODULE(_ordhomeo, m)
{
  m.doc() = "Ordinal arithmetic and piecewise homeomorphisms of countable ordinals";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", domain.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", domain.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<ContractError>(m, "ContractError", error.ptr());

  py::class_<Ordinal>(m, "Ordinal")
    .def(py::init<>())
    .def(py::init([](std::string const &text) { return parse_ordinal(text); }), py::arg("text"))
    .def(py::init(&from_int), py::arg("n"))
    .def_static("omega", &Ordinal::omega)
    .def("__str__", [](Ordinal const &x) { return format(x); })
    .def("__repr__", [](Ordinal const &x) { return "Ordinal('" + format(x) + "')"; })
    .def("__hash__", [](Ordinal const &x) { return std::hash<std::string>{}(format(x)); })
    .def("unicode", [](Ordinal const &x) { return format(x, FormatOptions{true}); })
    .def_property_readonly("is_zero", &Ordinal::is_zero)
    .def_property_readonly("is_limit", &Ordinal::is_limit)
    .def(py::self == py::self)
    .def(py::self != py::self)
    .def(py::self < py::self)
    .def(py::self <= py::self)
    .def(py::self > py::self)
    .def(py::self >= py::self)
    .def("__add__", [](Ordinal const &a, Ordinal const &b) { return add(a, b); })
    .def("__mul__", [](Ordinal const &a, Ordinal const &b) { return multiply(a, b); })
    .def("left_subtract", [](Ordinal const &a, Ordinal const &b) { return left_subtract(a, b); },
         py::arg("b"), "The x with self + x == b.")
    .def("rank", [](Ordinal const &x) { return rank(x); })
    .def("successor", [](Ordinal const &x) { return successor(x); });
  py::implicitly_convertible<py::str, Ordinal>();
  py::implicitly_convertible<py::int_, Ordinal>();

  m.def("omega_pow", [](Ordinal const &a) { return omega_pow(a); });

  py::class_<OrdinalSet>(m, "OrdinalSet")
    .def("__contains__", &OrdinalSet::contains)
    .def("__str__", [](OrdinalSet const &s) { return format(s); })
    .def("__repr__", [](OrdinalSet const &s) { return "OrdinalSet('" + format(s) + "')"; })
    .def(py::self == py::self)
    .def_property_readonly("has_tail", &OrdinalSet::has_tail)
    .def_property_readonly("tail_start", &OrdinalSet::tail_start);

  py::class_<PwHomeo>(m, "PwHomeo")
    .def(py::init<>(), "The identity.")
    .def_static("parse", [](std::string const &text) { return parse_homeo(text); }, py::arg("text"))
    .def("__str__", [](PwHomeo const &g) { return format_homeo(g); })
    .def("__repr__", [](PwHomeo const &g) { return "PwHomeo.parse('''" + format_homeo(g) + "''')"; })
    .def("__call__", &PwHomeo::apply, py::arg("x"))
    .def("__matmul__", [](PwHomeo const &g, PwHomeo const &h) { return compose(g, h); },
         "g @ h applies h first.")
    .def("inverse", [](PwHomeo const &g) { return inverse(g); })
    .def("order", [](PwHomeo const &g, std::size_t cap) { return order_of(g, cap); }, py::arg("cap") = kDefaultOrderCap)
    .def_property_readonly("is_identity", &PwHomeo::is_identity)
    .def_property_readonly("support_bound", &PwHomeo::support_bound)
    .def(py::self == py::self);

  m.def("swap_points", &swap_points, py::arg("x"), py::arg("y"));
  m.def("fixed_points", &fixed_points, py::arg("g"));
  m.def("common_fixed_points", [](std::vector<PwHomeo> const &gs) { return common_fixed_points(gs); });
  m.def("find_fixed_point_above", [](std::vector<PwHomeo> const &gs, Ordinal const &alpha) {
    return find_fixed_point_above(gs, alpha);
  }, py::arg("gs"), py::arg("alpha"));
  m.def("sup_image", &sup_image, py::arg("g"), py::arg("alpha"));
  m.def("invariant_prefix", &invariant_prefix, py::arg("g"), py::arg("alpha"));
  m.def("invariant_point", &invariant_point, py::arg("g"), py::arg("alpha"));

  m.def("make_transitive", [](std::vector<std::pair<Ordinal, Ordinal>> pairs, std::vector<Ordinal> frozen) {
    return make_transitive({std::move(pairs), std::move(frozen)});
  }, py::arg("pairs"), py::arg("frozen") = std::vector<Ordinal>{});

  m.def("roelcke_decompose", [](PwHomeo const &g, std::vector<Ordinal> const &points) {
    RoelckeCertificate c = roelcke_decompose(g, points);
    py::dict d;
    d["u"] = c.u;
    d["h"] = c.h;
    d["u_prime"] = c.u_prime;
    d["sigma"] = sigma_to_py(c.sigma);
    return d;
  }, py::arg("g"), py::arg("points"));

  m.def("dense_approx", [](PwHomeo const &g, std::vector<Ordinal> const &targets, std::vector<Ordinal> const &family) {
    DenseApproximation r = dense_approx(g, targets, family);
    return py::make_tuple(r.h, r.k, r.alpha);
  }, py::arg("g"), py::arg("targets"), py::arg("family"), "Returns (h, k, alpha).");

  m.def("in_baire_T", [](PwHomeo const &g, py::int_ const &n) { return in_baire_T(g, natural(n)); },
        py::arg("g"), py::arg("n"));
  m.def("baire_density_witness", [](PwHomeo const &g, py::int_ const &n, std::vector<Ordinal> const &constraints) {
    return baire_density_witness(g, natural(n), constraints);
  }, py::arg("g"), py::arg("n"), py::arg("constraints") = std::vector<Ordinal>{});

  m.def("satisfiable", [](std::string const &text) { return satisfiable(parse_constraints(text)); },
        py::arg("constraints"), "Constraint-file text in, a satisfying injection or None out.");
  m.def("extend_to_permutation", [](PartialInjection const &h) { return extend_to_permutation(h).cycles; },
        py::arg("pairs"));

  m.def("run_cli", [](std::vector<std::string> const &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
