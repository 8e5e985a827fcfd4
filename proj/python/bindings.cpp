#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "adiaslope/df.hpp"
#include "adiaslope/errors.hpp"
#include "adiaslope/problem.hpp"

namespace py = pybind11;
using namespace adiaslope;

namespace pybind11 {
namespace detail {

// Rational <-> fractions.Fraction (ints and "p/q" strings also accepted).
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

  bool load(handle src, bool) {
    if (src.is_none()) {
      return false;
    }
    try {
      if (isinstance<str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      if (isinstance<float>(src)) {
        return false;  // exact arithmetic only
      }
      if (hasattr(src, "numerator") && hasattr(src, "denominator")) {
        const auto num = str(src.attr("numerator")).cast<std::string>();
        const auto den = str(src.attr("denominator")).cast<std::string>();
        value = Rational(Integer(num), Integer(den));
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& src, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(format_rational(src)).release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

/// Thin handle so the immutable ring can travel through python by value.
struct PyRing {
  IntersectionRing::Ptr ptr;
};

CoefficientFamily family_from_string(const std::string& name) {
  if (name == "alpha") return CoefficientFamily::alpha;
  if (name == "beta") return CoefficientFamily::beta;
  if (name == "gamma") return CoefficientFamily::gamma;
  if (name == "delta") return CoefficientFamily::delta;
  throw py::value_error("unknown coefficient family: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "adiabatic slope stability of projectivized vector bundles";

  auto base_error = py::register_exception<Error>(m, "EngineError");
  py::register_exception<SchemaError>(m, "SchemaError", base_error.ptr());
  py::register_exception<SemanticError>(m, "SemanticError", base_error.ptr());

  py::class_<PyRing>(m, "IntersectionRing")
      .def_property_readonly("dim", [](const PyRing& r) { return r.ptr->dim(); })
      .def("basis_names",
           [](const PyRing& r, int degree) { return r.ptr->basis_names(degree); })
      .def("zero", [](const PyRing& r) { return r.ptr->zero(); })
      .def("one", [](const PyRing& r) { return r.ptr->one(); })
      .def("point", [](const PyRing& r) { return r.ptr->point(); })
      .def("scalar", [](const PyRing& r, const Rational& c) { return r.ptr->scalar(c); })
      .def("divisor",
           [](const PyRing& r, const std::map<std::string, Rational>& combo) {
             return r.ptr->divisor(combo);
           })
      .def("basis_class", [](const PyRing& r, int degree, int index) {
        return r.ptr->basis_class(degree, index);
      });

  m.def(
      "make_surface_ring",
      [](const std::vector<std::string>& names,
         const std::vector<std::vector<Rational>>& matrix) {
        return PyRing{IntersectionRing::surface(names, matrix)};
      },
      py::arg("divisor_names"), py::arg("intersection_matrix"));

  py::class_<GradedClass>(m, "GradedClass")
      .def_property_readonly("ring", [](const GradedClass& c) { return PyRing{c.ring()}; })
      .def("is_zero", &GradedClass::is_zero)
      .def("is_homogeneous", &GradedClass::is_homogeneous)
      .def("component", &GradedClass::component)
      .def("pow", &GradedClass::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__mul__", [](const GradedClass& a, const Rational& c) { return a * c; })
      .def("__rmul__", [](const GradedClass& a, const Rational& c) { return a * c; })
      .def("__repr__", &GradedClass::to_string);

  m.def("mul", &mul, py::arg("a"), py::arg("b"));
  m.def("integrate", &integrate, py::arg("a"));

  py::class_<BundleData>(m, "BundleData")
      .def(py::init<int, GradedClass>(), py::arg("rank"), py::arg("total_chern"))
      .def_property_readonly("rank", &BundleData::rank)
      .def_property_readonly("total_chern", &BundleData::total_chern)
      .def("chern", &BundleData::chern)
      .def("c1", &BundleData::c1)
      .def(py::self == py::self)
      .def(py::self != py::self);

  m.def("trivial_bundle",
        [](const PyRing& r, int rank) { return trivial_bundle(r.ptr, rank); });
  m.def("line_bundle", &line_bundle);
  m.def("whitney_sum", &whitney_sum);
  m.def("dual", &dual);
  m.def("tensor_by_line", &tensor_by_line);
  m.def("segre_total", &segre_total);
  m.def("slope", &slope, py::arg("bundle"), py::arg("polarization"));
  m.def("euler_characteristic_surface", &euler_characteristic_surface, py::arg("bundle"),
        py::arg("c1B"), py::arg("c1sq_plus_c2"));

  py::class_<KPolynomial>(m, "KPolynomial")
      .def(py::init<>())
      .def(py::init<std::map<int, Rational>>(), py::arg("coefficients"))
      .def_property_readonly("coefficients",
                             [](const KPolynomial& p) { return p.coefficients(); })
      .def("coeff", &KPolynomial::coeff)
      .def("degree", &KPolynomial::degree)
      .def("is_zero", &KPolynomial::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__mul__", [](const KPolynomial& a, const Rational& c) { return a * c; })
      .def("__rmul__", [](const KPolynomial& a, const Rational& c) { return a * c; })
      .def("__repr__", &KPolynomial::to_string);

  py::class_<FiberedClass>(m, "FiberedClass")
      .def_property_readonly("fiber_dim", &FiberedClass::fiber_dim)
      .def_property_readonly("coefficients",
                             [](const FiberedClass& c) { return c.coefficients(); })
      .def("coeff", &FiberedClass::coeff)
      .def("is_zero", &FiberedClass::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__mul__", [](const FiberedClass& a, const Rational& c) { return a * c; })
      .def("__rmul__", [](const FiberedClass& a, const Rational& c) { return a * c; })
      .def("__repr__", &FiberedClass::to_string);

  m.def("lift", &lift, py::arg("beta"), py::arg("fiber_dim"));
  m.def(
      "hyperplane_power",
      [](const PyRing& r, int fiber_dim, int power) {
        return hyperplane_power(r.ptr, fiber_dim, power);
      },
      py::arg("ring"), py::arg("fiber_dim"), py::arg("power") = 1);
  m.def("fiber_mul", &fiber_mul);
  m.def("pushforward", &pushforward, py::arg("cls"), py::arg("bundle"));
  m.def("total_space_c1", &total_space_c1, py::arg("base_c1"), py::arg("bundle"));
  m.def("adiabatic_power", &adiabatic_power, py::arg("m"), py::arg("polarization"),
        py::arg("shift"), py::arg("fiber_dim"));
  m.def("integrate_total", &integrate_total, py::arg("classes_by_k"), py::arg("bundle"));
  m.def("fibered_chern_of_twist", &fibered_chern_of_twist, py::arg("bundle"),
        py::arg("fiber_dim"));
  m.def("fibered_inverse", &fibered_inverse);

  py::class_<TestConfigInput>(m, "TestConfigInput")
      .def(py::init<GradedClass, GradedClass, BundleData, BundleData>(),
           py::arg("polarization"), py::arg("base_c1"), py::arg("sub"), py::arg("quot"))
      .def_property_readonly("polarization", &TestConfigInput::polarization)
      .def_property_readonly("base_c1", &TestConfigInput::base_c1)
      .def_property_readonly("sub", &TestConfigInput::sub)
      .def_property_readonly("quot", &TestConfigInput::quot)
      .def_property_readonly("total", &TestConfigInput::total)
      .def_property_readonly("n", &TestConfigInput::n)
      .def_property_readonly("r", &TestConfigInput::r)
      .def_property_readonly("q", &TestConfigInput::q)
      .def_property_readonly("volume", &TestConfigInput::volume);

  py::class_<BracketExpansions>(m, "BracketExpansions")
      .def_readonly("alpha", &BracketExpansions::alpha)
      .def_readonly("beta", &BracketExpansions::beta)
      .def_readonly("gamma", &BracketExpansions::gamma)
      .def_readonly("delta", &BracketExpansions::delta);

  m.def("bracket_expansions", &bracket_expansions);
  m.def("futaki_k_polynomial", &futaki_k_polynomial);
  m.def(
      "closed_form_coefficient",
      [](const TestConfigInput& input, const std::string& which, int i) {
        return closed_form_coefficient(input, family_from_string(which), i);
      },
      py::arg("input"), py::arg("which"), py::arg("i"));

  py::class_<CrosscheckEntry>(m, "CrosscheckEntry")
      .def_readonly("name", &CrosscheckEntry::name)
      .def_readonly("engine", &CrosscheckEntry::engine)
      .def_readonly("closed_form", &CrosscheckEntry::closed_form)
      .def_readonly("equal", &CrosscheckEntry::equal)
      .def_readonly("note", &CrosscheckEntry::note);

  py::class_<CrosscheckReport>(m, "CrosscheckReport")
      .def_readonly("entries", &CrosscheckReport::entries)
      .def_readonly("cancellation", &CrosscheckReport::cancellation)
      .def_readonly("cancellation_ok", &CrosscheckReport::cancellation_ok)
      .def("all_match", &CrosscheckReport::all_match);

  m.def("crosscheck", &crosscheck);

  py::class_<StabilityCall>(m, "StabilityCall")
      .def_readonly("leading_index", &StabilityCall::leading_index)
      .def_property_readonly("verdict",
                             [](const StabilityCall& c) { return to_string(c.verdict); });

  m.def("stability_verdict", &stability_verdict, py::arg("poly"), py::arg("top_power"));
  m.def("filtration_combine", &filtration_combine, py::arg("terms"));

  py::class_<SlopeSet>(m, "SlopeSet")
      .def_readonly("sub_L", &SlopeSet::sub_L)
      .def_readonly("total_L", &SlopeSet::total_L)
      .def_readonly("sub_c1B", &SlopeSet::sub_c1B)
      .def_readonly("total_c1B", &SlopeSet::total_c1B);

  py::class_<DFReport>(m, "DFReport")
      .def_readonly("fut_poly", &DFReport::fut_poly)
      .def_readonly("a", &DFReport::a)
      .def_readonly("normalized", &DFReport::normalized)
      .def_readonly("scaled", &DFReport::scaled)
      .def_readonly("slopes", &DFReport::slopes)
      .def_readonly("leading_index", &DFReport::leading_index)
      .def_property_readonly("verdict", [](const DFReport& r) { return to_string(r.verdict); })
      .def_readonly("volume", &DFReport::volume)
      .def_readonly("n", &DFReport::n)
      .def_readonly("r", &DFReport::r);

  m.def("df_report", &df_report);

  m.def(
      "run_problem",
      [](const std::string& document, const std::string& command) {
        const ProblemSpec spec = parse_problem_text(document);
        nlohmann::json report;
        if (command == "df") {
          report = run_df(spec);
        } else if (command == "chi") {
          report = run_chi(spec);
        } else if (command == "slope") {
          report = run_slope(spec);
        } else if (command == "crosscheck") {
          report = run_crosscheck(spec);
        } else {
          throw py::value_error("unknown command: " + command);
        }
        return report.dump(2);
      },
      py::arg("document"), py::arg("command") = "df",
      "Parse a JSON problem description and return the report as JSON text.");

  m.def(
      "canonicalize_problem",
      [](const std::string& document) {
        return serialize_problem(parse_problem_text(document)).dump(2);
      },
      py::arg("document"), "Validate a problem description and return its canonical form.");
}
