#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hirz/cohom.hpp"
#include "hirz/curves.hpp"
#include "hirz/jobs.hpp"
#include "hirz/lattice.hpp"
#include "hirz/negativity.hpp"
#include "hirz/seshadri.hpp"
#include "hirz/verify.hpp"

namespace py = pybind11;
using namespace hirz;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.num().str())), py::int_(py::str(q.den().str())));
}

py::dict result_dict(const SeshadriResult& r) {
  py::dict d;
  d["epsilon"] = to_fraction(r.epsilon);
  d["argmin_classes"] = r.argmin_classes;
  d["branch"] = r.branch;
  d["tied_branches"] = r.tied_branches;
  d["conditional_on_ampleness"] = r.conditional_on_ampleness;
  return d;
}

PolarizationL make_l(std::int64_t alpha, std::int64_t beta, std::vector<std::int64_t> mu,
                     bool ample_asserted) {
  PolarizationL l;
  l.alpha = alpha;
  l.beta = beta;
  l.mu = std::move(mu);
  l.ample_asserted = ample_asserted;
  return l;
}

py::object bound_value(const BoundValue& v) {
  if (std::holds_alternative<Exempt>(v)) return py::none();
  return py::int_(std::get<std::int64_t>(v));
}

}  // namespace

PYBIND11_MODULE(_hirz, m) {
  m.doc() = "Seshadri constants and negative curves on blown-up ruled surfaces";

  static py::exception<Error> base(m, "HirzError");
  static py::exception<StructuralError> usage(m, "UsageError", base.ptr());
  static py::exception<HypothesisError> hypothesis(m, "HypothesisError", base.ptr());
  static py::exception<UnsupportedRangeError> unsupported(m, "UnsupportedRangeError", base.ptr());
  static py::exception<InvariantViolation> invariant(m, "InvariantViolation", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::Usage: py::set_error(usage, e.what()); break;
        case ErrorKind::Hypothesis: py::set_error(hypothesis, e.what()); break;
        case ErrorKind::UnsupportedRange: py::set_error(unsupported, e.what()); break;
        case ErrorKind::Invariant: py::set_error(invariant, e.what()); break;
      }
    }
  });

  py::class_<SurfaceContext>(m, "SurfaceContext")
      .def_static("hirzebruch", &SurfaceContext::hirzebruch, py::arg("e"), py::arg("r"),
                  py::arg("extra_point") = false, py::arg("very_general") = true)
      .def_static("ruled", &SurfaceContext::ruled, py::arg("g"), py::arg("e"), py::arg("r"),
                  py::arg("extra_point") = false, py::arg("very_general") = true)
      .def_readonly("e", &SurfaceContext::e)
      .def_readonly("g", &SurfaceContext::g)
      .def_readonly("r", &SurfaceContext::r)
      .def_readonly("has_extra_point", &SurfaceContext::has_extra_point)
      .def_property_readonly("is_ruled",
                             [](const SurfaceContext& c) { return c.kind == SurfaceKind::Ruled; })
      .def("with_extra_point", &SurfaceContext::with_extra_point)
      .def(py::self == py::self);

  py::class_<DivisorClass>(m, "DivisorClass")
      .def(py::init([](std::int64_t a, std::int64_t b, std::vector<std::int64_t> mult,
                       std::optional<std::int64_t> m_x) {
             return DivisorClass{a, b, std::move(mult), m_x};
           }),
           py::arg("a"), py::arg("b"), py::arg("m") = std::vector<std::int64_t>{},
           py::arg("m_x") = py::none())
      .def_readwrite("a", &DivisorClass::a)
      .def_readwrite("b", &DivisorClass::b)
      .def_readwrite("m", &DivisorClass::m)
      .def_readwrite("m_x", &DivisorClass::m_x)
      .def("__str__", &DivisorClass::to_string)
      .def("__repr__",
           [](const DivisorClass& d) { return "DivisorClass(" + d.to_string() + ")"; })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self);

  m.def("intersect", &intersect, py::arg("ctx"), py::arg("d1"), py::arg("d2"));
  m.def("self_intersection", &self_intersection, py::arg("ctx"), py::arg("d"));
  m.def("canonical_class", &canonical_class, py::arg("ctx"));
  m.def("arithmetic_genus",
        [](const SurfaceContext& ctx, const DivisorClass& c) {
          return to_fraction(arithmetic_genus(ctx, c));
        },
        py::arg("ctx"), py::arg("c"));
  m.def("h0", &h0_fe, py::arg("e"), py::arg("a"), py::arg("b"),
        "h^0(F_e, aC_e + bf) from the pushforward splitting.");

  m.def("enumerate_classes",
        [](std::int64_t e, std::size_t r, int target) {
          const auto cat = target == -1   ? enumerate_minus_one_classes(e, r)
                           : target == -2 ? enumerate_minus_two_classes(e, r)
                                          : throw StructuralError("target must be -1 or -2");
          py::list out;
          for (const auto& entry : cat) {
            py::dict d;
            d["divisor"] = entry.divisor;
            d["family"] = to_string(entry.family.label);
            d["self_intersection"] = entry.self_intersection;
            out.append(d);
          }
          return out;
        },
        py::arg("e"), py::arg("r"), py::arg("target") = -1);

  m.def("seshadri",
        [](std::int64_t e, std::int64_t alpha, std::int64_t beta, std::vector<std::int64_t> mu,
           bool very_general, bool ample_asserted) {
          const auto r = mu.size();
          const auto ctx = SurfaceContext::hirzebruch(e, r, false, very_general);
          const auto l = make_l(alpha, beta, std::move(mu), ample_asserted);
          const auto off = static_cast<std::int64_t>(r) - e;
          if (off == 2) return result_dict(epsilon_r_e2(ctx, l));
          if (off == 3) return result_dict(epsilon_r_e3(ctx, l));
          throw UnsupportedRangeError("closed forms cover r = e+2 and r = e+3 only");
        },
        py::arg("e"), py::arg("alpha"), py::arg("beta"), py::arg("mu"),
        py::arg("very_general") = true, py::arg("ample_asserted") = true);

  m.def("seshadri_ruled",
        [](std::int64_t g, std::int64_t e, std::int64_t alpha, std::int64_t beta,
           std::vector<std::int64_t> mu, int ruled_case, std::optional<std::size_t> point_index) {
          if (ruled_case < 1 || ruled_case > 6) throw StructuralError("case must be in 1..6");
          const auto ctx = SurfaceContext::ruled(g, e, mu.size());
          RuledPosition pos;
          pos.kind = static_cast<RuledCase>(ruled_case);
          if (point_index) {
            if (*point_index < 1) throw StructuralError("point_index is one-based");
            pos.i = *point_index - 1;
          }
          return result_dict(epsilon_ruled(ctx, make_l(alpha, beta, std::move(mu), true), pos));
        },
        py::arg("g"), py::arg("e"), py::arg("alpha"), py::arg("beta"), py::arg("mu"),
        py::arg("case") = 1, py::arg("point_index") = py::none());

  m.def("wbnc_bound",
        [](std::int64_t e, const DivisorClass& c, std::optional<std::int64_t> g) {
          const auto r = static_cast<std::int64_t>(c.m.size());
          return bound_value(g ? wbnc_bound_ruled(*g, e, r, c) : wbnc_bound_hirzebruch(e, r, c));
        },
        py::arg("e"), py::arg("c"), py::arg("g") = py::none(),
        "Conjectured lower bound for C^2, or None for exceptional divisors.");

  m.def("run_job",
        [](const std::string& request) {
          const auto out = run_job(parse_job_json(request), true);
          return py::make_tuple(out.exit_code, out.out, out.err);
        },
        py::arg("request"), "Runs one JSON request; returns (exit_code, stdout, stderr).");

  m.def("run_check",
        [](int id, std::uint64_t seed, bool quick) {
          VerifyOptions opts;
          opts.seed = seed;
          opts.quick = quick;
          const auto r = run_check(id, opts);
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["summary"] = r.summary;
          d["details"] = r.details;
          return d;
        },
        py::arg("id"), py::arg("seed") = VerifyOptions{}.seed, py::arg("quick") = true);

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
}
