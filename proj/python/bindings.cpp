#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rrc/closure.hpp"
#include "rrc/families.hpp"
#include "rrc/io.hpp"
#include "rrc/oracle.hpp"

namespace py = pybind11;

namespace {

using Pair = std::pair<rrc::Exponent, rrc::Exponent>;
using Pairs = std::vector<Pair>;

Pairs to_pairs(std::span<const rrc::LatticePoint> points) {
  Pairs out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p.a, p.b);
  return out;
}

Pairs to_pairs(const rrc::MonomialIdeal& ideal) { return to_pairs(ideal.gens()); }

rrc::MonomialIdeal to_ideal(const Pairs& pairs) {
  std::vector<rrc::LatticePoint> points;
  points.reserve(pairs.size());
  for (const auto& [a, b] : pairs) points.push_back({a, b});
  return rrc::MonomialIdeal(points);
}

rrc::PrimaryStaircase to_primary(const Pairs& pairs) { return rrc::PrimaryStaircase(to_ideal(pairs)); }

py::list failures_to_list(const rrc::HypothesisVerdict& verdict) {
  py::list out;
  for (const auto& f : verdict.failures) out.append(py::make_tuple(Pair{f.generator.a, f.generator.b}, f.deficit));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ratliff-Rush closure of <x,y>-primary monomial ideals (C++ core)";

  static py::exception<rrc::HypothesisViolated> hypothesis_exc(m, "HypothesisViolated", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const rrc::HypothesisViolated& e) {
      py::object power = e.power() ? py::object(py::int_(*e.power())) : py::object(py::none());
      py::tuple args = py::make_tuple(e.what(), failures_to_list(e.verdict()), power);
      PyErr_SetObject(hypothesis_exc.ptr(), args.ptr());
    } catch (const rrc::OverflowError& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const rrc::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::enum_<rrc::QuickCheck>(m, "QuickCheck")
      .value("PROVED_RR", rrc::QuickCheck::ProvedRatliffRush)
      .value("INCONCLUSIVE", rrc::QuickCheck::Inconclusive);

  py::class_<rrc::ClosureReport>(m, "ClosureReport")
      .def_property_readonly("input", [](const rrc::ClosureReport& r) { return to_pairs(r.input.ideal()); })
      .def_property_readonly("hypothesis_ok", [](const rrc::ClosureReport& r) { return r.hypothesis.ok; })
      .def_property_readonly("s_points", [](const rrc::ClosureReport& r) { return to_pairs(r.s.points); })
      .def_property_readonly("s_minimal", [](const rrc::ClosureReport& r) { return to_pairs(r.s.minimal); })
      .def_property_readonly("t_points", [](const rrc::ClosureReport& r) { return to_pairs(r.t.points); })
      .def_property_readonly("t_minimal", [](const rrc::ClosureReport& r) { return to_pairs(r.t.minimal); })
      .def_property_readonly("ideal_s", [](const rrc::ClosureReport& r) { return to_pairs(r.ideal_s); })
      .def_property_readonly("ideal_t", [](const rrc::ClosureReport& r) { return to_pairs(r.ideal_t); })
      .def_property_readonly("closure", [](const rrc::ClosureReport& r) { return to_pairs(r.closure); })
      .def_readonly("is_ratliff_rush", &rrc::ClosureReport::is_ratliff_rush)
      .def_readonly("reduction_bound", &rrc::ClosureReport::reduction_bound)
      .def_readonly("quick_check", &rrc::ClosureReport::quick_check)
      .def("to_json", [](const rrc::ClosureReport& r) { return rrc::report_to_json(r).dump(2); })
      .def_static("from_json", [](const std::string& text) {
        try {
          return rrc::report_from_json(rrc::Json::parse(text));
        } catch (const rrc::Json::parse_error& e) {
          throw rrc::ParseError(e.what());
        }
      });

  // ideal arithmetic
  m.def("normalize", [](const Pairs& p) { return to_pairs(to_ideal(p)); }, "Minimal generators in staircase order");
  m.def("contains", [](const Pairs& ideal, Pair mono) { return rrc::contains(to_ideal(ideal), {mono.first, mono.second}); });
  m.def("intersect", [](const Pairs& i, const Pairs& j) { return to_pairs(rrc::intersect(to_ideal(i), to_ideal(j))); });
  m.def("multiply", [](const Pairs& i, const Pairs& j) { return to_pairs(rrc::multiply(to_ideal(i), to_ideal(j))); });
  m.def("power", [](const Pairs& i, std::size_t l) { return to_pairs(rrc::power(to_ideal(i), l)); });
  m.def("colon", [](const Pairs& i, const Pairs& j) { return to_pairs(rrc::colon(to_ideal(i), to_ideal(j))); });
  m.def("parse_ideal", [](const std::string& text) { return to_pairs(rrc::parse_ideal(text)); });
  m.def("format_ideal", [](const Pairs& i) { return rrc::format_ideal(to_ideal(i)); });

  // S/T and the closure engine
  m.def("enumerate_s", [](const Pairs& i) {
    auto s = rrc::enumerate_s(rrc::SemigroupDescription(to_primary(i)));
    return std::make_pair(to_pairs(s.points), to_pairs(s.minimal));
  }, "(points, minimal) of S");
  m.def("enumerate_t", [](const Pairs& i) {
    auto t = rrc::enumerate_t(rrc::SemigroupDescription(to_primary(i)));
    return std::make_pair(to_pairs(t.points), to_pairs(t.minimal));
  }, "(points, minimal) of T");
  m.def("q_bounds", [](const Pairs& i) {
    auto q = rrc::q_bounds(rrc::SemigroupDescription(to_primary(i)));
    return std::make_pair(q.q_s, q.q_t);
  });
  m.def("check_hypothesis", [](const Pairs& i) {
    auto v = rrc::check_hypothesis(to_primary(i));
    return py::make_tuple(v.ok, failures_to_list(v));
  }, "(ok, [((a, b), deficit), ...])");
  m.def("closure", [](const Pairs& i) { return rrc::ratliff_rush_closure(to_primary(i)); },
        "Full closure report; raises HypothesisViolated outside the integral-closure hypothesis");
  m.def("is_ratliff_rush", [](const Pairs& i) { return rrc::is_ratliff_rush(to_primary(i)); });
  m.def("quick_sufficient_check", [](const Pairs& i) { return rrc::quick_sufficient_check(to_primary(i)); });
  m.def("reduction_bound", [](const Pairs& i) { return rrc::reduction_bound(to_primary(i)); });

  // oracle
  m.def("colon_chain", [](const Pairs& i, std::size_t max_power) {
    auto chain = rrc::colon_chain(to_ideal(i), max_power);
    std::vector<Pairs> steps;
    for (const auto& s : chain.steps) steps.push_back(to_pairs(s));
    return std::make_pair(steps, chain.stabilized_at);
  }, "(steps, stabilized_at); steps[l-1] = I^{l+1} : I^l");
  m.def("rr_closure_oracle", [](const Pairs& i) { return to_pairs(rrc::rr_closure_oracle(to_primary(i))); });
  m.def("decomposition_check", [](const Pairs& i, std::size_t l, bool diagnostic) {
    return rrc::decomposition_check(to_primary(i), l,
                                    diagnostic ? rrc::DecompositionMode::Diagnostic : rrc::DecompositionMode::Gated);
  }, py::arg("ideal"), py::arg("l"), py::arg("diagnostic") = false);
  m.def("integral_closure_box", [](rrc::Exponent c, rrc::Exponent d) { return to_pairs(rrc::integral_closure_box(c, d)); });
  m.def("powers_rr_check", [](const Pairs& i, std::size_t l) { return rrc::powers_rr_check(to_primary(i), l); });

  // families
  m.def("family_two", [](rrc::Exponent c, rrc::Exponent d) { return to_pairs(rrc::family_two(c, d).ideal()); });
  m.def("family_three", [](rrc::Exponent c, rrc::Exponent d, rrc::Exponent u, rrc::Exponent v) {
    return to_pairs(rrc::family_three(c, d, u, v).ideal());
  });
  m.def("family_crispin", [](rrc::Exponent d, rrc::Exponent k) { return to_pairs(rrc::family_crispin(d, k).ideal()); });
  m.def("family_mk", [](rrc::Exponent mm, rrc::Exponent k) { return to_pairs(rrc::family_mk(mm, k).ideal()); });
  m.def("family_sigma", [](rrc::Exponent d, rrc::Exponent c, const Pairs& parts) {
    rrc::SigmaParams params{d, c, {}};
    for (const auto& [count, part] : parts) params.parts.push_back({count, part});
    return to_pairs(rrc::family_sigma(params).ideal());
  }, py::arg("d"), py::arg("c"), py::arg("parts"), "parts = [(n_1, c_1), ..., (n_r, c_r)]");
  m.def("family_generator_gap", [](rrc::Exponent c, rrc::Exponent d) {
    return to_pairs(rrc::family_generator_gap(c, d).ideal());
  });
}
