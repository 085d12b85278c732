#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "goldilocks/chambers.hpp"
#include "goldilocks/classify.hpp"
#include "goldilocks/selftest.hpp"

namespace py = pybind11;
using namespace goldilocks;

namespace {

genus_class genus_from_string(const std::string& text) {
  if (text == "0" || text == "zero") return genus_class::zero;
  if (text == "positive" || text == "g+") return genus_class::positive;
  throw parse_error("genus must be '0' or 'positive'");
}

engine_kind engine_from_string(const std::string& text) {
  if (text == "direct") return engine_kind::direct;
  if (text == "sd") return engine_kind::sd;
  if (text == "both") return engine_kind::both;
  throw parse_error("engine must be 'direct', 'sd' or 'both'");
}

enumeration_budget make_budget(int workers) {
  enumeration_budget budget;
  budget.workers = workers;
  return budget;
}

weight_vector weights_from_strings(const std::vector<std::string>& weights,
                                   const std::string& genus) {
  weight_vector wv;
  wv.genus = genus_from_string(genus);
  for (const std::string& text : weights) wv.w.push_back(rational_from_string(text));
  return wv;
}

py::object realization_to_py(const std::optional<realization>& r) {
  if (!r) return py::none();
  py::dict out;
  py::list w;
  for (const mpq_class& wi : r->w()) w.append(rational_to_string(wi));
  out["w"] = w;
  out["theta"] = rational_to_string(r->theta());
  out["positive"] = r->positive();
  out["small"] = r->small();
  out["ample"] = r->ample();
  return out;
}

py::object certificate_to_py(const std::optional<certificate>& cert) {
  if (!cert) return py::none();
  py::dict out;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, not_separable_certificate>) {
          out["kind"] = "not_separable";
          py::list values;
          for (const mpz_class& v : c.witness.c) values.append(v.get_str());
          out["c"] = values;
        } else if constexpr (std::is_same_v<T, not_positive_certificate>) {
          out["kind"] = "not_positive";
          out["x_code"] = c.x_code;
          out["y_code"] = c.y_code;
        } else if constexpr (std::is_same_v<T, not_small_certificate>) {
          out["kind"] = "not_small";
          out["index"] = c.index;
        } else {
          out["kind"] = "not_ample";
          out["x_code"] = c.x_code;
        }
      },
      *cert);
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact chamber counting for spaces of admissible weights via "
            "threshold-function classification";

  py::register_exception<budget_error>(m, "BudgetError");
  py::register_exception<engine_mismatch_error>(m, "EngineMismatchError");
  static py::exception<error> base_error(m, "GoldilocksError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const budget_error&) {
      throw; // handled by the registered exception above
    } catch (const engine_mismatch_error&) {
      throw;
    } catch (const error& e) {
      py::set_error(base_error, e.what());
    }
  });

  py::class_<boolean_function>(m, "BooleanFunction")
      .def(py::init([](const std::string& table) { return boolean_function::parse(table); }),
           py::arg("truth_table"))
      .def_property_readonly("arity", &boolean_function::arity)
      .def("to_binary", &boolean_function::to_binary)
      .def("to_hex", &boolean_function::to_hex)
      .def("bit", &boolean_function::bit, py::arg("code"))
      .def("__str__", &boolean_function::to_binary)
      .def("__repr__",
           [](const boolean_function& f) {
             return "BooleanFunction(\"" + f.to_binary() + "\")";
           })
      .def("__eq__",
           [](const boolean_function& a, const boolean_function& b) { return a == b; })
      .def("__hash__",
           [](const boolean_function& f) { return py::hash(py::str(f.to_binary())); });

  m.def("dual", &dual, py::arg("f"));
  m.def("self_dualize", &self_dualize, py::arg("f"));
  m.def("anti_self_dualize", &anti_self_dualize, py::arg("f"));
  m.def("is_self_dual", &is_self_dual, py::arg("f"));
  m.def(
      "u_complement",
      [](const boolean_function& f, std::uint32_t u) { return u_complement(f, u); },
      py::arg("f"), py::arg("u_code"));
  m.def("permute", &permute, py::arg("f"), py::arg("sigma"));
  m.def("reduce", &reduce, py::arg("f"), py::arg("i"), py::arg("s"));
  m.def("is_positive", &is_positive, py::arg("f"));
  m.def("is_small", &is_small, py::arg("f"));
  m.def("is_ample", &is_ample, py::arg("f"));
  m.def("is_threshold", &is_threshold, py::arg("f"));
  m.def("is_semi_goldilocks", &is_semi_goldilocks, py::arg("f"));
  m.def("is_goldilocks", &is_goldilocks, py::arg("f"));

  m.def(
      "chow",
      [](const boolean_function& f) {
        const chow_parameters cp = chow(f);
        return py::make_tuple(cp.m, cp.a);
      },
      py::arg("f"), "Chow parameters (m, [a_1..a_n]).");
  m.def(
      "weak_variables",
      [](const boolean_function& f) {
        const std::set<int> weak = weak_variables(f);
        return std::vector<int>(weak.begin(), weak.end());
      },
      py::arg("f"));
  m.def("degree", &degree, py::arg("f"));
  m.def(
      "canonicalize",
      [](const boolean_function& f) {
        const canonical_form cf = canonicalize(f);
        py::dict out;
        out["representative"] = cf.representative;
        out["sorting_permutation"] = cf.sorting_permutation;
        out["multiplicities"] = cf.multiplicities;
        return out;
      },
      py::arg("f"));
  m.def(
      "orbit_size", [](const boolean_function& f) { return orbit_size(f); }, py::arg("f"));

  m.def(
      "find_realization",
      [](const boolean_function& f, bool positive, bool small, bool ample) -> py::object {
        constraint_set cs;
        cs.positive = positive;
        cs.small = small;
        cs.ample = ample;
        const realization_result rr = find_realization(f, cs);
        py::dict out;
        out["feasible"] = rr.value.has_value();
        out["realization"] = realization_to_py(rr.value);
        if (rr.witness) {
          py::list values;
          for (const mpz_class& v : rr.witness->c) values.append(v.get_str());
          out["witness"] = values;
        } else {
          out["witness"] = py::none();
        }
        return out;
      },
      py::arg("f"), py::arg("positive") = false, py::arg("small") = false,
      py::arg("ample") = false);

  m.def(
      "classify",
      [](const boolean_function& f) {
        const class_report r = classify(f);
        py::dict out;
        out["is_ltf"] = r.is_ltf;
        out["positive"] = r.positive;
        out["small"] = r.small;
        out["ample"] = r.ample;
        out["semi_goldilocks"] = r.semi_goldilocks;
        out["goldilocks"] = r.goldilocks;
        out["degree"] = r.degree;
        out["chow"] = r.chow.to_string();
        out["realization"] = realization_to_py(r.witness_realization);
        out["certificate"] = certificate_to_py(r.failure_certificate);
        return out;
      },
      py::arg("f"));

  m.def(
      "count_chambers",
      [](int n, const std::string& genus, const std::string& engine, int workers) {
        const count_row row = count_chambers(n, genus_from_string(genus),
                                             engine_from_string(engine), make_budget(workers));
        return py::make_tuple(row.count, row.orbit_count);
      },
      py::arg("n"), py::arg("genus") = "positive", py::arg("engine") = "both",
      py::arg("workers") = 1, "Chamber count and count up to S_n.");

  m.def(
      "phi_map",
      [](const std::vector<std::string>& weights, const std::string& genus) {
        return phi_map(weights_from_strings(weights, genus));
      },
      py::arg("weights"), py::arg("genus") = "positive",
      "Threshold function of an admissible weight vector (weights as 'p/q' strings).");
  m.def(
      "same_chamber",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b,
         const std::string& genus) {
        return same_chamber(weights_from_strings(a, genus), weights_from_strings(b, genus));
      },
      py::arg("a"), py::arg("b"), py::arg("genus") = "positive");
  m.def(
      "chamber_representative",
      [](const boolean_function& f, const std::string& genus) {
        const weight_vector wv = chamber_representative(f, genus_from_string(genus));
        std::vector<std::string> out;
        for (const mpq_class& wi : wv.w) out.push_back(rational_to_string(wi));
        return out;
      },
      py::arg("f"), py::arg("genus") = "positive");

  m.def(
      "identity_check",
      [](int n) {
        const identity_report r = ltf_identity_check(n);
        return py::make_tuple(py::int_(py::str(r.lhs.get_str())),
                              py::int_(py::str(r.rhs.get_str())), r.ok);
      },
      py::arg("n"));
  m.def(
      "irmatov_estimate",
      [](int n) { return py::int_(py::str(irmatov_estimate(n).get_str())); }, py::arg("n"));
  m.def(
      "ratio_report",
      [](int n) {
        const asymptotics_report r = ratio_report(n);
        py::dict out;
        out["n"] = r.n;
        out["estimate"] = py::int_(py::str(r.estimate.get_str()));
        out["genus_ratio"] = rational_to_string(r.genus_ratio);
        out["estimate_ratio"] = rational_to_string(r.estimate_ratio);
        return out;
      },
      py::arg("n"));

  m.def(
      "selftest",
      [](int workers) {
        const selftest_report r = run_selftest(workers);
        return py::make_tuple(r.checks, r.failures);
      },
      py::arg("workers") = 1, "Runs the exhaustive oracle suites; returns (checks, failures).");

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
