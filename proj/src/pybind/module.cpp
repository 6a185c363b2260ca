#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detlab/explab.hpp"

namespace py = pybind11;
using namespace detlab;

namespace {

EntrySet set_from_arg(const FiniteField& F, const py::object& spec,
                      std::uint64_t seed) {
  if (py::isinstance<py::str>(spec))
    return parse_set(F, spec.cast<std::string>(), seed);
  return make_list_set(F, spec.cast<std::vector<Elem>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact determinant-distribution laboratory over finite fields";

  py::register_exception<BudgetError>(m, "BudgetError");

  py::class_<FiniteField>(m, "FiniteField")
      .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("p"),
           py::arg("r") = 1)
      .def_property_readonly("p", &FiniteField::p)
      .def_property_readonly("r", &FiniteField::r)
      .def_property_readonly("q", &FiniteField::q)
      .def_property_readonly("modulus", &FiniteField::modulus)
      .def("add", &FiniteField::add)
      .def("sub", &FiniteField::sub)
      .def("neg", &FiniteField::neg)
      .def("mul", &FiniteField::mul)
      .def("inv", &FiniteField::inv)
      .def("pow", &FiniteField::pow)
      .def("trace", &FiniteField::trace)
      .def("chi", &FiniteField::chi)
      .def("__repr__", &FiniteField::describe);

  m.def(
      "entry_set",
      [](const FiniteField& F, const py::object& spec, std::uint64_t seed) {
        const EntrySet A = set_from_arg(F, spec, seed);
        return py::make_tuple(A.members, A.descriptor);
      },
      py::arg("field"), py::arg("spec"), py::arg("seed") = 1);

  m.def(
      "count_distribution",
      [](const FiniteField& F, const py::object& spec, int d,
         const std::string& method, std::uint64_t seed, std::uint64_t budget,
         int workers) {
        const EntrySet A = set_from_arg(F, spec, seed);
        const DistributionTable table =
            method == "brute" ? count_bruteforce(F, A, d, budget, workers)
                              : count_via_cofactors(F, A, d, budget, workers);
        return table.counts;
      },
      py::arg("field"), py::arg("set"), py::arg("d"),
      py::arg("method") = "cofactor", py::arg("seed") = 1,
      py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);

  m.def(
      "pair_statistic",
      [](const FiniteField& F, const py::object& spec, int d,
         std::uint64_t seed, std::uint64_t budget) {
        const EntrySet A = set_from_arg(F, spec, seed);
        return pair_statistic_S(count_via_cofactors(F, A, d, budget)).str();
      },
      py::arg("field"), py::arg("set"), py::arg("d"), py::arg("seed") = 1,
      py::arg("budget") = kDefaultBudget);

  m.def(
      "recursion_report",
      [](const FiniteField& F, const py::object& spec, int d,
         std::uint64_t seed, std::uint64_t budget) {
        const EntrySet A = set_from_arg(F, spec, seed);
        json reports = json::array();
        for (const auto& rep :
             {check_g_pointwise(F, A, d, budget),
              check_tail_sum(F, A, d, budget),
              check_lemma1_and_e7(F, A, d, budget),
              check_m4_chain(F, A, d, budget)})
          reports.push_back(report_json(rep));
        return reports.dump();
      },
      py::arg("field"), py::arg("set"), py::arg("d"), py::arg("seed") = 1,
      py::arg("budget") = kDefaultBudget);

  m.def(
      "find_3ap",
      [](const FiniteField& F, const py::object& spec_a,
         const py::object& spec_b, std::uint64_t seed) -> py::object {
        const EntrySet A = set_from_arg(F, spec_a, seed);
        const EntrySet B = set_from_arg(F, spec_b, seed + 1);
        const auto w = find_3ap_in_productset(F, A, B);
        if (!w) return py::none();
        py::dict out;
        out["start"] = w->start;
        out["delta"] = w->delta;
        out["terms"] = w->terms;
        out["factors_a"] = w->factors_a;
        out["factors_b"] = w->factors_b;
        return out;
      },
      py::arg("field"), py::arg("set_a"), py::arg("set_b"),
      py::arg("seed") = 1);

  m.def(
      "verify_all",
      [](const FiniteField& F, const py::object& spec, int d,
         std::uint64_t seed, std::uint64_t budget, int workers) {
        const EntrySet A = set_from_arg(F, spec, seed);
        const VerifyAllResult res = verify_all(F, A, d, seed, budget, workers);
        return py::make_tuple(res.pass, res.data.dump());
      },
      py::arg("field"), py::arg("set"), py::arg("d"), py::arg("seed") = 1,
      py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
}
