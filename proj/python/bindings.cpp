#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mumford/cache.hpp"
#include "mumford/expand.hpp"
#include "mumford/localization.hpp"
#include "mumford/serialize.hpp"
#include "mumford/version.hpp"

namespace py = pybind11;

namespace {

std::string verify_json(const std::string& suite, int gmax, int jmax) {
  using mumford::RelationReport;
  std::vector<RelationReport> reports;
  auto run = [&](const std::string& name) {
    if (name == "cprime") {
      for (int g = 1; g <= gmax; ++g)
        for (int h = 1; h <= g; ++h) reports.push_back(mumford::verify_cprime(g, h));
    } else if (name == "replay") {
      for (int g = 1; g <= gmax; ++g) reports.push_back(mumford::replay_derivation(g));
    } else if (name == "remark1") {
      for (int g = 1; g <= std::min(gmax, 4); ++g)
        for (int j = 1; j <= jmax; ++j) reports.push_back(mumford::higher_coefficient_extract(g, j));
    } else if (name == "remark3") {
      for (int g = 2; g <= gmax; ++g) reports.push_back(mumford::kappa_relation(g));
    } else {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  };
  if (suite == "all") {
    run("cprime");
    run("replay");
    run("remark1");
    run("remark3");
  } else {
    run(suite);
  }
  bool ok = true;
  mumford::json arr = mumford::json::array();
  for (const auto& rep : reports) {
    if (rep.checked && !rep.ok) ok = false;
    arr.push_back(mumford::relation_report_to_json(rep));
  }
  return mumford::json{{"ok", ok}, {"reports", arr}}.dump();
}

}  // namespace

PYBIND11_MODULE(_mumford, m) {
  m.doc() = "Boundary-strata calculus for Mumford-type classes on the moduli "
            "of 1-pointed stable curves";

  m.def("engine_version", [] { return std::string(mumford::kEngineVersion); });

  m.def(
      "relation_text", [](int g) { return mumford::class_to_text(mumford::boundary_formula(g)); },
      py::arg("genus"), "The boundary formula for the Mumford-type class, as text.");
  m.def(
      "relation_latex", [](int g) { return mumford::class_to_latex(mumford::boundary_formula(g)); },
      py::arg("genus"));
  m.def(
      "relation_json",
      [](int g) { return mumford::class_to_json(mumford::boundary_formula(g)).dump(); },
      py::arg("genus"));

  m.def(
      "mumford_class_text",
      [](int g) { return mumford::class_to_text(mumford::mumford_lhs(g)); },
      py::arg("genus"), "psi^g - lambda_1 psi^{g-1} + ... as text.");
  m.def(
      "mumford_class_latex",
      [](int g) { return mumford::class_to_latex(mumford::mumford_lhs(g)); },
      py::arg("genus"));

  m.def(
      "expand_json",
      [](int g, long max_steps) {
        mumford::Expander ex(max_steps);
        return mumford::expansion_report_to_json(ex.expand_full(g)).dump();
      },
      py::arg("genus"), py::arg("max_steps") = 1000000L,
      "Recursively simplify the boundary formula; returns the expansion "
      "report as JSON. A blown step budget comes back with fixpoint=false "
      "and the partial state.");

  m.def("verify_json", &verify_json, py::arg("suite") = "all", py::arg("gmax") = 6,
        py::arg("jmax") = 3,
        "Run a verification sweep; returns {\"ok\": bool, \"reports\": [...]} as JSON.");

  m.def(
      "canonicalize_class_json",
      [](const std::string& doc) {
        return mumford::class_to_json(
                   mumford::class_from_json(mumford::json::parse(doc)))
            .dump();
      },
      py::arg("doc"),
      "Parse a class document, collect terms by canonical form, and re-emit "
      "the canonical serialization.");
}
