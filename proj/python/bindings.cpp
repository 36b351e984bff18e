#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prefixlab/bitstring.hpp"
#include "prefixlab/census.hpp"
#include "prefixlab/dyadic.hpp"
#include "prefixlab/error.hpp"
#include "prefixlab/machine.hpp"
#include "prefixlab/transform.hpp"
#include "prefixlab/universal.hpp"

namespace py = pybind11;
using namespace prefixlab;

namespace {

// Strings cross the boundary in the file encoding: '0'/'1', "-" for λ.
BitString toBits(const std::string& text) { return BitString::parse(text); }
std::string toText(const BitString& s) { return s.toText(); }

std::vector<BitString> toBitsList(const std::vector<std::string>& texts) {
  std::vector<BitString> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(toBits(t));
  return out;
}

std::vector<std::string> toTextList(const std::vector<BitString>& strings) {
  std::vector<std::string> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(toText(s));
  return out;
}

py::int_ toPyInt(const Natural& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Natural fromPyInt(const py::int_& n) { return Natural(py::str(n).cast<std::string>()); }

py::object toFraction(const Dyadic& d) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(toPyInt(d.numerator()), toPyInt(Natural(1) << d.exponent()));
}

py::object complexityToPy(const Complexity& c) {
  return c.isFinite() ? py::object(py::int_(c.value())) : py::object(py::none());
}

MachineGraph graphFromPairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Entry> entries;
  entries.reserve(pairs.size());
  for (const auto& [cw, sym] : pairs) entries.push_back({toBits(cw), toBits(sym)});
  return MachineGraph(std::move(entries));
}

Budgets makeBudgets(std::size_t maxLen, std::uint64_t maxSteps, std::optional<std::uint64_t> ceiling) {
  return {maxLen, maxSteps, ceiling.value_or(defaultCeiling())};
}

py::dict estimateToPy(const ComplexityEstimate& e) {
  py::dict out;
  out["upper_bound"] = complexityToPy(e.upperBound);
  out["witness"] = e.witness ? py::object(py::str(toText(*e.witness))) : py::object(py::none());
  return out;
}

}  // namespace

PYBIND11_MODULE(_prefixlab, m) {
  m.doc() = "Finite presentations of prefix-free machines";

  static py::exception<Error> baseError(m, "PrefixlabError", PyExc_RuntimeError);
  static py::exception<ParseError> parseError(m, "ParseError", baseError.ptr());
  static py::exception<InvalidMachineError> invalidMachine(m, "InvalidMachineError", baseError.ptr());
  static py::exception<BudgetOverflowError> budgetOverflow(m, "BudgetOverflowError", baseError.ptr());
  static py::exception<PreconditionError> precondition(m, "PreconditionError", baseError.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parseError, e.what());
    } catch (const InvalidMachineError& e) {
      py::set_error(invalidMachine, e.what());
    } catch (const BudgetOverflowError& e) {
      py::set_error(budgetOverflow, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(precondition, e.what());
    } catch (const Error& e) {
      py::set_error(baseError, e.what());
    }
  });

  // bitstring
  m.def("rank_of", [](const std::string& s) { return toPyInt(rankOf(toBits(s))); });
  m.def("string_of", [](const py::int_& n) { return toText(stringOf(fromPyInt(n))); });
  m.def("pair", [](const std::string& s, const std::string& t) { return toText(pair(toBits(s), toBits(t))); });
  m.def("unpair", [](const std::string& u) {
    auto [s, t] = unpair(toBits(u));
    return std::pair{toText(s), toText(t)};
  });

  // machine
  m.def("check_prefix_free", [](const std::vector<std::string>& words) {
    return checkPrefixFree(toBitsList(words));
  });
  m.def("find_prefix_violation",
        [](const std::vector<std::string>& words) -> std::optional<std::pair<std::string, std::string>> {
          auto bad = findPrefixViolation(toBitsList(words));
          if (!bad) return std::nullopt;
          return std::pair{toText(bad->first), toText(bad->second)};
        });
  m.def("kraft_sum", [](const std::vector<std::string>& words) { return toFraction(kraftSum(toBitsList(words))); });

  py::class_<MachineGraph>(m, "MachineGraph")
      .def(py::init<>())
      .def(py::init(&graphFromPairs), py::arg("entries"))
      .def_static("load", [](const std::string& text) { return loadGraph(text); })
      .def("to_text", &MachineGraph::toText)
      .def("entries",
           [](const MachineGraph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& e : g.entries()) out.emplace_back(toText(e.codeword), toText(e.symbol));
             return out;
           })
      .def("domain", [](const MachineGraph& g) { return toTextList(g.domain()); })
      .def("range", [](const MachineGraph& g) { return toTextList(g.range()); })
      .def("evaluate",
           [](const MachineGraph& g, const std::string& p) -> std::optional<std::string> {
             auto s = g.evaluate(toBits(p));
             if (!s) return std::nullopt;
             return toText(*s);
           })
      .def("preimage", [](const MachineGraph& g, const std::string& s) { return toTextList(g.preimage(toBits(s))); })
      .def("complexity_of", [](const MachineGraph& g, const std::string& s) { return complexityToPy(g.complexityOf(toBits(s))); })
      .def("canonical_program",
           [](const MachineGraph& g, const std::string& s) -> std::optional<std::string> {
             auto p = g.canonicalProgram(toBits(s));
             if (!p) return std::nullopt;
             return toText(*p);
           })
      .def("kraft", [](const MachineGraph& g) { return toFraction(g.kraft()); })
      .def("__len__", &MachineGraph::size)
      .def("__eq__", [](const MachineGraph& a, const MachineGraph& b) { return a == b; });

  m.def("counting_bound_holds", &countingBoundHolds, py::arg("machine"), py::arg("max_n") = 16);

  // universal
  m.def("literal_program", [](const std::string& s) { return toText(literalProgram(toBits(s))); });
  m.def(
      "run_u",
      [](const std::string& p, std::uint64_t maxSteps) {
        const RunResult r = runU(toBits(p), maxSteps);
        py::dict out;
        out["halted"] = r.halted;
        out["output"] = r.output ? py::object(py::str(toText(*r.output))) : py::object(py::none());
        out["bits_read"] = r.bitsRead;
        out["steps"] = r.steps;
        return out;
      },
      py::arg("program"), py::arg("max_steps"));
  m.def(
      "enumerate",
      [](std::size_t maxLen, std::uint64_t maxSteps, std::optional<std::uint64_t> ceiling) {
        return enumerate(makeBudgets(maxLen, maxSteps, ceiling));
      },
      py::arg("max_len"), py::arg("max_steps"), py::arg("ceiling") = py::none());

  py::class_<BudgetedUniversal>(m, "BudgetedUniversal")
      .def(py::init([](std::size_t maxLen, std::uint64_t maxSteps, std::optional<std::uint64_t> ceiling) {
             return BudgetedUniversal(makeBudgets(maxLen, maxSteps, ceiling));
           }),
           py::arg("max_len"), py::arg("max_steps"), py::arg("ceiling") = py::none())
      .def_property_readonly("graph", &BudgetedUniversal::graph)
      .def("approx_h", [](const BudgetedUniversal& u, const std::string& s) { return estimateToPy(u.approxH(toBits(s))); })
      .def("approx_joint_h",
           [](const BudgetedUniversal& u, const py::int_& n, const std::string& s) {
             return estimateToPy(u.approxJointH(fromPyInt(n), toBits(s)));
           })
      .def("approx_m", [](const BudgetedUniversal& u) {
        py::dict out;
        for (const auto& [s, mass] : u.approxM().mass) out[py::str(toText(s))] = toFraction(mass);
        return out;
      });

  // transform
  m.def("finite_preimage_transform", [](const MachineGraph& c) {
    FinitePreimageResult r = finitePreimageTransform(c);
    py::dict bound;
    for (const auto& [s, f] : r.bound) bound[py::str(toText(s))] = toPyInt(f);
    return py::make_tuple(std::move(r.machine), bound);
  });
  m.def("infinite_preimage_transform", [](const MachineGraph& v, std::size_t budget) {
    return infinitePreimageTransform(v, budget);
  }, py::arg("machine"), py::arg("per_symbol_budget"));
  m.def(
      "dense_optimal_construction",
      [](const MachineGraph& u, std::size_t maxLen, std::optional<std::uint64_t> ceiling) {
        return denseOptimalConstruction(u, maxLen, ceiling.value_or(defaultCeiling()));
      },
      py::arg("u_graph"), py::arg("max_codeword_length"), py::arg("ceiling") = py::none());
  m.def("semi_measure_of_census", [](const MachineGraph& c, std::size_t maxN) {
    py::dict out;
    for (const auto& [k, v] : semiMeasureOfCensus(c, maxN)) out[py::str(toText(k))] = toFraction(v);
    return out;
  });
  m.def("telescoping_identity", [](const MachineGraph& c, std::size_t maxN) {
    const TelescopingCheck check = telescopingIdentity(c, maxN);
    py::dict out;
    out["truncated"] = toFraction(check.truncated);
    out["tail"] = toFraction(check.tail);
    out["kraft"] = toFraction(check.kraft);
    out["exact"] = check.exact();
    return out;
  });

  // census
  py::class_<CensusTable>(m, "CensusTable")
      .def_static("build", &CensusTable::build, py::arg("machine"), py::arg("max_n"))
      .def_property_readonly("max_n", &CensusTable::maxN)
      .def_property_readonly("machine_id", &CensusTable::machineId)
      .def("count", [](const CensusTable& t, std::size_t n, const std::string& s) { return t.count(n, toBits(s)); })
      .def("slice", [](const CensusTable& t, std::size_t l, const std::string& s) { return t.slice(l, toBits(s)); })
      .def("domain_count", &CensusTable::domainCount)
      .def("to_json", &CensusTable::toJson);
  m.def("machine_id", &machineId);
  m.def("envelope_report", [](const BudgetedUniversal& u, const MachineGraph& c, std::size_t maxN) {
    py::list rows;
    for (const auto& r : envelopeReport(u, c, maxN)) {
      rows.append(py::make_tuple(r.n, toText(r.symbol), r.count, complexityToPy(r.hTilde), r.logRatio));
    }
    return rows;
  });
}
