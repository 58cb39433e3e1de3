#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "speclab/analysis.hpp"
#include "speclab/commands.hpp"
#include "speclab/counting.hpp"
#include "speclab/errors.hpp"
#include "speclab/filters.hpp"
#include "speclab/nnf.hpp"
#include "speclab/parser.hpp"
#include "speclab/printer.hpp"
#include "speclab/search.hpp"
#include "speclab/solver.hpp"
#include "speclab/spec.hpp"
#include "speclab/trace.hpp"

namespace py = pybind11;
using namespace speclab;

namespace {

SolverBudget budget_from(std::size_t max_states, double time_secs) {
  SolverBudget b;
  b.max_states = max_states;
  b.time_limit =
      std::chrono::milliseconds(static_cast<long long>(time_secs * 1000.0));
  return b;
}

LassoTrace trace_from(const std::vector<std::vector<std::string>>& prefix,
                      const std::vector<std::vector<std::string>>& loop) {
  LassoTrace t;
  for (const auto& s : prefix) t.prefix.emplace_back(s.begin(), s.end());
  for (const auto& s : loop) t.loop.emplace_back(s.begin(), s.end());
  return t;
}

py::object trace_to_py(const std::optional<LassoTrace>& trace) {
  if (!trace) return py::none();
  auto states = [](const std::vector<TraceState>& part) {
    py::list out;
    for (const TraceState& s : part)
      out.append(std::vector<std::string>(s.begin(), s.end()));
    return out;
  };
  py::dict out;
  out["prefix"] = states(trace->prefix);
  out["loop"] = states(trace->loop);
  return out;
}

py::dict verdict_to_py(const BcVerdict& v) {
  py::dict out;
  out["unknown"] = v.unknown;
  if (v.unknown) {
    out["unknown_check"] = v.unknown_check;
    return out;
  }
  out["is_bc"] = v.is_bc();
  out["inconsistency"] = v.inconsistency_holds;
  py::list minimality;
  for (const auto& entry : v.minimality) {
    py::dict e;
    e["dropped_goal"] = entry.dropped_goal_id;
    e["holds"] = entry.holds;
    e["witness"] = trace_to_py(entry.witness);
    minimality.append(e);
  }
  out["minimality"] = minimality;
  out["non_triviality"] = v.non_triviality_holds;
  if (auto reason = v.failure_reason()) {
    switch (*reason) {
      case BcFailure::Inconsistency:
        out["failure"] = "inconsistency";
        break;
      case BcFailure::Minimality:
        out["failure"] = "minimality";
        break;
      case BcFailure::Triviality:
        out["failure"] = "triviality";
        break;
    }
  }
  return out;
}

py::list entries_to_py(const std::vector<BcEntry>& entries) {
  py::list out;
  for (const BcEntry& e : entries) {
    py::dict d;
    d["id"] = e.id;
    d["formula"] = render(e.formula);
    d["size"] = e.formula.size();
    d["searcher"] = e.searcher;
    d["iteration"] = e.iteration;
    out.append(d);
  }
  return out;
}

BcSet set_from_formulas(const std::vector<Formula>& formulas) {
  BcSet out;
  int i = 0;
  for (const Formula& f : formulas)
    out.insert(BcEntry{"bc-" + std::to_string(++i), f, "caller", 0});
  return out;
}

}  // namespace

PYBIND11_MODULE(_speclab, m) {
  m.doc() = "Boundary-condition analysis for LTL goal specifications";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<SpecError>(m, "SpecError");
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError");
  py::register_exception<VocabularyTooLargeError>(m, "VocabularyTooLargeError");
  py::register_exception<DomUnsatError>(m, "DomUnsatError");

  py::class_<Formula>(m, "Formula")
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return f.hash(); })
      .def_property_readonly("size", [](const Formula& f) { return f.size(); })
      .def_property_readonly("atoms", [](const Formula& f) {
        auto atoms = f.atoms();
        return std::vector<std::string>(atoms.begin(), atoms.end());
      });

  py::class_<NamedFormula>(m, "NamedFormula")
      .def_readonly("id", &NamedFormula::id)
      .def_readonly("formula", &NamedFormula::formula);

  py::class_<Spec>(m, "Spec")
      .def_readonly("id", &Spec::id)
      .def_readonly("vocab", &Spec::vocab)
      .def_readonly("dom", &Spec::dom)
      .def_readonly("goals", &Spec::goals)
      .def_readonly("fixtures", &Spec::fixtures)
      .def("fixture", [](const Spec& spec, const std::string& id) {
        const NamedFormula* f = spec.find_fixture(id);
        if (!f) throw SpecError("no fixture '" + id + "'");
        return f->formula;
      });

  m.def(
      "parse",
      [](const std::string& text,
         const std::optional<std::vector<std::string>>& vocab) {
        if (!vocab) return parse(text);
        std::set<std::string> v(vocab->begin(), vocab->end());
        return parse(text, v);
      },
      py::arg("text"), py::arg("vocab") = py::none());
  m.def("render", &render, py::arg("formula"));
  m.def("nnf", &nnf, py::arg("formula"));
  m.def(
      "load_spec",
      [](const std::string& path, bool require_analyzable) {
        return load_spec(path, require_analyzable);
      },
      py::arg("path"), py::arg("require_analyzable") = true);

  m.def(
      "evaluate",
      [](const Formula& f, const std::vector<std::vector<std::string>>& prefix,
         const std::vector<std::vector<std::string>>& loop,
         std::size_t position) {
        return eval(f, trace_from(prefix, loop), position);
      },
      py::arg("formula"), py::arg("prefix"), py::arg("loop"),
      py::arg("position") = 0);

  m.def(
      "is_sat",
      [](const Formula& f, std::size_t max_states, double time_secs) {
        SatResult r = is_sat(f, budget_from(max_states, time_secs));
        py::dict out;
        out["sat"] = r.sat();
        out["witness"] = trace_to_py(r.witness);
        return out;
      },
      py::arg("formula"), py::arg("max_states") = 200000,
      py::arg("time_secs") = 30.0);

  m.def(
      "implies",
      [](const Formula& f, const Formula& g) { return implies(f, g); },
      py::arg("f"), py::arg("g"));

  m.def(
      "count_prefixes",
      [](const std::vector<Formula>& constraints,
         const std::vector<std::string>& vocab, unsigned k) {
        CountResult r = count_prefixes(constraints, vocab, k);
        py::dict out;
        out["k"] = r.k;
        out["count"] = py::cast(r.count.str());
        out["alphabet_size"] = r.alphabet_size;
        return out;
      },
      py::arg("constraints"), py::arg("vocab"), py::arg("k"));

  m.def(
      "check_bc",
      [](const Spec& spec, const Formula& phi) {
        return verdict_to_py(check_bc(spec, phi));
      },
      py::arg("spec"), py::arg("phi"));

  m.def(
      "is_witness",
      [](const Spec& spec, const Formula& f, const Formula& phi) {
        return is_witness(spec, f, phi);
      },
      py::arg("spec"), py::arg("f"), py::arg("phi"));

  m.def(
      "are_contrastive",
      [](const Spec& spec, const Formula& a, const Formula& b) {
        return are_contrastive(spec, a, b);
      },
      py::arg("spec"), py::arg("a"), py::arg("b"));

  m.def(
      "is_more_general",
      [](const Formula& a, const Formula& b) { return is_more_general(a, b); },
      py::arg("a"), py::arg("b"));

  m.def(
      "likelihood",
      [](const Spec& spec, const Formula& phi, unsigned k) {
        LikelihoodValue v = likelihood(spec, phi, k);
        py::dict out;
        out["num"] = v.numerator.str();
        out["den"] = v.denominator.str();
        out["value"] = v.value();
        out["k"] = v.k;
        out["interpretation"] = v.interpretation;
        return out;
      },
      py::arg("spec"), py::arg("phi"), py::arg("k") = 20);

  m.def(
      "termination_condition",
      [](const Spec& spec) -> py::object {
        auto idx = termination_condition(spec);
        if (!idx) return py::none();
        return py::cast(*idx);
      },
      py::arg("spec"));

  m.def("avoid_pattern", &avoid_pattern, py::arg("spec"), py::arg("b"));

  m.def(
      "ppfc",
      [](const Spec& spec, const std::vector<Formula>& bcs) {
        auto [result, trace] = ppfc(spec, set_from_formulas(bcs));
        return entries_to_py(result.entries());
      },
      py::arg("spec"), py::arg("bcs"));

  m.def(
      "generality_filter",
      [](const Spec& spec, const std::vector<Formula>& bcs) {
        auto [result, trace] = generality_filter(spec, set_from_formulas(bcs));
        return entries_to_py(result.entries());
      },
      py::arg("spec"), py::arg("bcs"));

  m.def(
      "pattern_search",
      [](const Spec& spec, std::size_t max_candidates) {
        PatternSearcher searcher;
        return entries_to_py(searcher.find_all(spec, max_candidates));
      },
      py::arg("spec"), py::arg("max_candidates") = 24);

  m.def(
      "genetic_search",
      [](const Spec& spec, std::uint64_t seed, std::size_t max_candidates) {
        GaConfig config;
        config.seed = seed;
        GeneticSearcher searcher(config);
        return entries_to_py(searcher.find_all(spec, max_candidates));
      },
      py::arg("spec"), py::arg("seed") = 1, py::arg("max_candidates") = 8);

  m.def(
      "jfc",
      [](const Spec& spec, const std::string& searcher_name,
         std::uint64_t seed, std::size_t max_rounds) {
        auto searcher = make_searcher(searcher_name, seed, SolverBudget{});
        JfcConfig config;
        config.max_rounds = max_rounds;
        JfcResult r = jfc(spec, *searcher, config);
        py::dict out;
        out["bcs"] = entries_to_py(r.bcs.entries());
        switch (r.termination) {
          case JfcTermination::TerminationCondition:
            out["termination"] = "termination-condition";
            break;
          case JfcTermination::SearcherExhausted:
            out["termination"] = "searcher-exhausted";
            break;
          case JfcTermination::RoundLimit:
            out["termination"] = "round-limit";
            break;
          case JfcTermination::Aborted:
            out["termination"] = "aborted";
            break;
        }
        out["rounds"] = r.rounds;
        out["total_found"] = r.total_found;
        out["certified"] = r.certified;
        return out;
      },
      py::arg("spec"), py::arg("searcher") = "pattern", py::arg("seed") = 1,
      py::arg("max_rounds") = 25);
}
