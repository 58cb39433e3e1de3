#include "speclab/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "speclab/nnf.hpp"
#include "speclab/printer.hpp"
#include "state_graph.hpp"

namespace speclab {
namespace {

using detail::Move;
using detail::SccAnalysis;
using detail::StateGraph;

TraceState letter_to_state(const StateGraph& graph, std::uint64_t letter) {
  TraceState state;
  for (std::size_t i = 0; i < graph.vocab.size(); ++i)
    if (letter & (std::uint64_t(1) << i)) state.insert(graph.vocab[i]);
  return state;
}

// Minimal letter satisfying the move's literal constraints: required
// propositions true, everything else false.
std::uint64_t move_letter(const Move& m) { return m.lits.pos; }

// Shortest move path from `from` to the first node satisfying `is_target`,
// optionally restricted to moves inside `from`'s component.  Deterministic:
// BFS in discovery order, moves in construction order.
template <typename Pred>
std::pair<std::vector<const Move*>, std::uint32_t> find_path(
    const StateGraph& graph, const SccAnalysis& sccs, std::uint32_t from,
    Pred is_target, bool restrict_component) {
  if (is_target(from)) return {{}, from};
  std::vector<const Move*> via(graph.nodes.size(), nullptr);
  std::vector<std::uint32_t> parent(graph.nodes.size(), UINT32_MAX);
  std::deque<std::uint32_t> queue{from};
  std::vector<bool> seen(graph.nodes.size(), false);
  seen[from] = true;
  while (!queue.empty()) {
    std::uint32_t node = queue.front();
    queue.pop_front();
    for (const Move& m : graph.moves[node]) {
      if (restrict_component &&
          sccs.component_of[m.target] != sccs.component_of[from])
        continue;
      if (seen[m.target]) continue;
      seen[m.target] = true;
      via[m.target] = &m;
      parent[m.target] = node;
      if (is_target(m.target)) {
        std::vector<const Move*> path;
        for (std::uint32_t at = m.target; at != from; at = parent[at])
          path.push_back(via[at]);
        std::reverse(path.begin(), path.end());
        return {path, m.target};
      }
      queue.push_back(m.target);
    }
  }
  throw std::logic_error("no path inside state graph");
}

LassoTrace build_witness(const StateGraph& graph, const SccAnalysis& sccs,
                         std::size_t component) {
  const auto& members = sccs.components[component];
  std::uint32_t entry = graph.initial;
  std::vector<const Move*> prefix_path;
  if (sccs.component_of[graph.initial] != component) {
    auto in_component = [&](std::uint32_t n) {
      return sccs.component_of[n] == component;
    };
    std::tie(prefix_path, entry) =
        find_path(graph, sccs, graph.initial, in_component, false);
  }

  // Cycle through one non-deferring internal move per until, then close.
  std::vector<const Move*> cycle;
  std::uint32_t at = entry;
  for (std::size_t u = 0; u < graph.untils.size(); ++u) {
    const Move* chosen = nullptr;
    std::uint32_t chosen_src = 0;
    for (std::uint32_t node : members) {
      for (const Move& m : graph.moves[node]) {
        if (sccs.component_of[m.target] != component) continue;
        if (m.deferred & (std::uint64_t(1) << u)) continue;
        chosen = &m;
        chosen_src = node;
        break;
      }
      if (chosen) break;
    }
    auto [hop, reached] = find_path(
        graph, sccs, at, [&](std::uint32_t n) { return n == chosen_src; },
        true);
    (void)reached;
    cycle.insert(cycle.end(), hop.begin(), hop.end());
    cycle.push_back(chosen);
    at = chosen->target;
  }
  if (graph.untils.empty()) {
    // Any internal move keeps the lasso nonempty.
    for (std::uint32_t node : members) {
      for (const Move& m : graph.moves[node]) {
        if (sccs.component_of[m.target] != component) continue;
        auto [hop, reached] = find_path(
            graph, sccs, at, [&](std::uint32_t n) { return n == node; }, true);
        (void)reached;
        cycle.insert(cycle.end(), hop.begin(), hop.end());
        cycle.push_back(&m);
        at = m.target;
        break;
      }
      if (!cycle.empty()) break;
    }
  }
  auto [close, closed_at] = find_path(
      graph, sccs, at, [&](std::uint32_t n) { return n == entry; }, true);
  (void)closed_at;
  cycle.insert(cycle.end(), close.begin(), close.end());

  LassoTrace trace;
  for (const Move* m : prefix_path)
    trace.prefix.push_back(letter_to_state(graph, move_letter(*m)));
  for (const Move* m : cycle)
    trace.loop.push_back(letter_to_state(graph, move_letter(*m)));
  return trace;
}

std::vector<std::string> default_vocab(const Formula& f,
                                       const std::vector<std::string>& vocab) {
  if (!vocab.empty()) return vocab;
  auto atoms = f.atoms();
  return {atoms.begin(), atoms.end()};
}

}  // namespace

SatResult is_sat(const Formula& f, const SolverBudget& budget,
                 const std::vector<std::string>& vocab) {
  Formula core = nnf(f);
  StateGraph graph = detail::build_state_graph(core, default_vocab(f, vocab), budget);
  SccAnalysis sccs = detail::analyze_sccs(graph);

  // Pick the accepting component containing the smallest node id; all nodes
  // are reachable from the initial one by construction.
  std::optional<std::size_t> chosen;
  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!sccs.accepting[c]) continue;
    if (!chosen ||
        sccs.components[c].front() < sccs.components[*chosen].front())
      chosen = c;
  }
  SatResult result;
  result.stats = graph.stats;
  if (!chosen) {
    result.status = SatStatus::Unsat;
    return result;
  }
  result.status = SatStatus::Sat;
  result.witness = build_witness(graph, sccs, *chosen);
  if (!eval(f, *result.witness, 0))
    throw std::logic_error("internal error: witness fails eval for " +
                           render(f));
  return result;
}

bool implies(const Formula& f, const Formula& g, const SolverBudget& budget) {
  return !is_sat(Formula::And(f, Formula::Not(g)), budget).sat();
}

OracleResult brute_force_oracle(const Formula& f, std::size_t prefix_bound,
                                std::size_t loop_bound,
                                const std::vector<std::string>& vocab_in) {
  std::vector<std::string> vocab = default_vocab(f, vocab_in);
  const std::size_t letters = std::size_t(1) << vocab.size();

  auto state_of = [&](std::size_t letter) {
    TraceState s;
    for (std::size_t i = 0; i < vocab.size(); ++i)
      if (letter & (std::size_t(1) << i)) s.insert(vocab[i]);
    return s;
  };

  // Enumerate words digit by digit: prefix length p, loop length l.
  for (std::size_t p = 0; p <= prefix_bound; ++p) {
    for (std::size_t l = 1; l <= loop_bound; ++l) {
      std::vector<std::size_t> digits(p + l, 0);
      while (true) {
        LassoTrace trace;
        for (std::size_t i = 0; i < p; ++i)
          trace.prefix.push_back(state_of(digits[i]));
        for (std::size_t i = 0; i < l; ++i)
          trace.loop.push_back(state_of(digits[p + i]));
        if (eval(f, trace, 0))
          return {OracleStatus::Sat, std::move(trace)};
        // Next assignment.
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
          if (++digits[i] < letters) break;
          digits[i] = 0;
        }
        if (i == digits.size()) break;
      }
    }
  }
  return {OracleStatus::UnsatWithinBounds, std::nullopt};
}

}  // namespace speclab
