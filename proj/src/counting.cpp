#include "speclab/counting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "speclab/errors.hpp"
#include "speclab/nnf.hpp"
#include "state_graph.hpp"

namespace speclab {
namespace {

using detail::Move;
using detail::StateGraph;

}  // namespace

CountResult count_prefixes(const std::vector<Formula>& constraints,
                           const std::vector<std::string>& vocab, unsigned k,
                           const SolverBudget& budget,
                           std::uint64_t alphabet_cap) {
  if (k == 0) throw SpecError("count_prefixes requires k >= 1");
  if (vocab.size() >= 63 ||
      (std::uint64_t(1) << vocab.size()) > alphabet_cap)
    throw VocabularyTooLargeError(
        "2^" + std::to_string(vocab.size()) +
        " alphabet symbols exceed the configured cap of " +
        std::to_string(alphabet_cap));

  Formula conjunction = Formula::conjoin(constraints);
  for (const auto& atom : conjunction.atoms())
    if (std::find(vocab.begin(), vocab.end(), atom) == vocab.end())
      throw SpecError("constraint proposition '" + atom +
                      "' is outside the vocabulary");

  const std::uint64_t alphabet = std::uint64_t(1) << vocab.size();
  CountResult result;
  result.k = k;
  result.alphabet_size = alphabet;

  StateGraph graph = detail::build_state_graph(nnf(conjunction), vocab, budget);
  auto sccs = detail::analyze_sccs(graph);
  std::vector<bool> live = detail::live_nodes(graph, sccs);
  if (!live[graph.initial]) {
    result.count = BigInt(0);
    return result;
  }

  // Letter-indexed successor sets per node, restricted to live targets.
  std::vector<std::vector<std::vector<std::uint32_t>>> successors(
      graph.nodes.size());
  for (std::uint32_t node = 0; node < graph.nodes.size(); ++node) {
    if (!live[node]) continue;
    auto& table = successors[node];
    table.assign(alphabet, {});
    for (const Move& m : graph.moves[node]) {
      if (!live[m.target]) continue;
      for (std::uint64_t letter = 0; letter < alphabet; ++letter)
        if (m.lits.admits_letter(letter)) table[letter].push_back(m.target);
    }
    for (auto& targets : table) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()),
                    targets.end());
    }
  }

  // Subset construction on demand.  A macro-state is the sorted set of live
  // tableau nodes reachable on the word read so far; determinization makes
  // the path count a word count.
  using Macro = std::vector<std::uint32_t>;
  std::map<Macro, std::vector<Macro>> delta_cache;
  std::map<Macro, BigInt> current;
  current.emplace(Macro{graph.initial}, BigInt(1));

  for (unsigned step = 0; step < k; ++step) {
    std::map<Macro, BigInt> next;
    for (const auto& [macro, ways] : current) {
      auto cached = delta_cache.find(macro);
      if (cached == delta_cache.end()) {
        std::vector<Macro> per_letter(alphabet);
        for (std::uint64_t letter = 0; letter < alphabet; ++letter) {
          std::set<std::uint32_t> targets;
          for (std::uint32_t node : macro)
            for (std::uint32_t t : successors[node][letter])
              targets.insert(t);
          per_letter[letter].assign(targets.begin(), targets.end());
        }
        cached = delta_cache.emplace(macro, std::move(per_letter)).first;
      }
      for (std::uint64_t letter = 0; letter < alphabet; ++letter) {
        const Macro& target = cached->second[letter];
        if (target.empty()) continue;
        next[target] += ways;
      }
    }
    current = std::move(next);
    if (current.empty()) break;
  }

  BigInt total(0);
  for (const auto& [macro, ways] : current) total += ways;
  result.count = total;
  return result;
}

}  // namespace speclab
