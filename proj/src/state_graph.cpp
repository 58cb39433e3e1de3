#include "state_graph.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "speclab/errors.hpp"

namespace speclab::detail {
namespace {

using Clock = std::chrono::steady_clock;

struct Branch {
  Cube lits;
  std::vector<const FormulaNode*> next;
  std::uint64_t deferred = 0;

  bool operator<(const Branch& o) const {
    if (lits.pos != o.lits.pos) return lits.pos < o.lits.pos;
    if (lits.neg != o.lits.neg) return lits.neg < o.lits.neg;
    if (deferred != o.deferred) return deferred < o.deferred;
    return next < o.next;
  }
  bool operator==(const Branch& o) const {
    return lits.pos == o.lits.pos && lits.neg == o.lits.neg &&
           deferred == o.deferred && next == o.next;
  }
};

using Branches = std::vector<Branch>;

struct Builder {
  const std::vector<std::string>& vocab;
  const SolverBudget& budget;
  Clock::time_point deadline;
  StateGraph graph;
  std::map<std::vector<const FormulaNode*>, std::uint32_t> node_ids;
  std::map<const FormulaNode*, std::size_t> until_index;
  std::map<const FormulaNode*, Branches> move_memo;

  int atom_bit(const std::string& name) const {
    for (std::size_t i = 0; i < vocab.size(); ++i)
      if (vocab[i] == name) return static_cast<int>(i);
    throw SpecError("proposition '" + name + "' is outside the vocabulary");
  }

  std::size_t index_of_until(const FormulaNode* u) {
    auto it = until_index.find(u);
    if (it != until_index.end()) return it->second;
    std::size_t idx = graph.untils.size();
    if (idx >= 64) throw SpecError("formula exceeds 64 until subformulas");
    graph.untils.push_back(u);
    until_index.emplace(u, idx);
    return idx;
  }

  static void insert_sorted(std::vector<const FormulaNode*>& set,
                            const FormulaNode* f) {
    auto cmp = [](const FormulaNode* a, const FormulaNode* b) {
      return a->id < b->id;
    };
    auto it = std::lower_bound(set.begin(), set.end(), f, cmp);
    if (it == set.end() || *it != f) set.insert(it, f);
  }

  static void dedupe(Branches& branches) {
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()),
                   branches.end());
  }

  // Pairwise conjunction of two alternative sets; literal conflicts vanish.
  static Branches product(const Branches& a, const Branches& b) {
    Branches out;
    out.reserve(a.size() * b.size());
    for (const Branch& x : a)
      for (const Branch& y : b) {
        Cube lits{x.lits.pos | y.lits.pos, x.lits.neg | y.lits.neg};
        if (lits.conflicts()) continue;
        Branch merged{lits, x.next, x.deferred | y.deferred};
        for (const FormulaNode* n : y.next) insert_sorted(merged.next, n);
        out.push_back(std::move(merged));
      }
    dedupe(out);
    return out;
  }

  // Alternative one-step decompositions of a single NNF formula, memoized
  // per node so shared subformulas expand once.
  const Branches& moves_of(const FormulaNode* f) {
    auto it = move_memo.find(f);
    if (it != move_memo.end()) return it->second;
    Branches out;
    switch (f->kind) {
      case Kind::True:
        out.push_back(Branch{});
        break;
      case Kind::False:
        break;  // no branch survives
      case Kind::Atom: {
        Branch b;
        b.lits.pos = std::uint64_t(1) << atom_bit(f->name);
        out.push_back(std::move(b));
        break;
      }
      case Kind::Not: {
        // NNF: negation sits directly on an atom.
        Branch b;
        b.lits.neg = std::uint64_t(1) << atom_bit(f->left->name);
        out.push_back(std::move(b));
        break;
      }
      case Kind::And:
        out = product(moves_of(f->left), moves_of(f->right));
        break;
      case Kind::Or: {
        out = moves_of(f->left);
        const Branches& right = moves_of(f->right);
        out.insert(out.end(), right.begin(), right.end());
        dedupe(out);
        break;
      }
      case Kind::Next: {
        Branch b;
        b.next.push_back(f->left);
        out.push_back(std::move(b));
        break;
      }
      case Kind::Until: {
        // b | (a && X(a U b)), deferral tracked for acceptance.
        std::size_t idx = index_of_until(f);
        out = moves_of(f->right);
        Branch defer;
        defer.next.push_back(f);
        defer.deferred = std::uint64_t(1) << idx;
        Branches deferred = product(moves_of(f->left), Branches{defer});
        out.insert(out.end(), deferred.begin(), deferred.end());
        dedupe(out);
        break;
      }
      case Kind::Release: {
        // (a && b) | (b && X(a R b))
        out = product(moves_of(f->left), moves_of(f->right));
        Branch defer;
        defer.next.push_back(f);
        Branches deferred = product(moves_of(f->right), Branches{defer});
        out.insert(out.end(), deferred.begin(), deferred.end());
        dedupe(out);
        break;
      }
      default:
        throw std::logic_error("non-NNF operator in state graph expansion");
    }
    return move_memo.emplace(f, std::move(out)).first->second;
  }

  Branches expand(const std::vector<const FormulaNode*>& obligations) {
    Branches acc{Branch{}};
    for (const FormulaNode* f : obligations) {
      acc = product(acc, moves_of(f));
      if (acc.empty()) break;
      if (Clock::now() > deadline)
        throw BudgetExceededError("time budget exceeded", graph.stats);
    }
    return acc;
  }

  std::uint32_t node_id(std::vector<const FormulaNode*> obligations) {
    auto it = node_ids.find(obligations);
    if (it != node_ids.end()) return it->second;
    if (graph.nodes.size() >= budget.max_states)
      throw BudgetExceededError("state budget exceeded", graph.stats);
    if (Clock::now() > deadline)
      throw BudgetExceededError("time budget exceeded", graph.stats);
    auto id = static_cast<std::uint32_t>(graph.nodes.size());
    node_ids.emplace(obligations, id);
    graph.nodes.push_back(std::move(obligations));
    graph.moves.emplace_back();
    graph.stats.states = graph.nodes.size();
    return id;
  }

  void run(const Formula& f) {
    std::vector<const FormulaNode*> init;
    insert_sorted(init, f.node());
    graph.initial = node_id(std::move(init));
    for (std::uint32_t current = 0; current < graph.nodes.size(); ++current) {
      Branches branches = expand(graph.nodes[current]);
      // node_id() may reallocate graph.moves; collect locally first.
      std::vector<Move> out;
      out.reserve(branches.size());
      for (Branch& b : branches) {
        std::uint32_t target = node_id(std::move(b.next));
        out.push_back(Move{b.lits, target, b.deferred});
      }
      graph.moves[current] = std::move(out);
      graph.stats.moves += graph.moves[current].size();
    }
  }
};

}  // namespace

StateGraph build_state_graph(const Formula& nnf_formula,
                             const std::vector<std::string>& vocab,
                             const SolverBudget& budget) {
  if (vocab.size() > 64) throw SpecError("vocabulary exceeds 64 propositions");
  Builder builder{vocab, budget, Clock::now() + budget.time_limit, {}, {}, {},
                  {}};
  builder.graph.vocab = vocab;
  builder.run(nnf_formula);
  return std::move(builder.graph);
}

SccAnalysis analyze_sccs(const StateGraph& graph) {
  const std::size_t n = graph.nodes.size();
  SccAnalysis out;
  out.component_of.assign(n, 0);

  // Iterative Tarjan.
  std::vector<std::uint32_t> index(n, UINT32_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t counter = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t edge;
  };
  std::vector<Frame> frames;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != UINT32_MAX) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      const auto& moves = graph.moves[fr.node];
      if (fr.edge < moves.size()) {
        std::uint32_t next = moves[fr.edge].target;
        ++fr.edge;
        if (index[next] == UINT32_MAX) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.push_back({next, 0});
        } else if (on_stack[next]) {
          low[fr.node] = std::min(low[fr.node], index[next]);
        }
      } else {
        std::uint32_t node = fr.node;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().node] =
              std::min(low[frames.back().node], low[node]);
        if (low[node] == index[node]) {
          std::vector<std::uint32_t> comp;
          while (true) {
            std::uint32_t popped = stack.back();
            stack.pop_back();
            on_stack[popped] = false;
            comp.push_back(popped);
            if (popped == node) break;
          }
          std::sort(comp.begin(), comp.end());
          auto comp_index = static_cast<std::uint32_t>(out.components.size());
          for (std::uint32_t member : comp)
            out.component_of[member] = comp_index;
          out.components.push_back(std::move(comp));
        }
      }
    }
  }

  // Acceptance: the component needs an internal move, and for every until
  // acceptance set some internal move that does not defer it.
  out.accepting.assign(out.components.size(), false);
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    std::uint64_t fulfilled = 0;
    bool internal = false;
    for (std::uint32_t node : out.components[c]) {
      for (const Move& m : graph.moves[node]) {
        if (out.component_of[m.target] != c) continue;
        internal = true;
        fulfilled |= ~m.deferred;
      }
    }
    std::uint64_t need =
        graph.untils.size() >= 64
            ? ~std::uint64_t(0)
            : ((std::uint64_t(1) << graph.untils.size()) - 1);
    out.accepting[c] = internal && (fulfilled & need) == need;
  }
  return out;
}

std::vector<bool> live_nodes(const StateGraph& graph, const SccAnalysis& sccs) {
  const std::size_t n = graph.nodes.size();
  // Reverse adjacency over nodes.
  std::vector<std::vector<std::uint32_t>> reverse(n);
  for (std::uint32_t src = 0; src < n; ++src)
    for (const Move& m : graph.moves[src]) reverse[m.target].push_back(src);

  std::vector<bool> live(n, false);
  std::vector<std::uint32_t> queue;
  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    if (!sccs.accepting[c]) continue;
    for (std::uint32_t node : sccs.components[c]) {
      if (!live[node]) {
        live[node] = true;
        queue.push_back(node);
      }
    }
  }
  while (!queue.empty()) {
    std::uint32_t node = queue.back();
    queue.pop_back();
    for (std::uint32_t pred : reverse[node]) {
      if (!live[pred]) {
        live[pred] = true;
        queue.push_back(pred);
      }
    }
  }
  return live;
}

}  // namespace speclab::detail
