#include "speclab/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "speclab/analysis.hpp"
#include "speclab/errors.hpp"
#include "speclab/nnf.hpp"
#include "speclab/printer.hpp"

namespace speclab {
namespace {

struct Literal {
  std::size_t prop;
  bool negated;
};

Formula literal_formula(const Spec& spec, const Literal& l) {
  Formula atom = Formula::ap(spec.vocab[l.prop]);
  return l.negated ? Formula::Not(atom) : atom;
}

// All literals in vocabulary order, positive before negative.
std::vector<Literal> all_literals(const Spec& spec) {
  std::vector<Literal> out;
  for (std::size_t i = 0; i < spec.vocab.size(); ++i) {
    out.push_back({i, false});
    out.push_back({i, true});
  }
  return out;
}

// Cubes over distinct propositions with 1..max_literals literals, as
// left-folded conjunctions, enumerated by literal count then lexicographic
// (proposition index, sign) order.
std::vector<Formula> cubes(const Spec& spec, std::size_t max_literals) {
  std::vector<Formula> out;
  const std::size_t n = spec.vocab.size();
  max_literals = std::min(max_literals, n);
  for (std::size_t count = 1; count <= max_literals; ++count) {
    std::vector<std::size_t> props(count);
    // Enumerate ascending proposition index combinations.
    std::vector<std::size_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) idx[i] = i;
    while (true) {
      for (std::uint64_t signs = 0; signs < (std::uint64_t(1) << count);
           ++signs) {
        std::vector<Formula> lits;
        for (std::size_t i = 0; i < count; ++i)
          lits.push_back(literal_formula(
              spec, Literal{idx[i], (signs >> i & 1) != 0}));
        out.push_back(Formula::conjoin(lits));
      }
      // Next combination.
      std::size_t i = count;
      while (i > 0 && idx[i - 1] == n - count + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < count; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

PatternSearcher::PatternSearcher(SolverBudget budget) : budget_(budget) {}

std::vector<Formula> PatternSearcher::candidates(const Spec& spec,
                                                 std::size_t limit) const {
  std::vector<Formula> out;
  auto push = [&](Formula f) { out.push_back(f); };
  std::vector<Literal> literals = all_literals(spec);

  // Family 1: F(l1 && (l2 || X l3)), the negation of a G-guarded step rule
  // G(l1 -> (!l2 && X !l3)).  l2 on a different proposition than l1; the
  // same-proposition combinations collapse into other families.
  struct Sized {
    int size;
    std::size_t order;
    Formula f;
  };
  auto by_size = [](const Sized& a, const Sized& b) {
    return a.size != b.size ? a.size < b.size : a.order < b.order;
  };
  {
    std::vector<Sized> family;
    std::size_t order = 0;
    for (const Literal& l1 : literals)
      for (const Literal& l2 : literals) {
        if (l2.prop == l1.prop) continue;
        for (const Literal& l3 : literals) {
          Formula f = Formula::F(Formula::And(
              literal_formula(spec, l1),
              Formula::Or(literal_formula(spec, l2),
                          Formula::X(literal_formula(spec, l3)))));
          family.push_back({f.size(), order++, f});
        }
      }
    std::stable_sort(family.begin(), family.end(), by_size);
    for (const Sized& s : family) push(s.f);
  }

  std::vector<Formula> cube_list = cubes(spec, 3);
  // Family 2: bare cubes.
  for (const Formula& c : cube_list) push(c);
  // Family 3: X c.
  for (const Formula& c : cube_list) push(Formula::X(c));
  // Family 4: F c.
  for (const Formula& c : cube_list) push(Formula::F(c));
  // Family 5: F(c1 && X c2), by combined size.
  {
    std::vector<Sized> family;
    std::size_t order = 0;
    for (const Formula& c1 : cube_list)
      for (const Formula& c2 : cube_list) {
        Formula f = Formula::F(Formula::And(c1, Formula::X(c2)));
        family.push_back({f.size(), order++, f});
      }
    std::stable_sort(family.begin(), family.end(), by_size);
    for (const Sized& s : family) push(s.f);
  }
  // Family 6: G c and F(G c).
  for (const Formula& c : cube_list) push(Formula::G(c));
  for (const Formula& c : cube_list) push(Formula::F(Formula::G(c)));

  if (out.size() > limit) out.resize(limit);
  return out;
}

std::optional<BcEntry> PatternSearcher::find_one(const Spec& spec) {
  auto found = find_all(spec, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<BcEntry> PatternSearcher::find_all(const Spec& spec,
                                               std::size_t max_candidates) {
  std::vector<BcEntry> out;
  std::vector<Formula> seen_keys;
  int index = 0;
  for (const Formula& candidate : candidates(spec)) {
    if (out.size() >= max_candidates) break;
    ++index;
    Formula key = nnf(candidate);
    bool duplicate = false;
    for (const Formula& k : seen_keys)
      if (k == key) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    seen_keys.push_back(key);
    BcVerdict verdict = check_bc(spec, candidate, budget_);
    if (verdict.unknown)
      throw BudgetExceededError("pattern search: verification unknown on " +
                                    render(candidate),
                                SolverStats{});
    if (!verdict.is_bc()) continue;
    out.push_back(BcEntry{"pat-" + std::to_string(index), candidate,
                          name(), index});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Genetic search
// ---------------------------------------------------------------------------

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return engine_() % n; }
  bool chance(double p) {
    return static_cast<double>(engine_()) /
               static_cast<double>(std::mt19937_64::max()) <
           p;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::set<std::uint64_t> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.id()).second) continue;
    out.push_back(cur);
    if (cur.is_unary()) stack.push_back(cur.left());
    if (cur.is_binary()) {
      stack.push_back(cur.left());
      stack.push_back(cur.right());
    }
  }
  return out;
}

std::size_t node_count(const Formula& f) {
  if (f.is_unary()) return 1 + node_count(f.left());
  if (f.is_binary()) return 1 + node_count(f.left()) + node_count(f.right());
  return 1;
}

// Replaces the node at preorder position `target` with what `make`
// produces from it.
Formula rewrite_at(const Formula& f, std::size_t& target,
                   const std::function<Formula(Formula)>& make) {
  if (target == 0) return make(f);
  --target;
  if (f.is_unary()) {
    Formula child = rewrite_at(f.left(), target, make);
    switch (f.kind()) {
      case Kind::Not:
        return Formula::Not(child);
      case Kind::Next:
        return Formula::X(child);
      case Kind::Eventually:
        return Formula::F(child);
      default:
        return Formula::G(child);
    }
  }
  if (f.is_binary()) {
    std::size_t left_nodes = node_count(f.left());
    Formula l = f.left();
    Formula r = f.right();
    if (target < left_nodes) {
      l = rewrite_at(l, target, make);
    } else {
      target -= left_nodes;
      r = rewrite_at(r, target, make);
    }
    switch (f.kind()) {
      case Kind::And:
        return Formula::And(l, r);
      case Kind::Or:
        return Formula::Or(l, r);
      case Kind::Implies:
        return Formula::Implies(l, r);
      case Kind::Until:
        return Formula::U(l, r);
      case Kind::Release:
        return Formula::R(l, r);
      default:
        return Formula::W(l, r);
    }
  }
  return make(f);  // leaf fallback when positions run out
}

Formula subtree_at(const Formula& f, std::size_t target) {
  Formula out = f;
  std::size_t t = target;
  rewrite_at(f, t, [&](Formula node) {
    out = node;
    return node;
  });
  return out;
}

class Ga {
 public:
  Ga(const Spec& spec, const GaConfig& config, const SolverBudget& budget)
      : spec_(spec), config_(config), budget_(budget), rng_(config.seed) {
    seed_pool();
  }

  // Runs the evolutionary loop, yielding every distinct verified BC in
  // generation order until `max_yields` are collected.
  std::vector<BcEntry> run(std::size_t max_yields) {
    std::vector<BcEntry> yields;
    population_ = initial_population();
    for (std::size_t gen = 1; gen <= config_.generations; ++gen) {
      std::vector<std::pair<Formula, int>> scored;
      scored.reserve(population_.size());
      for (const Formula& f : population_) scored.push_back({f, fitness(f)});
      std::stable_sort(scored.begin(), scored.end(),
                       [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first.size() < b.first.size();
                       });
      for (const auto& [f, score] : scored) {
        if (score < 3) break;
        Formula key = nnf(f);
        if (yielded_keys_.insert(key.id()).second) {
          yields.push_back(BcEntry{
              "ga-" + std::to_string(config_.seed) + "-" +
                  std::to_string(yields.size() + 1),
              f, "genetic", static_cast<int>(gen)});
          if (yields.size() >= max_yields) return yields;
        }
      }
      if (gen == config_.generations) break;
      population_ = next_generation(scored);
    }
    return yields;
  }

 private:
  void seed_pool() {
    auto add = [&](const Formula& f) {
      if (seen_pool_.insert(f.id()).second) pool_.push_back(f);
    };
    for (const auto& named : spec_.dom)
      for (const Formula& sub : subformulas(named.formula)) {
        add(sub);
        add(nnf(Formula::Not(sub)));
      }
    for (const auto& named : spec_.goals)
      for (const Formula& sub : subformulas(named.formula)) {
        add(sub);
        add(nnf(Formula::Not(sub)));
      }
    for (const auto& prop : spec_.vocab) {
      add(Formula::ap(prop));
      add(Formula::Not(Formula::ap(prop)));
    }
  }

  std::vector<Formula> initial_population() {
    std::vector<Formula> out;
    out.reserve(config_.population);
    while (out.size() < config_.population) {
      Formula base = pool_[rng_.below(pool_.size())];
      if (rng_.chance(0.5)) {
        Formula other = pool_[rng_.below(pool_.size())];
        base = random_binary(base, other);
      }
      if (rng_.chance(0.3)) base = random_unary(base);
      out.push_back(base);
    }
    return out;
  }

  Formula random_unary(Formula f) {
    switch (rng_.below(4)) {
      case 0:
        return Formula::F(f);
      case 1:
        return Formula::G(f);
      case 2:
        return Formula::X(f);
      default:
        return Formula::Not(f);
    }
  }

  Formula random_binary(Formula a, Formula b) {
    switch (rng_.below(5)) {
      case 0:
        return Formula::And(a, b);
      case 1:
        return Formula::Or(a, b);
      case 2:
        return Formula::U(a, b);
      case 3:
        return Formula::Implies(a, b);
      default:
        return Formula::R(a, b);
    }
  }

  Formula random_leaf() {
    std::size_t pick = rng_.below(spec_.vocab.size() * 2);
    Formula atom = Formula::ap(spec_.vocab[pick / 2]);
    return (pick % 2) ? Formula::Not(atom) : atom;
  }

  Formula mutate(Formula f) {
    std::size_t nodes = node_count(f);
    std::size_t target = rng_.below(nodes);
    switch (rng_.below(3)) {
      case 0: {  // replace node with a leaf or pool formula
        Formula repl =
            rng_.chance(0.5) ? random_leaf() : pool_[rng_.below(pool_.size())];
        std::size_t t = target;
        return rewrite_at(f, t, [&](Formula) { return repl; });
      }
      case 1: {  // insert an operator above the node
        std::size_t t = target;
        return rewrite_at(f, t, [&](Formula node) {
          if (rng_.chance(0.5)) return random_unary(node);
          return random_binary(node, random_leaf());
        });
      }
      default: {  // delete: hoist a child (or collapse a leaf)
        std::size_t t = target;
        return rewrite_at(f, t, [&](Formula node) {
          if (node.is_unary()) return node.left();
          if (node.is_binary())
            return rng_.chance(0.5) ? node.left() : node.right();
          return random_leaf();
        });
      }
    }
  }

  std::pair<Formula, Formula> crossover(Formula a, Formula b) {
    std::size_t pa = rng_.below(node_count(a));
    std::size_t pb = rng_.below(node_count(b));
    Formula sub_a = subtree_at(a, pa);
    Formula sub_b = subtree_at(b, pb);
    std::size_t t = pa;
    Formula new_a = rewrite_at(a, t, [&](Formula) { return sub_b; });
    t = pb;
    Formula new_b = rewrite_at(b, t, [&](Formula) { return sub_a; });
    return {new_a, new_b};
  }

  // Number of BC conditions satisfied (0..3); -1 for over-size or
  // budget-exhausted candidates, which the search simply stops pursuing.
  int fitness(const Formula& f) {
    auto it = fitness_memo_.find(f.id());
    if (it != fitness_memo_.end()) return it->second;
    int score = -1;
    if (f.size() <= config_.max_formula_size) {
      try {
        BcVerdict v = check_bc(spec_, f, budget_);
        if (v.unknown) {
          score = -1;
        } else {
          score = (v.inconsistency_holds ? 1 : 0) +
                  (v.minimality_holds() ? 1 : 0) +
                  (v.non_triviality_holds ? 1 : 0);
        }
      } catch (const BudgetExceededError&) {
        score = -1;
      }
    }
    fitness_memo_.emplace(f.id(), score);
    return score;
  }

  std::vector<Formula> next_generation(
      const std::vector<std::pair<Formula, int>>& scored) {
    std::vector<Formula> next;
    next.reserve(config_.population);
    for (std::size_t i = 0; i < config_.elite && i < scored.size(); ++i)
      next.push_back(scored[i].first);
    auto tournament = [&]() {
      std::size_t best = rng_.below(scored.size());
      for (std::size_t i = 1; i < config_.tournament; ++i) {
        std::size_t other = rng_.below(scored.size());
        if (other < best) best = other;  // scored is sorted best-first
      }
      return scored[best].first;
    };
    while (next.size() < config_.population) {
      Formula a = tournament();
      Formula b = tournament();
      if (rng_.chance(config_.crossover_rate)) {
        auto [ca, cb] = crossover(a, b);
        a = ca;
        b = cb;
      }
      if (rng_.chance(config_.mutation_rate)) a = mutate(a);
      if (rng_.chance(config_.mutation_rate)) b = mutate(b);
      next.push_back(a);
      if (next.size() < config_.population) next.push_back(b);
    }
    return next;
  }

  const Spec& spec_;
  GaConfig config_;
  SolverBudget budget_;
  Rng rng_;
  std::vector<Formula> pool_;
  std::set<std::uint64_t> seen_pool_;
  std::vector<Formula> population_;
  std::map<std::uint64_t, int> fitness_memo_;
  std::set<std::uint64_t> yielded_keys_;
};

}  // namespace

GeneticSearcher::GeneticSearcher(GaConfig config, SolverBudget budget)
    : config_(config), budget_(budget) {}

std::optional<BcEntry> GeneticSearcher::find_one(const Spec& spec) {
  Ga ga(spec, config_, budget_);
  auto yields = ga.run(1);
  if (yields.empty()) return std::nullopt;
  return yields.front();
}

std::vector<BcEntry> GeneticSearcher::find_all(const Spec& spec,
                                               std::size_t max_candidates) {
  Ga ga(spec, config_, budget_);
  return ga.run(max_candidates);
}

std::unique_ptr<BcSearcher> make_searcher(const std::string& name,
                                          std::uint64_t seed,
                                          const SolverBudget& budget) {
  if (name == "pattern") return std::make_unique<PatternSearcher>(budget);
  if (name == "genetic") {
    GaConfig config;
    config.seed = seed;
    return std::make_unique<GeneticSearcher>(config, budget);
  }
  throw SpecError("unknown searcher '" + name + "'");
}

}  // namespace speclab
