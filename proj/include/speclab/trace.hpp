#pragma once

#include <set>
#include <string>
#include <vector>

#include "speclab/formula.hpp"

namespace speclab {

// A state is the set of propositions true in it.
using TraceState = std::set<std::string>;

// Finite representation of an ultimately periodic word: prefix . loop^omega.
// The loop must be nonempty.
struct LassoTrace {
  std::vector<TraceState> prefix;
  std::vector<TraceState> loop;

  std::size_t total() const { return prefix.size() + loop.size(); }

  // Folds an arbitrary position into [0, total()).
  std::size_t normalize(std::size_t i) const {
    if (i < total()) return i;
    return prefix.size() + (i - prefix.size()) % loop.size();
  }

  // Successor of a normalized position, wrapping at the loop end.
  std::size_t successor(std::size_t i) const {
    ++i;
    return i < total() ? i : prefix.size();
  }

  const TraceState& state_at(std::size_t i) const {
    std::size_t n = normalize(i);
    return n < prefix.size() ? prefix[n] : loop[n - prefix.size()];
  }
};

// Standard LTL satisfaction (t, i) |= f.  Positions are 0-based and may
// exceed the represented length; they wrap into the loop.  Total for all
// inputs: temporal operators walk at most one pass around the lasso and
// results are memoized per (subformula, normalized position).
bool eval(const Formula& f, const LassoTrace& t, std::size_t position = 0);

}  // namespace speclab
