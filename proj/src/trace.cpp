#include "speclab/trace.hpp"

#include <stdexcept>
#include <unordered_map>

namespace speclab {
namespace {

struct EvalContext {
  const LassoTrace& trace;
  // (node id << 16 | position) -> result.  Positions are tiny here.
  std::unordered_map<std::uint64_t, bool> memo;
};

// Temporal cases walk the lasso orbit for at most total() steps, which
// covers every position reachable from `pos`.
bool eval_at(const Formula& f, std::size_t pos, EvalContext& ctx) {
  pos = ctx.trace.normalize(pos);
  std::uint64_t key = (f.id() << 16) | pos;
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) return it->second;

  const LassoTrace& t = ctx.trace;
  std::size_t n = t.total();
  bool out = false;
  switch (f.kind()) {
    case Kind::True:
      out = true;
      break;
    case Kind::False:
      out = false;
      break;
    case Kind::Atom:
      out = t.state_at(pos).count(f.name()) != 0;
      break;
    case Kind::Not:
      out = !eval_at(f.left(), pos, ctx);
      break;
    case Kind::And:
      out = eval_at(f.left(), pos, ctx) && eval_at(f.right(), pos, ctx);
      break;
    case Kind::Or:
      out = eval_at(f.left(), pos, ctx) || eval_at(f.right(), pos, ctx);
      break;
    case Kind::Implies:
      out = !eval_at(f.left(), pos, ctx) || eval_at(f.right(), pos, ctx);
      break;
    case Kind::Next:
      out = eval_at(f.left(), t.successor(pos), ctx);
      break;
    case Kind::Until: {
      std::size_t at = pos;
      out = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (eval_at(f.right(), at, ctx)) {
          out = true;
          break;
        }
        if (!eval_at(f.left(), at, ctx)) break;
        at = t.successor(at);
      }
      break;
    }
    case Kind::Release: {
      std::size_t at = pos;
      out = true;  // b held through a full cycle
      for (std::size_t i = 0; i < n; ++i) {
        if (!eval_at(f.right(), at, ctx)) {
          out = false;
          break;
        }
        if (eval_at(f.left(), at, ctx)) break;
        at = t.successor(at);
      }
      break;
    }
    case Kind::Eventually: {
      std::size_t at = pos;
      out = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (eval_at(f.left(), at, ctx)) {
          out = true;
          break;
        }
        at = t.successor(at);
      }
      break;
    }
    case Kind::Always: {
      std::size_t at = pos;
      out = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!eval_at(f.left(), at, ctx)) {
          out = false;
          break;
        }
        at = t.successor(at);
      }
      break;
    }
    case Kind::WeakUntil: {
      std::size_t at = pos;
      out = true;  // a held through a full cycle
      for (std::size_t i = 0; i < n; ++i) {
        if (eval_at(f.right(), at, ctx)) break;
        if (!eval_at(f.left(), at, ctx)) {
          out = false;
          break;
        }
        at = t.successor(at);
      }
      break;
    }
  }
  ctx.memo.emplace(key, out);
  return out;
}

}  // namespace

bool eval(const Formula& f, const LassoTrace& t, std::size_t position) {
  if (t.loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
  EvalContext ctx{t, {}};
  return eval_at(f, position, ctx);
}

}  // namespace speclab
