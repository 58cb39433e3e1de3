#include "speclab/nnf.hpp"

#include <unordered_map>
#include <utility>

namespace speclab {
namespace {

struct Memo {
  // Keyed by (node id, negated?).
  std::unordered_map<std::uint64_t, Formula> pos, neg;
};

Formula positive(const Formula& f, Memo& memo);
Formula negative(const Formula& f, Memo& memo);

Formula positive(const Formula& f, Memo& memo) {
  auto it = memo.pos.find(f.id());
  if (it != memo.pos.end()) return it->second;
  Formula out = Formula::tt();
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      out = f;
      break;
    case Kind::Not:
      out = negative(f.left(), memo);
      break;
    case Kind::And:
      out = Formula::And(positive(f.left(), memo), positive(f.right(), memo));
      break;
    case Kind::Or:
      out = Formula::Or(positive(f.left(), memo), positive(f.right(), memo));
      break;
    case Kind::Implies:
      out = Formula::Or(negative(f.left(), memo), positive(f.right(), memo));
      break;
    case Kind::Next:
      out = Formula::X(positive(f.left(), memo));
      break;
    case Kind::Until:
      out = Formula::U(positive(f.left(), memo), positive(f.right(), memo));
      break;
    case Kind::Release:
      out = Formula::R(positive(f.left(), memo), positive(f.right(), memo));
      break;
    case Kind::Eventually:
      out = Formula::U(Formula::tt(), positive(f.left(), memo));
      break;
    case Kind::Always:
      out = Formula::R(Formula::ff(), positive(f.left(), memo));
      break;
    case Kind::WeakUntil: {
      // a W b == a U (b || G a)
      Formula a = positive(f.left(), memo);
      Formula b = positive(f.right(), memo);
      out = Formula::U(a, Formula::Or(b, Formula::R(Formula::ff(), a)));
      break;
    }
  }
  memo.pos.emplace(f.id(), out);
  return out;
}

Formula negative(const Formula& f, Memo& memo) {
  auto it = memo.neg.find(f.id());
  if (it != memo.neg.end()) return it->second;
  Formula out = Formula::tt();
  switch (f.kind()) {
    case Kind::True:
      out = Formula::ff();
      break;
    case Kind::False:
      out = Formula::tt();
      break;
    case Kind::Atom:
      out = Formula::Not(f);
      break;
    case Kind::Not:
      out = positive(f.left(), memo);
      break;
    case Kind::And:
      out = Formula::Or(negative(f.left(), memo), negative(f.right(), memo));
      break;
    case Kind::Or:
      out = Formula::And(negative(f.left(), memo), negative(f.right(), memo));
      break;
    case Kind::Implies:
      out = Formula::And(positive(f.left(), memo), negative(f.right(), memo));
      break;
    case Kind::Next:
      out = Formula::X(negative(f.left(), memo));
      break;
    case Kind::Until:
      out = Formula::R(negative(f.left(), memo), negative(f.right(), memo));
      break;
    case Kind::Release:
      out = Formula::U(negative(f.left(), memo), negative(f.right(), memo));
      break;
    case Kind::Eventually:
      out = Formula::R(Formula::ff(), negative(f.left(), memo));
      break;
    case Kind::Always:
      out = Formula::U(Formula::tt(), negative(f.left(), memo));
      break;
    case Kind::WeakUntil: {
      // !(a W b) == !a R (!b && F !a)
      Formula na = negative(f.left(), memo);
      Formula nb = negative(f.right(), memo);
      out = Formula::R(na,
                       Formula::And(nb, Formula::U(Formula::tt(), na)));
      break;
    }
  }
  memo.neg.emplace(f.id(), out);
  return out;
}

}  // namespace

Formula nnf(const Formula& f) {
  Memo memo;
  return positive(f, memo);
}

}  // namespace speclab
