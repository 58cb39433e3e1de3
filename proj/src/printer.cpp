#include "speclab/printer.hpp"

namespace speclab {
namespace {

// Lower value binds looser.
int level(Kind k) {
  switch (k) {
    case Kind::Implies:
      return 0;
    case Kind::Or:
      return 1;
    case Kind::And:
      return 2;
    case Kind::Until:
    case Kind::Release:
    case Kind::WeakUntil:
      return 3;
    case Kind::Not:
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always:
      return 4;
    default:
      return 5;  // atoms and constants
  }
}

const char* symbol(Kind k) {
  switch (k) {
    case Kind::Not:
      return "!";
    case Kind::Next:
      return "X";
    case Kind::Eventually:
      return "F";
    case Kind::Always:
      return "G";
    case Kind::And:
      return "&&";
    case Kind::Or:
      return "||";
    case Kind::Implies:
      return "->";
    case Kind::Until:
      return "U";
    case Kind::Release:
      return "R";
    case Kind::WeakUntil:
      return "W";
    default:
      return "";
  }
}

bool is_atomic(const Formula& f) { return level(f.kind()) == 5; }

void emit(const Formula& f, std::string& out);

void emit_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out.push_back('(');
  emit(f, out);
  if (parens) out.push_back(')');
}

void emit(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::True:
      out += "true";
      return;
    case Kind::False:
      out += "false";
      return;
    case Kind::Atom:
      out += f.name();
      return;
    default:
      break;
  }
  if (f.is_unary()) {
    out += symbol(f.kind());
    out.push_back(' ');
    emit_wrapped(f.left(), !is_atomic(f.left()), out);
    return;
  }
  // Binary operators.  && and || associate left; ->, U, R, W associate right.
  int lv = level(f.kind());
  bool right_assoc = lv == 0 || lv == 3;
  const Formula l = f.left();
  const Formula r = f.right();
  bool lp = right_assoc ? level(l.kind()) <= lv : level(l.kind()) < lv;
  bool rp = right_assoc ? level(r.kind()) < lv : level(r.kind()) <= lv;
  // Distinct operators sharing a level never chain without parentheses.
  if (!lp && level(l.kind()) == lv && l.kind() != f.kind()) lp = true;
  if (!rp && level(r.kind()) == lv && r.kind() != f.kind()) rp = true;
  emit_wrapped(l, lp, out);
  out.push_back(' ');
  out += symbol(f.kind());
  out.push_back(' ');
  emit_wrapped(r, rp, out);
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

}  // namespace speclab
