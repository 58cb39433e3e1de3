#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace speclab {

enum class Kind : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Next,
  Until,
  Release,
  Eventually,
  Always,
  WeakUntil,
};

namespace detail {
struct FormulaNode;
}

// Immutable LTL formula with value semantics.  Nodes are hash-consed in a
// process-wide table, so structural equality is pointer equality and every
// node carries a stable sequence id usable for deterministic ordering.
class Formula {
 public:
  Formula();  // defaults to "true"

  static Formula tt();
  static Formula ff();
  static Formula ap(std::string_view name);
  static Formula Not(Formula f);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Implies(Formula a, Formula b);
  static Formula X(Formula f);
  static Formula U(Formula a, Formula b);
  static Formula R(Formula a, Formula b);
  static Formula F(Formula f);
  static Formula G(Formula f);
  static Formula W(Formula a, Formula b);

  // Left fold over && ; returns tt() for an empty span.
  static Formula conjoin(std::span<const Formula> parts);

  Kind kind() const;
  // Atom name; only valid when kind() == Kind::Atom.
  const std::string& name() const;
  // Unary child or left operand.
  Formula left() const;
  // Right operand of a binary node.
  Formula right() const;

  bool is_binary() const;
  bool is_unary() const;
  // Atom or negated atom.
  bool is_literal() const;

  // Number of temporal operators, connectives, and literals.  Constants and
  // literals count one; a negation directly on an atom merges into the
  // literal; any other negation counts as a connective.
  int size() const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  // Stable intern-order id (deterministic for a fixed construction sequence).
  std::uint64_t id() const;
  std::size_t hash() const;

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator!=(const Formula& o) const { return node_ != o.node_; }
  // Orders by intern id; useful for canonical containers.
  bool operator<(const Formula& o) const { return id() < o.id(); }

  const detail::FormulaNode* node() const { return node_; }
  static Formula from_node(const detail::FormulaNode* n);

 private:
  explicit Formula(const detail::FormulaNode* node) : node_(node) {}
  const detail::FormulaNode* node_;
};

namespace detail {
struct FormulaNode {
  Kind kind;
  std::string name;          // atoms only
  const FormulaNode* left;   // unary child / left operand
  const FormulaNode* right;  // binary right operand
  std::uint64_t id;          // intern sequence number
  std::size_t hash;
  int size;                  // precomputed size metric
};
}  // namespace detail

}  // namespace speclab

template <>
struct std::hash<speclab::Formula> {
  std::size_t operator()(const speclab::Formula& f) const { return f.hash(); }
};
