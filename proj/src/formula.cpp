#include "speclab/formula.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace speclab {
namespace {

using detail::FormulaNode;

struct NodeKey {
  Kind kind;
  std::string_view name;
  const FormulaNode* left;
  const FormulaNode* right;
  bool operator==(const NodeKey& o) const {
    return kind == o.kind && name == o.name && left == o.left &&
           right == o.right;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = std::hash<int>()(static_cast<int>(k.kind));
    h = h * 1000003u ^ std::hash<std::string_view>()(k.name);
    h = h * 1000003u ^ std::hash<const void*>()(k.left);
    h = h * 1000003u ^ std::hash<const void*>()(k.right);
    return h;
  }
};

struct InternTable {
  std::mutex mutex;
  std::unordered_map<NodeKey, std::unique_ptr<FormulaNode>, NodeKeyHash> table;
  std::uint64_t next_id = 0;
};

InternTable& interner() {
  static InternTable* t = new InternTable();  // never destroyed
  return *t;
}

int size_of(Kind kind, const FormulaNode* l, const FormulaNode* r) {
  switch (kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Atom:
      return 1;
    case Kind::Not:
      return l->kind == Kind::Atom ? 1 : 1 + l->size;
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always:
      return 1 + l->size;
    default:
      return 1 + l->size + r->size;
  }
}

const FormulaNode* intern(Kind kind, std::string_view name,
                          const FormulaNode* left, const FormulaNode* right) {
  InternTable& t = interner();
  std::lock_guard<std::mutex> lock(t.mutex);
  NodeKey key{kind, name, left, right};
  auto it = t.table.find(key);
  if (it != t.table.end()) return it->second.get();

  auto node = std::make_unique<FormulaNode>();
  node->kind = kind;
  node->name = std::string(name);
  node->left = left;
  node->right = right;
  node->id = t.next_id++;
  node->size = size_of(kind, left, right);
  NodeKeyHash h;
  node->hash = h(NodeKey{kind, node->name, left, right});
  const FormulaNode* raw = node.get();
  // Re-key with the owned string so the view stays valid.
  t.table.emplace(NodeKey{kind, raw->name, left, right}, std::move(node));
  return raw;
}

}  // namespace

Formula::Formula() : node_(intern(Kind::True, {}, nullptr, nullptr)) {}

Formula Formula::from_node(const detail::FormulaNode* n) { return Formula(n); }

Formula Formula::tt() { return Formula(intern(Kind::True, {}, nullptr, nullptr)); }
Formula Formula::ff() { return Formula(intern(Kind::False, {}, nullptr, nullptr)); }
Formula Formula::ap(std::string_view name) {
  return Formula(intern(Kind::Atom, name, nullptr, nullptr));
}
Formula Formula::Not(Formula f) {
  return Formula(intern(Kind::Not, {}, f.node_, nullptr));
}
Formula Formula::And(Formula a, Formula b) {
  return Formula(intern(Kind::And, {}, a.node_, b.node_));
}
Formula Formula::Or(Formula a, Formula b) {
  return Formula(intern(Kind::Or, {}, a.node_, b.node_));
}
Formula Formula::Implies(Formula a, Formula b) {
  return Formula(intern(Kind::Implies, {}, a.node_, b.node_));
}
Formula Formula::X(Formula f) {
  return Formula(intern(Kind::Next, {}, f.node_, nullptr));
}
Formula Formula::U(Formula a, Formula b) {
  return Formula(intern(Kind::Until, {}, a.node_, b.node_));
}
Formula Formula::R(Formula a, Formula b) {
  return Formula(intern(Kind::Release, {}, a.node_, b.node_));
}
Formula Formula::F(Formula f) {
  return Formula(intern(Kind::Eventually, {}, f.node_, nullptr));
}
Formula Formula::G(Formula f) {
  return Formula(intern(Kind::Always, {}, f.node_, nullptr));
}
Formula Formula::W(Formula a, Formula b) {
  return Formula(intern(Kind::WeakUntil, {}, a.node_, b.node_));
}

Formula Formula::conjoin(std::span<const Formula> parts) {
  if (parts.empty()) return tt();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = And(acc, parts[i]);
  return acc;
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const { return Formula(node_->left); }
Formula Formula::right() const { return Formula(node_->right); }

bool Formula::is_binary() const {
  switch (node_->kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Until:
    case Kind::Release:
    case Kind::WeakUntil:
      return true;
    default:
      return false;
  }
}

bool Formula::is_unary() const {
  switch (node_->kind) {
    case Kind::Not:
    case Kind::Next:
    case Kind::Eventually:
    case Kind::Always:
      return true;
    default:
      return false;
  }
}

bool Formula::is_literal() const {
  return node_->kind == Kind::Atom ||
         (node_->kind == Kind::Not && node_->left->kind == Kind::Atom);
}

int Formula::size() const { return node_->size; }

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (node_->kind == Kind::Atom) {
    out.insert(node_->name);
    return;
  }
  if (node_->left) Formula(node_->left).collect_atoms(out);
  if (node_->right) Formula(node_->right).collect_atoms(out);
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

std::uint64_t Formula::id() const { return node_->id; }
std::size_t Formula::hash() const { return node_->hash; }

}  // namespace speclab
