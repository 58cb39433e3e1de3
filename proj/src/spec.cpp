#include "speclab/spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "speclab/errors.hpp"
#include "speclab/parser.hpp"
#include "speclab/printer.hpp"

namespace speclab {

Formula Spec::dom_conjunction() const {
  std::vector<Formula> parts;
  parts.reserve(dom.size());
  for (const auto& d : dom) parts.push_back(d.formula);
  return Formula::conjoin(parts);
}

Formula Spec::goal_conjunction() const {
  std::vector<Formula> parts;
  parts.reserve(goals.size());
  for (const auto& g : goals) parts.push_back(g.formula);
  return Formula::conjoin(parts);
}

Formula Spec::goals_except(std::size_t i) const {
  std::vector<Formula> parts;
  for (std::size_t j = 0; j < goals.size(); ++j)
    if (j != i) parts.push_back(goals[j].formula);
  return Formula::conjoin(parts);
}

Formula Spec::full_conjunction() const {
  return Formula::And(dom_conjunction(), goal_conjunction());
}

const NamedFormula* Spec::find_fixture(const std::string& fixture_id) const {
  for (const auto& f : fixtures)
    if (f.id == fixture_id) return &f;
  return nullptr;
}

Spec Spec::with_negated_constraints(
    const std::vector<std::pair<std::string, Formula>>& bcs) const {
  Spec out = *this;
  for (const auto& [bc_id, formula] : bcs)
    out.dom.push_back(
        NamedFormula{"avoid:" + bc_id, "negated identified BC",
                     Formula::Not(formula)});
  return out;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

Spec parse_spec_text(const std::string& text, const std::string& id,
                     bool require_analyzable, const SolverBudget& budget) {
  Spec spec;
  spec.id = id;
  std::set<std::string> vocab_set;
  std::set<std::string> names;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    // Trim.
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    line.erase(0, start);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "props") {
      std::string prop;
      while (ls >> prop) {
        if (!valid_identifier(prop))
          throw ParseError("invalid proposition name '" + prop + "'", line_no,
                           1);
        if (!vocab_set.insert(prop).second)
          throw SpecError("duplicate proposition '" + prop + "' (line " +
                          std::to_string(line_no) + ")");
        spec.vocab.push_back(prop);
      }
      continue;
    }
    if (keyword != "dom" && keyword != "goal" && keyword != "fixture")
      throw ParseError("unknown directive '" + keyword + "'", line_no, 1);

    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected '<name>: <formula>' after '" + keyword + "'",
                       line_no, 1);
    std::string name = line.substr(keyword.size(), colon - keyword.size());
    name.erase(std::remove_if(name.begin(), name.end(), is_space), name.end());
    if (!valid_identifier(name))
      throw ParseError("invalid name '" + name + "'", line_no, 1);
    if (!names.insert(name).second)
      throw SpecError("duplicate name '" + name + "' (line " +
                      std::to_string(line_no) + ")");
    std::string body = line.substr(colon + 1);
    Formula f;
    try {
      f = parse(body, vocab_set);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in " + keyword + " '" + name +
                           "'",
                       line_no, e.column());
    }
    NamedFormula named{name, "", f};
    if (keyword == "dom")
      spec.dom.push_back(named);
    else if (keyword == "goal")
      spec.goals.push_back(named);
    else
      spec.fixtures.push_back(named);
  }

  if (require_analyzable && spec.goals.size() < 2)
    throw SpecError("spec '" + id + "' declares " +
                    std::to_string(spec.goals.size()) +
                    " goal(s); minimality needs at least 2");

  // Divergence analysis presumes a consistent specification.
  if (!spec.goals.empty() || !spec.dom.empty()) {
    if (!is_sat(spec.full_conjunction(), budget, spec.vocab).sat())
      throw SpecError("spec '" + id +
                      "' is inconsistent: Dom && G is unsatisfiable");
  }
  return spec;
}

Spec load_spec(const std::string& path, bool require_analyzable,
               const SolverBudget& budget) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  // Spec id: file stem.
  std::string id = path;
  if (auto slash = id.find_last_of("/\\"); slash != std::string::npos)
    id.erase(0, slash + 1);
  if (auto dot = id.rfind('.'); dot != std::string::npos) id.erase(dot);
  return parse_spec_text(buffer.str(), id, require_analyzable, budget);
}

}  // namespace speclab
