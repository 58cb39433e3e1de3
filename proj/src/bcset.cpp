#include "speclab/bcset.hpp"

#include <algorithm>

#include "speclab/nnf.hpp"

namespace speclab {

bool BcSet::insert(BcEntry entry) {
  Formula key = nnf(entry.formula);
  for (const Formula& existing : nnf_keys_)
    if (existing == key) return false;
  nnf_keys_.push_back(key);
  entries_.push_back(std::move(entry));
  return true;
}

bool BcSet::erase(const std::string& id) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].id == id) {
      entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(i));
      nnf_keys_.erase(nnf_keys_.begin() + static_cast<std::ptrdiff_t>(i));
      return true;
    }
  }
  return false;
}

bool BcSet::contains_id(const std::string& id) const {
  return find(id) != nullptr;
}

std::vector<std::string> BcSet::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

const BcEntry* BcSet::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

}  // namespace speclab
