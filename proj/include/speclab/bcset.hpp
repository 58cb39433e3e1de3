#pragma once

#include <optional>
#include <string>
#include <vector>

#include "speclab/formula.hpp"

namespace speclab {

struct BcEntry {
  std::string id;
  Formula formula;
  std::string searcher;  // provenance: which generator produced it
  int iteration = 0;     // provenance: round / generation
};

// Ordered BC collection.  Insertion deduplicates entries that are
// structurally identical after NNF normalization.
class BcSet {
 public:
  // Returns false when a structural duplicate (mod NNF) was already present.
  bool insert(BcEntry entry);
  bool erase(const std::string& id);
  bool contains_id(const std::string& id) const;

  const std::vector<BcEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<std::string> ids() const;
  const BcEntry* find(const std::string& id) const;

 private:
  std::vector<BcEntry> entries_;
  std::vector<Formula> nnf_keys_;
};

}  // namespace speclab
