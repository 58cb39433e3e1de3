#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "speclab/analysis.hpp"
#include "speclab/bcset.hpp"
#include "speclab/filters.hpp"
#include "speclab/spec.hpp"

namespace speclab {

inline constexpr const char* kReportSchema = "speclab.report/1";

// Line-delimited structured records.  Every record carries the schema tag;
// timing data lives only under the "timings" key so consumers can compare
// payloads modulo time.
struct Report {
  std::vector<nlohmann::json> records;

  void add(nlohmann::json record);
  // One JSON object per line.
  std::string to_jsonl() const;
  // Same, with the "timings" key removed from every record.
  std::string to_jsonl_without_timings() const;
};

nlohmann::json verdict_to_json(const BcVerdict& verdict);
nlohmann::json likelihood_to_json(const LikelihoodValue& value);
nlohmann::json trace_to_json(const LassoTrace& trace);

// Per-BC record with optional likelihood/rank and metric annotation edges.
struct BcAnnotations {
  std::vector<std::string> witness_of;        // ids this BC witnesses
  std::vector<std::string> witnessed_by;      // ids witnessing this BC
  std::vector<std::string> more_general_than; // ids this BC strictly covers
  std::vector<std::string> contrastive_with;  // mutual non-witness partners
};

nlohmann::json bc_record(const std::string& spec_id, const BcEntry& entry,
                         const std::optional<BcVerdict>& verdict,
                         const std::optional<LikelihoodValue>& likelihood,
                         std::optional<int> rank,
                         const std::optional<BcAnnotations>& annotations);

void append_filter_trace(Report& report, const std::string& spec_id,
                         const FilterTrace& trace);

// Ranks entries 1..N by descending likelihood, ties by ascending formula
// size then id.  Returns indices into `values` in rank order.
std::vector<std::size_t> rank_by_likelihood(
    const std::vector<BcEntry>& entries,
    const std::vector<LikelihoodValue>& values);

}  // namespace speclab
