#include "speclab/report.hpp"

#include <algorithm>
#include <numeric>

#include "speclab/printer.hpp"

namespace speclab {

using nlohmann::json;

void Report::add(json record) {
  record["schema"] = kReportSchema;
  records.push_back(std::move(record));
}

std::string Report::to_jsonl() const {
  std::string out;
  for (const json& r : records) {
    out += r.dump();
    out.push_back('\n');
  }
  return out;
}

std::string Report::to_jsonl_without_timings() const {
  std::string out;
  for (json r : records) {
    r.erase("timings");
    out += r.dump();
    out.push_back('\n');
  }
  return out;
}

json verdict_to_json(const BcVerdict& verdict) {
  json out;
  if (verdict.unknown) {
    out["status"] = "unknown";
    out["unknown_check"] = verdict.unknown_check;
    return out;
  }
  out["status"] = "decided";
  out["is_bc"] = verdict.is_bc();
  out["inconsistency"] = verdict.inconsistency_holds;
  json minimality = json::array();
  for (const auto& entry : verdict.minimality) {
    json e;
    e["dropped_goal"] = entry.dropped_goal_id;
    e["holds"] = entry.holds;
    if (entry.witness) e["witness"] = trace_to_json(*entry.witness);
    minimality.push_back(std::move(e));
  }
  out["minimality"] = std::move(minimality);
  out["non_triviality"] = verdict.non_triviality_holds;
  if (auto reason = verdict.failure_reason()) {
    switch (*reason) {
      case BcFailure::Inconsistency:
        out["failure"] = "inconsistency";
        break;
      case BcFailure::Minimality:
        out["failure"] = "minimality";
        out["failing_goal"] =
            verdict.minimality[*verdict.failing_goal()].dropped_goal_id;
        break;
      case BcFailure::Triviality:
        out["failure"] = "triviality";
        break;
    }
  }
  return out;
}

json likelihood_to_json(const LikelihoodValue& value) {
  json out;
  out["num"] = value.numerator.str();
  out["den"] = value.denominator.str();
  out["value"] = value.value();
  out["k"] = value.k;
  out["interpretation"] = value.interpretation;
  return out;
}

json trace_to_json(const LassoTrace& trace) {
  auto states = [](const std::vector<TraceState>& part) {
    json out = json::array();
    for (const TraceState& s : part) out.push_back(json(s));
    return out;
  };
  json out;
  out["prefix"] = states(trace.prefix);
  out["loop"] = states(trace.loop);
  return out;
}

json bc_record(const std::string& spec_id, const BcEntry& entry,
               const std::optional<BcVerdict>& verdict,
               const std::optional<LikelihoodValue>& likelihood,
               std::optional<int> rank,
               const std::optional<BcAnnotations>& annotations) {
  json out;
  out["type"] = "bc";
  out["spec"] = spec_id;
  out["id"] = entry.id;
  out["formula"] = render(entry.formula);
  out["size"] = entry.formula.size();
  json provenance;
  provenance["searcher"] = entry.searcher;
  provenance["iteration"] = entry.iteration;
  out["provenance"] = std::move(provenance);
  if (verdict) out["verdict"] = verdict_to_json(*verdict);
  if (likelihood) out["likelihood"] = likelihood_to_json(*likelihood);
  if (rank) out["rank"] = *rank;
  if (annotations) {
    out["witness_of"] = annotations->witness_of;
    out["witnessed_by"] = annotations->witnessed_by;
    out["more_general_than"] = annotations->more_general_than;
    out["contrastive_with"] = annotations->contrastive_with;
  }
  return out;
}

void append_filter_trace(Report& report, const std::string& spec_id,
                         const FilterTrace& trace) {
  auto action_name = [](FilterAction a) {
    switch (a) {
      case FilterAction::KeepBoth:
        return "keep-both";
      case FilterAction::DropSubject:
        return "drop-subject";
      case FilterAction::DropOther:
        return "drop-other";
      case FilterAction::KeepSmaller:
        return "keep-smaller";
    }
    return "keep-both";
  };
  for (const FilterDecision& d : trace.decisions) {
    json record;
    record["type"] = "filter-decision";
    record["spec"] = spec_id;
    record["subject"] = d.subject;
    record["other"] = d.other;
    record["subject_witnesses_other"] = d.subject_witnesses_other;
    record["other_witnesses_subject"] = d.other_witnesses_subject;
    record["action"] = action_name(d.action);
    report.add(std::move(record));
  }
  for (const DropRecord& d : trace.drops) {
    json record;
    record["type"] = "drop";
    record["spec"] = spec_id;
    record["id"] = d.id;
    record["removed_by"] = d.removed_by;
    record["reason"] = d.reason;
    report.add(std::move(record));
  }
}

std::vector<std::size_t> rank_by_likelihood(
    const std::vector<BcEntry>& entries,
    const std::vector<LikelihoodValue>& values) {
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    int cmp = values[a].compare(values[b]);
    if (cmp != 0) return cmp > 0;  // higher likelihood first
    int sa = entries[a].formula.size();
    int sb = entries[b].formula.size();
    if (sa != sb) return sa < sb;
    return entries[a].id < entries[b].id;
  });
  return order;
}

}  // namespace speclab
