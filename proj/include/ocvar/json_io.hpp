#pragma once

#include <vector>

#include "json.hpp"
#include "ocvar/extraction.hpp"
#include "ocvar/ocel.hpp"
#include "ocvar/variants.hpp"

namespace ocvar {

using ordered_json = nlohmann::ordered_json;

/// {"strategy", "leading_type"?, "lead_object"?, "objects", "events",
/// "edges"}; every array sorted ascending by id.
ordered_json execution_to_json(const EventLog& log, const ProcessExecution& exec);

ordered_json executions_to_json(const EventLog& log, const std::vector<ProcessExecution>& execs);

/// Representatives are rendered from `execs[class.representative]`.
ordered_json report_to_json(const EventLog& log, const std::vector<ProcessExecution>& execs,
                            const VariantReport& report);

struct Extent {
  std::size_t max = 0;
  std::size_t min = 0;
  double avg = 0.0;
};

struct ExecutionSummary {
  std::size_t executions = 0;
  Extent events_per_exec;
  Extent objects_per_exec;
};

ExecutionSummary summarize(const std::vector<ProcessExecution>& execs);

ordered_json stats_to_json(const LogStats& stats);
ordered_json summary_to_json(const ExecutionSummary& summary, std::size_t variants);

}  // namespace ocvar
