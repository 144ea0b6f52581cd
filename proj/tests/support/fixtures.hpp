#pragma once

#include <set>
#include <string>
#include <vector>

#include "ocvar/extraction.hpp"
#include "ocvar/ocel.hpp"

namespace ocvar::testing {

std::string read_file(const std::string& path);
std::string data_path(const std::string& name);

/// The 12-event, 6-object example log (two order/machine clusters).
EventLog sample_log();

/// Timestamp `minutes` after a fixed epoch.
Timestamp minutes(std::int64_t m);

std::set<std::string> object_ids(const EventLog& log, const ProcessExecution& exec);
std::set<std::string> event_ids(const EventLog& log, const ProcessExecution& exec);
std::set<std::pair<std::string, std::string>> edge_ids(const EventLog& log, const ProcessExecution& exec);

}  // namespace ocvar::testing
