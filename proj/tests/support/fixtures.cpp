#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ocvar::testing {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data_path(const std::string& name) { return std::string(OCVAR_TEST_DATA_DIR) + "/" + name; }

EventLog sample_log() { return parse_log(read_file(data_path("sample_log.json"))); }

Timestamp minutes(std::int64_t m) { return Timestamp{1'600'000'000'000LL + m * 60'000LL}; }

std::set<std::string> object_ids(const EventLog& log, const ProcessExecution& exec) {
  std::set<std::string> out;
  for (auto o : exec.objects) out.insert(log.object(o).id);
  return out;
}

std::set<std::string> event_ids(const EventLog& log, const ProcessExecution& exec) {
  std::set<std::string> out;
  for (auto e : exec.events) out.insert(log.event(e).id);
  return out;
}

std::set<std::pair<std::string, std::string>> edge_ids(const EventLog& log, const ProcessExecution& exec) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& edge : exec.edges) out.emplace(log.event(edge.from).id, log.event(edge.to).id);
  return out;
}

}  // namespace ocvar::testing
