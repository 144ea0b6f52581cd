#include "ocvar/json_io.hpp"

#include <algorithm>

namespace ocvar {

ordered_json execution_to_json(const EventLog& log, const ProcessExecution& exec) {
  ordered_json j = ordered_json::object();
  j["strategy"] = to_string(exec.provenance.strategy);
  if (exec.provenance.leading_type) j["leading_type"] = log.type_name(*exec.provenance.leading_type);
  if (exec.provenance.lead_object) j["lead_object"] = log.object(*exec.provenance.lead_object).id;

  ordered_json objects = ordered_json::array();
  for (ObjectIndex o : exec.objects) objects.push_back(log.object(o).id);  // index order is id order

  std::vector<std::string> events;
  events.reserve(exec.events.size());
  for (EventIndex e : exec.events) events.push_back(log.event(e).id);
  std::sort(events.begin(), events.end());

  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(exec.edges.size());
  for (const auto& edge : exec.edges) edges.emplace_back(log.event(edge.from).id, log.event(edge.to).id);
  std::sort(edges.begin(), edges.end());

  j["objects"] = std::move(objects);
  j["events"] = events;
  ordered_json edge_array = ordered_json::array();
  for (auto& [from, to] : edges) edge_array.push_back(ordered_json::array({from, to}));
  j["edges"] = std::move(edge_array);
  return j;
}

ordered_json executions_to_json(const EventLog& log, const std::vector<ProcessExecution>& execs) {
  ordered_json out = ordered_json::array();
  for (const auto& exec : execs) out.push_back(execution_to_json(log, exec));
  return out;
}

ordered_json report_to_json(const EventLog& log, const std::vector<ProcessExecution>& execs,
                            const VariantReport& report) {
  ordered_json j = ordered_json::object();
  j["attribute"] = report.attribute;
  j["mode"] = to_string(report.mode);
  j["total_executions"] = report.total_executions;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : report.classes) {
    ordered_json c = ordered_json::object();
    c["class_id"] = cls.class_id;
    c["size"] = cls.members.size();
    c["frequency"] = {{"num", cls.frequency.num}, {"den", cls.frequency.den}};
    c["members"] = cls.members;
    c["representative"] = execution_to_json(log, execs.at(cls.representative));
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

ExecutionSummary summarize(const std::vector<ProcessExecution>& execs) {
  ExecutionSummary s;
  s.executions = execs.size();
  if (execs.empty()) return s;
  auto extent = [&](auto size_of) {
    Extent x;
    x.min = SIZE_MAX;
    std::size_t sum = 0;
    for (const auto& exec : execs) {
      const std::size_t n = size_of(exec);
      x.max = std::max(x.max, n);
      x.min = std::min(x.min, n);
      sum += n;
    }
    x.avg = static_cast<double>(sum) / static_cast<double>(execs.size());
    return x;
  };
  s.events_per_exec = extent([](const ProcessExecution& p) { return p.events.size(); });
  s.objects_per_exec = extent([](const ProcessExecution& p) { return p.objects.size(); });
  return s;
}

ordered_json stats_to_json(const LogStats& stats) {
  ordered_json j = ordered_json::object();
  j["events"] = stats.events;
  j["types"] = stats.types;
  j["objects"] = stats.objects;
  ordered_json per_type = ordered_json::object();
  for (const auto& [type, count] : stats.objects_per_type) per_type[type] = count;
  j["objects_per_type"] = std::move(per_type);
  return j;
}

ordered_json summary_to_json(const ExecutionSummary& summary, std::size_t variants) {
  auto extent = [](const Extent& x) {
    ordered_json j = ordered_json::object();
    j["max"] = x.max;
    j["min"] = x.min;
    j["avg"] = x.avg;
    return j;
  };
  ordered_json j = ordered_json::object();
  j["executions"] = summary.executions;
  j["events_per_exec"] = extent(summary.events_per_exec);
  j["objects_per_exec"] = extent(summary.objects_per_exec);
  j["variants"] = variants;
  return j;
}

}  // namespace ocvar
