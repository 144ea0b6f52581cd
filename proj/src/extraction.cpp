#include "ocvar/extraction.hpp"

#include <algorithm>
#include <unordered_map>

#include "ocvar/parallel.hpp"

namespace ocvar {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Components: return "components";
    case Strategy::LeadingType: return "leading";
    case Strategy::ObjectSet: return "objects";
  }
  return "unknown";
}

namespace {


bool is_connected(const ObjectGraph& graph, const std::vector<ObjectIndex>& objects) {
  if (objects.empty()) return false;
  std::vector<bool> reached(objects.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const ObjectIndex o = objects[stack.back()];
    stack.pop_back();
    for (ObjectIndex n : graph.neighbors(o)) {
      auto it = std::lower_bound(objects.begin(), objects.end(), n);
      if (it == objects.end() || *it != n) continue;
      const auto pos = static_cast<std::size_t>(it - objects.begin());
      if (!reached[pos]) {
        reached[pos] = true;
        ++count;
        stack.push_back(pos);
      }
    }
  }
  return count == objects.size();
}

}  // namespace

ExecutionExtractor::ExecutionExtractor(const EventLog& log)
    : log_(&log), event_graph_(build_event_graph(log)), object_graph_(build_object_graph(log)) {}

ProcessExecution ExecutionExtractor::materialize(std::vector<ObjectIndex> objects,
                                                 Provenance provenance) const {
  ProcessExecution exec;
  for (ObjectIndex o : objects) {
    auto trace = log_->trace(o);
    exec.events.insert(exec.events.end(), trace.begin(), trace.end());
  }
  std::sort(exec.events.begin(), exec.events.end());
  exec.events.erase(std::unique(exec.events.begin(), exec.events.end()), exec.events.end());
  if (exec.events.empty()) {
    throw ExtractionError(ExtractionErrorKind::EmptyExecution, "object set has no events");
  }

  for (EventIndex e : exec.events) {
    for (auto edge_index : event_graph_.out_edges(e)) {
      const DirectedEdge& edge = event_graph_.edges()[edge_index];
      if (std::binary_search(exec.events.begin(), exec.events.end(), edge.to)) {
        exec.edges.push_back(edge);
      }
    }
  }
  std::sort(exec.edges.begin(), exec.edges.end());
  exec.objects = std::move(objects);
  exec.provenance = std::move(provenance);
  return exec;
}

ProcessExecution ExecutionExtractor::from_objects(std::span<const ObjectIndex> objects) const {
  std::vector<ObjectIndex> set(objects.begin(), objects.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) {
    throw ExtractionError(ExtractionErrorKind::EmptyExecution, "object set is empty");
  }
  if (set.back() >= object_graph_.node_count()) {
    throw LogError(LogErrorKind::UnknownObject, "object index outside the log");
  }
  if (!is_connected(object_graph_, set)) {
    throw ExtractionError(ExtractionErrorKind::DisconnectedObjectSet,
                          "objects do not form a connected subgraph of the object graph");
  }
  return materialize(std::move(set), Provenance{});
}

std::vector<ProcessExecution> ExecutionExtractor::components() const {
  std::vector<ProcessExecution> result;
  for (auto& component : connected_components(object_graph_)) {
    // Singleton components without events carry no behavior.
    if (component.size() == 1 && log_->trace(component.front()).empty()) continue;
    result.push_back(materialize(std::move(component), Provenance{Strategy::Components, {}, {}, {}}));
  }
  return result;
}

LeadingTypeSelection leading_type_selection(const EventLog& log, const ObjectGraph& graph,
                                            ObjectIndex lead) {
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> type_level(log.types().size(), kUnseen);
  std::unordered_map<ObjectIndex, bool> seen;  // object -> admitted

  struct Item {
    ObjectIndex object;
    std::uint32_t level;
  };
  std::vector<Item> admitted{{lead, 0}};
  type_level[log.object(lead).type] = 0;
  seen.emplace(lead, true);

  for (std::size_t head = 0; head < admitted.size(); ++head) {
    const auto [current, level] = admitted[head];
    for (ObjectIndex next : graph.neighbors(current)) {
      if (seen.contains(next)) continue;
      const TypeIndex t = log.object(next).type;
      if (type_level[t] == kUnseen) type_level[t] = level + 1;
      const bool admit = type_level[t] == level + 1;
      seen.emplace(next, admit);
      if (admit) admitted.push_back({next, level + 1});
    }
  }

  std::sort(admitted.begin(), admitted.end(),
            [](const Item& a, const Item& b) { return a.object < b.object; });
  LeadingTypeSelection selection;
  selection.objects.reserve(admitted.size());
  selection.levels.reserve(admitted.size());
  for (const auto& item : admitted) {
    selection.objects.push_back(item.object);
    selection.levels.push_back(item.level);
  }
  return selection;
}

std::vector<ProcessExecution> ExecutionExtractor::leading_type(TypeIndex leading_type,
                                                               unsigned threads) const {
  std::vector<ObjectIndex> leads;
  for (ObjectIndex o = 0; o < log_->objects().size(); ++o) {
    if (log_->object(o).type == leading_type) leads.push_back(o);
  }

  std::vector<std::optional<ProcessExecution>> slots(leads.size());
  parallel_for(leads.size(), threads, [&](std::size_t i) {
    auto selection = leading_type_selection(*log_, object_graph_, leads[i]);
    bool has_events = false;
    for (ObjectIndex o : selection.objects) has_events = has_events || !log_->trace(o).empty();
    if (!has_events) return;
    Provenance provenance{Strategy::LeadingType, leading_type, leads[i], std::move(selection.levels)};
    slots[i] = materialize(std::move(selection.objects), std::move(provenance));
  });

  std::vector<ProcessExecution> result;
  result.reserve(slots.size());
  for (auto& slot : slots) {
    if (slot) result.push_back(std::move(*slot));
  }
  return result;
}

std::vector<ProcessExecution> extract_components(const EventLog& log) {
  return ExecutionExtractor(log).components();
}

std::vector<ProcessExecution> extract_leading_type(const EventLog& log, std::string_view leading_type,
                                                   unsigned threads) {
  const TypeIndex type = log.type_index(leading_type);
  return ExecutionExtractor(log).leading_type(type, threads);
}

ProcessExecution execution_from_objects(const EventLog& log, std::span<const std::string> object_ids) {
  std::vector<ObjectIndex> objects;
  objects.reserve(object_ids.size());
  for (const auto& id : object_ids) objects.push_back(log.object_index(id));
  return ExecutionExtractor(log).from_objects(objects);
}

}  // namespace ocvar
