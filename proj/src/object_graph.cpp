#include "ocvar/object_graph.hpp"

#include <algorithm>
#include <deque>

namespace ocvar {

bool ObjectGraph::adjacent(ObjectIndex a, ObjectIndex b) const {
  const auto& n = adjacency_.at(a);
  return std::binary_search(n.begin(), n.end(), b);
}

std::optional<std::size_t> ObjectGraph::distance(ObjectIndex from, ObjectIndex to) const {
  if (from >= adjacency_.size() || to >= adjacency_.size()) {
    throw LogError(LogErrorKind::UnknownObject, "object index outside the object graph");
  }
  if (from == to) return 0;
  std::vector<std::size_t> level(adjacency_.size(), SIZE_MAX);
  std::deque<ObjectIndex> queue{from};
  level[from] = 0;
  while (!queue.empty()) {
    const ObjectIndex o = queue.front();
    queue.pop_front();
    for (ObjectIndex next : adjacency_[o]) {
      if (level[next] != SIZE_MAX) continue;
      level[next] = level[o] + 1;
      if (next == to) return level[next];
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

ObjectGraph build_object_graph(const EventLog& log) {
  ObjectGraph g;
  g.adjacency_.resize(log.objects().size());
  for (const Event& e : log.events()) {
    for (std::size_t i = 0; i < e.objects.size(); ++i) {
      for (std::size_t j = i + 1; j < e.objects.size(); ++j) {
        g.adjacency_[e.objects[i]].push_back(e.objects[j]);
        g.adjacency_[e.objects[j]].push_back(e.objects[i]);
      }
    }
  }
  for (auto& n : g.adjacency_) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    g.edge_count_ += n.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::optional<std::size_t> object_distance(const EventLog& log, const ObjectGraph& graph,
                                           std::string_view from, std::string_view to) {
  return graph.distance(log.object_index(from), log.object_index(to));
}

std::vector<std::vector<ObjectIndex>> connected_components(const ObjectGraph& graph) {
  std::vector<std::vector<ObjectIndex>> components;
  std::vector<bool> seen(graph.node_count(), false);
  std::vector<ObjectIndex> queue;
  for (ObjectIndex start = 0; start < graph.node_count(); ++start) {
    if (seen[start]) continue;
    queue.assign(1, start);
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (ObjectIndex next : graph.neighbors(queue[head])) {
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    components.push_back(queue);
  }
  return components;
}

}  // namespace ocvar
