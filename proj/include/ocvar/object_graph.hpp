#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ocvar/ocel.hpp"

namespace ocvar {

/// Undirected object graph: objects are adjacent when they share an event.
class ObjectGraph {
 public:
  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Neighbors of o in ascending index (= ascending id) order.
  std::span<const ObjectIndex> neighbors(ObjectIndex o) const { return adjacency_.at(o); }

  bool adjacent(ObjectIndex a, ObjectIndex b) const;

  /// Shortest-path hop count; std::nullopt when no path exists.
  /// Throws LogError(UnknownObject) for indices outside the graph.
  std::optional<std::size_t> distance(ObjectIndex from, ObjectIndex to) const;

 private:
  friend ObjectGraph build_object_graph(const EventLog&);

  std::vector<std::vector<ObjectIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

ObjectGraph build_object_graph(const EventLog& log);

/// Distance between objects given by id.
std::optional<std::size_t> object_distance(const EventLog& log, const ObjectGraph& graph,
                                           std::string_view from, std::string_view to);

/// Maximal connected object sets, each sorted ascending, ordered by their
/// smallest member.
std::vector<std::vector<ObjectIndex>> connected_components(const ObjectGraph& graph);

}  // namespace ocvar
