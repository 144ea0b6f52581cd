#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocvar/ocel.hpp"

namespace ocvar {

/// Raised when trace order contradicts the global event order.
class CycleDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DirectedEdge {
  EventIndex from = 0;
  EventIndex to = 0;

  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Event-object graph: every event is a node, an edge (e, e') exists when
/// some object's trace has e immediately followed by e'.
class EventObjectGraph {
 public:
  std::size_t node_count() const noexcept { return node_objects_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges sorted by (from, to); edge indices refer to this order.
  std::span<const DirectedEdge> edges() const noexcept { return edges_; }

  /// Objects whose traces contain the edge's endpoints consecutively.
  std::span<const ObjectIndex> edge_objects(std::size_t edge) const { return edge_objects_.at(edge); }

  /// Objects of event e (obj_L).
  std::span<const ObjectIndex> node_objects(EventIndex e) const { return node_objects_.at(e); }

  /// Edge indices leaving / entering e.
  std::span<const std::uint32_t> out_edges(EventIndex e) const { return out_.at(e); }
  std::span<const std::uint32_t> in_edges(EventIndex e) const { return in_.at(e); }

  std::optional<std::size_t> find_edge(EventIndex from, EventIndex to) const;

 private:
  friend EventObjectGraph build_event_graph(const EventLog&);

  std::vector<DirectedEdge> edges_;
  std::vector<std::vector<ObjectIndex>> edge_objects_;
  std::vector<std::vector<ObjectIndex>> node_objects_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
};

EventObjectGraph build_event_graph(const EventLog& log);

/// Graphviz rendering, node label "id | objects".
std::string to_dot(const EventLog& log, const EventObjectGraph& graph);

}  // namespace ocvar
