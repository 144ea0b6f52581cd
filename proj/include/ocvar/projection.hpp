#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocvar/extraction.hpp"
#include "ocvar/ocel.hpp"

namespace ocvar {

class MissingAttribute : public std::runtime_error {
 public:
  MissingAttribute(std::string event_id, std::string attribute)
      : std::runtime_error("event '" + event_id + "' has no attribute '" + attribute + "'"),
        event_id_(std::move(event_id)),
        attribute_(std::move(attribute)) {}
  const std::string& event_id() const noexcept { return event_id_; }
  const std::string& attribute() const noexcept { return attribute_; }

 private:
  std::string event_id_;
  std::string attribute_;
};

struct TypeCount {
  std::string type;
  std::uint32_t count = 0;

  friend auto operator<=>(const TypeCount&, const TypeCount&) = default;
};

/// Attribute value plus per-type object counts (types sorted, no zeros).
struct NodeLabel {
  std::string value;
  std::vector<TypeCount> counts;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Per-type count of objects present in both endpoint events.
struct EdgeLabel {
  std::vector<TypeCount> counts;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Edge between node positions of a ProjectedExecution.
struct LocalEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend auto operator<=>(const LocalEdge&, const LocalEdge&) = default;
};

/// Node- and edge-labeled directed graph used for equivalence testing.
///
/// Nodes are positions 0..n-1; `source_events` records the log event of
/// each position (may be empty for synthetic graphs).
class ProjectedExecution {
 public:
  ProjectedExecution() = default;

  /// Throws std::invalid_argument on size mismatches, out-of-range or
  /// duplicate edges, or unsorted type counts.
  ProjectedExecution(std::vector<NodeLabel> node_labels, std::vector<LocalEdge> edges,
                     std::vector<EdgeLabel> edge_labels, std::vector<EventIndex> source_events = {});

  std::size_t node_count() const noexcept { return node_labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const NodeLabel& node_label(std::size_t n) const { return node_labels_.at(n); }
  std::span<const LocalEdge> edges() const noexcept { return edges_; }
  const EdgeLabel& edge_label(std::size_t e) const { return edge_labels_.at(e); }
  std::span<const EventIndex> source_events() const noexcept { return source_events_; }

  /// Edge indices leaving n, ordered by target; entering n, ordered by source.
  std::span<const std::uint32_t> out_edges(std::size_t n) const { return out_[n]; }
  std::span<const std::uint32_t> in_edges(std::size_t n) const { return in_[n]; }
  std::optional<std::size_t> find_edge(std::uint32_t from, std::uint32_t to) const;

  /// Canonical, unambiguous byte encodings of the labels.
  const std::string& node_key(std::size_t n) const { return node_keys_[n]; }
  const std::string& edge_key(std::size_t e) const { return edge_keys_[e]; }

  /// Same graph with node i moved to position perm[i].
  ProjectedExecution permuted(std::span<const std::uint32_t> perm) const;

 private:
  std::vector<NodeLabel> node_labels_;
  std::vector<LocalEdge> edges_;
  std::vector<EdgeLabel> edge_labels_;
  std::vector<EventIndex> source_events_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::string> node_keys_;
  std::vector<std::string> edge_keys_;
};

std::string encode_label(const NodeLabel& label);
std::string encode_label(const EdgeLabel& label);

/// Projects `exec` onto `attribute`. Throws MissingAttribute.
ProjectedExecution project(const EventLog& log, const ProcessExecution& exec, std::string_view attribute);

}  // namespace ocvar
